#include "ctqw/oracle.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <complex>

#include "ctqw/errors.hpp"

namespace ctqw::oracle {

EigenDecomposition dense_eig(const Graph& g, int cap) {
  if (g.n > cap)
    throw TooLarge("graph has " + std::to_string(g.n) +
                   " vertices, dense cap is " + std::to_string(cap));
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.n, g.n);
  for (int u = 0; u < g.n; ++u)
    for (int v : g.adjacency[u]) a(u, v) = 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  if (solver.info() != Eigen::Success)
    throw NumericalFailure("dense eigendecomposition failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Eigen::VectorXcd exact_evolution(const EigenDecomposition& eig, int o,
                                 double t) {
  const int n = static_cast<int>(eig.eigenvalues.size());
  if (o < 0 || o >= n) throw IndexOutOfRange("start vertex out of range");
  Eigen::VectorXcd phases(n);
  for (int i = 0; i < n; ++i)
    phases[i] = std::exp(std::complex<double>(0.0, -eig.eigenvalues[i] * t)) *
                eig.eigenvectors(o, i);
  return eig.eigenvectors * phases;
}

Eigen::VectorXcd exact_evolution(const Graph& g, int o, double t, int cap) {
  return exact_evolution(dense_eig(g, cap), o, t);
}

double bessel_j(int l, double x) {
  if (l < 0 || l > 300 || std::abs(x) > 1e3)
    throw IndexOutOfRange("bessel_j supports 0 <= l <= 300, |x| <= 1e3");
  // J_l(x) = (1/pi) int_0^pi cos(l theta - x sin theta) dtheta. The
  // integrand extends to a smooth 2pi-periodic function, so the midpoint
  // rule converges spectrally; 4096 nodes is far past the oscillation
  // count for |x| <= 1e3.
  constexpr int kNodes = 4096;
  const double h = M_PI / kNodes;
  double acc = 0.0;
  for (int i = 0; i < kNodes; ++i) {
    double theta = (i + 0.5) * h;
    acc += std::cos(l * theta - x * std::sin(theta));
  }
  return acc / kNodes;
}

double chebyshev_u(int l, double x) {
  if (l < 0) throw IndexOutOfRange("chebyshev_u needs l >= 0");
  double um = 0.0, u = 1.0;
  for (int i = 0; i < l; ++i) {
    double next = 2.0 * x * u - um;
    um = u;
    u = next;
  }
  return u;
}

std::complex<double> kite_limit_amplitude(int l, double t) {
  if (t == 0.0) return l == 0 ? 1.0 : 0.0;
  static const std::complex<double> minus_i_pow[4] = {
      {1, 0}, {0, -1}, {-1, 0}, {0, 1}};
  return minus_i_pow[l % 4] * ((l + 1) * bessel_j(l + 1, 2 * t) / t);
}

std::complex<double> path_limit_q0(double t) {
  if (t == 0.0) return 1.0;
  // Equal to J_0(2t) - J_4(2t) by the two-step recurrence; that form has
  // no 1/t^2 cancellation and stays accurate as t -> 0.
  if (std::abs(t) < 0.1) return bessel_j(0, 2 * t) - bessel_j(4, 2 * t);
  return 4.0 * bessel_j(1, 2 * t) / t - 6.0 * bessel_j(2, 2 * t) / (t * t);
}

double path_limit_density(double x) {
  if (std::abs(x) > 2.0) return 0.0;
  return x * x * std::sqrt(4.0 - x * x) / (2.0 * M_PI);
}

double kite_limit_density(int k, double x) {
  const double edge2 = 4.0 * (k + 1);
  if (x * x > edge2) return 0.0;
  return (k / (2.0 * M_PI)) * std::sqrt(edge2 - x * x) /
         (static_cast<double>(k) * k + x * x);
}

}  // namespace ctqw::oracle
