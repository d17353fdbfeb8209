#include "ctqw/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "ctqw/errors.hpp"

namespace ctqw {

namespace {
void check_poly_index(const JacobiCoefficients& j, int k, int max_k) {
  if (k < 0 || k > max_k)
    throw IndexOutOfRange("polynomial index " + std::to_string(k) +
                          " outside [0, " + std::to_string(max_k) + "] for dim " +
                          std::to_string(j.dim()));
}

// Atom membership: |P_dim(x)| <= 1e-7 * max(1, |x|)^dim, compared in logs
// so large dims cannot overflow.
bool is_atom(const JacobiCoefficients& j, double x) {
  double p = eval_poly_p(j, j.dim(), x);
  double bound = std::log(1e-7) + j.dim() * std::log(std::max(1.0, std::abs(x)));
  if (p == 0.0) return true;
  return std::log(std::abs(p)) <= bound;
}
}  // namespace

double eval_poly_p(const JacobiCoefficients& j, int k, double x) {
  check_poly_index(j, k, j.dim());
  const int d = j.dim();
  double pm = 0.0;  // P_{-1}
  double p = 1.0;   // P_0
  for (int i = 0; i < k; ++i) {
    double beta_next = (i + 1 < d) ? j.betas[i] : 1.0;  // beta_dim := 1
    double beta_cur = (i > 0) ? j.betas[i - 1] : 0.0;
    double next = ((x - j.alphas[i]) * p - beta_cur * pm) / beta_next;
    pm = p;
    p = next;
  }
  return p;
}

double eval_poly_q1(const JacobiCoefficients& j, int k, double x) {
  check_poly_index(j, k, j.dim() - 1);
  if (k == 0) return 1.0;
  double qm = 1.0;              // Q_0
  double q = x - j.alphas[1];   // Q_1
  for (int i = 1; i < k; ++i) {
    double next = (x - j.alphas[i + 1]) * q - j.betas[i] * j.betas[i] * qm;
    qm = q;
    q = next;
  }
  return q;
}

double log_beta_product(const JacobiCoefficients& j, int k) {
  check_poly_index(j, k, j.dim());
  double acc = 0.0;
  for (int i = 0; i < k && i < j.dim() - 1; ++i) acc += std::log(j.betas[i]);
  return acc;
}

std::complex<double> stieltjes(const JacobiCoefficients& j,
                               std::complex<double> z) {
  const int d = j.dim();
  if (z.imag() == 0.0 && is_atom(j, z.real()))
    throw PoleAtAtom("Stieltjes transform has a pole at x = " +
                     std::to_string(z.real()));
  std::complex<double> t = z - j.alphas[d - 1];
  for (int i = d - 2; i >= 0; --i)
    t = z - j.alphas[i] - j.betas[i] * j.betas[i] / t;
  return 1.0 / t;
}

namespace {
// Implicit-shift QL with Wilkinson shifts. The rotation product is
// accumulated on the rows of z (1 x n for Gauss weights, n x n for full
// eigenvectors); the rotations themselves do not depend on z, so both
// variants produce bit-identical eigenvalues.
void ql_implicit_shift(std::vector<double>& d, std::vector<double>& e,
                       Eigen::MatrixXd& z) {
  const int n = static_cast<int>(d.size());
  const double eps = std::numeric_limits<double>::epsilon();
  Eigen::VectorXd rotated(z.rows());
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m + 1 < n; ++m) {
        double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (++iter > 50)
          throw NumericalFailure("tridiagonal QL failed to converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i = m - 1;
        for (; i >= l; --i) {
          double f = s * e[i];
          double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {  // recover from a vanished rotation
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          rotated = s * z.col(i) + c * z.col(i + 1);
          z.col(i) = c * z.col(i) - s * z.col(i + 1);
          z.col(i + 1) = rotated;
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

std::vector<int> ascending_order(const std::vector<double>& d) {
  std::vector<int> order(d.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return d[a] < d[b]; });
  return order;
}

void check_tridiag_shapes(const Eigen::VectorXd& diag,
                          const Eigen::VectorXd& offdiag) {
  if (offdiag.size() != diag.size() - 1)
    throw DimensionMismatch("offdiagonal must have length dim-1");
}
}  // namespace

TridiagEigen tridiag_eigen_first_row(Eigen::VectorXd diag,
                                     Eigen::VectorXd offdiag) {
  check_tridiag_shapes(diag, offdiag);
  const int n = static_cast<int>(diag.size());
  std::vector<double> d(diag.data(), diag.data() + n);
  std::vector<double> e(n, 0.0);
  for (int i = 0; i + 1 < n; ++i) e[i] = offdiag[i];
  Eigen::MatrixXd z = Eigen::MatrixXd::Zero(1, n);
  z(0, 0) = 1.0;
  ql_implicit_shift(d, e, z);

  std::vector<int> order = ascending_order(d);
  TridiagEigen out;
  out.values.resize(n);
  out.first_components.resize(n);
  for (int i = 0; i < n; ++i) {
    out.values[i] = d[order[i]];
    out.first_components[i] = z(0, order[i]);
  }
  return out;
}

TridiagEigenFull tridiag_eigen_full(Eigen::VectorXd diag,
                                    Eigen::VectorXd offdiag) {
  check_tridiag_shapes(diag, offdiag);
  const int n = static_cast<int>(diag.size());
  std::vector<double> d(diag.data(), diag.data() + n);
  std::vector<double> e(n, 0.0);
  for (int i = 0; i + 1 < n; ++i) e[i] = offdiag[i];
  Eigen::MatrixXd z = Eigen::MatrixXd::Identity(n, n);
  ql_implicit_shift(d, e, z);

  std::vector<int> order = ascending_order(d);
  TridiagEigenFull out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (int i = 0; i < n; ++i) {
    out.values[i] = d[order[i]];
    out.vectors.col(i) = z.col(order[i]);
  }
  return out;
}

SpectralMeasure measure_from_jacobi(const JacobiCoefficients& j) {
  if (j.dim() < 1) throw InvalidSize("Jacobi matrix must have dim >= 1");
  TridiagEigen eig = tridiag_eigen_first_row(j.alphas, j.betas);
  SpectralMeasure m;
  m.atoms = eig.values;
  m.weights = eig.first_components.array().square();
  return m;
}

double weight_by_residue(const JacobiCoefficients& j, double x) {
  if (!is_atom(j, x))
    throw NotAnAtom("x = " + std::to_string(x) + " is not an atom");
  const int d = j.dim();
  // d/dx P'_dim by the differentiated recursion
  // P'_{k+1} = (x - alpha_k) P'_k - beta_k^2 P'_{k-1}.
  double pm = 0.0, p = 1.0;    // P'_{-1}, P'_0
  double dpm = 0.0, dp = 0.0;  // derivatives
  for (int k = 0; k < d; ++k) {
    double beta2 = (k > 0) ? j.betas[k - 1] * j.betas[k - 1] : 0.0;
    double next = (x - j.alphas[k]) * p - beta2 * pm;
    double dnext = p + (x - j.alphas[k]) * dp - beta2 * dpm;
    pm = p;
    p = next;
    dpm = dp;
    dp = dnext;
  }
  return eval_poly_q1(j, d - 1, x) / dp;
}

}  // namespace ctqw
