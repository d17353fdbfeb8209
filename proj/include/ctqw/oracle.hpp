#pragma once

#include <Eigen/Core>
#include <complex>

#include "ctqw/graph.hpp"

// Reference computations used for testing and verification. Everything
// here is independent of the Lanczos/spectral pipeline: dense
// eigendecomposition, special functions, and closed-form limits.

namespace ctqw::oracle {

struct EigenDecomposition {
  Eigen::VectorXd eigenvalues;   // ascending
  Eigen::MatrixXd eigenvectors;  // orthonormal columns
};

constexpr int kDenseCap = 4096;

/// Full symmetric eigendecomposition of the dense adjacency matrix.
EigenDecomposition dense_eig(const Graph& g, int cap = kDenseCap);

/// e^{-iAt} |e_o> via the dense eigendecomposition.
Eigen::VectorXcd exact_evolution(const Graph& g, int o, double t,
                                 int cap = kDenseCap);
Eigen::VectorXcd exact_evolution(const EigenDecomposition& eig, int o,
                                 double t);

/// Bessel function of the first kind, integer order. l <= 300, |x| <= 1e3.
double bessel_j(int l, double x);

/// Chebyshev polynomial of the second kind, by recurrence.
double chebyshev_u(int l, double x);

/// Large-dimension kite limit of the stratum amplitude under A/sqrt(k):
/// q_l(t) = (l+1) (-i)^l J_{l+1}(2t) / t, with q_l(0) = delta_{l0}.
std::complex<double> kite_limit_amplitude(int l, double t);

/// Infinite-path limit of the return amplitude when the walk starts on
/// the second vertex: q_0(t) = 4 J_1(2t)/t - 6 J_2(2t)/t^2 (real).
std::complex<double> path_limit_q0(double t);

/// Limiting spectral density of that walk: x^2 sqrt(4-x^2) / (2 pi) on
/// [-2, 2], zero outside.
double path_limit_density(double x);

/// Limiting spectral density of the kite family:
/// (k/2pi) sqrt(4(k+1)-x^2) / (k^2+x^2) on |x| <= 2 sqrt(k+1).
double kite_limit_density(int k, double x);

}  // namespace ctqw::oracle
