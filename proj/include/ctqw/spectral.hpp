#pragma once

#include <Eigen/Core>
#include <complex>

#include "ctqw/lanczos.hpp"

namespace ctqw {

/// Discrete spectral measure sum_l weight_l * delta(x - atom_l).
/// Atoms are strictly ascending, weights positive and summing to one.
struct SpectralMeasure {
  Eigen::VectorXd atoms;
  Eigen::VectorXd weights;

  int size() const { return static_cast<int>(atoms.size()); }
};

/// Normalized orthogonal polynomial P_k(x) for the measure of `j`:
/// P_0 = 1, beta_{k+1} P_{k+1} = (x - alpha_k) P_k - beta_k P_{k-1}.
/// k may equal dim; the top polynomial uses beta_dim := 1, so
/// P_dim = det(xI - J) / (beta_1 ... beta_{dim-1}) and its roots are the
/// atoms.
double eval_poly_p(const JacobiCoefficients& j, int k, double x);

/// First-associated polynomial Q_k^(1):
/// Q_0 = 1, Q_1 = x - alpha_1,
/// x Q_k = Q_{k+1} + alpha_{k+1} Q_k + beta_{k+1}^2 Q_{k-1}.  k <= dim-1.
double eval_poly_q1(const JacobiCoefficients& j, int k, double x);

/// log(beta_1 ... beta_k); the rescaling between P_k and the monic P'_k.
double log_beta_product(const JacobiCoefficients& j, int k);

/// Stieltjes transform of the measure, evaluated as the finite continued
/// fraction 1/(z - alpha_0 - beta_1^2/(z - alpha_1 - ...)). Throws
/// PoleAtAtom for real z at an atom.
std::complex<double> stieltjes(const JacobiCoefficients& j,
                               std::complex<double> z);

/// Eigenvalues (ascending) and first components of the unit eigenvectors
/// of a symmetric tridiagonal matrix. Implicit-shift QL with the first
/// row of the rotation product accumulated.
struct TridiagEigen {
  Eigen::VectorXd values;
  Eigen::VectorXd first_components;
};
TridiagEigen tridiag_eigen_first_row(Eigen::VectorXd diag,
                                     Eigen::VectorXd offdiag);

/// Same solve with the complete orthonormal eigenvector matrix. Columns
/// are ordered by ascending eigenvalue; the rotation sequence is shared
/// with the first-row variant, so the eigenvalues agree bitwise.
struct TridiagEigenFull {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
};
TridiagEigenFull tridiag_eigen_full(Eigen::VectorXd diag,
                                    Eigen::VectorXd offdiag);

/// Gauss quadrature rule of the Jacobi matrix: atoms are its eigenvalues,
/// weight_l the squared first component of the l-th unit eigenvector.
SpectralMeasure measure_from_jacobi(const JacobiCoefficients& j);

/// Residue of the Stieltjes transform at an atom,
/// Q^(1)_{dim-1}(x) / (d/dx P'_dim)(x), with the derivative from the
/// differentiated recursion. Cross-check for measure_from_jacobi.
double weight_by_residue(const JacobiCoefficients& j, double x);

}  // namespace ctqw
