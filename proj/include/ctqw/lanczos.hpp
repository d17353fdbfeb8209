#pragma once

#include <Eigen/Core>
#include <vector>

#include "ctqw/graph.hpp"

namespace ctqw {

/// Jacobi matrix of a tridiagonalized operator: diagonal alphas (size d),
/// off-diagonal betas (size d-1, all strictly positive).
struct JacobiCoefficients {
  Eigen::VectorXd alphas;
  Eigen::VectorXd betas;

  int dim() const { return static_cast<int>(alphas.size()); }
};

/// Columns are the orthonormal vectors grown from `start`;
/// vectors.col(0) == start.
struct OrthonormalBasis {
  Eigen::MatrixXd vectors;  // n x d
  Eigen::VectorXd start;

  int dim() const { return static_cast<int>(vectors.cols()); }
  int space_dim() const { return static_cast<int>(vectors.rows()); }
};

struct LanczosResult {
  JacobiCoefficients jacobi;
  OrthonormalBasis basis;
};

/// y = A x using the neighbor sets directly; no dense matrix is formed.
Eigen::VectorXd adjacency_apply(const Graph& g, const Eigen::VectorXd& x);

/// Breakdown threshold 1e-10 * max(1, ||A||_1); for an adjacency matrix
/// the 1-norm is the maximum degree.
double default_breakdown_tol(const Graph& g);

/// Lanczos tridiagonalization of the adjacency matrix from a unit start
/// vector. Each new vector is reorthogonalized against all previous ones
/// (two passes) before normalization. Stops at breakdown
/// (residual norm <= breakdown_tol) or after max_dim vectors.
LanczosResult lanczos_run(const Graph& g, const Eigen::VectorXd& start,
                          int max_dim, double breakdown_tol);
LanczosResult lanczos_run(const Graph& g, const Eigen::VectorXd& start);

/// Extends `existing` (mutually orthonormal bases inside one connected
/// component) to a full orthonormal basis of the component. New reference
/// states are chosen deterministically: the canonical vertex vector with
/// the largest residual against the span so far (ties to the lowest
/// vertex), projected, normalized, and sign-fixed so its largest-magnitude
/// component is positive. Returns the supplementary bases in generation
/// order; empty when the span is already complete.
std::vector<OrthonormalBasis> complete_basis(
    const Graph& g, const std::vector<OrthonormalBasis>& existing,
    double breakdown_tol);
std::vector<OrthonormalBasis> complete_basis(
    const Graph& g, const std::vector<OrthonormalBasis>& existing);

}  // namespace ctqw
