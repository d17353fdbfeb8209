#include "ctqw/lanczos.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <vector>

#include "ctqw/errors.hpp"

namespace ctqw {

Eigen::VectorXd adjacency_apply(const Graph& g, const Eigen::VectorXd& x) {
  Eigen::VectorXd y = Eigen::VectorXd::Zero(g.n);
  for (int u = 0; u < g.n; ++u) {
    double acc = 0.0;
    for (int v : g.adjacency[u]) acc += x[v];
    y[u] = acc;
  }
  return y;
}

double default_breakdown_tol(const Graph& g) {
  return 1e-10 * std::max(1, g.max_degree());
}

LanczosResult lanczos_run(const Graph& g, const Eigen::VectorXd& start,
                          int max_dim, double breakdown_tol) {
  if (start.size() != g.n)
    throw DimensionMismatch("start vector has wrong length");
  if (std::abs(start.norm() - 1.0) > 1e-12)
    throw NotUnit("start vector is not normalized");
  if (max_dim < 1) throw InvalidSize("max_dim must be positive");
  max_dim = std::min(max_dim, g.n);

  // Storage grows geometrically; breakdown usually stops the iteration
  // long before max_dim on large graphs.
  Eigen::MatrixXd basis(g.n, std::min(max_dim, 64));
  basis.col(0) = start;
  std::vector<double> alphas, betas;

  int d = 1;
  double beta_prev = 0.0;
  Eigen::VectorXd prev = Eigen::VectorXd::Zero(g.n);
  for (int i = 0; i < max_dim; ++i) {
    Eigen::VectorXd v = adjacency_apply(g, basis.col(i));
    double alpha = basis.col(i).dot(v);
    alphas.push_back(alpha);
    if (i + 1 == max_dim) break;
    v -= alpha * basis.col(i);
    if (i > 0) v -= beta_prev * prev;
    // Full reorthogonalization, two passes.
    auto active = basis.leftCols(i + 1);
    v -= active * (active.transpose() * v);
    v -= active * (active.transpose() * v);
    double beta = v.norm();
    if (beta <= breakdown_tol) break;
    if (i + 1 == basis.cols())
      basis.conservativeResize(Eigen::NoChange,
                               std::min(max_dim, 2 * static_cast<int>(basis.cols())));
    prev = basis.col(i);
    basis.col(i + 1) = v / beta;
    betas.push_back(beta);
    beta_prev = beta;
    d = i + 2;
  }

  LanczosResult out;
  out.jacobi.alphas.resize(d);
  for (int i = 0; i < d; ++i) out.jacobi.alphas[i] = alphas[i];
  out.jacobi.betas.resize(d - 1);
  for (int i = 0; i + 1 < d; ++i) out.jacobi.betas[i] = betas[i];
  out.basis.vectors = basis.leftCols(d);
  out.basis.start = start;
  return out;
}

LanczosResult lanczos_run(const Graph& g, const Eigen::VectorXd& start) {
  return lanczos_run(g, start, g.n, default_breakdown_tol(g));
}

namespace {
std::vector<char> component_mask(const Graph& g, const Eigen::VectorXd& seedvec) {
  std::vector<char> in(g.n, 0);
  std::deque<int> queue;
  for (int v = 0; v < g.n; ++v)
    if (std::abs(seedvec[v]) > 1e-14 && !in[v]) {
      in[v] = 1;
      queue.push_back(v);
    }
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : g.adjacency[u])
      if (!in[w]) {
        in[w] = 1;
        queue.push_back(w);
      }
  }
  return in;
}
}  // namespace

std::vector<OrthonormalBasis> complete_basis(
    const Graph& g, const std::vector<OrthonormalBasis>& existing,
    double breakdown_tol) {
  if (existing.empty()) throw InvalidSize("need at least one existing basis");
  const int n = g.n;
  std::vector<char> in_component = component_mask(g, existing[0].start);
  int component_size = 0;
  for (char c : in_component) component_size += c;

  // Columns of `span` hold every vector accumulated so far.
  int spanned = 0;
  for (const auto& b : existing) spanned += b.dim();
  Eigen::MatrixXd span(n, component_size);
  int col = 0;
  for (const auto& b : existing)
    for (int k = 0; k < b.dim(); ++k) span.col(col++) = b.vectors.col(k);

  std::vector<OrthonormalBasis> supplements;
  while (spanned < component_size) {
    // Deterministic reference choice: canonical vertex vector with the
    // largest residual norm against the current span, ties to the lowest
    // vertex index.
    auto active = span.leftCols(spanned);
    int best = -1;
    double best_residual = -1.0;
    for (int v = 0; v < n; ++v) {
      if (!in_component[v]) continue;
      double projected = active.row(v).squaredNorm();
      double residual = 1.0 - projected;
      if (residual > best_residual + 1e-12) {
        best_residual = residual;
        best = v;
      }
    }
    Eigen::VectorXd ref = Eigen::VectorXd::Unit(n, best);
    ref -= active * (active.transpose() * ref);
    ref -= active * (active.transpose() * ref);
    ref.normalize();
    // Sign convention: largest-magnitude component positive, ties to the
    // lowest vertex index.
    int arg = 0;
    ref.cwiseAbs().maxCoeff(&arg);
    if (ref[arg] < 0) ref = -ref;

    LanczosResult run =
        lanczos_run(g, ref, component_size - spanned, breakdown_tol);
    for (int k = 0; k < run.basis.dim(); ++k)
      span.col(spanned++) = run.basis.vectors.col(k);
    supplements.push_back(std::move(run.basis));
  }
  return supplements;
}

std::vector<OrthonormalBasis> complete_basis(
    const Graph& g, const std::vector<OrthonormalBasis>& existing) {
  return complete_basis(g, existing, default_breakdown_tol(g));
}

}  // namespace ctqw
