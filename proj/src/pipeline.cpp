#include "ctqw/pipeline.hpp"

#include <algorithm>
#include <cmath>

#include "ctqw/errors.hpp"
#include "ctqw/oracle.hpp"

namespace ctqw {

Eigen::VectorXd time_grid(double t_max, int steps) {
  if (t_max <= 0) throw InvalidSize("t_max must be positive");
  if (steps < 1) throw InvalidSize("steps must be >= 1");
  Eigen::VectorXd times(steps);
  if (steps == 1) {
    times[0] = 0.0;
    return times;
  }
  for (int i = 0; i < steps; ++i) times[i] = t_max * i / (steps - 1);
  return times;
}

WalkOutput walk_pipeline(const Graph& g, int start,
                         const Eigen::VectorXd& times, double time_scale,
                         double breakdown_tol) {
  if (start < 0 || start >= g.n)
    throw IndexOutOfRange("start vertex " + std::to_string(start) +
                          " outside [0, " + std::to_string(g.n) + ")");
  if (breakdown_tol < 0) breakdown_tol = default_breakdown_tol(g);

  WalkOutput out;
  out.strat = stratify(g, start);
  if (out.strat.proper_component)
    out.warnings.push_back(
        "disconnected-input: walk restricted to the component of vertex " +
        std::to_string(start) + " (" + std::to_string(out.strat.component_size) +
        " of " + std::to_string(g.n) + " vertices)");

  LanczosResult lanczos =
      lanczos_run(g, Eigen::VectorXd::Unit(g.n, start), g.n, breakdown_tol);
  out.jacobi = std::move(lanczos.jacobi);
  out.basis = std::move(lanczos.basis);
  if (out.basis.dim() < out.strat.component_size)
    out.supplements = complete_basis(g, {out.basis}, breakdown_tol);

  out.measure = measure_from_jacobi(out.jacobi);
  out.series = krylov_amplitudes(out.measure, out.jacobi, times, time_scale);
  out.series = vertex_amplitudes(out.basis, std::move(out.series));
  out.certificate = gqd_certify(g, out.strat, out.basis, out.jacobi);
  return out;
}

VerifyReport verify_against_oracle(const Graph& g, int start,
                                   const Eigen::VectorXd& times,
                                   double time_scale, double tol) {
  WalkOutput walk = walk_pipeline(g, start, times, time_scale);
  oracle::EigenDecomposition eig = oracle::dense_eig(g);
  VerifyReport report;
  report.tolerance = tol;
  report.warnings = walk.warnings;
  for (const auto& b : walk.supplements)
    report.supplementary_vectors += b.dim();
  double worst = 0.0;
  for (int ti = 0; ti < walk.series.num_times(); ++ti) {
    Eigen::VectorXcd exact = oracle::exact_evolution(
        eig, start, walk.series.times[ti] / time_scale);
    worst = std::max(worst,
                     (walk.series.vertex.col(ti) - exact).cwiseAbs().maxCoeff());
  }
  report.max_deviation = worst;
  report.pass = worst <= tol;
  return report;
}

}  // namespace ctqw
