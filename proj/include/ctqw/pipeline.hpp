#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "ctqw/graph.hpp"
#include "ctqw/lanczos.hpp"
#include "ctqw/spectral.hpp"
#include "ctqw/walk.hpp"

namespace ctqw {

/// Everything one end-to-end walk computation produces.
struct WalkOutput {
  Stratification strat;
  JacobiCoefficients jacobi;
  OrthonormalBasis basis;
  std::vector<OrthonormalBasis> supplements;
  SpectralMeasure measure;
  AmplitudeSeries series;  // krylov + vertex
  GqdCertificate certificate;
  std::vector<std::string> warnings;
};

Eigen::VectorXd time_grid(double t_max, int steps);

/// stratify -> lanczos_run -> measure_from_jacobi -> krylov_amplitudes ->
/// vertex_amplitudes, completing the basis when the Krylov space is a
/// proper subspace of the component. breakdown_tol < 0 selects the
/// default.
WalkOutput walk_pipeline(const Graph& g, int start,
                         const Eigen::VectorXd& times,
                         double time_scale = 1.0,
                         double breakdown_tol = -1.0);

struct VerifyReport {
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  int supplementary_vectors = 0;
  std::vector<std::string> warnings;
};

/// Runs the spectral pipeline and the dense oracle side by side and
/// reports the worst componentwise deviation of the vertex amplitudes.
VerifyReport verify_against_oracle(const Graph& g, int start,
                                   const Eigen::VectorXd& times,
                                   double time_scale, double tol);

}  // namespace ctqw
