#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "ctqw/graph.hpp"
#include "ctqw/lanczos.hpp"
#include "ctqw/spectral.hpp"

namespace ctqw {

/// Amplitudes of the walk on a time grid. krylov(k, ti) is the amplitude
/// on the k-th Lanczos vector (stratum, for QD/GQD graphs) at times[ti];
/// vertex(v, ti), when present, the amplitude at vertex v.
struct AmplitudeSeries {
  double time_scale = 1.0;
  Eigen::VectorXd times;
  Eigen::MatrixXcd krylov;  // dim x num_times
  Eigen::MatrixXcd vertex;  // n x num_times, 0x0 when absent

  bool has_vertex() const { return vertex.size() > 0; }
  int num_times() const { return static_cast<int>(times.size()); }
};

/// q_k(t) = sum_l weight_l e^{-i atom_l t / time_scale} P_k(atom_l),
/// summed in ascending atom order. Measure and coefficients must come
/// from the same Lanczos run.
AmplitudeSeries krylov_amplitudes(const SpectralMeasure& m,
                                  const JacobiCoefficients& j,
                                  const Eigen::VectorXd& times,
                                  double time_scale = 1.0);

/// Long-time average of |q_k(t)|^2: sum_l weight_l^2 P_k(atom_l)^2.
double average_probability(const SpectralMeasure& m,
                           const JacobiCoefficients& j, int k);

/// Expands the Krylov amplitudes in the vertex basis:
/// q_v(t) = sum_k q_k(t) * vectors(v, k). Components outside the walk
/// space are identically zero, so supplementary bases never contribute.
AmplitudeSeries vertex_amplitudes(const OrthonormalBasis& basis,
                                  AmplitudeSeries series);

enum class GqdStatus { QD, GQD, NON_GQD };
const char* to_string(GqdStatus s);

/// Certificate that the Lanczos basis realizes a (generalized) quantum
/// decomposition: one basis vector per stratum, supported on it with
/// one-signed components. g holds the per-stratum coefficients rescaled
/// so each stratum's minimum is 1; gamma[k-1] and eta[k] are the
/// stratum-transition constants of the up/same/down sum conditions.
struct GqdCertificate {
  GqdStatus status = GqdStatus::NON_GQD;
  std::vector<std::vector<double>> g;  // aligned with strata lists
  std::vector<double> gamma;           // gamma_k for k = 1..depth-1
  std::vector<double> eta;             // eta_k for k = 0..depth-1
  bool g_integral = false;
  std::string diagnostic;              // first violated condition, NON_GQD only
  double violation = 0.0;
};

GqdCertificate gqd_certify(const Graph& g, const Stratification& s,
                           const OrthonormalBasis& basis,
                           const JacobiCoefficients& j, double tol = 1e-8);

}  // namespace ctqw
