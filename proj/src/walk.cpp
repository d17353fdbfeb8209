#include "ctqw/walk.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "ctqw/errors.hpp"

namespace ctqw {

const char* to_string(GqdStatus s) {
  switch (s) {
    case GqdStatus::QD: return "QD";
    case GqdStatus::GQD: return "GQD";
    case GqdStatus::NON_GQD: return "NON_GQD";
  }
  return "?";
}

namespace {
// Table of weight_l * P_k(atom_l), computed as Z(0,l) Z(k,l) from the
// orthonormal Jacobi eigenvectors. Evaluating the polynomials by their
// forward recursion instead is exponentially unstable wherever the
// eigenvector decays along the chain, so the eigenvector form is the one
// used for all amplitude sums.
Eigen::MatrixXd weighted_poly_table(const JacobiCoefficients& j) {
  TridiagEigenFull eig = tridiag_eigen_full(j.alphas, j.betas);
  return eig.vectors * eig.vectors.row(0).asDiagonal();
}
}  // namespace

AmplitudeSeries krylov_amplitudes(const SpectralMeasure& m,
                                  const JacobiCoefficients& j,
                                  const Eigen::VectorXd& times,
                                  double time_scale) {
  if (m.size() != j.dim())
    throw DimensionMismatch("measure has " + std::to_string(m.size()) +
                            " atoms but the Jacobi matrix has dim " +
                            std::to_string(j.dim()));
  if (time_scale <= 0) throw InvalidSize("time_scale must be positive");
  const int d = j.dim();
  const int nt = static_cast<int>(times.size());
  const Eigen::MatrixXd table = weighted_poly_table(j);  // k x l

  AmplitudeSeries out;
  out.time_scale = time_scale;
  out.times = times;
  out.krylov.resize(d, nt);
  Eigen::VectorXd wc(d), ws(d);
  for (int ti = 0; ti < nt; ++ti) {
    const double t = times[ti] / time_scale;
    for (int l = 0; l < d; ++l) {
      wc[l] = std::cos(m.atoms[l] * t);
      ws[l] = -std::sin(m.atoms[l] * t);
    }
    out.krylov.col(ti).real() = table * wc;
    out.krylov.col(ti).imag() = table * ws;
  }
  return out;
}

double average_probability(const SpectralMeasure& m,
                           const JacobiCoefficients& j, int k) {
  if (k < 0 || k >= j.dim())
    throw IndexOutOfRange("stratum index " + std::to_string(k) +
                          " outside [0, " + std::to_string(j.dim()) + ")");
  if (m.size() != j.dim()) throw DimensionMismatch("measure/Jacobi mismatch");
  const Eigen::MatrixXd table = weighted_poly_table(j);
  return table.row(k).squaredNorm();
}

AmplitudeSeries vertex_amplitudes(const OrthonormalBasis& basis,
                                  AmplitudeSeries series) {
  if (basis.dim() != series.krylov.rows())
    throw DimensionMismatch("basis dim " + std::to_string(basis.dim()) +
                            " != krylov amplitude count " +
                            std::to_string(series.krylov.rows()));
  series.vertex.resize(basis.space_dim(), series.num_times());
  series.vertex.real() = basis.vectors * series.krylov.real();
  series.vertex.imag() = basis.vectors * series.krylov.imag();
  return series;
}

namespace {
struct GExtraction {
  bool ok = false;
  std::vector<std::vector<double>> g;
  std::string diagnostic;
  double violation = 0.0;
};

// A basis vector certifies a stratum when it vanishes off the stratum and
// its in-stratum components share one sign.
GExtraction extract_g(const Stratification& s, const OrthonormalBasis& basis,
                      double /*tol*/) {
  GExtraction out;
  const int depth = s.depth();
  out.g.resize(depth);
  for (int k = 0; k < depth; ++k) {
    const Eigen::VectorXd phi = basis.vectors.col(k);
    const double support_tol = 1e-8 * phi.cwiseAbs().maxCoeff();
    for (int v = 0; v < static_cast<int>(phi.size()); ++v) {
      const bool inside = s.stratum_of(v) == k;
      if (!inside && std::abs(phi[v]) > support_tol) {
        out.diagnostic = "basis vector " + std::to_string(k) +
                         " has support outside stratum " + std::to_string(k) +
                         " (vertex " + std::to_string(v) + ")";
        out.violation = std::abs(phi[v]);
        return out;
      }
    }
    double sign = 0.0;
    for (int v : s.strata[k]) {
      if (std::abs(phi[v]) <= support_tol) {
        out.diagnostic = "basis vector " + std::to_string(k) +
                         " vanishes on vertex " + std::to_string(v) +
                         " of its stratum";
        out.violation = std::abs(phi[v]);
        return out;
      }
      if (sign == 0.0) sign = phi[v] > 0 ? 1.0 : -1.0;
      if (phi[v] * sign < 0) {
        out.diagnostic = "basis vector " + std::to_string(k) +
                         " changes sign inside stratum " + std::to_string(k);
        out.violation = std::abs(phi[v]);
        return out;
      }
    }
    double min_mag = std::abs(phi[s.strata[k][0]]);
    for (int v : s.strata[k]) min_mag = std::min(min_mag, std::abs(phi[v]));
    out.g[k].reserve(s.strata[k].size());
    for (int v : s.strata[k]) out.g[k].push_back(std::abs(phi[v]) / min_mag);
  }
  out.ok = true;
  return out;
}
}  // namespace

GqdCertificate gqd_certify(const Graph& g, const Stratification& s,
                           const OrthonormalBasis& basis,
                           const JacobiCoefficients& j, double tol) {
  Eigen::VectorXd ref = Eigen::VectorXd::Unit(g.n, s.reference);
  if ((basis.start - ref).norm() > 1e-12)
    throw MismatchedReference(
        "basis was not grown from the stratification's reference vertex");

  GqdCertificate cert;
  const int depth = s.depth();
  if (basis.dim() != depth) {
    cert.status = GqdStatus::NON_GQD;
    cert.diagnostic = "walk space dimension " + std::to_string(basis.dim()) +
                      " != number of strata " + std::to_string(depth);
    cert.violation = std::abs(basis.dim() - depth);
    return cert;
  }

  GExtraction ext = extract_g(s, basis, tol);
  if (!ext.ok) {
    cert.status = GqdStatus::NON_GQD;
    cert.diagnostic = ext.diagnostic;
    cert.violation = ext.violation;
    return cert;
  }
  cert.g = std::move(ext.g);

  auto g_of = [&](int k, int v) {
    const auto& stratum = s.strata[k];
    auto it = std::lower_bound(stratum.begin(), stratum.end(), v);
    return cert.g[k][static_cast<std::size_t>(it - stratum.begin())];
  };
  std::vector<double> stratum_sq(depth, 0.0);
  for (int k = 0; k < depth; ++k)
    for (double gv : cert.g[k]) stratum_sq[k] += gv * gv;

  auto fail = [&](const std::string& what, double magnitude) {
    cert.status = GqdStatus::NON_GQD;
    cert.diagnostic = what;
    cert.violation = magnitude;
    cert.g.clear();
    cert.gamma.clear();
    cert.eta.clear();
    cert.g_integral = false;
  };

  // Up-sums: sum of g over lower-stratum neighbors, proportional to the
  // target's own g with a per-stratum constant gamma_{k+1}.
  cert.gamma.assign(depth > 0 ? depth - 1 : 0, 0.0);
  for (int k = 0; k + 1 < depth; ++k) {
    bool first = true;
    for (int v : s.strata[k + 1]) {
      double up = 0.0;
      for (int u : g.adjacency[v])
        if (s.stratum_of(u) == k) up += g_of(k, u);
      double ratio = up / g_of(k + 1, v);
      if (first) {
        cert.gamma[k] = ratio;
        first = false;
      } else if (std::abs(ratio - cert.gamma[k]) > tol * std::max(1.0, std::abs(cert.gamma[k]))) {
        fail("up-sum condition violated at stratum " + std::to_string(k + 1) +
                 " vertex " + std::to_string(v),
             std::abs(ratio - cert.gamma[k]));
        return cert;
      }
    }
  }

  // Same-stratum sums: constant eta_k per stratum.
  cert.eta.assign(depth, 0.0);
  for (int k = 0; k < depth; ++k) {
    bool first = true;
    for (int v : s.strata[k]) {
      double same = 0.0;
      for (int u : g.adjacency[v])
        if (s.stratum_of(u) == k) same += g_of(k, u);
      double ratio = same / g_of(k, v);
      if (first) {
        cert.eta[k] = ratio;
        first = false;
      } else if (std::abs(ratio - cert.eta[k]) > tol * std::max(1.0, std::abs(cert.eta[k]))) {
        fail("same-stratum condition violated at stratum " + std::to_string(k) +
                 " vertex " + std::to_string(v),
             std::abs(ratio - cert.eta[k]));
        return cert;
      }
    }
  }

  // Down-sums: fixed by gamma_k and the squared-norm ratio of adjacent
  // strata coefficients.
  for (int k = 1; k < depth; ++k) {
    for (int v : s.strata[k - 1]) {
      double down = 0.0;
      for (int u : g.adjacency[v])
        if (s.stratum_of(u) == k) down += g_of(k, u);
      double expected =
          cert.gamma[k - 1] * (stratum_sq[k] / stratum_sq[k - 1]) * g_of(k - 1, v);
      if (std::abs(down - expected) > tol * std::max(1.0, std::abs(expected))) {
        fail("down-sum condition violated at stratum " + std::to_string(k - 1) +
                 " vertex " + std::to_string(v),
             std::abs(down - expected));
        return cert;
      }
    }
  }

  bool all_one = true;
  bool integral = true;
  for (const auto& stratum : cert.g)
    for (double gv : stratum) {
      if (std::abs(gv - 1.0) > tol) all_one = false;
      if (std::abs(gv - std::round(gv)) > tol) integral = false;
    }
  cert.g_integral = integral;
  cert.status = all_one ? GqdStatus::QD : GqdStatus::GQD;

  // Consistency of the certified constants with the Lanczos output:
  // beta_k = gamma_k sqrt(S_k / S_{k-1}), alpha_k = eta_k.
  for (int k = 1; k < depth; ++k) {
    double beta_pred = cert.gamma[k - 1] * std::sqrt(stratum_sq[k] / stratum_sq[k - 1]);
    if (std::abs(beta_pred - j.betas[k - 1]) > tol * std::max(1.0, beta_pred)) {
      fail("certified gamma inconsistent with Lanczos beta at k = " +
               std::to_string(k),
           std::abs(beta_pred - j.betas[k - 1]));
      return cert;
    }
  }
  for (int k = 0; k < depth; ++k) {
    if (std::abs(cert.eta[k] - j.alphas[k]) > tol * std::max(1.0, std::abs(cert.eta[k]))) {
      fail("certified eta inconsistent with Lanczos alpha at k = " +
               std::to_string(k),
           std::abs(cert.eta[k] - j.alphas[k]));
      return cert;
    }
  }
  return cert;
}

}  // namespace ctqw
