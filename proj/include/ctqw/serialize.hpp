#pragma once

#include <string>

#include "ctqw/pipeline.hpp"
#include "ctqw/spectral.hpp"
#include "ctqw/walk.hpp"

namespace ctqw {

// All emitters are deterministic: fixed field order, fixed float
// formatting (17 significant digits in JSON, 12 in CSV).

std::string format_double(double v, int significant_digits = 17);

std::string to_json(const SpectralMeasure& m);
std::string to_json(const AmplitudeSeries& s);
std::string to_json(const Stratification& s,
                    const std::vector<std::string>& warnings = {});
std::string to_json(const GqdCertificate& c);
std::string to_json(const JacobiCoefficients& j, const OrthonormalBasis& basis);
std::string to_json(const VerifyReport& r, unsigned seed, bool seeded);

/// AmplitudeSeries document plus a metadata block (Jacobi coefficients,
/// measure, GQD certificate, warnings).
std::string walk_output_json(const Graph& g, int start, const WalkOutput& w);

/// One row per time: t, then re/im per Krylov index, then re/im per
/// vertex when present.
std::string to_csv(const AmplitudeSeries& s);

}  // namespace ctqw
