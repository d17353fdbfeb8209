#include "ctqw/serialize.hpp"

#include <cstdio>
#include <sstream>

namespace ctqw {

std::string format_double(double v, int significant_digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", significant_digits, v);
  return buf;
}

namespace {
constexpr int kJsonDigits = 17;
constexpr int kCsvDigits = 12;

void append_number(std::string& out, double v) {
  out += format_double(v, kJsonDigits);
}

void append_complex(std::string& out, std::complex<double> v) {
  out += '[';
  append_number(out, v.real());
  out += ',';
  append_number(out, v.imag());
  out += ']';
}

void append_string(std::string& out, const std::string& s) {
  out += '"';
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
}

template <typename Seq, typename Fn>
void append_list(std::string& out, const Seq& seq, Fn&& item) {
  out += '[';
  bool first = true;
  for (const auto& v : seq) {
    if (!first) out += ',';
    first = false;
    item(v);
  }
  out += ']';
}

void append_vector(std::string& out, const Eigen::VectorXd& v) {
  out += '[';
  for (int i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    append_number(out, v[i]);
  }
  out += ']';
}

void append_amplitude_rows(std::string& out, const Eigen::MatrixXcd& m) {
  // One row per time (column of m).
  out += '[';
  for (int ti = 0; ti < m.cols(); ++ti) {
    if (ti) out += ',';
    out += '[';
    for (int k = 0; k < m.rows(); ++k) {
      if (k) out += ',';
      append_complex(out, m(k, ti));
    }
    out += ']';
  }
  out += ']';
}

void append_measure_body(std::string& out, const SpectralMeasure& m) {
  out += "{\"atoms\":[";
  for (int l = 0; l < m.size(); ++l) {
    if (l) out += ',';
    out += "{\"x\":";
    append_number(out, m.atoms[l]);
    out += ",\"weight\":";
    append_number(out, m.weights[l]);
    out += '}';
  }
  out += "]}";
}

void append_series_body(std::string& out, const AmplitudeSeries& s) {
  out += "\"time_scale\":";
  append_number(out, s.time_scale);
  out += ",\"times\":";
  append_vector(out, s.times);
  out += ",\"krylov\":";
  append_amplitude_rows(out, s.krylov);
  if (s.has_vertex()) {
    out += ",\"vertex\":";
    append_amplitude_rows(out, s.vertex);
  }
}

void append_certificate_body(std::string& out, const GqdCertificate& c) {
  out += "{\"status\":";
  append_string(out, to_string(c.status));
  out += ",\"g\":";
  append_list(out, c.g, [&](const std::vector<double>& stratum) {
    append_list(out, stratum, [&](double v) { append_number(out, v); });
  });
  out += ",\"gamma\":";
  append_list(out, c.gamma, [&](double v) { append_number(out, v); });
  out += ",\"eta\":";
  append_list(out, c.eta, [&](double v) { append_number(out, v); });
  out += ",\"g_integral\":";
  out += c.g_integral ? "true" : "false";
  if (!c.diagnostic.empty()) {
    out += ",\"diagnostic\":";
    append_string(out, c.diagnostic);
    out += ",\"violation\":";
    append_number(out, c.violation);
  }
  out += '}';
}

void append_warnings(std::string& out, const std::vector<std::string>& warnings) {
  append_list(out, warnings, [&](const std::string& w) { append_string(out, w); });
}
}  // namespace

std::string to_json(const SpectralMeasure& m) {
  std::string out;
  append_measure_body(out, m);
  return out;
}

std::string to_json(const AmplitudeSeries& s) {
  std::string out = "{";
  append_series_body(out, s);
  out += '}';
  return out;
}

std::string to_json(const Stratification& s,
                    const std::vector<std::string>& warnings) {
  std::string out = "{\"reference\":" + std::to_string(s.reference);
  out += ",\"depth\":" + std::to_string(s.depth());
  out += ",\"strata\":";
  append_list(out, s.strata, [&](const std::vector<int>& stratum) {
    append_list(out, stratum, [&](int v) { out += std::to_string(v); });
  });
  out += ",\"component_size\":" + std::to_string(s.component_size);
  out += ",\"proper_component\":";
  out += s.proper_component ? "true" : "false";
  out += ",\"warnings\":";
  append_warnings(out, warnings);
  out += '}';
  return out;
}

std::string to_json(const GqdCertificate& c) {
  std::string out;
  append_certificate_body(out, c);
  return out;
}

std::string to_json(const JacobiCoefficients& j, const OrthonormalBasis& basis) {
  std::string out = "{\"dim\":" + std::to_string(j.dim());
  out += ",\"alphas\":";
  append_vector(out, j.alphas);
  out += ",\"betas\":";
  append_vector(out, j.betas);
  out += ",\"basis\":[";
  for (int k = 0; k < basis.dim(); ++k) {
    if (k) out += ',';
    append_vector(out, basis.vectors.col(k));
  }
  out += "]}";
  return out;
}

std::string to_json(const VerifyReport& r, unsigned seed, bool seeded) {
  std::string out = "{\"pass\":";
  out += r.pass ? "true" : "false";
  out += ",\"max_deviation\":";
  append_number(out, r.max_deviation);
  out += ",\"tolerance\":";
  append_number(out, r.tolerance);
  out += ",\"supplementary_vectors\":" + std::to_string(r.supplementary_vectors);
  if (seeded) out += ",\"seed\":" + std::to_string(seed);
  out += ",\"warnings\":";
  append_warnings(out, r.warnings);
  out += '}';
  return out;
}

std::string walk_output_json(const Graph& g, int start, const WalkOutput& w) {
  std::string out = "{";
  append_series_body(out, w.series);
  out += ",\"metadata\":{\"n\":" + std::to_string(g.n);
  out += ",\"edges\":" + std::to_string(g.edge_count());
  out += ",\"start\":" + std::to_string(start);
  out += ",\"strata\":";
  append_list(out, w.strat.strata, [&](const std::vector<int>& stratum) {
    append_list(out, stratum, [&](int v) { out += std::to_string(v); });
  });
  out += ",\"jacobi\":{\"alphas\":";
  append_vector(out, w.jacobi.alphas);
  out += ",\"betas\":";
  append_vector(out, w.jacobi.betas);
  out += "},\"measure\":";
  append_measure_body(out, w.measure);
  out += ",\"gqd\":";
  append_certificate_body(out, w.certificate);
  out += ",\"supplementary_dims\":";
  append_list(out, w.supplements,
              [&](const OrthonormalBasis& b) { out += std::to_string(b.dim()); });
  out += ",\"warnings\":";
  append_warnings(out, w.warnings);
  out += "}}";
  return out;
}

std::string to_csv(const AmplitudeSeries& s) {
  std::ostringstream out;
  out << "t";
  for (int k = 0; k < s.krylov.rows(); ++k)
    out << ",q" << k << "_re,q" << k << "_im";
  if (s.has_vertex())
    for (int v = 0; v < s.vertex.rows(); ++v)
      out << ",v" << v << "_re,v" << v << "_im";
  out << "\n";
  for (int ti = 0; ti < s.num_times(); ++ti) {
    out << format_double(s.times[ti], kCsvDigits);
    for (int k = 0; k < s.krylov.rows(); ++k)
      out << ',' << format_double(s.krylov(k, ti).real(), kCsvDigits) << ','
          << format_double(s.krylov(k, ti).imag(), kCsvDigits);
    if (s.has_vertex())
      for (int v = 0; v < s.vertex.rows(); ++v)
        out << ',' << format_double(s.vertex(v, ti).real(), kCsvDigits) << ','
            << format_double(s.vertex(v, ti).imag(), kCsvDigits);
    out << "\n";
  }
  return out.str();
}

}  // namespace ctqw
