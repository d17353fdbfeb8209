// Command-line front end: graph generation, stratification, Lanczos
// coefficients, spectral measures, walk amplitudes, GQD certification,
// and verification against the dense oracle.
//
// Exit codes: 0 success (verify: pass), 1 verification failure,
// 2 input error, 3 numerical failure. Data goes to --out (or stdout),
// diagnostics to stderr.

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <string>

#include "ctqw/errors.hpp"
#include "ctqw/graph.hpp"
#include "ctqw/pipeline.hpp"
#include "ctqw/serialize.hpp"

namespace {

struct SourceOpts {
  std::string graph_path;
  std::string gen_name;
  int n = 0;
  int k = 2;
  double p = -1.0;
  unsigned seed = 0;
  bool have_seed = false;
};

void add_source_flags(CLI::App* cmd, SourceOpts& src, bool positional_kind) {
  if (positional_kind)
    cmd->add_option("kind", src.gen_name,
                    "generator: path | kite | tree-fig4 | random")
        ->required();
  else
    cmd->add_option("--gen", src.gen_name,
                    "generator: path | kite | tree-fig4 | random");
  if (!positional_kind)
    cmd->add_option("--graph", src.graph_path, "edge-list file to read");
  cmd->add_option("--n", src.n, "vertex/strata count for path, kite, random");
  cmd->add_option("--k", src.k, "kite dimension (>= 2)");
  cmd->add_option("--p", src.p, "edge probability for random (default 2 ln n / n)");
  cmd->add_option("--seed", src.seed, "seed for random generator")
      ->each([&](const std::string&) { src.have_seed = true; });
}

ctqw::Graph load_graph(const SourceOpts& src) {
  if (!src.graph_path.empty()) {
    std::ifstream in(src.graph_path);
    if (!in) throw ctqw::Error("cannot open graph file: " + src.graph_path);
    return ctqw::parse_edge_list(in);
  }
  if (src.gen_name == "path") return ctqw::gen_path(src.n);
  if (src.gen_name == "kite") return ctqw::gen_kite(src.k, src.n);
  if (src.gen_name == "tree-fig4") return ctqw::gen_tree_fig4();
  if (src.gen_name == "random") {
    double p = src.p;
    if (p <= 0)
      p = std::min(1.0, std::max(0.1, 2.0 * std::log(std::max(2, src.n)) / src.n));
    return ctqw::gen_random_connected(src.n, p, src.seed);
  }
  throw ctqw::Error("unknown graph source; use --graph or --gen " +
                    std::string("path|kite|tree-fig4|random"));
}

void write_output(const std::string& out_path, const std::string& data) {
  if (out_path.empty()) {
    std::cout << data;
    if (!data.empty() && data.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ctqw::Error("cannot open output file: " + out_path);
  out << data;
}

void print_warnings(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

bool is_numerical_error(const ctqw::Error& e) {
  return dynamic_cast<const ctqw::DimensionMismatch*>(&e) ||
         dynamic_cast<const ctqw::PoleAtAtom*>(&e) ||
         dynamic_cast<const ctqw::NotAnAtom*>(&e) ||
         dynamic_cast<const ctqw::MismatchedReference*>(&e) ||
         dynamic_cast<const ctqw::NumericalFailure*>(&e);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"continuous-time quantum walks via spectral distributions"};
  app.require_subcommand(1);

  SourceOpts src;
  int start = 0;
  double t_max = 10.0;
  int steps = 101;
  double time_scale = 1.0;
  std::string format = "json";
  std::string out_path;
  double tol = 1e-8;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--start", start, "start vertex (default 0)");
    cmd->add_option("--out", out_path, "output path (default stdout)");
  };
  auto add_grid = [&](CLI::App* cmd) {
    cmd->add_option("--t-max", t_max, "end of the time grid (default 10)");
    cmd->add_option("--steps", steps, "number of grid points (default 101)");
    cmd->add_option("--time-scale", time_scale,
                    "evolve under A/time_scale (default 1)");
  };

  CLI::App* gen = app.add_subcommand("gen", "write a generated graph as an edge list");
  add_source_flags(gen, src, true);
  gen->add_option("--out", out_path, "output path (default stdout)");

  CLI::App* strat = app.add_subcommand("stratify", "distance partition from a vertex");
  add_source_flags(strat, src, false);
  add_common(strat);

  CLI::App* lanc = app.add_subcommand("lanczos", "Jacobi coefficients and walk-space basis");
  add_source_flags(lanc, src, false);
  add_common(lanc);

  CLI::App* meas = app.add_subcommand("measure", "spectral measure of the walk");
  add_source_flags(meas, src, false);
  add_common(meas);

  CLI::App* walk = app.add_subcommand("walk", "amplitudes on a time grid");
  add_source_flags(walk, src, false);
  add_common(walk);
  add_grid(walk);
  walk->add_option("--format", format, "json | csv (default json)")
      ->check(CLI::IsMember({"json", "csv"}));

  CLI::App* verify = app.add_subcommand("verify", "compare the pipeline against dense evolution");
  add_source_flags(verify, src, false);
  add_common(verify);
  add_grid(verify);
  verify->add_option("--tol", tol, "pass tolerance (default 1e-8)");

  CLI::App* gqd = app.add_subcommand("gqd", "certify quantum-decomposition structure");
  add_source_flags(gqd, src, false);
  add_common(gqd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) {
      write_output(out_path, ctqw::emit_edge_list(load_graph(src)));
      return 0;
    }
    ctqw::Graph g = load_graph(src);
    if (strat->parsed()) {
      ctqw::Stratification s = ctqw::stratify(g, start);
      std::vector<std::string> warnings;
      if (s.proper_component)
        warnings.push_back("disconnected-input: component of vertex " +
                           std::to_string(start) + " has " +
                           std::to_string(s.component_size) + " of " +
                           std::to_string(g.n) + " vertices");
      print_warnings(warnings);
      write_output(out_path, ctqw::to_json(s, warnings));
      return 0;
    }
    if (lanc->parsed()) {
      ctqw::LanczosResult r =
          ctqw::lanczos_run(g, Eigen::VectorXd::Unit(g.n, start));
      write_output(out_path, ctqw::to_json(r.jacobi, r.basis));
      return 0;
    }
    if (meas->parsed()) {
      ctqw::LanczosResult r =
          ctqw::lanczos_run(g, Eigen::VectorXd::Unit(g.n, start));
      write_output(out_path, ctqw::to_json(ctqw::measure_from_jacobi(r.jacobi)));
      return 0;
    }
    if (walk->parsed()) {
      ctqw::WalkOutput w = ctqw::walk_pipeline(
          g, start, ctqw::time_grid(t_max, steps), time_scale);
      print_warnings(w.warnings);
      write_output(out_path, format == "csv" ? ctqw::to_csv(w.series)
                                             : ctqw::walk_output_json(g, start, w));
      return 0;
    }
    if (verify->parsed()) {
      ctqw::VerifyReport report = ctqw::verify_against_oracle(
          g, start, ctqw::time_grid(t_max, steps), time_scale, tol);
      print_warnings(report.warnings);
      write_output(out_path, ctqw::to_json(report, src.seed, src.have_seed));
      if (!report.pass) {
        std::cerr << "verify: max deviation " << report.max_deviation
                  << " exceeds tolerance " << report.tolerance << "\n";
        return 1;
      }
      return 0;
    }
    if (gqd->parsed()) {
      ctqw::Stratification s = ctqw::stratify(g, start);
      ctqw::LanczosResult r =
          ctqw::lanczos_run(g, Eigen::VectorXd::Unit(g.n, start));
      write_output(out_path, ctqw::to_json(ctqw::gqd_certify(g, s, r.basis, r.jacobi)));
      return 0;
    }
  } catch (const ctqw::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_numerical_error(e) ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
