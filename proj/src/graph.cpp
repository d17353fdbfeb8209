#include "ctqw/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <random>
#include <sstream>

#include "ctqw/errors.hpp"

namespace ctqw {

int Graph::max_degree() const {
  int d = 0;
  for (const auto& nb : adjacency) d = std::max(d, static_cast<int>(nb.size()));
  return d;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& nb : adjacency) twice += nb.size();
  return twice / 2;
}

bool Graph::has_edge(int u, int v) const {
  const auto& nb = adjacency[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw InvalidSize("vertex count must be non-negative");
  Graph g;
  g.n = n;
  g.adjacency.assign(n, {});
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw IndexOutOfRange("edge (" + std::to_string(u) + ", " +
                            std::to_string(v) + ") outside [0, " +
                            std::to_string(n) + ")");
    if (u == v)
      throw SelfLoop("self-loop at vertex " + std::to_string(u));
    g.adjacency[u].push_back(v);
    g.adjacency[v].push_back(u);
  }
  for (auto& nb : g.adjacency) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  return g;
}

Graph parse_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool have_header = false;
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;  // blank
    if (line[start] == '#') continue;
    std::istringstream ls(line.substr(start));
    if (!have_header) {
      std::string tag;
      ls >> tag;
      if (tag != "n") throw ParseError(line_no, "expected header \"n <count>\"");
      if (!(ls >> n) || n < 0) throw ParseError(line_no, "bad vertex count");
      std::string trailing;
      if (ls >> trailing) throw ParseError(line_no, "trailing tokens after header");
      have_header = true;
      continue;
    }
    int u, v;
    if (!(ls >> u >> v)) throw ParseError(line_no, "expected \"<u> <v>\"");
    std::string trailing;
    if (ls >> trailing) throw ParseError(line_no, "trailing tokens after edge");
    edges.emplace_back(u, v);
  }
  if (!have_header) throw ParseError(line_no, "missing \"n <count>\" header");
  return build_graph(n, edges);
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

void emit_edge_list(const Graph& g, std::ostream& out) {
  out << "n " << g.n << "\n";
  for (int u = 0; u < g.n; ++u)
    for (int v : g.adjacency[u])
      if (u < v) out << u << " " << v << "\n";
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  emit_edge_list(g, out);
  return out.str();
}

Graph gen_path(int n) {
  if (n < 1) throw InvalidSize("path needs at least one vertex");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return build_graph(n, edges);
}

namespace {
int axis_index(int k, int i, int l) { return 1 + (l - 1) * k + (i - 1); }
int diag_index(int k, int n, int l) { return 1 + k * n + (l - 1) / 2; }
}  // namespace

int kite_axis_index(int k, int /*n*/, int i, int l) {
  return axis_index(k, i, l);
}

Graph gen_kite(int k, int n) {
  if (k < 2) throw InvalidSize("kite dimension k must be >= 2");
  if (n < 1) throw InvalidSize("kite strata parameter n must be >= 1");
  const int total = 1 + k * n + (n + 1) / 2;
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= k; ++i) edges.emplace_back(0, axis_index(k, i, 1));
  for (int i = 1; i <= k; ++i)
    for (int l = 1; l < n; ++l)
      edges.emplace_back(axis_index(k, i, l), axis_index(k, i, l + 1));
  // Each odd-level diagonal vertex couples to every axis chain at its own
  // level and at the level two above; this is what makes the stratum unit
  // vectors tridiagonalize A with beta_1^2 = k and beta_i^2 = k+1.
  for (int l = 1; l <= n; l += 2) {
    for (int i = 1; i <= k; ++i) {
      edges.emplace_back(diag_index(k, n, l), axis_index(k, i, l));
      if (l + 2 <= n)
        edges.emplace_back(diag_index(k, n, l), axis_index(k, i, l + 2));
    }
  }
  return build_graph(total, edges);
}

int kite_diag_index(int k, int n, int l) { return diag_index(k, n, l); }

Graph gen_tree_fig4() {
  return build_graph(6, {{0, 1}, {0, 2}, {0, 3}, {2, 4}, {3, 5}});
}

namespace {
// Uniform double in [0, 1) from the top 53 bits; avoids the
// implementation-defined std::uniform_real_distribution.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

bool is_connected(const Graph& g) {
  if (g.n == 0) return true;
  std::vector<char> seen(g.n, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int count = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : g.adjacency[u])
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        queue.push_back(v);
      }
  }
  return count == g.n;
}
}  // namespace

Graph gen_random_connected(int n, double p, unsigned seed) {
  if (n < 1) throw InvalidSize("random graph needs at least one vertex");
  if (p <= 0.0 || p > 1.0) throw InvalidSize("edge probability must be in (0, 1]");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (uniform01(rng) < p) edges.emplace_back(u, v);
    Graph g = build_graph(n, edges);
    if (is_connected(g)) return g;
  }
  throw NumericalFailure("failed to sample a connected graph");
}

Stratification stratify(const Graph& g, int o) {
  if (o < 0 || o >= g.n)
    throw IndexOutOfRange("reference vertex " + std::to_string(o) +
                          " outside [0, " + std::to_string(g.n) + ")");
  Stratification s;
  s.reference = o;
  s.distance.assign(g.n, -1);
  s.distance[o] = 0;
  std::deque<int> queue{o};
  int reached = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : g.adjacency[u])
      if (s.distance[v] < 0) {
        s.distance[v] = s.distance[u] + 1;
        ++reached;
        queue.push_back(v);
      }
  }
  int depth = 0;
  for (int v = 0; v < g.n; ++v) depth = std::max(depth, s.distance[v] + 1);
  s.strata.assign(depth, {});
  for (int v = 0; v < g.n; ++v)
    if (s.distance[v] >= 0) s.strata[s.distance[v]].push_back(v);
  // BFS visits vertices in index order per level already, but sort to be
  // explicit about the contract.
  for (auto& stratum : s.strata) std::sort(stratum.begin(), stratum.end());
  s.component_size = reached;
  s.proper_component = reached < g.n;
  return s;
}

}  // namespace ctqw
