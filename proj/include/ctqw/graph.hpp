#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace ctqw {

/// Undirected simple graph stored as per-vertex sorted neighbor sets.
/// Invariants: adjacency is symmetric, has no self-loops, and every
/// neighbor index lies in [0, n).
struct Graph {
  int n = 0;
  std::vector<std::vector<int>> adjacency;

  int degree(int v) const { return static_cast<int>(adjacency[v].size()); }
  int max_degree() const;
  std::size_t edge_count() const;
  bool has_edge(int u, int v) const;
};

/// Distance partition from a reference vertex: strata[k] holds the
/// vertices at graph distance k, sorted ascending. Covers exactly the
/// connected component of the reference; proper_component flags that
/// unreached vertices exist.
struct Stratification {
  int reference = 0;
  std::vector<std::vector<int>> strata;
  std::vector<int> distance;  // per vertex; -1 when unreached
  bool proper_component = false;
  int component_size = 0;

  int depth() const { return static_cast<int>(strata.size()); }
  int stratum_of(int v) const { return distance[v]; }
};

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);

// Edge-list text format: '#' comment lines, a "n <count>" header, then one
// edge per line as two 0-based vertex indices.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
void emit_edge_list(const Graph& g, std::ostream& out);
std::string emit_edge_list(const Graph& g);

Graph gen_path(int n);

/// Kite graph K(k, n): k axis chains of length n glued at an origin, plus
/// one diagonal vertex per odd level l, adjacent to every axis vertex at
/// levels l and l+2 (when present). Indexing is deterministic: origin,
/// then axis vertices by (level, axis), then diagonal vertices by level.
Graph gen_kite(int k, int n);

/// Index of the axis vertex at (axis i in 1..k, level l in 1..n).
int kite_axis_index(int k, int n, int i, int l);
/// Index of the diagonal vertex (l,...,l), l odd.
int kite_diag_index(int k, int n, int l);

/// Six-vertex tree: 0 adjacent to 1,2,3; leaves 4 on 2 and 5 on 3.
Graph gen_tree_fig4();

/// Erdos-Renyi G(n, p), resampled until connected. Deterministic for a
/// given seed across platforms.
Graph gen_random_connected(int n, double p, unsigned seed);

Stratification stratify(const Graph& g, int o);

}  // namespace ctqw
