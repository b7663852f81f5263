#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "xdg/label.hpp"

namespace xdg {

// Undirected graph on vertices 0..n-1 with bit-packed adjacency rows.
// Rows give O(n/64) neighborhood scans, which is what the BFS distance
// oracle and the set-algebra operations below lean on. Loops live on the
// diagonal and are only legal when the graph was created loop-aware.
class Graph {
public:
  Graph() = default;
  Graph(int n, bool loops_allowed = false);

  int order() const { return n_; }
  bool loops_allowed() const { return loops_; }
  int words_per_row() const { return words_; }

  bool has_edge(int u, int v) const {
    return bits_[static_cast<size_t>(u) * words_ + (v >> 6)] >> (v & 63) & 1;
  }
  void add_edge(int u, int v);  // symmetrizes, duplicates are no-ops

  const std::uint64_t* row(int u) const { return bits_.data() + static_cast<size_t>(u) * words_; }
  std::uint64_t* row(int u) { return bits_.data() + static_cast<size_t>(u) * words_; }

  int degree(int u) const;            // a loop adds one
  long long edge_count() const;       // loops counted once each
  bool has_any_loop() const;
  std::vector<std::pair<int, int>> edges() const;  // u <= v, lexicographic
  bool same_edges(const Graph& o) const;           // positional comparison

  const std::optional<std::vector<VertexLabel>>& labels() const { return labels_; }
  void set_labels(std::vector<VertexLabel> labels);  // must be pairwise distinct
  VertexLabel label_or_index(int v) const;

private:
  int n_ = 0;
  int words_ = 0;
  bool loops_ = false;
  std::vector<std::uint64_t> bits_;
  std::optional<std::vector<VertexLabel>> labels_;
};

struct DistanceMatrix {
  static constexpr int kUnreachable = -1;

  int n = 0;
  std::vector<int> d;  // row-major n*n

  int at(int u, int v) const { return d[static_cast<size_t>(u) * n + v]; }
  bool reachable(int u, int v) const { return at(u, v) != kUnreachable; }
};

// Eccentricity/radius/diameter use DistanceMatrix::kUnreachable as the
// "infinite" value; any disconnected graph has all three infinite.
struct MetricProfile {
  std::vector<int> eccentricity;
  int radius = DistanceMatrix::kUnreachable;
  int diameter = DistanceMatrix::kUnreachable;
};

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges,
                  bool loops_allowed = false);

// BFS from every source; loops never contribute to distances.
DistanceMatrix all_pairs_distances(const Graph& g);

MetricProfile metric_profile(const Graph& g);

// Components sorted by smallest contained vertex; vertices ascending inside.
std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

// Side assignment (0/1 per vertex) if bipartite, nullopt otherwise. The
// lowest-indexed vertex of every component lands on side 0. Loops make a
// graph non-bipartite by fiat and are rejected up front.
std::optional<std::vector<int>> bipartition(const Graph& g);

// Same vertex set, union of edge sets. Orders must match, and labels (when
// both operands carry them) must agree position-wise.
Graph edge_union(const Graph& a, const Graph& b);

// k copies, copy c occupying [c*n, (c+1)*n). Labels, when present, become
// (original, copy index) pairs.
Graph disjoint_copies(int k, const Graph& g);

Graph complement(const Graph& g);  // loop-free graphs only

// Subgraph induced by the given vertices (deduplicated, ascending order),
// relabeled 0..|S|-1 with labels carried over.
Graph induced_subgraph(const Graph& g, std::vector<int> vertices);

}  // namespace xdg
