#include "xdg/exact_distance.hpp"

#include <bit>

namespace xdg {

Graph exact_distance_graph(const Graph& g, int p) {
  return exact_distance_graph(g, all_pairs_distances(g), p);
}

Graph exact_distance_graph(const Graph& g, const DistanceMatrix& dm, int p) {
  if (p < 0) throw std::invalid_argument("exact_distance_graph: negative p");
  if (g.has_any_loop()) throw std::invalid_argument("exact_distance_graph: input has loops");
  const int n = g.order();
  Graph out(n, p == 0);
  for (int u = 0; u < n; ++u)
    for (int v = u; v < n; ++v)
      if (dm.at(u, v) == p && (u != v || p == 0)) out.add_edge(u, v);
  if (g.labels()) out.set_labels(*g.labels());
  return out;
}

namespace {

struct PathDfs {
  const Graph& g;
  int p;
  long long budget;
  std::vector<char> on_path;
  Graph* out;
  int start;

  void run(int u, int depth) {
    if (--budget < 0) throw BudgetError("path_power: step budget exhausted");
    if (depth == p) {
      if (start < u) out->add_edge(start, u);
      return;
    }
    const int W = g.words_per_row();
    for (int b = 0; b < W; ++b) {
      std::uint64_t x = g.row(u)[b];
      while (x) {
        int v = (b << 6) + std::countr_zero(x);
        x &= x - 1;
        if (!on_path[static_cast<size_t>(v)]) {
          on_path[static_cast<size_t>(v)] = 1;
          run(v, depth + 1);
          on_path[static_cast<size_t>(v)] = 0;
        }
      }
    }
  }
};

}  // namespace

Graph path_power(const Graph& g, int p, long long step_budget) {
  if (p < 1) throw std::invalid_argument("path_power: p must be >= 1");
  if (g.has_any_loop()) throw std::invalid_argument("path_power: input has loops");
  const int n = g.order();
  Graph out(n);
  PathDfs dfs{g, p, step_budget, std::vector<char>(static_cast<size_t>(n), 0), &out, 0};
  for (int s = 0; s < n; ++s) {
    dfs.start = s;
    dfs.on_path.assign(static_cast<size_t>(n), 0);
    dfs.on_path[static_cast<size_t>(s)] = 1;
    dfs.run(s, 0);
  }
  if (g.labels()) out.set_labels(*g.labels());
  return out;
}

}  // namespace xdg
