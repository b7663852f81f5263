#include "xdg/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace xdg {

namespace {

inline void set_bit(std::uint64_t* w, int i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
inline bool get_bit(const std::uint64_t* w, int i) { return w[i >> 6] >> (i & 63) & 1; }

template <typename F>
void for_each_bit(const std::uint64_t* w, int words, F f) {
  for (int b = 0; b < words; ++b) {
    std::uint64_t x = w[b];
    while (x) {
      f((b << 6) + std::countr_zero(x));
      x &= x - 1;
    }
  }
}

}  // namespace

Graph::Graph(int n, bool loops_allowed) : n_(n), loops_(loops_allowed) {
  if (n < 0) throw std::invalid_argument("negative graph order");
  words_ = (n + 63) / 64;
  bits_.assign(static_cast<size_t>(n) * words_, 0);
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) throw std::invalid_argument("edge endpoint out of range");
  if (u == v && !loops_) throw std::invalid_argument("loop on a graph built without loops");
  set_bit(row(u), v);
  set_bit(row(v), u);
}

int Graph::degree(int u) const {
  int d = 0;
  for (int b = 0; b < words_; ++b) d += std::popcount(row(u)[b]);
  return d;
}

long long Graph::edge_count() const {
  long long twice = 0, diag = 0;
  for (int u = 0; u < n_; ++u) {
    for (int b = 0; b < words_; ++b) twice += std::popcount(row(u)[b]);
    if (has_edge(u, u)) ++diag;
  }
  return (twice - diag) / 2 + diag;
}

bool Graph::has_any_loop() const {
  for (int u = 0; u < n_; ++u)
    if (has_edge(u, u)) return true;
  return false;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n_; ++u)
    for_each_bit(row(u), words_, [&](int v) {
      if (u <= v) e.emplace_back(u, v);
    });
  return e;
}

bool Graph::same_edges(const Graph& o) const {
  return n_ == o.n_ && bits_ == o.bits_;
}

void Graph::set_labels(std::vector<VertexLabel> labels) {
  if (static_cast<int>(labels.size()) != n_) throw std::invalid_argument("label count != order");
  std::vector<const VertexLabel*> sorted;
  sorted.reserve(labels.size());
  for (const auto& l : labels) sorted.push_back(&l);
  std::sort(sorted.begin(), sorted.end(), [](const VertexLabel* a, const VertexLabel* b) { return *a < *b; });
  for (size_t i = 1; i < sorted.size(); ++i)
    if (*sorted[i - 1] == *sorted[i]) throw std::invalid_argument("labels not pairwise distinct");
  labels_ = std::move(labels);
}

VertexLabel Graph::label_or_index(int v) const {
  if (labels_) return (*labels_)[static_cast<size_t>(v)];
  return VertexLabel::index(v);
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges, bool loops_allowed) {
  Graph g(n, loops_allowed);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  const int n = g.order(), W = g.words_per_row();
  DistanceMatrix dm;
  dm.n = n;
  dm.d.assign(static_cast<size_t>(n) * n, DistanceMatrix::kUnreachable);
  if (n == 0) return dm;

  std::vector<std::uint64_t> frontier(W), visited(W), next(W);
  for (int s = 0; s < n; ++s) {
    std::fill(frontier.begin(), frontier.end(), 0);
    std::fill(visited.begin(), visited.end(), 0);
    set_bit(frontier.data(), s);
    set_bit(visited.data(), s);
    dm.d[static_cast<size_t>(s) * n + s] = 0;
    for (int dist = 1;; ++dist) {
      std::fill(next.begin(), next.end(), 0);
      for_each_bit(frontier.data(), W, [&](int u) {
        const std::uint64_t* r = g.row(u);
        for (int b = 0; b < W; ++b) next[b] |= r[b];
      });
      bool any = false;
      for (int b = 0; b < W; ++b) {
        next[b] &= ~visited[b];
        visited[b] |= next[b];
        any |= next[b] != 0;
      }
      if (!any) break;
      for_each_bit(next.data(), W, [&](int v) { dm.d[static_cast<size_t>(s) * n + v] = dist; });
      frontier.swap(next);
    }
  }
  return dm;
}

MetricProfile metric_profile(const Graph& g) {
  const int n = g.order();
  DistanceMatrix dm = all_pairs_distances(g);
  MetricProfile mp;
  mp.eccentricity.assign(n, DistanceMatrix::kUnreachable);
  for (int u = 0; u < n; ++u) {
    int ecc = 0;
    bool infinite = false;
    for (int v = 0; v < n; ++v) {
      int d = dm.at(u, v);
      if (d == DistanceMatrix::kUnreachable) {
        infinite = true;
        break;
      }
      ecc = std::max(ecc, d);
    }
    mp.eccentricity[u] = infinite ? DistanceMatrix::kUnreachable : ecc;
  }
  for (int u = 0; u < n; ++u) {
    int e = mp.eccentricity[u];
    if (e == DistanceMatrix::kUnreachable) {
      mp.radius = mp.diameter = DistanceMatrix::kUnreachable;
      return mp;
    }
    if (mp.radius == DistanceMatrix::kUnreachable || e < mp.radius) mp.radius = e;
    if (mp.diameter == DistanceMatrix::kUnreachable || e > mp.diameter) mp.diameter = e;
  }
  return mp;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  const int n = g.order(), W = g.words_per_row();
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (int s = 0; s < n; ++s) {
    if (seen[static_cast<size_t>(s)]) continue;
    seen[static_cast<size_t>(s)] = 1;
    std::vector<int> comp{s}, stack{s};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for_each_bit(g.row(u), W, [&](int v) {
        if (!seen[static_cast<size_t>(v)]) {
          seen[static_cast<size_t>(v)] = 1;
          comp.push_back(v);
          stack.push_back(v);
        }
      });
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  return connected_components(g).size() == 1;
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
  if (g.has_any_loop()) throw std::invalid_argument("bipartition of a graph with loops");
  const int n = g.order(), W = g.words_per_row();
  std::vector<int> side(n, -1);
  std::vector<int> queue;
  for (int s = 0; s < n; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    queue.assign(1, s);
    while (!queue.empty()) {
      int u = queue.back();
      queue.pop_back();
      bool ok = true;
      for_each_bit(g.row(u), W, [&](int v) {
        if (side[v] == -1) {
          side[v] = side[u] ^ 1;
          queue.push_back(v);
        } else if (side[v] == side[u]) {
          ok = false;
        }
      });
      if (!ok) return std::nullopt;
    }
  }
  return side;
}

Graph edge_union(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) throw std::invalid_argument("edge_union: order mismatch");
  if (a.labels() && b.labels() && !(*a.labels() == *b.labels()))
    throw std::invalid_argument("edge_union: label mismatch");
  Graph u(a.order(), a.loops_allowed() || b.loops_allowed());
  for (int v = 0; v < a.order(); ++v)
    for (int w = 0; w < a.words_per_row(); ++w) u.row(v)[w] = a.row(v)[w] | b.row(v)[w];
  if (a.labels())
    u.set_labels(*a.labels());
  else if (b.labels())
    u.set_labels(*b.labels());
  return u;
}

Graph disjoint_copies(int k, const Graph& g) {
  if (k < 1) throw std::invalid_argument("disjoint_copies: k must be positive");
  const int n = g.order();
  Graph out(k * n, g.loops_allowed());
  for (int c = 0; c < k; ++c)
    for (auto [u, v] : g.edges()) out.add_edge(c * n + u, c * n + v);
  if (g.labels()) {
    std::vector<VertexLabel> labels;
    labels.reserve(static_cast<size_t>(k) * n);
    for (int c = 0; c < k; ++c)
      for (int v = 0; v < n; ++v)
        labels.push_back(VertexLabel::pair((*g.labels())[static_cast<size_t>(v)], VertexLabel::index(c)));
    out.set_labels(std::move(labels));
  }
  return out;
}

Graph complement(const Graph& g) {
  if (g.has_any_loop()) throw std::invalid_argument("complement of a graph with loops");
  const int n = g.order();
  Graph c(n, false);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) c.add_edge(u, v);
  if (g.labels()) c.set_labels(*g.labels());
  return c;
}

Graph induced_subgraph(const Graph& g, std::vector<int> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  for (int v : vertices)
    if (v < 0 || v >= g.order()) throw std::invalid_argument("induced_subgraph: vertex out of range");
  const int m = static_cast<int>(vertices.size());
  Graph s(m, g.loops_allowed());
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j)
      if (g.has_edge(vertices[static_cast<size_t>(i)], vertices[static_cast<size_t>(j)]) && (i != j || g.loops_allowed()))
        s.add_edge(i, j);
  if (g.labels()) {
    std::vector<VertexLabel> labels;
    labels.reserve(vertices.size());
    for (int v : vertices) labels.push_back((*g.labels())[static_cast<size_t>(v)]);
    s.set_labels(std::move(labels));
  }
  return s;
}

}  // namespace xdg
