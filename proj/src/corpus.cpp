#include "xdg/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "xdg/families.hpp"

namespace xdg {

Graph random_graph(std::mt19937_64& rng, int order, double density) {
  Graph g(order);
  std::bernoulli_distribution coin(density);
  for (int u = 0; u < order; ++u)
    for (int v = u + 1; v < order; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

Graph random_connected_graph(std::mt19937_64& rng, int order, double density) {
  Graph g(order);
  std::vector<int> verts(static_cast<size_t>(order));
  std::iota(verts.begin(), verts.end(), 0);
  std::shuffle(verts.begin(), verts.end(), rng);
  for (int i = 1; i < order; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    g.add_edge(verts[static_cast<size_t>(i)], verts[static_cast<size_t>(pick(rng))]);
  }
  std::bernoulli_distribution coin(density);
  for (int u = 0; u < order; ++u)
    for (int v = u + 1; v < order; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

Graph make_isolate_free(Graph g, std::mt19937_64& rng) {
  const int n = g.order();
  if (n < 2) throw std::invalid_argument("make_isolate_free: need order >= 2");
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) > 0) continue;
    std::uniform_int_distribution<int> pick(0, n - 2);
    int other = pick(rng);
    if (other >= v) ++other;
    g.add_edge(v, other);
  }
  return g;
}

bool has_isolated_vertex(const Graph& g) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) return true;
  return false;
}

bool is_triangle_free(const Graph& g) {
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (!g.has_edge(a, b)) continue;
      for (int c = b + 1; c < n; ++c)
        if (g.has_edge(a, c) && g.has_edge(b, c)) return false;
    }
  return true;
}

namespace {

Graph star(int leaves) {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

struct Pool {
  std::vector<std::pair<Graph, std::string>> entries;
  void add(Graph g, std::string name) { entries.emplace_back(std::move(g), std::move(name)); }
};

Pool structured_pool(int max_order) {
  Pool pool;
  for (int n = 1; n <= max_order; ++n) pool.add(path(n), "P" + std::to_string(n));
  for (int n = 3; n <= max_order; ++n) pool.add(cycle(n), "C" + std::to_string(n));
  for (int n = 2; n <= std::min(max_order, 5); ++n) pool.add(complete(n), "K" + std::to_string(n));
  for (int k = 2; k + 1 <= max_order; ++k) pool.add(star(k), "S" + std::to_string(k));
  for (int d = 1; (1 << d) <= max_order; ++d) pool.add(hypercube(d), "Q" + std::to_string(d));
  for (int n = 1; n <= std::min(max_order, 3); ++n)
    pool.add(edgeless(n), "E" + std::to_string(n));
  return pool;
}

}  // namespace

std::vector<InstancePair> identity_fuzz_corpus(int count, std::uint64_t seed, int max_order) {
  if (count < 0 || max_order < 1) throw std::invalid_argument("identity_fuzz_corpus: bad parameters");
  std::mt19937_64 rng(seed);
  std::vector<InstancePair> out;
  out.reserve(static_cast<size_t>(count));
  const Pool pool = structured_pool(max_order);
  const int m = static_cast<int>(pool.entries.size());
  const int structured_budget = std::min(m * 2, count / 2);
  // structured pairs first: stride through the pool so both factors vary
  for (int i = 0; static_cast<int>(out.size()) < structured_budget && i < m * 2; ++i) {
    const auto& a = pool.entries[static_cast<size_t>(i % m)];
    const auto& b = pool.entries[static_cast<size_t>((i * 5 + 3) % m)];
    out.push_back({a.first, b.first, a.second + " / " + b.second});
  }
  const double densities[] = {0.2, 0.5, 0.8};
  int trial = 0;
  while (static_cast<int>(out.size()) < count) {
    const double den = densities[trial % 3];
    std::uniform_int_distribution<int> order(1, max_order);
    const int ng = order(rng), nh = order(rng);
    Graph g = random_graph(rng, ng, den);
    Graph h = random_graph(rng, nh, den);
    out.push_back({std::move(g), std::move(h),
                   "er#" + std::to_string(trial) + " n=" + std::to_string(ng) + "," +
                       std::to_string(nh) + " d=" + std::to_string(den).substr(0, 3)});
    ++trial;
  }
  return out;
}

std::vector<InstancePair> connected_pair_corpus(int count, std::uint64_t seed, int max_order) {
  if (count < 0 || max_order < 2) throw std::invalid_argument("connected_pair_corpus: bad parameters");
  std::mt19937_64 rng(seed);
  std::vector<InstancePair> out;
  out.reserve(static_cast<size_t>(count));
  const double densities[] = {0.15, 0.35, 0.6};
  for (int trial = 0; trial < count; ++trial) {
    const double den = densities[trial % 3];
    std::uniform_int_distribution<int> order(2, max_order);
    const int ng = order(rng), nh = order(rng);
    Graph g = random_connected_graph(rng, ng, den);
    Graph h = random_connected_graph(rng, nh, den);
    out.push_back({std::move(g), std::move(h),
                   "conn#" + std::to_string(trial) + " n=" + std::to_string(ng) + "," +
                       std::to_string(nh)});
  }
  return out;
}

}  // namespace xdg
