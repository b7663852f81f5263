#include "xdg/families.hpp"

#include <bit>
#include <stdexcept>

namespace xdg {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<std::uint32_t> k_subsets(int n, int k) {
  if (n < 0 || k < 0 || k > n || n > 31) throw std::invalid_argument("k_subsets: bad parameters");
  std::vector<std::uint32_t> out;
  out.reserve(static_cast<size_t>(binomial(n, k)));
  const std::uint32_t top = std::uint32_t(1) << n;
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  // Gosper's hack walks masks of fixed popcount in ascending order.
  std::uint32_t m = (std::uint32_t(1) << k) - 1;
  while (m < top) {
    out.push_back(m);
    std::uint32_t c = m & -m, r = m + c;
    m = (((r ^ m) >> 2) / c) | r;
  }
  return out;
}

static std::vector<VertexLabel> index_labels(int n) {
  std::vector<VertexLabel> l;
  l.reserve(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) l.push_back(VertexLabel::index(v));
  return l;
}

Graph path(int n) {
  if (n < 1) throw std::invalid_argument("path: order must be >= 1");
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  g.set_labels(index_labels(n));
  return g;
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: order must be >= 3");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  g.set_labels(index_labels(n));
  return g;
}

Graph complete(int n) {
  if (n < 1) throw std::invalid_argument("complete: order must be >= 1");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  g.set_labels(index_labels(n));
  return g;
}

Graph edgeless(int n) {
  if (n < 1) throw std::invalid_argument("edgeless: order must be >= 1");
  Graph g(n);
  g.set_labels(index_labels(n));
  return g;
}

Graph hypercube(int n) {
  if (n < 1) throw std::invalid_argument("hypercube: dimension must be >= 1");
  if (n > 14) throw std::invalid_argument("hypercube: dimension above supported budget (14)");
  const int N = 1 << n;
  Graph g(N);
  for (int v = 0; v < N; ++v)
    for (int j = 0; j < n; ++j) {
      int w = v ^ (1 << j);
      if (v < w) g.add_edge(v, w);
    }
  std::vector<VertexLabel> labels;
  labels.reserve(static_cast<size_t>(N));
  for (int v = 0; v < N; ++v) labels.push_back(VertexLabel::bits(static_cast<std::uint64_t>(v), n));
  g.set_labels(std::move(labels));
  return g;
}

std::vector<int> hypercube_level(int n, int j) {
  if (n < 1 || n > 14 || j < 0 || j > n) throw std::invalid_argument("hypercube_level: bad parameters");
  std::vector<int> level;
  for (int v = 0; v < (1 << n); ++v)
    if (std::popcount(static_cast<unsigned>(v)) == j) level.push_back(v);
  return level;
}

static Graph subset_graph(int n, int k, int i, bool at_most) {
  if (n < 1 || k < 0 || k > n || i < 0 || i > k)
    throw std::invalid_argument("subset graph: need 0 <= i <= k <= n, n >= 1");
  auto verts = k_subsets(n, k);
  const int N = static_cast<int>(verts.size());
  Graph g(N);
  for (int a = 0; a < N; ++a)
    for (int b = a + 1; b < N; ++b) {
      int common = std::popcount(verts[static_cast<size_t>(a)] & verts[static_cast<size_t>(b)]);
      if (at_most ? common <= i : common == i) g.add_edge(a, b);
    }
  std::vector<VertexLabel> labels;
  labels.reserve(verts.size());
  for (auto m : verts) labels.push_back(VertexLabel::subset(m, n));
  g.set_labels(std::move(labels));
  return g;
}

Graph johnson(int n, int k, int i) { return subset_graph(n, k, i, false); }

Graph kneser_general(int n, int k, int i) { return subset_graph(n, k, i, true); }

}  // namespace xdg
