#include "xdg/products.hpp"

#include <algorithm>
#include <stdexcept>

namespace xdg {

const char* product_kind_name(ProductKind k) {
  switch (k) {
    case ProductKind::cartesian: return "cartesian";
    case ProductKind::strong: return "strong";
    case ProductKind::direct: return "direct";
    case ProductKind::lexicographic: return "lexicographic";
  }
  return "?";
}

Graph product(ProductKind kind, const Graph& g, const Graph& h) {
  const int ng = g.order(), nh = h.order();
  if (ng == 0 || nh == 0) throw std::invalid_argument("product: empty factor");
  Graph p(ng * nh, g.loops_allowed() || h.loops_allowed());
  auto adjacent = [&](int g1, int h1, int g2, int h2) -> bool {
    const bool ge = g.has_edge(g1, g2), he = h.has_edge(h1, h2);
    const bool gs = g1 == g2, hs = h1 == h2;
    switch (kind) {
      case ProductKind::cartesian: return (ge && hs) || (gs && he);
      case ProductKind::strong: return (ge && hs) || (gs && he) || (ge && he);
      case ProductKind::direct: return ge && he;
      case ProductKind::lexicographic: return ge || (gs && he);
    }
    return false;
  };
  for (int g1 = 0; g1 < ng; ++g1)
    for (int h1 = 0; h1 < nh; ++h1) {
      const int u = pair_index(g1, h1, nh);
      for (int g2 = g1; g2 < ng; ++g2)
        for (int h2 = (g2 == g1 ? h1 : 0); h2 < nh; ++h2) {
          const int v = pair_index(g2, h2, nh);
          if (u == v && !p.loops_allowed()) continue;
          if (adjacent(g1, h1, g2, h2)) p.add_edge(u, v);
        }
    }
  std::vector<VertexLabel> labels;
  labels.reserve(static_cast<size_t>(ng) * nh);
  for (int g1 = 0; g1 < ng; ++g1)
    for (int h1 = 0; h1 < nh; ++h1)
      labels.push_back(VertexLabel::pair(g.label_or_index(g1), h.label_or_index(h1)));
  p.set_labels(std::move(labels));
  return p;
}

namespace {

constexpr int kInf = DistanceMatrix::kUnreachable;

// Shortest even and odd walk lengths between all pairs: plain BFS on the
// state space (vertex, parity).
void walk_parities(const Graph& g, std::vector<int>& even, std::vector<int>& odd) {
  const int n = g.order();
  even.assign(static_cast<size_t>(n) * n, kInf);
  odd.assign(static_cast<size_t>(n) * n, kInf);
  std::vector<int> dist(static_cast<size_t>(n) * 2);
  std::vector<int> queue;
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), kInf);
    queue.assign(1, s * 2);
    dist[static_cast<size_t>(s) * 2] = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
      const int state = queue[head];
      const int u = state >> 1, par = state & 1;
      const int du = dist[static_cast<size_t>(state)];
      for (int v = 0; v < n; ++v) {
        if (!g.has_edge(u, v)) continue;
        const int next = v * 2 + (par ^ 1);
        if (dist[static_cast<size_t>(next)] == kInf) {
          dist[static_cast<size_t>(next)] = du + 1;
          queue.push_back(next);
        }
      }
    }
    for (int v = 0; v < n; ++v) {
      even[static_cast<size_t>(s) * n + v] = dist[static_cast<size_t>(v) * 2];
      odd[static_cast<size_t>(s) * n + v] = dist[static_cast<size_t>(v) * 2 + 1];
    }
  }
}

}  // namespace

ProductMetric::ProductMetric(ProductKind kind, const Graph& g, const Graph& h)
    : kind_(kind), ng_(g.order()), nh_(h.order()) {
  if (g.has_any_loop() || h.has_any_loop())
    throw std::invalid_argument("ProductMetric: factors must be loop-free");
  dg_ = all_pairs_distances(g);
  dh_ = all_pairs_distances(h);
  if (kind == ProductKind::direct) {
    walk_parities(g, even_g_, odd_g_);
    walk_parities(h, even_h_, odd_h_);
  }
  deg_g_.resize(static_cast<size_t>(ng_));
  for (int v = 0; v < ng_; ++v) deg_g_[static_cast<size_t>(v)] = g.degree(v);
  deg_h_.resize(static_cast<size_t>(nh_));
  for (int v = 0; v < nh_; ++v) deg_h_[static_cast<size_t>(v)] = h.degree(v);
}

int ProductMetric::distance(int g1, int h1, int g2, int h2) const {
  if (g1 < 0 || g1 >= ng_ || g2 < 0 || g2 >= ng_ || h1 < 0 || h1 >= nh_ || h2 < 0 || h2 >= nh_)
    throw std::invalid_argument("ProductMetric: vertex out of range");
  const int dg = dg_.at(g1, g2), dh = dh_.at(h1, h2);
  switch (kind_) {
    case ProductKind::cartesian:
      if (dg == kInf || dh == kInf) return kInf;
      return dg + dh;
    case ProductKind::strong:
      if (dg == kInf || dh == kInf) return kInf;
      return std::max(dg, dh);
    case ProductKind::direct: {
      // least k admitting walks of length k in both factors. A walk of
      // length L >= 1 extends to L+2 by repeating an edge, so per parity
      // the candidate is the max of the two shortest lengths; the one
      // trap is a length-0 walk at an isolated vertex, which extends to
      // nothing.
      const int eg = even_g_[static_cast<size_t>(g1) * ng_ + g2];
      const int og = odd_g_[static_cast<size_t>(g1) * ng_ + g2];
      const int eh = even_h_[static_cast<size_t>(h1) * nh_ + h2];
      const int oh = odd_h_[static_cast<size_t>(h1) * nh_ + h2];
      int best = kInf;
      if (eg != kInf && eh != kInf) {
        const bool ok_g = eg == eh || eg > 0 || deg_g_[static_cast<size_t>(g1)] > 0;
        const bool ok_h = eh == eg || eh > 0 || deg_h_[static_cast<size_t>(h1)] > 0;
        if (ok_g && ok_h) best = std::max(eg, eh);
      }
      if (og != kInf && oh != kInf) {
        const int cand = std::max(og, oh);
        if (best == kInf || cand < best) best = cand;
      }
      return best;
    }
    case ProductKind::lexicographic:
      if (g1 != g2) return dg;
      if (deg_g_[static_cast<size_t>(g1)] > 0) return dh == kInf ? 2 : std::min(dh, 2);
      return dh;
  }
  return kInf;
}

int product_distance(ProductKind kind, const Graph& g, const Graph& h,
                     std::pair<int, int> u, std::pair<int, int> v) {
  return ProductMetric(kind, g, h).distance(u.first, u.second, v.first, v.second);
}

}  // namespace xdg
