#include "xdg/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace xdg {

bool mapping_is_isomorphism(const Graph& a, const Graph& b,
                            const std::vector<int>& mapping) {
  const int n = a.order();
  if (b.order() != n || static_cast<int>(mapping.size()) != n) return false;
  std::vector<char> hit(static_cast<size_t>(n), 0);
  for (int u = 0; u < n; ++u) {
    const int v = mapping[static_cast<size_t>(u)];
    if (v < 0 || v >= n || hit[static_cast<size_t>(v)]) return false;
    hit[static_cast<size_t>(v)] = 1;
  }
  for (int u = 0; u < n; ++u)
    for (int v = u; v < n; ++v)
      if (a.has_edge(u, v) !=
          b.has_edge(mapping[static_cast<size_t>(u)], mapping[static_cast<size_t>(v)]))
        return false;
  return true;
}

namespace {

// One refinement pass shared between both graphs so colours stay
// comparable. Signature of v: current colour, loop bit, sorted multiset of
// (distance, colour) over the vertices of v's own graph.
struct Refinement {
  std::vector<int> color_a, color_b;
  int classes = 0;
};

Refinement refine(const Graph& a, const Graph& b, const DistanceMatrix& da,
                  const DistanceMatrix& db) {
  const int n = a.order();
  Refinement r;
  r.color_a.assign(static_cast<size_t>(n), 0);
  r.color_b.assign(static_cast<size_t>(n), 0);
  {
    std::map<std::pair<int, bool>, int> dict;
    for (int v = 0; v < n; ++v) {
      r.color_a[static_cast<size_t>(v)] =
          dict.emplace(std::make_pair(a.degree(v), a.has_edge(v, v)),
                       static_cast<int>(dict.size()))
              .first->second;
    }
    for (int v = 0; v < n; ++v) {
      r.color_b[static_cast<size_t>(v)] =
          dict.emplace(std::make_pair(b.degree(v), b.has_edge(v, v)),
                       static_cast<int>(dict.size()))
              .first->second;
    }
    r.classes = static_cast<int>(dict.size());
  }
  using Sig = std::vector<std::pair<int, int>>;
  std::vector<Sig> sig_a(static_cast<size_t>(n)), sig_b(static_cast<size_t>(n));
  for (;;) {
    auto build = [n](const DistanceMatrix& d, const std::vector<int>& color,
                     std::vector<Sig>& out) {
      for (int v = 0; v < n; ++v) {
        Sig& s = out[static_cast<size_t>(v)];
        s.clear();
        s.reserve(static_cast<size_t>(n) + 1);
        s.emplace_back(-2, color[static_cast<size_t>(v)]);
        for (int u = 0; u < n; ++u) s.emplace_back(d.at(v, u), color[static_cast<size_t>(u)]);
        std::sort(s.begin() + 1, s.end());
      }
    };
    build(da, r.color_a, sig_a);
    build(db, r.color_b, sig_b);
    std::map<Sig, int> dict;
    std::vector<int> next_a(static_cast<size_t>(n)), next_b(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v)
      next_a[static_cast<size_t>(v)] =
          dict.emplace(sig_a[static_cast<size_t>(v)], static_cast<int>(dict.size()))
              .first->second;
    for (int v = 0; v < n; ++v)
      next_b[static_cast<size_t>(v)] =
          dict.emplace(sig_b[static_cast<size_t>(v)], static_cast<int>(dict.size()))
              .first->second;
    const int classes = static_cast<int>(dict.size());
    if (classes == r.classes) return r;
    r.color_a = std::move(next_a);
    r.color_b = std::move(next_b);
    r.classes = classes;
  }
}

struct Search {
  const Graph& a;
  const Graph& b;
  const DistanceMatrix& da;
  const DistanceMatrix& db;
  const std::vector<int>& color_a;
  const std::vector<int>& color_b;
  int n;
  std::int64_t budget;
  std::int64_t used = 0;
  bool out_of_budget = false;
  std::vector<int> map_ab;   // -1 when unmapped
  std::vector<int> map_ba;   // -1 when unmapped
  std::vector<int> order;    // vertices of `a` in assignment order
  std::vector<int> anchored; // mapped-neighbour count per vertex of `a`

  Search(const Graph& a_, const Graph& b_, const DistanceMatrix& da_,
         const DistanceMatrix& db_, const std::vector<int>& ca,
         const std::vector<int>& cb, std::int64_t budget_)
      : a(a_), b(b_), da(da_), db(db_), color_a(ca), color_b(cb),
        n(a_.order()), budget(budget_) {
    map_ab.assign(static_cast<size_t>(n), -1);
    map_ba.assign(static_cast<size_t>(n), -1);
    anchored.assign(static_cast<size_t>(n), 0);
  }

  int pick() const {
    int best = -1;
    for (int u = 0; u < n; ++u) {
      if (map_ab[static_cast<size_t>(u)] != -1) continue;
      if (best == -1) { best = u; continue; }
      const int au = anchored[static_cast<size_t>(u)], ab = anchored[static_cast<size_t>(best)];
      if (au > ab || (au == ab && a.degree(u) > a.degree(best))) best = u;
    }
    return best;
  }

  bool consistent(int u, int v) const {
    if (color_a[static_cast<size_t>(u)] != color_b[static_cast<size_t>(v)]) return false;
    if (a.has_edge(u, u) != b.has_edge(v, v)) return false;
    for (int w = 0; w < n; ++w) {
      const int x = map_ab[static_cast<size_t>(w)];
      if (x == -1) continue;
      if (a.has_edge(u, w) != b.has_edge(v, x)) return false;
      if (da.at(u, w) != db.at(v, x)) return false;
    }
    return true;
  }

  bool extend(int depth) {
    if (depth == n) return true;
    const int u = pick();
    for (int v = 0; v < n; ++v) {
      if (map_ba[static_cast<size_t>(v)] != -1) continue;
      if (++used > budget) { out_of_budget = true; return false; }
      if (!consistent(u, v)) continue;
      map_ab[static_cast<size_t>(u)] = v;
      map_ba[static_cast<size_t>(v)] = u;
      for (int w = 0; w < n; ++w)
        if (a.has_edge(u, w)) ++anchored[static_cast<size_t>(w)];
      if (extend(depth + 1)) return true;
      for (int w = 0; w < n; ++w)
        if (a.has_edge(u, w)) --anchored[static_cast<size_t>(w)];
      map_ab[static_cast<size_t>(u)] = -1;
      map_ba[static_cast<size_t>(v)] = -1;
      if (out_of_budget) return false;
    }
    return false;
  }
};

}  // namespace

IsoResult are_isomorphic(const Graph& a, const Graph& b, std::int64_t node_budget) {
  IsoResult res;
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) {
    res.outcome = IsoOutcome::not_isomorphic;
    return res;
  }
  const int n = a.order();
  if (n == 0) {
    res.outcome = IsoOutcome::isomorphic;
    return res;
  }
  const DistanceMatrix da = all_pairs_distances(a), db = all_pairs_distances(b);
  const Refinement r = refine(a, b, da, db);
  {
    std::vector<int> count_a(static_cast<size_t>(r.classes), 0);
    std::vector<int> count_b(static_cast<size_t>(r.classes), 0);
    for (int v = 0; v < n; ++v) {
      ++count_a[static_cast<size_t>(r.color_a[static_cast<size_t>(v)])];
      ++count_b[static_cast<size_t>(r.color_b[static_cast<size_t>(v)])];
    }
    if (count_a != count_b) {
      res.outcome = IsoOutcome::not_isomorphic;
      return res;
    }
  }
  Search search(a, b, da, db, r.color_a, r.color_b, node_budget);
  const bool found = search.extend(0);
  res.nodes_used = search.used;
  if (found) {
    if (!mapping_is_isomorphism(a, b, search.map_ab))
      throw std::logic_error("are_isomorphic: replay rejected the mapping");
    res.outcome = IsoOutcome::isomorphic;
    res.mapping = std::move(search.map_ab);
  } else {
    res.outcome = search.out_of_budget ? IsoOutcome::undecided : IsoOutcome::not_isomorphic;
  }
  return res;
}

}  // namespace xdg
