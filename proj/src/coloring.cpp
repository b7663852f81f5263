#include "xdg/coloring.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "xdg/families.hpp"
#include "xdg/products.hpp"

namespace xdg {

namespace {

constexpr int kViolationCap = 16;

int popcount_words(const std::uint64_t* w, int words) {
  int total = 0;
  for (int i = 0; i < words; ++i) total += std::popcount(w[i]);
  return total;
}

}  // namespace

Coloring make_coloring(std::vector<int> colors) {
  std::vector<int> seen;
  for (int c : colors) {
    if (c < 1) throw std::invalid_argument("make_coloring: colors are positive integers");
    seen.push_back(c);
  }
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  Coloring out;
  out.color = std::move(colors);
  out.count = static_cast<int>(seen.size());
  return out;
}

ColoringCheck validate_coloring(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.color.size()) != g.order())
    throw std::invalid_argument("validate_coloring: coloring not total on the vertex set");
  ColoringCheck out;
  for (int u = 0; u < g.order(); ++u) {
    if (c.color[u] < 1) throw std::invalid_argument("validate_coloring: nonpositive color");
    for (int v = u; v < g.order(); ++v) {
      if (!g.has_edge(u, v)) continue;
      if (u == v || c.color[u] == c.color[v]) {
        ++out.violation_total;
        if (static_cast<int>(out.violations.size()) < kViolationCap) out.violations.emplace_back(u, v);
      }
    }
  }
  out.proper = out.violation_total == 0;
  return out;
}

Coloring dsatur_coloring(const Graph& g) {
  const int n = g.order();
  if (g.has_any_loop()) throw std::invalid_argument("dsatur_coloring: loops admit no proper coloring");
  std::vector<int> color(n, 0);
  // per-vertex bitmask of neighbor colors, grown on demand
  const int max_colors = n + 1;
  const int cwords = (max_colors + 63) / 64;
  std::vector<std::uint64_t> neighbor_colors(static_cast<size_t>(n) * cwords, 0);
  std::vector<int> degree(n);
  for (int v = 0; v < n; ++v) degree[v] = g.degree(v);

  for (int step = 0; step < n; ++step) {
    int best = -1, best_sat = -1, best_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (color[v] != 0) continue;
      const int sat = popcount_words(&neighbor_colors[static_cast<size_t>(v) * cwords], cwords);
      if (sat > best_sat || (sat == best_sat && degree[v] > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = degree[v];
      }
    }
    const std::uint64_t* taken = &neighbor_colors[static_cast<size_t>(best) * cwords];
    int chosen = 0;
    for (int c = 1; c <= n; ++c)
      if (!(taken[(c - 1) >> 6] >> ((c - 1) & 63) & 1)) {
        chosen = c;
        break;
      }
    color[best] = chosen;
    for (int u = 0; u < n; ++u)
      if (u != best && g.has_edge(best, u))
        neighbor_colors[static_cast<size_t>(u) * cwords + ((chosen - 1) >> 6)] |=
            std::uint64_t{1} << ((chosen - 1) & 63);
  }
  return make_coloring(std::move(color));
}

namespace {

struct BitSet {
  std::vector<std::uint64_t> w;

  explicit BitSet(int words = 0) : w(words, 0) {}

  bool test(int i) const { return w[i >> 6] >> (i & 63) & 1; }
  void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool empty() const {
    for (auto x : w)
      if (x) return false;
    return true;
  }
  int count() const { return popcount_words(w.data(), static_cast<int>(w.size())); }
};

BitSet intersect_row(const BitSet& s, const Graph& g, int v) {
  BitSet out(static_cast<int>(s.w.size()));
  const std::uint64_t* row = g.row(v);
  for (size_t i = 0; i < s.w.size(); ++i) out.w[i] = s.w[i] & row[i];
  return out;
}

struct CliqueSearch {
  const Graph& g;
  long long budget;
  long long nodes = 0;
  bool tripped = false;
  std::vector<int> best;
  std::vector<int> current;

  CliqueSearch(const Graph& graph, long long node_budget) : g(graph), budget(node_budget) {}

  void run(BitSet p, BitSet x) {
    if (tripped) return;
    if (++nodes > budget) {
      tripped = true;
      return;
    }
    if (p.empty() && x.empty()) {
      if (current.size() > best.size()) best = current;
      return;
    }
    if (static_cast<int>(current.size()) + p.count() <= static_cast<int>(best.size())) return;
    // pivot on the vertex covering most of p
    int pivot = -1, pivot_cover = -1;
    for (int u = 0; u < g.order(); ++u) {
      if (!p.test(u) && !x.test(u)) continue;
      const int cover = intersect_row(p, g, u).count();
      if (cover > pivot_cover) {
        pivot_cover = cover;
        pivot = u;
      }
    }
    for (int v = 0; v < g.order(); ++v) {
      if (!p.test(v) || (pivot >= 0 && g.has_edge(pivot, v))) continue;
      current.push_back(v);
      run(intersect_row(p, g, v), intersect_row(x, g, v));
      current.pop_back();
      if (tripped) return;
      p.reset(v);
      x.set(v);
    }
  }
};

}  // namespace

CliqueResult max_clique(const Graph& g, long long node_budget) {
  if (g.has_any_loop()) throw std::invalid_argument("max_clique: loops unsupported");
  CliqueSearch search(g, node_budget);
  BitSet p(g.words_per_row()), x(g.words_per_row());
  for (int v = 0; v < g.order(); ++v) p.set(v);
  if (g.order() > 0) search.run(p, x);
  std::sort(search.best.begin(), search.best.end());
  return CliqueResult{search.best, !search.tripped, search.nodes};
}

namespace {

// Fixed-order k-colorability search: clique vertices first, then degree
// descending, index ascending. Colors explored smallest-first with the
// fresh-color rule (a brand-new color only right after all older ones).
struct KColorSearch {
  enum class Outcome { found, refuted, out_of_budget };

  const Graph& g;
  std::vector<int> order;
  std::vector<std::vector<int>> adj_later;  // neighbors that come later in `order`
  std::vector<int> color;                   // by vertex
  long long& nodes;
  long long budget;
  int k;

  KColorSearch(const Graph& graph, const std::vector<int>& clique, int colors, long long& node_counter,
               long long node_budget)
      : g(graph), nodes(node_counter), budget(node_budget), k(colors) {
    const int n = g.order();
    std::vector<bool> in_clique(n, false);
    for (int v : clique) in_clique[v] = true;
    order = clique;
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
      if (!in_clique[v]) rest.push_back(v);
    std::sort(rest.begin(), rest.end(), [&](int a, int b) {
      const int da = g.degree(a), db = g.degree(b);
      return da != db ? da > db : a < b;
    });
    order.insert(order.end(), rest.begin(), rest.end());

    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    adj_later.assign(n, {});
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v && g.has_edge(u, v) && pos[v] > pos[u]) adj_later[u].push_back(v);
    color.assign(n, 0);
  }

  Outcome extend(int idx, int used) {
    if (idx == static_cast<int>(order.size())) return Outcome::found;
    const int v = order[idx];
    std::uint64_t taken = 0;  // k <= 63 enforced by the caller
    for (int u = 0; u < g.order(); ++u)
      if (u != v && g.has_edge(u, v) && color[u] != 0) taken |= std::uint64_t{1} << (color[u] - 1);
    const int limit = std::min(k, used + 1);
    for (int c = 1; c <= limit; ++c) {
      if (taken >> (c - 1) & 1) continue;
      if (++nodes > budget) return Outcome::out_of_budget;
      color[v] = c;
      bool dead = false;
      for (int u : adj_later[v]) {
        // forward check: a later vertex with every color excluded kills the branch
        std::uint64_t mask = 0;
        for (int w = 0; w < g.order(); ++w)
          if (w != u && g.has_edge(u, w) && color[w] != 0) mask |= std::uint64_t{1} << (color[w] - 1);
        if (std::popcount(mask & ((k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1))) == k) {
          dead = true;
          break;
        }
      }
      if (!dead) {
        const Outcome sub = extend(idx + 1, std::max(used, c));
        if (sub != Outcome::refuted) return sub;
      }
      color[v] = 0;
    }
    return Outcome::refuted;
  }
};

ChiResult solve_component(const Graph& comp, long long& nodes, long long budget) {
  ChiResult res;
  const int n = comp.order();
  if (n == 0) {
    res.lower = res.upper = 0;
    res.decided = true;
    return res;
  }
  if (comp.edge_count() == 0) {
    res.lower = res.upper = 1;
    res.decided = true;
    res.witness = make_coloring(std::vector<int>(n, 1));
    return res;
  }

  const long long clique_budget = std::min<long long>(budget - nodes, 2'000'000);
  CliqueResult clique = max_clique(comp, std::max<long long>(clique_budget, 1));
  nodes += clique.nodes_used;
  res.lower = std::max<int>(2, static_cast<int>(clique.members.size()));

  res.witness = dsatur_coloring(comp);
  res.upper = res.witness.count;

  while (res.lower < res.upper && nodes < budget) {
    const int target = res.upper - 1;
    if (target > 63) break;  // beyond the color mask width; bracket stands
    KColorSearch search(comp, clique.members, target, nodes, budget);
    const auto outcome = search.extend(0, 0);
    if (outcome == KColorSearch::Outcome::found) {
      res.witness = make_coloring(search.color);
      res.upper = res.witness.count;
    } else if (outcome == KColorSearch::Outcome::refuted) {
      res.lower = res.upper;
    } else {
      break;
    }
  }
  res.decided = res.lower == res.upper;
  return res;
}

}  // namespace

ChiResult exact_chromatic(const Graph& g, long long node_budget) {
  if (g.has_any_loop()) throw std::invalid_argument("exact_chromatic: loops admit no proper coloring");
  ChiResult total;
  total.decided = true;
  total.witness.color.assign(g.order(), 1);
  total.witness.count = g.order() > 0 ? 1 : 0;
  long long nodes = 0;

  const auto comps = connected_components(g);
  std::vector<int> colors(g.order(), 1);
  for (const auto& members : comps) {
    Graph sub = induced_subgraph(g, members);
    ChiResult part = solve_component(sub, nodes, node_budget);
    for (size_t i = 0; i < members.size(); ++i) colors[members[i]] = part.witness.color.empty() ? 1 : part.witness.color[i];
    total.lower = std::max(total.lower, part.lower);
    total.upper = std::max(total.upper, part.upper);
  }
  if (g.order() == 0) {
    total.lower = total.upper = 0;
    total.nodes_used = nodes;
    return total;
  }
  total.witness = make_coloring(std::move(colors));
  total.upper = std::max(total.upper, total.witness.count);
  total.decided = total.lower == total.upper;
  total.nodes_used = nodes;
  return total;
}

Coloring kneser_min_coloring(int n, int k) {
  if (k < 1 || n < 2 * k) throw std::invalid_argument("kneser_min_coloring: need 1 <= k <= n/2");
  const auto verts = k_subsets(n, k);
  const int cap = n - 2 * k + 2;
  std::vector<int> color;
  color.reserve(verts.size());
  for (std::uint32_t mask : verts) {
    const int min_element = std::countr_zero(mask) + 1;
    color.push_back(std::min(min_element, cap));
  }
  return make_coloring(std::move(color));
}

Coloring k831_coloring() {
  const auto verts = k_subsets(8, 3);
  auto contains = [](std::uint32_t mask, std::initializer_list<int> elements) {
    for (int e : elements)
      if (!(mask >> (e - 1) & 1)) return false;
    return true;
  };
  auto subset_of = [](std::uint32_t mask, std::initializer_list<int> elements) {
    std::uint32_t box = 0;
    for (int e : elements) box |= std::uint32_t{1} << (e - 1);
    return (mask & ~box) == 0;
  };
  std::vector<int> color;
  color.reserve(verts.size());
  for (std::uint32_t a : verts) {
    int c = 0;
    for (int i = 1; i <= 4 && c == 0; ++i)
      if (contains(a, {2 * i - 1, 2 * i})) c = i;
    if (c == 0 && contains(a, {1, 4})) c = 5;
    if (c == 0 && contains(a, {2, 3})) c = 6;
    if (c == 0 && contains(a, {5, 8})) c = 7;
    if (c == 0 && contains(a, {6, 7})) c = 8;
    if (c == 0 && subset_of(a, {1, 3, 5, 7})) c = 9;
    if (c == 0 && subset_of(a, {1, 3, 6, 8})) c = 10;
    if (c == 0 && subset_of(a, {2, 4, 5, 7})) c = 11;
    if (c == 0) {
      if (!subset_of(a, {2, 4, 6, 8})) throw std::logic_error("k831_coloring: rule missed a vertex");
      c = 12;
    }
    color.push_back(c);
  }
  return make_coloring(std::move(color));
}

Coloring pair_cover_coloring(int n, int k) {
  if (k < 2 || n < k) throw std::invalid_argument("pair_cover_coloring: need 2 <= k <= n");
  // Contiguous blocks, sizes n/(k-1) rounded up for the first n%(k-1) blocks.
  std::vector<int> block_of(n + 1, 0);
  std::vector<std::vector<int>> blocks;
  {
    const int parts = k - 1;
    int next = 1;
    for (int b = 0; b < parts; ++b) {
      int size = n / parts + (b < n % parts ? 1 : 0);
      std::vector<int> blk;
      for (int i = 0; i < size; ++i) {
        block_of[next] = b;
        blk.push_back(next++);
      }
      blocks.push_back(std::move(blk));
    }
  }
  // Global pair ids, block by block, lexicographic within a block.
  std::map<std::pair<int, int>, int> pair_id;
  {
    int id = 1;
    for (const auto& blk : blocks)
      for (size_t i = 0; i < blk.size(); ++i)
        for (size_t j = i + 1; j < blk.size(); ++j) pair_id[{blk[i], blk[j]}] = id++;
  }
  const auto verts = k_subsets(n, k);
  std::vector<int> color;
  color.reserve(verts.size());
  for (std::uint32_t mask : verts) {
    // Blocks are contiguous and elements scan in ascending order, so the first
    // block to collect two elements yields the smallest pair id outright.
    std::vector<int> first_seen(k - 1, 0);
    int best = 0;
    for (int e = 1; e <= n && best == 0; ++e) {
      if (!(mask >> (e - 1) & 1u)) continue;
      const int b = block_of[e];
      if (first_seen[b] == 0)
        first_seen[b] = e;
      else
        best = pair_id.at({first_seen[b], e});
    }
    if (best == 0) throw std::logic_error("pair_cover_coloring: pigeonhole failed");
    color.push_back(best);
  }
  return make_coloring(std::move(color));
}

namespace {

long long binom_ll(int a, int b) {
  if (b < 0 || b > a) return 0;
  long long r = 1;
  for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

}  // namespace

BoundRecord chi_bound_formulas(int n, int p) {
  if (p < 1 || p > n) throw std::invalid_argument("chi_bound_formulas: need 1 <= p <= n");
  BoundRecord rec;
  rec.n = n;
  rec.p = p;

  std::vector<BoundEntry> lows{{2, "edge exists"}};
  if (p % 2 == 0 && p < n) lows.push_back({n - p + 2, "kneser level"});
  if (p % 2 == 0 && n % 2 == 0 && p <= n - 2) lows.push_back({(n - p) / 2 + 2, "middle level pairs"});

  std::vector<BoundEntry> ups;
  const long long cover = 1 + binom_ll(n - 1, p - 1);
  ups.push_back({static_cast<int>(std::bit_ceil(static_cast<unsigned long long>(cover))), "binary cover"});
  if (p == n - 2 && p % 2 == 0 && n >= 4) {
    const int middle = n == 8 ? 5 : 6;  // six-set chain; refined certificate for n == 8
    ups.push_back({middle + 2, "gap-two assembly"});
  }
  if (p == n - 3 && p % 2 == 0 && n >= 5) {
    const int side = n >= 7 ? 9 : 10;  // seven-set chain above, block pairs at n == 5
    ups.push_back({5 + side + 1, "gap-three assembly"});
  }
  if (p == n - 4 && p % 2 == 0 && n >= 6) {
    const int side = n >= 8 ? 12 : 15;  // eight-set chain above, block pairs at n == 6
    ups.push_back({2 * side + 2, "gap-four assembly"});
  }

  rec.lower = *std::max_element(lows.begin(), lows.end(),
                                [](const BoundEntry& a, const BoundEntry& b) { return a.value < b.value; });
  rec.upper = *std::min_element(ups.begin(), ups.end(),
                                [](const BoundEntry& a, const BoundEntry& b) { return a.value < b.value; });

  std::optional<BoundEntry> exact;
  if (p % 2 == 1) exact = BoundEntry{2, "bipartite parity"};
  if (p == n) exact = BoundEntry{2, "antipodal matching"};
  if (p == n - 1 && n % 2 == 1) exact = BoundEntry{4, "near-antipodal odd"};
  if (exact) {
    rec.exact = exact->value;
    rec.lower = *exact;
    rec.upper = *exact;
  }
  return rec;
}

Coloring grid_pattern_coloring(int m, int p) {
  if (p < 1 || m < 2 * p) throw std::invalid_argument("grid_pattern_coloring: need 1 <= p and m >= 2p");
  std::vector<int> color(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) color[static_cast<size_t>(i) * m + j] = 1 + (i / p % 2) + 2 * (j / p % 2);
  return make_coloring(std::move(color));
}

}  // namespace xdg
