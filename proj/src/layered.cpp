#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "xdg/coloring.hpp"
#include "xdg/exact_distance.hpp"
#include "xdg/families.hpp"
#include "xdg/graph.hpp"

namespace xdg {

namespace {

enum class Act { shared_low, shared_high, subset, gap };

struct Plan {
  std::vector<Act> act;            // indexed by level weight
  std::vector<int> middle_levels;  // palette offsets follow this order
  bool reuse_low_from_first_middle = false;  // low levels borrow the first middle color
};

// Level weight w induces intersection-(w - p/2) adjacency on w-subsets. The
// rules below leave every flanking level of a gap colored, so the bit-flip
// transport always has a source.
Plan make_plan(int n, int p) {
  if (p < 2 || p % 2 != 0) throw std::invalid_argument("layered_coloring: p must be even and >= 2");
  const int gap = n - p;
  if (gap < 2 || gap > 4) throw std::invalid_argument("layered_coloring: p must be n-2, n-3 or n-4");
  if (n > 14) throw std::invalid_argument("layered_coloring: n capped at 14");
  Plan plan;
  plan.act.assign(n + 1, Act::gap);
  if (gap == 2) {
    for (int i = 0; i <= (n - 4) / 2; ++i) plan.act[i] = Act::shared_low;
    plan.act[n / 2] = Act::subset;
    for (int i = (n + 4) / 2; i <= n; ++i) plan.act[i] = Act::shared_high;
    plan.middle_levels = {n / 2};
  } else if (gap == 3) {
    for (int i = 0; i <= (n - 5) / 2; ++i) plan.act[i] = Act::shared_low;
    plan.act[(n - 3) / 2] = Act::subset;
    plan.act[(n + 1) / 2] = Act::subset;
    for (int i = (n + 5) / 2; i <= n; ++i) plan.act[i] = Act::shared_high;
    plan.middle_levels = {(n - 3) / 2, (n + 1) / 2};
    plan.reuse_low_from_first_middle = true;
  } else {
    for (int i = 0; i <= (n - 6) / 2; ++i) plan.act[i] = Act::shared_low;
    plan.act[(n - 2) / 2] = Act::subset;
    plan.act[(n + 2) / 2] = Act::subset;
    // Two same-weight vertices sharing all but (n+4)/2 - (n-4)/2 elements sit at
    // distance p, so the shared color starts one level later than the low side
    // mirror would suggest.
    for (int i = (n + 6) / 2; i <= n; ++i) plan.act[i] = Act::shared_high;
    plan.middle_levels = {(n - 2) / 2, (n + 2) / 2};
  }
  return plan;
}

// Compress colors to 1..m keeping relative order, so palette offsets stack.
Coloring normalize(const Coloring& c) {
  std::vector<int> distinct(c.color);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<int> out(c.color.size());
  for (size_t i = 0; i < c.color.size(); ++i) {
    const auto it = std::lower_bound(distinct.begin(), distinct.end(), c.color[i]);
    out[i] = static_cast<int>(it - distinct.begin()) + 1;
  }
  return make_coloring(std::move(out));
}

LayeredReport fail(LayeredReport rep, std::string why) {
  rep.proper = false;
  rep.notes = std::move(why);
  return rep;
}

Coloring best_exact1_coloring(int n, int k) {
  if (n == 8 && k == 4) return *stored_coloring("J(8,4,1)");
  Graph j = johnson(n, k, 1);
  if (j.order() <= 40) {
    auto r = exact_chromatic(j, 3'000'000);
    if (r.decided) return r.witness;
  }
  Coloring pc = pair_cover_coloring(n, k);
  Coloring ds = dsatur_coloring(j);
  return ds.count < pc.count ? ds : pc;
}

}  // namespace

LayeredReport layered_coloring(int n, int p, const std::map<int, Coloring>& sub_colorings) {
  LayeredReport rep;
  rep.n = n;
  rep.p = p;
  const Plan plan = make_plan(n, p);
  const int order = 1 << n;

  // Middle palettes stack in plan order, the shared side colors come after.
  std::map<int, Coloring> middles;
  std::map<int, int> offset;
  int palette_top = 0;
  for (int lvl : plan.middle_levels) {
    const auto it = sub_colorings.find(lvl);
    if (it == sub_colorings.end())
      return fail(std::move(rep), "missing sub-coloring for level " + std::to_string(lvl));
    const auto verts = k_subsets(n, lvl);
    if (it->second.color.size() != verts.size())
      return fail(std::move(rep), "sub-coloring for level " + std::to_string(lvl) + " has wrong length");
    Coloring norm = normalize(it->second);
    offset[lvl] = palette_top;
    palette_top += norm.count;
    middles[lvl] = std::move(norm);
  }
  const int low_color = plan.reuse_low_from_first_middle ? offset.begin()->second + 1 : ++palette_top;
  const int high_color = ++palette_top;

  std::vector<int> color(order, 0);
  for (int lvl : plan.middle_levels) {
    const auto verts = k_subsets(n, lvl);
    const Coloring& c = middles[lvl];
    for (size_t r = 0; r < verts.size(); ++r) color[verts[r]] = c.color[r] + offset[lvl];
  }
  for (int v = 0; v < order; ++v) {
    const int w = std::popcount(static_cast<unsigned>(v));
    if (plan.act[w] == Act::shared_low) color[v] = low_color;
    if (plan.act[w] == Act::shared_high) color[v] = high_color;
  }

  // Gap levels sit in one parity class; their flanking levels are colored, so
  // the single-bit flip pulls a printed color across for every gap vertex.
  bool any_gap = false;
  for (int v = 0; v < order; ++v)
    if (color[v] == 0) {
      any_gap = true;
      if (color[v ^ 1] == 0) return fail(std::move(rep), "transport source uncolored, rule gap too wide");
      color[v] = color[v ^ 1];
    }
  rep.printed_rule_covered_all = !any_gap;
  rep.transport_used = any_gap;

  const Graph g = exact_distance_graph(hypercube(n), p);
  Coloring assembled = make_coloring(color);
  ColoringCheck chk = validate_coloring(g, assembled);

  if (!chk.proper && any_gap) {
    // Pull the whole partial parity component across instead; the flip is an
    // automorphism exchanging the components, so properness follows from the
    // printed component alone.
    const int partial_parity = [&] {
      for (int v = 0; v < order; ++v)
        if (plan.act[std::popcount(static_cast<unsigned>(v))] == Act::gap)
          return std::popcount(static_cast<unsigned>(v)) % 2;
      return -1;
    }();
    for (int v = 0; v < order; ++v)
      if (std::popcount(static_cast<unsigned>(v)) % 2 == partial_parity) color[v] = color[v ^ 1];
    assembled = make_coloring(color);
    chk = validate_coloring(g, assembled);
    rep.notes = "per-vertex transport clashed, whole parity component pulled across";
  }

  rep.coloring = std::move(assembled);
  rep.proper = chk.proper;
  if (!chk.proper) {
    rep.violations = chk.violations;
    rep.notes = "improper assembly";
    return rep;
  }

  for (int i = 0; i <= n; ++i) {
    std::string note = "L" + std::to_string(i) + ": ";
    switch (plan.act[i]) {
      case Act::shared_low:
        note += "shared color " + std::to_string(low_color) +
                (plan.reuse_low_from_first_middle ? " (reused from first middle palette)" : " (fresh)");
        break;
      case Act::shared_high:
        note += "shared color " + std::to_string(high_color) + " (fresh)";
        break;
      case Act::subset:
        note += "subset coloring, palette " + std::to_string(offset[i] + 1) + ".." +
                std::to_string(offset[i] + middles[i].count);
        break;
      case Act::gap:
        note += "transported across parity";
        break;
    }
    rep.level_notes.push_back(std::move(note));
  }
  return rep;
}

LayeredReport layered_coloring(int n, int p) {
  const Plan plan = make_plan(n, p);
  std::map<int, Coloring> sub;
  for (int lvl : plan.middle_levels) {
    const int inter = lvl - p / 2;
    if (inter == 0) {
      sub[lvl] = kneser_min_coloring(n, lvl);
    } else if (inter == 1) {
      sub[lvl] = best_exact1_coloring(n, lvl);
    } else {
      // The level graph is intersection-inter on lvl-subsets; complementing
      // lands on intersection-1 at weight n-lvl, where good colorings exist.
      const int base_k = n - lvl;
      if (n - 2 * lvl + inter != 1)
        throw std::logic_error("layered_coloring: complement transport needs intersection one");
      const Coloring base = best_exact1_coloring(n, base_k);
      const auto base_verts = k_subsets(n, base_k);
      std::unordered_map<std::uint32_t, int> rank;
      rank.reserve(base_verts.size());
      for (size_t r = 0; r < base_verts.size(); ++r) rank[base_verts[r]] = static_cast<int>(r);
      const auto verts = k_subsets(n, lvl);
      const std::uint32_t full = (1u << n) - 1;
      std::vector<int> colors;
      colors.reserve(verts.size());
      for (std::uint32_t v : verts) colors.push_back(base.color[rank.at(v ^ full)]);
      sub[lvl] = make_coloring(std::move(colors));
    }
  }
  return layered_coloring(n, p, sub);
}

}  // namespace xdg
