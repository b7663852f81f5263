#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "test_support.hpp"
#include "xdg/coloring.hpp"
#include "xdg/exact_distance.hpp"
#include "xdg/families.hpp"
#include "xdg/graph.hpp"
#include "xdg/products.hpp"

using namespace xdg;

namespace {

// Plain backtracking chromatic number, no clique seeding, no bit tricks.
// Deliberately a different algorithm family from exact_chromatic.
bool brute_colorable(const Graph& g, int k, std::vector<int>& col, int v, int used) {
  if (v == g.order()) return true;
  const int limit = std::min(k, used + 1);
  for (int c = 1; c <= limit; ++c) {
    bool ok = true;
    for (int u = 0; u < v && ok; ++u)
      if (col[u] == c && g.has_edge(u, v)) ok = false;
    if (!ok) continue;
    col[v] = c;
    if (brute_colorable(g, k, col, v + 1, std::max(used, c))) return true;
  }
  col[v] = 0;
  return false;
}

int chi_brute(const Graph& g) {
  if (g.order() == 0) return 0;
  for (int k = 1;; ++k) {
    std::vector<int> col(g.order(), 0);
    if (brute_colorable(g, k, col, 0, 0)) return k;
  }
}

int rank_of(const std::vector<std::uint32_t>& verts, std::uint32_t mask) {
  const auto it = std::find(verts.begin(), verts.end(), mask);
  REQUIRE(it != verts.end());
  return static_cast<int>(it - verts.begin());
}

constexpr std::uint32_t mask_of(std::initializer_list<int> elems) {
  std::uint32_t m = 0;
  for (int e : elems) m |= 1u << (e - 1);
  return m;
}

}  // namespace

TEST_SUITE_BEGIN("coloring");

TEST_CASE("make_coloring recounts and rejects non-positive colors") {
  const Coloring c = make_coloring({4, 2, 4, 9});
  CHECK(c.count == 3);
  CHECK_THROWS_AS(make_coloring({1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(make_coloring({-3}), std::invalid_argument);
  CHECK(make_coloring({}).count == 0);
}

TEST_CASE("validate_coloring finds violations and loops") {
  const Graph p3 = path(3);
  CHECK(validate_coloring(p3, make_coloring({1, 2, 1})).proper);
  const auto bad = validate_coloring(p3, make_coloring({1, 1, 2}));
  CHECK_FALSE(bad.proper);
  CHECK(bad.violation_total == 1);
  REQUIRE(bad.violations.size() == 1);
  CHECK(bad.violations[0] == std::pair<int, int>{0, 1});

  Graph looped(2, true);
  looped.add_edge(0, 0);
  const auto loop_chk = validate_coloring(looped, make_coloring({1, 1}));
  CHECK_FALSE(loop_chk.proper);
  CHECK(loop_chk.violations[0] == std::pair<int, int>{0, 0});

  // Sample is capped, the total keeps counting.
  const auto all_bad = validate_coloring(complete(9), make_coloring(std::vector<int>(9, 1)));
  CHECK(all_bad.violations.size() == 16);
  CHECK(all_bad.violation_total == 36);

  CHECK_THROWS_AS(validate_coloring(p3, make_coloring({1, 2})), std::invalid_argument);
}

TEST_CASE("dsatur is proper on assorted graphs and rejects loops") {
  std::mt19937_64 rng(2026);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Graph g = testsup::random_graph(rng, n, 0.4);
    const Coloring c = dsatur_coloring(g);
    CHECK(validate_coloring(g, c).proper);
  }
  CHECK(dsatur_coloring(testsup::petersen()).count == 3);
  CHECK(dsatur_coloring(complete(7)).count == 7);
  Graph looped(1, true);
  looped.add_edge(0, 0);
  CHECK_THROWS_AS(dsatur_coloring(looped), std::invalid_argument);
}

TEST_CASE("max_clique exact on small graphs, budget flag honest") {
  const auto k5 = max_clique(complete(5), 1'000'000);
  CHECK(k5.exhausted);
  CHECK(k5.members.size() == 5);
  const auto pet = max_clique(testsup::petersen(), 1'000'000);
  CHECK(pet.exhausted);
  CHECK(pet.members.size() == 2);
  const auto starved = max_clique(complement(testsup::petersen()), 1);
  CHECK_FALSE(starved.exhausted);
}

TEST_CASE("exact_chromatic agrees with brute force on a fuzz corpus") {
  std::mt19937_64 rng(77);
  int decided = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const double dens = (trial % 3 == 0) ? 0.2 : (trial % 3 == 1 ? 0.5 : 0.8);
    const Graph g = testsup::random_graph(rng, n, dens);
    const ChiResult r = exact_chromatic(g);
    REQUIRE(r.decided);
    CHECK(r.lower == chi_brute(g));
    CHECK(validate_coloring(g, r.witness).proper);
    CHECK(r.witness.count == r.upper);
    ++decided;
  }
  CHECK(decided == 60);
}

TEST_CASE("exact_chromatic handles edge cases") {
  CHECK(exact_chromatic(Graph(0)).upper == 0);
  CHECK(exact_chromatic(edgeless(4)).upper == 1);
  const ChiResult two = exact_chromatic(path(6));
  CHECK(two.decided);
  CHECK(two.upper == 2);
  Graph looped(2, true);
  looped.add_edge(0, 1);
  looped.add_edge(1, 1);
  CHECK_THROWS_AS(exact_chromatic(looped), std::invalid_argument);

  // Disconnected: the max over components decides even when a small
  // component alone would not.
  Graph dis(8);
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) dis.add_edge(u, v);
  dis.add_edge(5, 6);
  const ChiResult r = exact_chromatic(dis);
  CHECK(r.decided);
  CHECK(r.upper == 5);

  // Starved budget still yields a valid bracket.
  const ChiResult tight = exact_chromatic(exact_distance_graph(hypercube(6), 4), 10);
  CHECK(tight.lower <= tight.upper);
  CHECK(validate_coloring(exact_distance_graph(hypercube(6), 4), tight.witness).proper);
}

TEST_CASE("exact_chromatic pins disjointness graphs at n-2k+2") {
  struct Case {
    int n, k;
  } cases[] = {{5, 2}, {6, 2}, {7, 2}, {7, 3}};
  for (const auto [n, k] : cases) {
    const ChiResult r = exact_chromatic(johnson(n, k, 0));
    REQUIRE(r.decided);
    CHECK(r.upper == n - 2 * k + 2);
  }
}

TEST_CASE("exact_chromatic decides small intersection-one graphs") {
  const ChiResult r = exact_chromatic(johnson(6, 3, 1));
  REQUIRE(r.decided);
  CHECK(r.upper == 6);
  const ChiResult r2 = exact_chromatic(johnson(5, 2, 1));
  REQUIRE(r2.decided);
  CHECK(r2.upper == 5);
}

TEST_CASE("kneser_min_coloring uses n-2k+2 colors, proper") {
  for (const auto& [n, k] : {std::pair{5, 2}, {6, 2}, {7, 3}, {8, 3}, {9, 4}, {12, 5}}) {
    const Coloring c = kneser_min_coloring(n, k);
    CHECK(c.count == n - 2 * k + 2);
    CHECK(validate_coloring(johnson(n, k, 0), c).proper);
  }
  CHECK_THROWS_AS(kneser_min_coloring(5, 3), std::invalid_argument);
}

TEST_CASE("k831_coloring: twelve classes, proper under intersection at most one") {
  const Coloring c = k831_coloring();
  REQUIRE(c.color.size() == 56);
  CHECK(c.count == 12);
  CHECK(validate_coloring(kneser_general(8, 3, 1), c).proper);
  CHECK(validate_coloring(johnson(8, 3, 1), c).proper);
  const auto verts = k_subsets(8, 3);
  CHECK(c.color[rank_of(verts, mask_of({1, 2, 7}))] == 1);
  CHECK(c.color[rank_of(verts, mask_of({1, 4, 6}))] == 5);
  CHECK(c.color[rank_of(verts, mask_of({1, 3, 5}))] == 9);
}

TEST_CASE("pair_cover_coloring: proper with the predicted pair counts") {
  struct Case {
    int n, k, colors;
  } cases[] = {{9, 4, 9}, {10, 4, 12}, {10, 5, 8}, {7, 3, 9}, {8, 4, 7}};
  for (const auto [n, k, colors] : cases) {
    const Coloring c = pair_cover_coloring(n, k);
    CHECK(c.count == colors);
    CHECK(validate_coloring(johnson(n, k, 1), c).proper);
    CHECK(validate_coloring(kneser_general(n, k, 1), c).proper);
  }
  CHECK_THROWS_AS(pair_cover_coloring(5, 1), std::invalid_argument);
}

TEST_CASE("grid_pattern_coloring: four colors on king-grid powers") {
  for (int p = 1; p <= 4; ++p)
    for (int m : {2 * p, 9, 12, 16}) {
      if (m < 2 * p) continue;
      const Graph king = product(ProductKind::strong, path(m), path(m));
      const Coloring c = grid_pattern_coloring(m, p);
      CHECK(c.count == 4);
      CHECK(validate_coloring(exact_distance_graph(king, p), c).proper);
    }
  CHECK_THROWS_AS(grid_pattern_coloring(3, 2), std::invalid_argument);
}

TEST_CASE("chi_bound_formulas: brackets ordered, exact cases marked") {
  for (int n = 1; n <= 12; ++n)
    for (int p = 1; p <= n; ++p) {
      const BoundRecord rec = chi_bound_formulas(n, p);
      CHECK(rec.lower.value <= rec.upper.value);
      CHECK_FALSE(rec.lower.source.empty());
      CHECK_FALSE(rec.upper.source.empty());
      if (rec.exact) {
        CHECK(rec.lower.value == *rec.exact);
        CHECK(rec.upper.value == *rec.exact);
      }
      if (p % 2 == 1) CHECK(rec.exact == 2);
      if (p == n) CHECK(rec.exact == 2);
      if (p == n - 1 && n % 2 == 1) CHECK(rec.exact == 4);
    }
  CHECK(chi_bound_formulas(8, 6).lower.value == 4);
  CHECK(chi_bound_formulas(8, 6).upper.value == 7);
  CHECK(chi_bound_formulas(9, 6).upper.value == 15);
  CHECK(chi_bound_formulas(10, 6).upper.value == 26);
  CHECK(chi_bound_formulas(10, 8).upper.value == 8);
  CHECK_THROWS_AS(chi_bound_formulas(5, 0), std::invalid_argument);
  CHECK_THROWS_AS(chi_bound_formulas(5, 6), std::invalid_argument);
}

TEST_CASE("stored_coloring certificates revalidate against their graphs") {
  const auto j841 = stored_coloring("J(8,4,1)");
  REQUIRE(j841.has_value());
  CHECK(j841->count == 5);
  CHECK(j841->color.size() == 70);
  CHECK(validate_coloring(johnson(8, 4, 1), *j841).proper);

  const auto q9 = stored_coloring("Q9p4even");
  REQUIRE(q9.has_value());
  CHECK(q9->count == 16);
  REQUIRE(q9->color.size() == 256);
  const Graph g = exact_distance_graph(hypercube(9), 4);
  std::vector<int> lifted(g.order());
  for (int v = 0; v < g.order(); ++v) lifted[v] = q9->color[v & 0xff];
  CHECK(validate_coloring(g, make_coloring(lifted)).proper);

  CHECK_FALSE(stored_coloring("no such key").has_value());
}

TEST_CASE("layered_coloring hits the published totals") {
  struct Case {
    int n, p, colors;
  } cases[] = {{8, 6, 7}, {9, 6, 15}, {10, 6, 26}};
  for (const auto [n, p, colors] : cases) {
    const LayeredReport rep = layered_coloring(n, p);
    CHECK(rep.proper);
    CHECK(rep.coloring.count == colors);
    CHECK(rep.transport_used);
    CHECK_FALSE(rep.printed_rule_covered_all);
    CHECK(rep.level_notes.size() == static_cast<size_t>(n + 1));
    CHECK(validate_coloring(exact_distance_graph(hypercube(n), p), rep.coloring).proper);
  }
}

TEST_CASE("layered_coloring covers every gap flavour on small cubes") {
  for (const auto& [n, p] : {std::pair{4, 2}, {5, 2}, {6, 2}, {6, 4}, {7, 4}, {8, 4}}) {
    const LayeredReport rep = layered_coloring(n, p);
    CHECK(rep.proper);
    CHECK(validate_coloring(exact_distance_graph(hypercube(n), p), rep.coloring).proper);
  }
}

TEST_CASE("layered_coloring surfaces bad assemblies, never silently") {
  CHECK_THROWS_AS(layered_coloring(8, 5, {}), std::invalid_argument);
  CHECK_THROWS_AS(layered_coloring(9, 2, {}), std::invalid_argument);

  const LayeredReport missing = layered_coloring(8, 6, {});
  CHECK_FALSE(missing.proper);
  CHECK(missing.notes.find("missing sub-coloring") != std::string::npos);

  std::map<int, Coloring> short_map{{4, make_coloring({1, 2})}};
  const LayeredReport wrong = layered_coloring(8, 6, short_map);
  CHECK_FALSE(wrong.proper);
  CHECK(wrong.notes.find("wrong length") != std::string::npos);

  // A constant middle coloring collides inside the level; the report must
  // carry a concrete violated edge.
  std::map<int, Coloring> flat{{4, make_coloring(std::vector<int>(70, 1))}};
  const LayeredReport improper = layered_coloring(8, 6, flat);
  CHECK_FALSE(improper.proper);
  CHECK_FALSE(improper.violations.empty());
  CHECK(improper.notes.find("improper") != std::string::npos);
}

TEST_CASE("layered_coloring accepts caller sub-colorings") {
  std::map<int, Coloring> sub{{4, *stored_coloring("J(8,4,1)")}};
  const LayeredReport rep = layered_coloring(8, 6, sub);
  CHECK(rep.proper);
  CHECK(rep.coloring.count == 7);
}

TEST_CASE("table1_report: thirteen cells, discrepancies documented") {
  const Table1Report rep = table1_report();
  REQUIRE(rep.cells.size() == 13);
  CHECK_FALSE(rep.all_match);

  auto cell = [&](int n, int p) -> const TableCell& {
    for (const auto& c : rep.cells)
      if (c.n == n && c.p == p) return c;
    REQUIRE(false);
    return rep.cells[0];
  };

  CHECK(cell(6, 4).computed_exact == 7);
  CHECK(cell(6, 4).matches_print);
  CHECK(cell(7, 4).computed_exact == 8);
  CHECK(cell(8, 4).computed_exact == 8);
  CHECK(cell(7, 6).computed_exact == 4);
  CHECK(cell(9, 8).computed_exact == 4);
  CHECK(cell(9, 8).matches_print);  // [4,4] sits inside the printed 4-8
  CHECK_FALSE(cell(9, 8).anomaly.empty());

  const TableCell& bad = cell(9, 4);
  CHECK_FALSE(bad.matches_print);
  CHECK(bad.computed_lower == 15);
  CHECK(bad.computed_upper == 16);
  CHECK_FALSE(bad.anomaly.empty());

  const TableCell& copied = cell(10, 8);
  CHECK_FALSE(copied.matches_print);
  CHECK(copied.computed_lower == 4);
  CHECK(copied.computed_upper == 8);
  CHECK_FALSE(copied.anomaly.empty());

  for (const auto& c : rep.cells) {
    CHECK(c.computed_lower <= c.computed_upper);
    if (c.printed_exact) CHECK(c.printed_lower == c.printed_upper);
    if (!c.matches_print) CHECK_FALSE(c.anomaly.empty());
  }

  const std::string text = render_table1(rep);
  CHECK(text.find("notes:") != std::string::npos);
  CHECK(text.find("15-16") != std::string::npos);
}

TEST_SUITE_END();
