#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "xdg/graph.hpp"

namespace xdg {

// Colors are positive integers; count is the number of distinct values in
// use, not the maximum.
struct Coloring {
  std::vector<int> color;
  int count = 0;
};

// Recomputes count and enforces totality and positivity.
Coloring make_coloring(std::vector<int> colors);

struct ColoringCheck {
  bool proper = false;
  std::vector<std::pair<int, int>> violations;  // capped sample, loops appear as (v,v)
  long long violation_total = 0;
};

ColoringCheck validate_coloring(const Graph& g, const Coloring& c);

// Saturation-first greedy. Deterministic: ties fall to higher degree, then
// lower index; each vertex takes the smallest feasible color.
Coloring dsatur_coloring(const Graph& g);

struct CliqueResult {
  std::vector<int> members;
  bool exhausted = false;  // true when the search completed, so members is maximum
  long long nodes_used = 0;
};

CliqueResult max_clique(const Graph& g, long long node_budget);

struct ChiResult {
  int lower = 0;
  int upper = 0;
  bool decided = false;  // lower == upper proven within budget
  Coloring witness;      // proper coloring with `upper` colors
  long long nodes_used = 0;
};

// Branch and bound per connected component, clique-seeded lower bound,
// greedy upper bound. Budget exhaustion yields decided == false with the
// bracket still valid. Deterministic throughout.
ChiResult exact_chromatic(const Graph& g, long long node_budget = 20'000'000);

// Disjointness-adjacency on k-subsets: color by smallest element, capped at
// n-2k+2 where the tail family is intersecting. Vertices in colex order.
Coloring kneser_min_coloring(int n, int k);

// The twelve-class rule for 3-subsets of an 8-set where adjacency means
// intersection at most one: four disjoint-pair classes, four mixed-pair
// classes, four classes inside 4-sets.
Coloring k831_coloring();

// Partition the ground set into k-1 near-equal blocks; every k-subset holds
// two elements of some block, and its color is the first such within-block
// pair. Two subsets sharing a color share two elements, so this is proper
// whenever adjacency demands intersection at most one. Color count is the
// number of within-block pairs. Vertices in colex order, requires k >= 2.
Coloring pair_cover_coloring(int n, int k);

// 2p x 2p block pattern on the m x m king grid raised to distance p:
// color(i,j) = 1 + (floor(i/p) mod 2) + 2 (floor(j/p) mod 2).
Coloring grid_pattern_coloring(int m, int p);

struct BoundEntry {
  int value = 0;
  std::string source;
};

struct BoundRecord {
  int n = 0;
  int p = 0;
  BoundEntry lower;
  BoundEntry upper;
  std::optional<int> exact;
};

// Closed-form bound pool for distance-p graphs of the n-cube. Every entry
// names its source formula.
BoundRecord chi_bound_formulas(int n, int p);

// Frozen search-found colorings. Keys:
//   "J(8,4,1)"  five colors on the 70 4-subsets of an 8-set in colex order,
//               proper under intersection-exactly-one adjacency;
//   "Q9p4even"  per-component coloring of the distance-4 graph of the 9-cube:
//               index by the low 8 bits of the vertex, adjacency is xor
//               weight in {3,4}.
// Unknown keys yield nullopt. Callers revalidate; nothing is re-derived.
std::optional<Coloring> stored_coloring(const std::string& key);

struct LayeredReport {
  int n = 0;
  int p = 0;
  Coloring coloring;             // on all 2^n vertices of the cube
  bool proper = false;           // validated against the full graph before return
  bool printed_rule_covered_all = false;
  bool transport_used = false;   // gap vertices finished via the bit-flip automorphism
  std::vector<std::pair<int, int>> violations;  // sample witness when not proper
  std::vector<std::string> level_notes;
  std::string notes;
};

// Level-by-level coloring of the distance-p graph of the n-cube for
// p in {n-2, n-3, n-4}: middle levels take subset-graph colorings, the far
// levels take one fresh color per side, and levels the rule never reaches
// are pulled across the parity components by the single-bit translation
// automorphism. The sub_colorings map supplies a coloring per middle level,
// indexed by level weight, each over that level's subsets in colex order; an
// improper or missing entry surfaces as a failed report with a witness, never
// silently. The two-argument form chooses default sub-colorings (stored
// certificate, exact solver on small orders, pair cover, greedy fallback).
LayeredReport layered_coloring(int n, int p, const std::map<int, Coloring>& sub_colorings);
LayeredReport layered_coloring(int n, int p);

struct TableCell {
  int n = 0;
  int p = 0;
  std::string printed;  // cell text as published, "7" or "4-7"
  bool printed_exact = false;
  int printed_lower = 0;
  int printed_upper = 0;
  int computed_lower = 0;
  int computed_upper = 0;
  std::optional<int> computed_exact;
  std::string lower_source;
  std::string upper_source;
  bool matches_print = false;
  std::string anomaly;  // non-empty when our computation contradicts the print
};

struct Table1Report {
  std::vector<TableCell> cells;
  bool all_match = false;
};

// Reproduces the published bound table for distance-p cubes, n in 6..10,
// even p in 4..10. Exact cells come from the solver or from certificates
// plus clique lower bounds; bracket cells from the formula pool.
Table1Report table1_report(long long solver_budget = 50'000'000);

std::string render_table1(const Table1Report& report);

}  // namespace xdg
