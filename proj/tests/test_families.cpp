#include <bit>
#include <stdexcept>

#include "doctest.h"
#include "test_support.hpp"
#include "xdg/families.hpp"
#include "xdg/isomorphism.hpp"
#include "xdg/products.hpp"

using namespace xdg;

TEST_SUITE_BEGIN("families");

TEST_CASE("binomial") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(10, 5) == 252);
  CHECK(binomial(4, 7) == 0);
  CHECK(binomial(30, 15) == 155117520);
}

TEST_CASE("k-subsets come out in colex order") {
  const auto s = k_subsets(4, 2);
  CHECK(s == std::vector<std::uint32_t>{0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100});
  CHECK(k_subsets(6, 3).size() == 20);
  CHECK(k_subsets(5, 0) == std::vector<std::uint32_t>{0});
}

TEST_CASE("basic families") {
  CHECK(path(1).edge_count() == 0);
  CHECK(path(5).edge_count() == 4);
  CHECK(cycle(3).edge_count() == 3);
  CHECK(cycle(6).degree(0) == 2);
  CHECK(complete(5).edge_count() == 10);
  CHECK(edgeless(4).edge_count() == 0);
  CHECK_THROWS_AS(cycle(2), std::invalid_argument);
}

TEST_CASE("hypercube is the iterated prism") {
  for (int n = 1; n <= 6; ++n) {
    Graph q = hypercube(n);
    CHECK(q.order() == (1 << n));
    for (int v = 0; v < q.order(); ++v) CHECK(q.degree(v) == n);
    if (n >= 2) {
      // (g,h) -> 2g + h appends the new coordinate as bit 0
      const Graph prism = product(ProductKind::cartesian, hypercube(n - 1), complete(2));
      CHECK(q.same_edges(prism));
    }
  }
  const Graph q4 = hypercube(4);
  const DistanceMatrix dm = all_pairs_distances(q4);
  for (int u = 0; u < 16; ++u)
    for (int v = 0; v < 16; ++v) CHECK(dm.at(u, v) == std::popcount(unsigned(u ^ v)));
  CHECK(q4.label_or_index(0b0110).to_string() == "0110");
}

TEST_CASE("hypercube levels") {
  CHECK(hypercube_level(4, 2) == std::vector<int>{3, 5, 6, 9, 10, 12});
  CHECK(hypercube_level(5, 0) == std::vector<int>{0});
  CHECK(hypercube_level(5, 5) == std::vector<int>{31});
}

TEST_CASE("johnson graphs") {
  const Graph j520 = johnson(5, 2, 0);
  CHECK(j520.order() == 10);
  for (int v = 0; v < 10; ++v) CHECK(j520.degree(v) == 3);
  const auto iso = are_isomorphic(j520, testsup::petersen());
  CHECK(iso.outcome == IsoOutcome::isomorphic);

  const Graph j421 = johnson(4, 2, 1);
  CHECK(j421.order() == 6);
  for (int v = 0; v < 6; ++v) CHECK(j421.degree(v) == 4);  // octahedron
  CHECK(j421.label_or_index(0).to_string() == "{1,2}");

  // disjoint intersection levels partition the complete graph on k-sets
  const Graph j0 = johnson(5, 2, 0), j1 = johnson(5, 2, 1);
  CHECK(j0.edge_count() + j1.edge_count() == 45);
}

TEST_CASE("generalized kneser stacks intersection levels") {
  const Graph k1 = kneser_general(6, 3, 1);
  const Graph lo = johnson(6, 3, 0), hi = johnson(6, 3, 1);
  CHECK(k1.edge_count() == lo.edge_count() + hi.edge_count());
  CHECK(k1.same_edges(edge_union(lo, hi)));
  CHECK_THROWS_AS(kneser_general(3, 5, 0), std::invalid_argument);
}

TEST_SUITE_END();
