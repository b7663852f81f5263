#include <algorithm>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "test_support.hpp"
#include "xdg/families.hpp"
#include "xdg/graph.hpp"

using namespace xdg;

TEST_SUITE_BEGIN("graph_core");

TEST_CASE("labels: formatting and ordering") {
  CHECK(VertexLabel::bits(0b1011, 4).to_string() == "1101");
  CHECK(VertexLabel::subset(0b10101, 5).to_string() == "{1,3,5}");
  CHECK(VertexLabel::index(42).to_string() == "42");
  const auto p = VertexLabel::pair(VertexLabel::index(1), VertexLabel::bits(1, 2));
  CHECK(p.to_string() == "(1,10)");
  CHECK(p == VertexLabel::pair(VertexLabel::index(1), VertexLabel::bits(1, 2)));
  CHECK(p != VertexLabel::pair(VertexLabel::index(2), VertexLabel::bits(1, 2)));
  CHECK(VertexLabel::index(3) < VertexLabel::index(4));
  CHECK_FALSE(VertexLabel::index(4) < VertexLabel::index(4));
  CHECK_THROWS_AS(VertexLabel::bits(4, 2), std::invalid_argument);
}

TEST_CASE("edges are symmetric, duplicates collapse, loops gated") {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  CHECK(g.edge_count() == 1);
  CHECK(g.has_edge(1, 0));
  CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
  Graph l(3, true);
  l.add_edge(1, 1);
  CHECK(l.edge_count() == 1);
  CHECK(l.degree(1) == 1);
  CHECK(l.has_any_loop());
  CHECK(l.edges() == std::vector<std::pair<int, int>>{{1, 1}});
}

TEST_CASE("distances match a queue BFS oracle") {
  std::mt19937_64 rng(20260814);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 11);
    const double density = (trial % 3 == 0) ? 0.15 : (trial % 3 == 1 ? 0.4 : 0.8);
    const Graph g = testsup::random_graph(rng, n, density);
    const DistanceMatrix dm = all_pairs_distances(g);
    for (int s = 0; s < n; ++s) {
      const auto oracle = testsup::bfs_oracle(g, s);
      for (int v = 0; v < n; ++v) CHECK(dm.at(s, v) == oracle[static_cast<size_t>(v)]);
    }
  }
}

TEST_CASE("loops never shorten distances") {
  Graph g(3, true);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(1, 1);
  const DistanceMatrix dm = all_pairs_distances(g);
  CHECK(dm.at(0, 2) == 2);
  CHECK(dm.at(1, 1) == 0);
}

TEST_CASE("metric profile on known graphs") {
  const auto pet = metric_profile(testsup::petersen());
  CHECK(pet.radius == 2);
  CHECK(pet.diameter == 2);
  const auto p5 = metric_profile(path(5));
  CHECK(p5.radius == 2);
  CHECK(p5.diameter == 4);
  CHECK(p5.eccentricity == std::vector<int>{4, 3, 2, 3, 4});
  const auto c6 = metric_profile(cycle(6));
  CHECK(c6.radius == 3);
  CHECK(c6.diameter == 3);
  Graph split(3);
  split.add_edge(0, 1);
  const auto prof = metric_profile(split);
  CHECK(prof.radius == DistanceMatrix::kUnreachable);
  CHECK(prof.diameter == DistanceMatrix::kUnreachable);
}

TEST_CASE("components sorted by smallest member") {
  Graph g(6);
  g.add_edge(4, 5);
  g.add_edge(1, 3);
  const auto comps = connected_components(g);
  REQUIRE(comps.size() == 4);
  CHECK(comps[0] == std::vector<int>{0});
  CHECK(comps[1] == std::vector<int>{1, 3});
  CHECK(comps[2] == std::vector<int>{2});
  CHECK(comps[3] == std::vector<int>{4, 5});
  CHECK_FALSE(is_connected(g));
  CHECK(is_connected(cycle(5)));
}

TEST_CASE("bipartition finds sides or refuses") {
  const auto sides = bipartition(cycle(6));
  REQUIRE(sides.has_value());
  for (int v = 0; v < 6; ++v) CHECK((*sides)[static_cast<size_t>(v)] == v % 2);
  CHECK_FALSE(bipartition(cycle(5)).has_value());
  CHECK_FALSE(bipartition(testsup::petersen()).has_value());
  // isolated vertices default to side 0
  Graph g(3);
  g.add_edge(1, 2);
  const auto s = bipartition(g);
  REQUIRE(s.has_value());
  CHECK((*s)[0] == 0);
  CHECK((*s)[1] == 0);
  CHECK((*s)[2] == 1);
  Graph l(2, true);
  l.add_edge(0, 0);
  CHECK_THROWS_AS(bipartition(l), std::invalid_argument);
}

TEST_CASE("edge union demands aligned labels and ORs edge sets") {
  Graph a = path(3), b(3);
  b.add_edge(0, 2);
  const Graph u = edge_union(a, b);
  CHECK(u.edge_count() == 3);
  CHECK(u.has_edge(0, 2));
  CHECK(u.has_edge(0, 1));
  Graph c = cycle(3);
  c.set_labels({VertexLabel::index(7), VertexLabel::index(8), VertexLabel::index(9)});
  CHECK_THROWS_AS(edge_union(a, c), std::invalid_argument);
  CHECK_THROWS_AS(edge_union(a, path(4)), std::invalid_argument);
}

TEST_CASE("disjoint copies shift and tag") {
  const Graph two = disjoint_copies(2, cycle(3));
  CHECK(two.order() == 6);
  CHECK(two.edge_count() == 6);
  CHECK(two.has_edge(3, 4));
  CHECK_FALSE(two.has_edge(2, 3));
  CHECK(two.label_or_index(4).to_string() == "(1,1)");
}

TEST_CASE("complement and induced subgraphs") {
  const Graph c5 = cycle(5), cc5 = complement(c5);
  CHECK(cc5.edge_count() == 5);
  CHECK(cc5.has_edge(0, 2));
  CHECK_FALSE(cc5.has_edge(0, 1));
  const Graph sub = induced_subgraph(testsup::petersen(), {0, 1, 2, 3, 4});
  CHECK(sub.edge_count() == 5);  // the outer cycle survives intact
  CHECK(sub.has_edge(0, 4));
  CHECK(sub.has_edge(0, 1));
  CHECK_FALSE(sub.has_edge(0, 2));
}

TEST_SUITE_END();
