#include <stdexcept>

#include "doctest.h"
#include "test_support.hpp"
#include "xdg/corpus.hpp"
#include "xdg/exact_distance.hpp"
#include "xdg/families.hpp"
#include "xdg/identities.hpp"

using namespace xdg;

namespace {

Graph lhs_exact(ProductKind kind, const Graph& g, const Graph& h, int p) {
  return exact_distance_graph(product(kind, g, h), p);
}

}  // namespace

TEST_SUITE_BEGIN("identities");

TEST_CASE("check_identity reports diffs") {
  const Graph p4 = path(4);
  Graph broken = path(4);
  const auto same = check_identity("x", "P4 vs P4", p4, p4);
  CHECK(same.pass);
  CHECK(same.lhs_only.empty());
  Graph missing(4);
  missing.add_edge(0, 1);
  missing.add_edge(1, 2);
  const auto diff = check_identity("x", "P4 vs P4 minus an edge", p4, missing);
  CHECK_FALSE(diff.pass);
  REQUIRE(diff.lhs_only.size() == 1);
  CHECK(diff.lhs_only[0] == std::pair<int, int>{2, 3});
  CHECK(diff.rhs_only_total == 0);
  CHECK_THROWS_AS(check_identity("x", "order mismatch", p4, path(5)), std::invalid_argument);
  Graph relabeled = path(4);
  relabeled.set_labels({VertexLabel::index(9), VertexLabel::index(1), VertexLabel::index(2),
                        VertexLabel::index(3)});
  CHECK_THROWS_AS(check_identity("x", "label mismatch", path(4), relabeled),
                  std::invalid_argument);
}

TEST_CASE("cartesian decomposition on the P4/P3 instance") {
  const Graph g = path(4), h = path(3);
  for (int p = 0; p <= 5; ++p) {
    const Graph lhs = lhs_exact(ProductKind::cartesian, g, h, p);
    CHECK(check_identity("cart", "P4/P3", lhs, rhs_cartesian(g, h, p)).pass);
    CHECK(check_identity("cart-alt", "P4/P3", lhs, rhs_cartesian_alt(g, h, p)).pass);
  }
  // p=2 inner structure: 3 summands, 29 edges total on 12 vertices
  CHECK(rhs_cartesian(g, h, 2).edge_count() ==
        lhs_exact(ProductKind::cartesian, g, h, 2).edge_count());
}

TEST_CASE("border terms fuse into a box product") {
  std::mt19937_64 rng(2211);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = testsup::random_graph(rng, 5, 0.5);
    const Graph h = testsup::random_graph(rng, 6, 0.4);
    const DistanceMatrix dg = all_pairs_distances(g), dh = all_pairs_distances(h);
    for (int p = 0; p <= 4; ++p) {
      const Graph gp = exact_distance_graph(g, dg, p), hp = exact_distance_graph(h, dh, p);
      const Graph fused = product(ProductKind::cartesian, gp, hp);
      const Graph split = edge_union(
          product(ProductKind::direct, exact_distance_graph(g, dg, 0), hp),
          product(ProductKind::direct, gp, exact_distance_graph(h, dh, 0)));
      CHECK(fused.same_edges(split));
    }
  }
}

TEST_CASE("strong decomposition, fuzz slice") {
  const auto corpus = identity_fuzz_corpus(40, 17, 6);
  for (const auto& inst : corpus)
    for (int p = 0; p <= 4; ++p) {
      const Graph lhs = lhs_exact(ProductKind::strong, inst.g, inst.h, p);
      const auto rep = check_identity("strong", inst.name, lhs, rhs_strong(inst.g, inst.h, p));
      CHECK_MESSAGE(rep.pass, inst.name, " p=", p);
    }
}

TEST_CASE("direct square decomposition") {
  std::mt19937_64 rng(88);
  const auto corpus = identity_fuzz_corpus(40, 23, 6);
  for (const auto& inst : corpus) {
    if (inst.g.order() < 2 || inst.h.order() < 2) continue;
    const Graph g = make_isolate_free(inst.g, rng), h = make_isolate_free(inst.h, rng);
    const Graph lhs = lhs_exact(ProductKind::direct, g, h, 2);
    CHECK_MESSAGE(check_identity("direct2", inst.name, lhs, rhs_direct2(g, h)).pass, inst.name);
    if (is_triangle_free(g) && is_triangle_free(h))
      CHECK_MESSAGE(
          check_identity("direct2-tf", inst.name, lhs, rhs_direct2_triangle_free(g, h)).pass,
          inst.name);
  }
  // triangles break the strong-product shortcut but not the full formula
  const Graph k3 = complete(3);
  CHECK(check_identity("direct2", "K3/K3", lhs_exact(ProductKind::direct, k3, k3, 2),
                       rhs_direct2(k3, k3))
            .pass);
  CHECK_FALSE(check_identity("direct2-tf", "K3/K3", lhs_exact(ProductKind::direct, k3, k3, 2),
                             rhs_direct2_triangle_free(k3, k3))
                  .pass);
  CHECK_THROWS_AS(rhs_direct2(edgeless(3), k3), std::invalid_argument);
}

TEST_CASE("lexicographic decomposition") {
  std::mt19937_64 rng(14);
  const auto corpus = identity_fuzz_corpus(30, 41, 6);
  for (const auto& inst : corpus) {
    if (inst.g.order() < 2) continue;
    const Graph g = make_isolate_free(inst.g, rng);
    for (int p = 2; p <= 5; ++p) {
      const Graph lhs = lhs_exact(ProductKind::lexicographic, g, inst.h, p);
      CHECK_MESSAGE(check_identity("lex", inst.name, lhs, rhs_lex(g, inst.h, p)).pass,
                    inst.name, " p=", p);
    }
  }
  // edgeless layers become cliques through the complement
  const Graph g = path(4), h = edgeless(3);
  CHECK(check_identity("lex", "P4/E3", lhs_exact(ProductKind::lexicographic, g, h, 2),
                       rhs_lex(g, h, 2))
            .pass);
  CHECK(rhs_lex(g, h, 2).has_edge(0, 1));  // clique inside the first layer
  CHECK_THROWS_AS(rhs_lex(path(1), h, 2), std::invalid_argument);
  CHECK_THROWS_AS(rhs_lex(g, h, 1), std::invalid_argument);
}

TEST_CASE("grid windows") {
  for (ProductKind kind : {ProductKind::cartesian, ProductKind::direct}) {
    const auto rep = grid_window_check(9, kind);
    CHECK_MESSAGE(rep.pass, rep.identity, ": ", rep.notes);
  }
  CHECK_THROWS_AS(grid_window_check(8, ProductKind::cartesian), std::invalid_argument);
  CHECK_THROWS_AS(grid_window_check(12, ProductKind::strong), std::invalid_argument);
}

TEST_CASE("corpus basics") {
  const auto corpus = identity_fuzz_corpus(50, 7);
  CHECK(corpus.size() == 50);
  for (const auto& inst : corpus) {
    CHECK(inst.g.order() >= 1);
    CHECK(inst.g.order() <= 8);
    CHECK_FALSE(inst.g.has_any_loop());
  }
  // reproducibility
  const auto again = identity_fuzz_corpus(50, 7);
  for (size_t i = 0; i < corpus.size(); ++i) {
    CHECK(corpus[i].name == again[i].name);
    CHECK(corpus[i].g.same_edges(again[i].g));
    CHECK(corpus[i].h.same_edges(again[i].h));
  }
  const auto different = identity_fuzz_corpus(50, 8);
  bool any_diff = false;
  for (size_t i = 0; i < corpus.size(); ++i)
    if (corpus[i].g.order() != different[i].g.order() ||
        !corpus[i].g.same_edges(different[i].g))
      any_diff = true;
  CHECK(any_diff);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    const Graph fixed = make_isolate_free(random_graph(rng, 6, 0.2), rng);
    CHECK_FALSE(has_isolated_vertex(fixed));
  }
  CHECK(is_triangle_free(cycle(6)));
  CHECK_FALSE(is_triangle_free(complete(3)));
  for (const auto& inst : connected_pair_corpus(20, 99)) {
    CHECK(is_connected(inst.g));
    CHECK(is_connected(inst.h));
  }
}

TEST_SUITE_END();
