#include "xdg/hypercube_struct.hpp"

#include <bit>
#include <stdexcept>
#include <unordered_map>

#include "xdg/exact_distance.hpp"
#include "xdg/families.hpp"

namespace xdg {

IsoCheck even_distance_decomposition_check(int n, int p) {
  if (p < 1 || 2 * p > n || n > 7)
    throw std::invalid_argument("even_distance_decomposition_check: need 2 <= 2p <= n <= 7");
  IsoCheck check;
  check.name = "even_distance_decomposition";
  check.instance = "n=" + std::to_string(n) + " p=" + std::to_string(p);
  const Graph lhs = exact_distance_graph(hypercube(n), 2 * p);
  const Graph sub = hypercube(n - 1);
  const DistanceMatrix dm = all_pairs_distances(sub);
  const Graph rhs = disjoint_copies(2, edge_union(exact_distance_graph(sub, dm, 2 * p),
                                                  exact_distance_graph(sub, dm, 2 * p - 1)));
  const IsoResult res = are_isomorphic(lhs, rhs);
  check.outcome = res.outcome;
  check.mapping = res.mapping;
  check.pass = res.outcome == IsoOutcome::isomorphic;
  if (res.outcome == IsoOutcome::undecided) check.notes = "isomorphism search budget exhausted";
  return check;
}

bool word_type_a(std::uint32_t x, int n) {
  int odd_words = 0;
  for (int i = 0; i < n / 2; ++i) {
    const std::uint32_t w = (x >> (2 * i)) & 3u;
    if (w == 1u || w == 2u) ++odd_words;
  }
  return odd_words % 2 == 0;
}

std::uint32_t word_flip_image(std::uint32_t x, int n) {
  const bool type_a = word_type_a(x, n);
  std::uint32_t y = 0;
  for (int i = 0; i < n / 2; ++i) {
    std::uint32_t w = (x >> (2 * i)) & 3u;
    const bool odd = w == 1u || w == 2u;
    if (odd == type_a) w ^= 3u;  // type A flips its odd words, type B the even ones
    y |= w << (2 * i);
  }
  return y;
}

IsoCheck qn_nminus1_isomorphism(int n) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("qn_nminus1_isomorphism: n must be even and >= 2");
  IsoCheck check;
  check.name = "word_flip_isomorphism";
  check.instance = "n=" + std::to_string(n);
  const int N = 1 << n;
  check.mapping.assign(static_cast<size_t>(N), -1);
  std::vector<char> hit(static_cast<size_t>(N), 0);
  bool bijection = true;
  for (int x = 0; x < N; ++x) {
    const auto y = static_cast<int>(word_flip_image(static_cast<std::uint32_t>(x), n));
    check.mapping[static_cast<size_t>(x)] = y;
    if (hit[static_cast<size_t>(y)]) bijection = false;
    hit[static_cast<size_t>(y)] = 1;
    if (word_type_a(static_cast<std::uint32_t>(x), n) !=
        word_type_a(static_cast<std::uint32_t>(y), n)) {
      check.notes += "type not preserved at " + std::to_string(x) + "; ";
    }
  }
  // adjacency transport: Hamming distance n-1 on the left, 1 on the right
  bool adj = true;
  for (int x = 0; x < N && adj; ++x)
    for (int y = x + 1; y < N; ++y) {
      const bool far_pair = std::popcount(static_cast<unsigned>(x ^ y)) == n - 1;
      const bool image_edge =
          std::popcount(static_cast<unsigned>(check.mapping[static_cast<size_t>(x)] ^
                                              check.mapping[static_cast<size_t>(y)])) == 1;
      if (far_pair != image_edge) {
        adj = false;
        check.notes += "adjacency broken at (" + std::to_string(x) + "," + std::to_string(y) + "); ";
        break;
      }
    }
  check.pass = bijection && adj && check.notes.empty();
  check.outcome = check.pass ? IsoOutcome::isomorphic : IsoOutcome::not_isomorphic;
  return check;
}

IsoCheck johnson_complement_isomorphism(int n, int k, int i) {
  if (n < 1 || k < 0 || k > n || i < 0 || i > k || n - 2 * k + i < 0)
    throw std::invalid_argument("johnson_complement_isomorphism: bad parameters");
  IsoCheck check;
  check.name = "johnson_complement";
  check.instance = "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                   " i=" + std::to_string(i);
  const Graph lhs = johnson(n, k, i);
  const Graph rhs = johnson(n, n - k, n - 2 * k + i);
  const auto left = k_subsets(n, k), right = k_subsets(n, n - k);
  std::unordered_map<std::uint32_t, int> right_index;
  right_index.reserve(right.size() * 2);
  for (int v = 0; v < static_cast<int>(right.size()); ++v)
    right_index.emplace(right[static_cast<size_t>(v)], v);
  const std::uint32_t full = (n == 32) ? ~0u : ((std::uint32_t(1) << n) - 1);
  check.mapping.reserve(left.size());
  for (auto mask : left) check.mapping.push_back(right_index.at(full ^ mask));
  bool ok = lhs.order() == rhs.order();
  for (int a = 0; ok && a < lhs.order(); ++a)
    for (int b = a + 1; b < lhs.order(); ++b)
      if (lhs.has_edge(a, b) != rhs.has_edge(check.mapping[static_cast<size_t>(a)],
                                             check.mapping[static_cast<size_t>(b)])) {
        ok = false;
        check.notes = "edge mismatch at (" + std::to_string(a) + "," + std::to_string(b) + ")";
        break;
      }
  check.pass = ok;
  check.outcome = ok ? IsoOutcome::isomorphic : IsoOutcome::not_isomorphic;
  return check;
}

IdentityReport level_induces_johnson_check(int n, int p, int i) {
  if (p < 0 || p % 2 != 0 || i < p / 2 || i > n - p / 2)
    throw std::invalid_argument("level_induces_johnson_check: need even p, p/2 <= i <= n - p/2");
  const std::string instance =
      "n=" + std::to_string(n) + " p=" + std::to_string(p) + " i=" + std::to_string(i);
  const auto level = hypercube_level(n, i);
  const auto subsets = k_subsets(n, i);
  // the slice keeps masks in ascending order and colex order is ascending
  // masks, so position t means the same set on both sides
  for (size_t t = 0; t < level.size(); ++t)
    if (static_cast<std::uint32_t>(level[t]) != subsets[t]) {
      IdentityReport rep;
      rep.identity = "level_induces_johnson";
      rep.instance = instance;
      rep.notes = "vertex order drifted at position " + std::to_string(t);
      return rep;
    }
  const Graph slice = induced_subgraph(exact_distance_graph(hypercube(n), p), level);
  Graph expected = johnson(n, i, i - p / 2);
  if (slice.labels()) expected.set_labels(*slice.labels());
  return check_identity("level_induces_johnson", instance, slice, expected);
}

ParityReport parity_components_check(int n, int p) {
  if (n < 1 || p < 0 || p % 2 != 0 || p > n)
    throw std::invalid_argument("parity_components_check: need even p <= n");
  ParityReport rep;
  rep.instance = "n=" + std::to_string(n) + " p=" + std::to_string(p);
  const Graph ex = exact_distance_graph(hypercube(n), p);
  rep.no_cross_edges = true;
  for (auto [u, v] : ex.edges())
    if (std::popcount(static_cast<unsigned>(u)) % 2 !=
        std::popcount(static_cast<unsigned>(v)) % 2) {
      rep.no_cross_edges = false;
      break;
    }
  std::vector<int> evens, odds;
  for (int v = 0; v < ex.order(); ++v)
    (std::popcount(static_cast<unsigned>(v)) % 2 == 0 ? evens : odds).push_back(v);
  const Graph even_side = induced_subgraph(ex, evens), odd_side = induced_subgraph(ex, odds);
  if (n % 2 == 1) {
    rep.used_complement_map = true;
    // complementing all n bits flips weight parity and preserves Hamming
    // distance, so it must map the halves onto each other edge for edge
    const int full = (1 << n) - 1;
    std::unordered_map<int, int> odd_pos;
    for (int idx = 0; idx < static_cast<int>(odds.size()); ++idx)
      odd_pos.emplace(odds[static_cast<size_t>(idx)], idx);
    bool ok = evens.size() == odds.size();
    std::vector<int> mapping;
    for (int idx = 0; ok && idx < static_cast<int>(evens.size()); ++idx)
      mapping.push_back(odd_pos.at(full ^ evens[static_cast<size_t>(idx)]));
    for (int a = 0; ok && a < even_side.order(); ++a)
      for (int b = a + 1; b < even_side.order(); ++b)
        if (even_side.has_edge(a, b) !=
            odd_side.has_edge(mapping[static_cast<size_t>(a)], mapping[static_cast<size_t>(b)])) {
          ok = false;
          rep.notes = "complement map broke an edge";
          break;
        }
    rep.components_isomorphic = ok ? IsoOutcome::isomorphic : IsoOutcome::not_isomorphic;
  } else {
    const IsoResult res = are_isomorphic(even_side, odd_side);
    rep.components_isomorphic = res.outcome;
    if (res.outcome == IsoOutcome::undecided) rep.notes = "isomorphism search budget exhausted";
  }
  rep.pass = rep.no_cross_edges && rep.components_isomorphic == IsoOutcome::isomorphic;
  return rep;
}

}  // namespace xdg
