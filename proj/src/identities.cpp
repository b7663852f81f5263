#include "xdg/identities.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "xdg/exact_distance.hpp"
#include "xdg/families.hpp"

namespace xdg {

namespace {

void require_loop_free(const Graph& g, const Graph& h, const char* who) {
  if (g.has_any_loop() || h.has_any_loop())
    throw std::invalid_argument(std::string(who) + ": factors must be loop-free");
}

void require_isolate_free(const Graph& g, const char* who) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0)
      throw std::invalid_argument(std::string(who) + ": factor has an isolated vertex");
}

Graph empty_like(const Graph& g, const Graph& h) {
  Graph out(g.order() * h.order(), true);
  std::vector<VertexLabel> labels;
  labels.reserve(static_cast<size_t>(out.order()));
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < h.order(); ++b)
      labels.push_back(VertexLabel::pair(g.label_or_index(a), h.label_or_index(b)));
  out.set_labels(std::move(labels));
  return out;
}

}  // namespace

Graph rhs_cartesian(const Graph& g, const Graph& h, int p) {
  require_loop_free(g, h, "rhs_cartesian");
  if (p < 0) throw std::invalid_argument("rhs_cartesian: p must be >= 0");
  const DistanceMatrix dg = all_pairs_distances(g), dh = all_pairs_distances(h);
  Graph acc = empty_like(g, h);
  for (int i = 0; i <= p; ++i)
    acc = edge_union(acc, product(ProductKind::direct, exact_distance_graph(g, dg, i),
                                  exact_distance_graph(h, dh, p - i)));
  return acc;
}

Graph rhs_cartesian_alt(const Graph& g, const Graph& h, int p) {
  require_loop_free(g, h, "rhs_cartesian_alt");
  if (p < 0) throw std::invalid_argument("rhs_cartesian_alt: p must be >= 0");
  const DistanceMatrix dg = all_pairs_distances(g), dh = all_pairs_distances(h);
  Graph acc = empty_like(g, h);
  for (int i = 1; i < p; ++i)
    acc = edge_union(acc, product(ProductKind::direct, exact_distance_graph(g, dg, i),
                                  exact_distance_graph(h, dh, p - i)));
  acc = edge_union(acc, product(ProductKind::cartesian, exact_distance_graph(g, dg, p),
                                exact_distance_graph(h, dh, p)));
  return acc;
}

Graph rhs_strong(const Graph& g, const Graph& h, int p) {
  require_loop_free(g, h, "rhs_strong");
  if (p < 0) throw std::invalid_argument("rhs_strong: p must be >= 0");
  const DistanceMatrix dg = all_pairs_distances(g), dh = all_pairs_distances(h);
  const Graph gp = exact_distance_graph(g, dg, p), hp = exact_distance_graph(h, dh, p);
  Graph acc = empty_like(g, h);
  for (int i = 0; i <= p; ++i) {
    acc = edge_union(acc, product(ProductKind::direct, gp, exact_distance_graph(h, dh, i)));
    acc = edge_union(acc, product(ProductKind::direct, exact_distance_graph(g, dg, i), hp));
  }
  return acc;
}

Graph rhs_direct2(const Graph& g, const Graph& h) {
  require_loop_free(g, h, "rhs_direct2");
  require_isolate_free(g, "rhs_direct2");
  require_isolate_free(h, "rhs_direct2");
  const Graph g2 = exact_distance_graph(g, 2), h2 = exact_distance_graph(h, 2);
  const Graph gw = path_power(g, 2), hw = path_power(h, 2);
  Graph acc = product(ProductKind::cartesian, gw, hw);
  acc = edge_union(acc, product(ProductKind::direct, gw, h2));
  acc = edge_union(acc, product(ProductKind::direct, g2, hw));
  return acc;
}

Graph rhs_direct2_triangle_free(const Graph& g, const Graph& h) {
  require_loop_free(g, h, "rhs_direct2_triangle_free");
  return product(ProductKind::strong, exact_distance_graph(g, 2), exact_distance_graph(h, 2));
}

Graph rhs_lex(const Graph& g, const Graph& h, int p) {
  require_loop_free(g, h, "rhs_lex");
  if (p < 2) throw std::invalid_argument("rhs_lex: p must be >= 2");
  if (g.order() < 2) throw std::invalid_argument("rhs_lex: first factor must be non-trivial");
  require_isolate_free(g, "rhs_lex");
  if (p == 2) return product(ProductKind::lexicographic, exact_distance_graph(g, 2), complement(h));
  Graph layers(h.order());
  if (h.labels()) layers.set_labels(*h.labels());
  return product(ProductKind::lexicographic, exact_distance_graph(g, p), layers);
}

IdentityReport check_identity(std::string identity, std::string instance, const Graph& lhs,
                              const Graph& rhs) {
  if (lhs.order() != rhs.order())
    throw std::invalid_argument("check_identity: order mismatch");
  const int n = lhs.order();
  for (int v = 0; v < n; ++v)
    if (lhs.label_or_index(v) != rhs.label_or_index(v))
      throw std::invalid_argument("check_identity: label mismatch at position " +
                                  std::to_string(v));
  IdentityReport rep;
  rep.identity = std::move(identity);
  rep.instance = std::move(instance);
  for (int u = 0; u < n; ++u)
    for (int v = u; v < n; ++v) {
      const bool l = lhs.has_edge(u, v), r = rhs.has_edge(u, v);
      if (l == r) continue;
      auto& bucket = l ? rep.lhs_only : rep.rhs_only;
      auto& total = l ? rep.lhs_only_total : rep.rhs_only_total;
      if (static_cast<int>(bucket.size()) < IdentityReport::kDiffCap) bucket.emplace_back(u, v);
      ++total;
    }
  rep.pass = rep.lhs_only_total == 0 && rep.rhs_only_total == 0;
  return rep;
}

namespace {

struct GridOffsets {
  std::array<std::pair<int, int>, 8> moves;
};

GridOffsets offsets_for(ProductKind which) {
  if (which == ProductKind::cartesian)
    return {{{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}, {0, 2}, {0, -2}, {2, 0}, {-2, 0}}}};
  return {{{{2, 2}, {2, -2}, {-2, 2}, {-2, -2}, {0, 2}, {0, -2}, {2, 0}, {-2, 0}}}};
}

int parity_class(ProductKind which, int i, int j) {
  return which == ProductKind::cartesian ? (i + j) % 2 : (i % 2) * 2 + j % 2;
}

// diagonal coordinates for the box grid, halved coordinates for the
// direct grid; within one parity class both are affine, so king moves in
// the image correspond exactly to the eight neighbourhood offsets
std::pair<int, int> strong_map(ProductKind which, int m, int i, int j) {
  if (which == ProductKind::cartesian) return {(i + j) / 2, (i - j + 2 * m) / 2};
  return {i / 2, j / 2};
}

void note_failure(IdentityReport& rep, int u, int v, bool lhs_side) {
  auto& bucket = lhs_side ? rep.lhs_only : rep.rhs_only;
  auto& total = lhs_side ? rep.lhs_only_total : rep.rhs_only_total;
  if (static_cast<int>(bucket.size()) < IdentityReport::kDiffCap) bucket.emplace_back(u, v);
  ++total;
}

}  // namespace

IdentityReport grid_window_check(int m, ProductKind which) {
  if (which != ProductKind::cartesian && which != ProductKind::direct)
    throw std::invalid_argument("grid_window_check: cartesian or direct only");
  if (m < 9) throw std::invalid_argument("grid_window_check: need m >= 9");
  const Graph pm = path(m);
  const Graph grid = product(which, pm, pm);
  const Graph ex2 = exact_distance_graph(grid, 2);
  const int expected_components = which == ProductKind::cartesian ? 2 : 4;

  IdentityReport rep;
  rep.identity = which == ProductKind::cartesian ? "grid_window_cartesian" : "grid_window_direct";
  rep.instance = "m=" + std::to_string(m);
  rep.pass = true;

  const auto comps = connected_components(ex2);
  if (static_cast<int>(comps.size()) != expected_components) {
    rep.pass = false;
    rep.notes += "component count " + std::to_string(comps.size()) + " != " +
                 std::to_string(expected_components) + "; ";
  }
  // edges never leave a parity class
  for (auto [u, v] : ex2.edges()) {
    const int iu = u / m, ju = u % m, iv = v / m, jv = v % m;
    if (parity_class(which, iu, ju) != parity_class(which, iv, jv)) {
      rep.pass = false;
      note_failure(rep, u, v, true);
    }
  }

  const auto offs = offsets_for(which);
  std::vector<int> interior;
  for (int i = 2; i <= m - 3; ++i)
    for (int j = 2; j <= m - 3; ++j) interior.push_back(i * m + j);

  // interior neighbourhoods are exactly the eight expected offsets
  for (int u : interior) {
    const int i = u / m, j = u % m;
    int seen = 0;
    for (auto [di, dj] : offs.moves) {
      const int v = (i + di) * m + (j + dj);
      if (ex2.has_edge(u, v)) ++seen;
      else {
        rep.pass = false;
        note_failure(rep, u, v, false);
      }
    }
    if (ex2.degree(u) != 8 || seen != 8) {
      rep.pass = false;
      rep.notes += "vertex " + std::to_string(u) + " degree " +
                   std::to_string(ex2.degree(u)) + "; ";
    }
  }

  // within a parity class, adjacency is king-move adjacency of the
  // remapped coordinates
  for (size_t a = 0; a < interior.size(); ++a)
    for (size_t b = a + 1; b < interior.size(); ++b) {
      const int u = interior[a], v = interior[b];
      const int iu = u / m, ju = u % m, iv = v / m, jv = v % m;
      if (parity_class(which, iu, ju) != parity_class(which, iv, jv)) continue;
      const auto [ua, ub] = strong_map(which, m, iu, ju);
      const auto [va, vb] = strong_map(which, m, iv, jv);
      const bool king = std::max(std::abs(ua - va), std::abs(ub - vb)) == 1;
      if (ex2.has_edge(u, v) != king) {
        rep.pass = false;
        note_failure(rep, u, v, ex2.has_edge(u, v));
      }
    }

  if (rep.pass)
    rep.notes = "components=" + std::to_string(comps.size()) + ", interior window [2," +
                std::to_string(m - 3) + "]^2";
  return rep;
}

}  // namespace xdg
