#pragma once

#include <string>
#include <utility>
#include <vector>

#include "xdg/graph.hpp"
#include "xdg/products.hpp"

namespace xdg {

struct IdentityReport {
  std::string identity;
  std::string instance;
  bool pass = false;
  // positional edge diffs, capped at kDiffCap entries each
  std::vector<std::pair<int, int>> lhs_only, rhs_only;
  long long lhs_only_total = 0, rhs_only_total = 0;
  std::string notes;

  static constexpr int kDiffCap = 16;
};

// Right-hand-side builders for the exact distance graph of a product,
// assembled purely from factor data on the shared vertex set V(G) x V(H).
// All take loop-free factors; the p = 0 terms contribute through the
// all-loops graph and the direct product's loop semantics.

// union over i <= p of (G at distance i) x (H at distance p-i)
Graph rhs_cartesian(const Graph& g, const Graph& h, int p);

// same set, with the two border terms fused into a Cartesian product:
// union over 0 < i < p, plus (G at distance p) box (H at distance p)
Graph rhs_cartesian_alt(const Graph& g, const Graph& h, int p);

// union over i <= p of (G at p) x (H at i)  and  (G at i) x (H at p)
Graph rhs_strong(const Graph& g, const Graph& h, int p);

// distance-2 direct product from squares: path powers fill in for the
// walk-through-the-other-factor moves. Factors must be isolate-free.
Graph rhs_direct2(const Graph& g, const Graph& h);

// the stronger triangle-free form: (G at 2) strong (H at 2)
Graph rhs_direct2_triangle_free(const Graph& g, const Graph& h);

// lexicographic: p = 2 uses complement(H) layers, p >= 3 empty layers.
// G must be isolate-free with order >= 2; p >= 2.
Graph rhs_lex(const Graph& g, const Graph& h, int p);

// positional edge-set comparison; orders and labels must agree
IdentityReport check_identity(std::string identity, std::string instance,
                              const Graph& lhs, const Graph& rhs);

// Distance-2 graph of P_m box P_m (resp. P_m x P_m), checked on the
// window of vertices at least 2 away from the boundary: parity component
// count (2 resp. 4), exact interior neighbourhood offsets, and the
// coordinate remap onto king-move adjacency. Needs m >= 9.
IdentityReport grid_window_check(int m, ProductKind which);

}  // namespace xdg
