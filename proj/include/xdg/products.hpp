#pragma once

#include <string>
#include <utility>

#include "xdg/graph.hpp"

namespace xdg {

enum class ProductKind { cartesian, strong, direct, lexicographic };

const char* product_kind_name(ProductKind k);

// Product on V(G) x V(H); vertex (g,h) sits at index g*|H| + h and carries
// the label pair (label(g), label(h)). Loops are honoured everywhere with
// direct-product semantics: a loop at g makes (g,h) ~ (g,h') whenever
// hh' is an edge of H, and loops multiply into loops.
Graph product(ProductKind kind, const Graph& g, const Graph& h);

inline int pair_index(int g, int h, int order_h) { return g * order_h + h; }

// Closed-form product distances from factor metrics, no product graph
// needed. Factors must be loop-free. For the direct product the walk
// parities matter: the evaluator keeps, per factor, the shortest even and
// shortest odd walk lengths between every vertex pair (BFS on the factor
// times K_2) and intersects the two arithmetic progressions.
class ProductMetric {
public:
  ProductMetric(ProductKind kind, const Graph& g, const Graph& h);

  int distance(int g1, int h1, int g2, int h2) const;  // kUnreachable if none

private:
  ProductKind kind_;
  int ng_, nh_;
  DistanceMatrix dg_, dh_;
  std::vector<int> deg_g_, deg_h_;
  // shortest even/odd walk lengths, kUnreachable when no such walk
  std::vector<int> even_g_, odd_g_, even_h_, odd_h_;
};

int product_distance(ProductKind kind, const Graph& g, const Graph& h,
                     std::pair<int, int> u, std::pair<int, int> v);

}  // namespace xdg
