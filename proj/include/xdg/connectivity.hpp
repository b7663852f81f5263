#pragma once

#include "xdg/graph.hpp"

namespace xdg {

// True exactly when p exceeds the radius, which forces the distance-p
// graph apart: every centre vertex goes isolated. G connected, order >= 2.
bool radius_obstruction(const Graph& g, int p);

// Predicted connectivity of the distance-p graph of the strong product.
// Both factors must be connected, p >= 2. Factors are ordered internally
// so the radius condition always lands on the larger-radius factor.
bool strong_product_characterization(const Graph& g, const Graph& h, int p);

// Predicted connectivity of the distance-p graph of G o H for p >= 1 and
// non-trivial G: decided entirely by the distance-p graph of G.
bool lex_characterization(const Graph& g, const Graph& h, int p);

// Distance-2 graph of the box product: connected iff some factor is
// non-bipartite. Both factors connected.
bool cartesian_p2_characterization(const Graph& g, const Graph& h);

// Distance-2 graph of the direct product: connected iff both factors'
// 2-step path powers are. Both factors connected. Path powers, not
// distance-2 graphs: a triangle edge carries a simple 2-path too, and the
// product can ride it even though the endpoints sit at distance 1.
bool direct_p2_characterization(const Graph& g, const Graph& h);

struct HypercubeConnectivity {
  bool predicted = false;
  bool in_theorem_range = false;  // 1 <= p < d; outside it the answer is computed
};

// d-cube distance-p graph: for 1 <= p < d connected iff p is odd; outside
// that range the verdict comes from an actual component count, flagged.
HypercubeConnectivity hypercube_characterization(int d, int p);

// Component oracle: build nothing fancy, just count components of the
// distance-p graph of the given product graph.
bool exact_distance_connected(const Graph& g, int p);

}  // namespace xdg
