#include "xdg/connectivity.hpp"

#include <stdexcept>

#include "xdg/exact_distance.hpp"
#include "xdg/families.hpp"

namespace xdg {

namespace {

void require_connected(const Graph& g, const char* who) {
  if (!is_connected(g)) throw std::invalid_argument(std::string(who) + ": factor not connected");
}

}  // namespace

bool radius_obstruction(const Graph& g, int p) {
  if (g.order() < 2) throw std::invalid_argument("radius_obstruction: trivial graph");
  require_connected(g, "radius_obstruction");
  return p > metric_profile(g).radius;
}

bool exact_distance_connected(const Graph& g, int p) {
  return is_connected(exact_distance_graph(g, p));
}

bool strong_product_characterization(const Graph& g, const Graph& h, int p) {
  if (p < 2) throw std::invalid_argument("strong_product_characterization: p must be >= 2");
  require_connected(g, "strong_product_characterization");
  require_connected(h, "strong_product_characterization");
  const MetricProfile pg = metric_profile(g), ph = metric_profile(h);
  const Graph& big = pg.radius >= ph.radius ? g : h;
  const Graph& small = pg.radius >= ph.radius ? h : g;
  const MetricProfile& big_prof = pg.radius >= ph.radius ? pg : ph;
  const MetricProfile& small_prof = pg.radius >= ph.radius ? ph : pg;
  (void)small;
  if (big_prof.radius < p) return false;
  return exact_distance_connected(big, p) || small_prof.diameter >= p;
}

bool lex_characterization(const Graph& g, const Graph& h, int p) {
  if (p < 1) throw std::invalid_argument("lex_characterization: p must be >= 1");
  if (g.order() < 2) throw std::invalid_argument("lex_characterization: trivial first factor");
  (void)h;  // the layers never matter
  return exact_distance_connected(g, p);
}

bool cartesian_p2_characterization(const Graph& g, const Graph& h) {
  require_connected(g, "cartesian_p2_characterization");
  require_connected(h, "cartesian_p2_characterization");
  return !bipartition(g).has_value() || !bipartition(h).has_value();
}

bool direct_p2_characterization(const Graph& g, const Graph& h) {
  require_connected(g, "direct_p2_characterization");
  require_connected(h, "direct_p2_characterization");
  // Two-step reachability, not exact distance 2: every distance-2 edge of
  // the product projects to a length-2 walk in each factor, and distinct
  // endpoints of a 2-walk always span a simple 2-path even when they are
  // adjacent. Exact distance undercounts exactly in that adjacent case
  // (K_4 x K_4 separates the two readings).
  return is_connected(path_power(g, 2)) && is_connected(path_power(h, 2));
}

HypercubeConnectivity hypercube_characterization(int d, int p) {
  if (d < 2 || p < 1) throw std::invalid_argument("hypercube_characterization: need d >= 2, p >= 1");
  HypercubeConnectivity out;
  out.in_theorem_range = p < d;
  if (out.in_theorem_range) {
    out.predicted = p % 2 == 1;
  } else {
    out.predicted = exact_distance_connected(hypercube(d), p);
  }
  return out;
}

}  // namespace xdg
