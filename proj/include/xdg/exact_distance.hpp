#pragma once

#include <stdexcept>

#include "xdg/graph.hpp"

namespace xdg {

struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Exact distance graph: u ~ v iff d_G(u,v) == p. p = 0 yields a loop at
// every vertex, p = 1 yields G itself. The input must be loop-free since
// distances ignore loops anyway.
Graph exact_distance_graph(const Graph& g, int p);
Graph exact_distance_graph(const Graph& g, const DistanceMatrix& dm, int p);

// Path power: u ~ v iff some simple path of length exactly p joins them.
// Always a supergraph of exact_distance_graph(g, p); equal at p = 2 when g
// is triangle-free. Enumerates simple paths by DFS, so the step budget
// guards against combinatorial blowup on dense inputs.
Graph path_power(const Graph& g, int p, long long step_budget = 50'000'000);

}  // namespace xdg
