#pragma once

#include <cstdint>
#include <vector>

#include "xdg/graph.hpp"

namespace xdg {

enum class IsoOutcome { isomorphic, not_isomorphic, undecided };

struct IsoResult {
  IsoOutcome outcome = IsoOutcome::undecided;
  // vertex u of the first graph maps to mapping[u]; empty unless isomorphic
  std::vector<int> mapping;
  std::int64_t nodes_used = 0;
};

// Isomorphism test: joint colour refinement over (degree, loop, distance
// multiset) signatures, then backtracking filtered by colour class,
// adjacency to the mapped prefix and pairwise distance agreement. A found
// bijection is replayed edge by edge before it is reported. `undecided`
// means the node budget ran out, never that the answer is unknown for a
// completed search.
IsoResult are_isomorphic(const Graph& a, const Graph& b,
                         std::int64_t node_budget = 20'000'000);

// True when `mapping` is a bijection carrying the edge set of `a` exactly
// onto the edge set of `b` (loops included).
bool mapping_is_isomorphism(const Graph& a, const Graph& b,
                            const std::vector<int>& mapping);

}  // namespace xdg
