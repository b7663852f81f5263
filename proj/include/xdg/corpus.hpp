#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "xdg/graph.hpp"

namespace xdg {

struct InstancePair {
  Graph g;
  Graph h;
  std::string name;
};

// Reproducible fuzz instances: a fixed pool of structured pairs (paths,
// cycles, stars, small hypercubes, tiny cliques) followed by random
// graphs cycling through densities 0.2 / 0.5 / 0.8. Same seed, same
// corpus, byte for byte.
std::vector<InstancePair> identity_fuzz_corpus(int count, std::uint64_t seed,
                                               int max_order = 8);

// Pairs of connected graphs for the connectivity characterizations.
std::vector<InstancePair> connected_pair_corpus(int count, std::uint64_t seed,
                                                int max_order = 7);

Graph random_graph(std::mt19937_64& rng, int order, double density);

// Random spanning tree first, then extra edges; connected by construction.
Graph random_connected_graph(std::mt19937_64& rng, int order, double density);

// Attaches every isolated vertex to a random other vertex. Order must be
// at least 2.
Graph make_isolate_free(Graph g, std::mt19937_64& rng);

bool has_isolated_vertex(const Graph& g);
bool is_triangle_free(const Graph& g);

}  // namespace xdg
