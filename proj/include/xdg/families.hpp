#pragma once

#include <cstdint>
#include <vector>

#include "xdg/graph.hpp"

namespace xdg {

long long binomial(int n, int k);

// All k-element subsets of {1..n} as bit masks (element e at bit e-1),
// ascending mask value, which is colexicographic subset order.
std::vector<std::uint32_t> k_subsets(int n, int k);

Graph path(int n);      // n >= 1
Graph cycle(int n);     // n >= 3
Graph complete(int n);  // n >= 1
Graph edgeless(int n);  // n >= 1

// Vertex v of the n-cube is the bit string v (labels printed x_1..x_n with
// x_j = bit j-1). Built from the Hamming rule and cross-checked once against
// the recursive prism construction in the tests. n <= 14 keeps adjacency
// storage small; larger n is rejected.
Graph hypercube(int n);

// Vertices of weight j, ascending.
std::vector<int> hypercube_level(int n, int j);

// k-subsets of {1..n} in colex order; A ~ B iff the intersection size is
// exactly i (johnson) or at most i (kneser_general). kneser_general(n,k,0)
// is the ordinary Kneser graph.
Graph johnson(int n, int k, int i);
Graph kneser_general(int n, int k, int i);

}  // namespace xdg
