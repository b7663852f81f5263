#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "xdg/identities.hpp"
#include "xdg/isomorphism.hpp"

namespace xdg {

struct IsoCheck {
  std::string name;
  std::string instance;
  bool pass = false;
  IsoOutcome outcome = IsoOutcome::undecided;
  std::vector<int> mapping;  // empty unless a bijection was produced
  std::string notes;
};

// Distance-2p graph of the d-cube against two stacked copies of the
// (d-1)-cube's distance-2p and distance-(2p-1) graphs, decided by
// isomorphism search. Needs 2 <= 2p <= n <= 7.
IsoCheck even_distance_decomposition_check(int n, int p);

// The word-flip bijection on n-bit strings, n even: split into 2-bit
// words, call a word odd when its bits differ; strings with an even
// number of odd words are type A. Type A complements its odd words, type
// B complements its even words. Bit j (1-based) of the written string is
// bit j-1 of the mask.
bool word_type_a(std::uint32_t x, int n);
std::uint32_t word_flip_image(std::uint32_t x, int n);

// Verifies word_flip_image is a bijection carrying distance-(n-1)
// adjacency of the n-cube onto cube adjacency, and that it fixes type.
IsoCheck qn_nminus1_isomorphism(int n);

// Set complement as an explicit bijection from k-subsets onto
// (n-k)-subsets, verified edge-exact between the matching intersection
// levels (i on the left, n-2k+i on the right).
IsoCheck johnson_complement_isomorphism(int n, int k, int i);

// Weight-i slice of the d-cube's distance-p graph against the subset
// graph with intersection size i - p/2, as a positional relabeling.
IdentityReport level_induces_johnson_check(int n, int p, int i);

struct ParityReport {
  std::string instance;
  bool no_cross_edges = false;
  bool used_complement_map = false;  // odd n: explicit map, else search
  IsoOutcome components_isomorphic = IsoOutcome::undecided;
  bool pass = false;
  std::string notes;
};

// Even p: no edge of the cube's distance-p graph changes weight parity;
// the even-weight and odd-weight halves are compared by the bit
// complement map when n is odd and by isomorphism search when n is even.
ParityReport parity_components_check(int n, int p);

}  // namespace xdg
