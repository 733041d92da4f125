#pragma once

#include <cstdint>

#include "signet/graph.hpp"

namespace signet {

// Knobs for the seeded generator. Magnitudes are dyadic (k/16 with
// 8 <= k <= 40) so that the double and rational views agree exactly.
struct RandomGraphOptions {
  int n = 8;
  double density = 0.3;        // probability of each ordered pair (j -> i)
  double neg_fraction = 0.5;   // probability that an edge weight is negative
  std::uint64_t seed = 0;
  bool spanning_tree = false;  // force quasi-strong connectivity from node 0
  bool balanced = false;       // conjugate by a random gauge of all-positive weights
};

SignedDigraph random_graph(const RandomGraphOptions& opts);

}  // namespace signet
