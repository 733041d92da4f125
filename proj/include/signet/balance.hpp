#pragma once

#include <optional>
#include <vector>

#include "signet/connectivity.hpp"
#include "signet/graph.hpp"

namespace signet {

// Root-subgraph condition of a quasi-strongly connected digraph:
//   C1 — a single root node;
//   C2 — several roots forming a structurally balanced subgraph;
//   C3 — several roots forming an unbalanced subgraph.
enum class RootCondition { C1, C2, C3 };

const char* to_string(RootCondition c);

// +1/-1 per node; for a balanced graph, conjugating by sigma makes every
// weight nonnegative. Anchored to +1 at the smallest-indexed node of each
// weak component.
struct GaugeVector {
  std::vector<int> sigma;
};

struct BalanceVerdict {
  bool balanced = false;
  std::optional<GaugeVector> gauge;  // present iff balanced
  std::vector<int> witness_cycle;    // present iff unbalanced: nodes of a violated cycle
};

// Structural balance of the whole graph via parity-constrained 2-coloring of
// the undirected sign support.
BalanceVerdict gauge_partition(const SignedDigraph& g);

bool graph_balance(const SignedDigraph& g);

// A node is structurally balanced when the induced subgraph on its ancestor
// closure is balanced.
bool is_balanced_node(const SignedDigraph& g, int i);

// Requires a quasi-strongly connected graph (throws otherwise).
RootCondition classify_root_condition(const SignedDigraph& g, const ConnectivityReport& rep);

}  // namespace signet
