#pragma once

#include <utility>
#include <vector>

#include "signet/graph.hpp"

namespace signet {

// Reachability structure of the digraph. SCC ids are topologically ordered in
// the condensation (sources first), ties broken by smallest member; all node
// sets are ascending.
struct ConnectivityReport {
  std::vector<std::vector<int>> sccs;
  std::vector<int> scc_of;                              // node -> scc id
  std::vector<std::pair<int, int>> condensation_edges;  // dedup, ascending
  std::vector<int> source_sccs;                         // scc ids without incoming edges
  std::vector<std::vector<int>> weak_components;        // by smallest member
  bool is_quasi_strongly_connected = false;
  std::vector<int> roots;      // nonempty iff quasi-strongly connected
  std::vector<int> leaders;    // union of source SCCs
  std::vector<int> followers;  // complement of leaders
};

ConnectivityReport analyze_connectivity(const SignedDigraph& g);

// All nodes with a directed path to `i`, plus `i` itself, ascending.
std::vector<int> ancestor_closure(const SignedDigraph& g, int i);

}  // namespace signet
