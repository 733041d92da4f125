#pragma once

#include <cstdint>
#include <random>
#include <tuple>
#include <vector>

#include "signet/balance.hpp"
#include "signet/connectivity.hpp"
#include "signet/graph.hpp"
#include "signet/random_graph.hpp"

namespace testutil {

using namespace signet;

// 0-based builder used throughout the tests.
inline SignedDigraph graph_of(int n, const std::vector<std::tuple<int, int, double>>& edges) {
  std::vector<Edge> es;
  for (auto [src, dst, w] : edges) es.push_back({src, dst, w, std::nullopt});
  return SignedDigraph(n, es);
}

// Independent balance oracle: try all 2^n sign assignments.
inline bool oracle_balance(const SignedDigraph& g) {
  const int n = g.n();
  const std::vector<Edge> edges = g.edges();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (const Edge& e : edges) {
      const int si = (mask >> e.dst) & 1 ? -1 : 1;
      const int sj = (mask >> e.src) & 1 ? -1 : 1;
      if ((e.weight > 0 ? 1 : -1) != si * sj) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

// Independent per-node oracle: reverse-reachability closure (plain DFS), then
// exhaustive balance on the induced subgraph.
inline bool oracle_balanced_node(const SignedDigraph& g, int node) {
  std::vector<char> seen(g.n(), 0);
  std::vector<int> stack{node};
  seen[node] = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int j = 0; j < g.n(); ++j)
      if (!seen[j] && g.weight(u, j) != 0.0) {
        seen[j] = 1;
        stack.push_back(j);
      }
  }
  std::vector<int> closure;
  for (int v = 0; v < g.n(); ++v)
    if (seen[v]) closure.push_back(v);
  return oracle_balance(induced_subgraph(g, closure).graph);
}

// Boolean all-pairs reachability (Floyd-Warshall) for connectivity oracles.
inline std::vector<std::vector<bool>> oracle_reachability(const SignedDigraph& g) {
  const int n = g.n();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) {
    reach[i][i] = true;
    for (int j = 0; j < n; ++j)
      if (g.weight(j, i) != 0.0) reach[i][j] = true;  // edge i -> j
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (reach[i][k] && reach[k][j]) reach[i][j] = true;
  return reach;
}

// Rejection sampler for quasi-strongly connected instances with a prescribed
// set of admissible root conditions.
struct QscSample {
  SignedDigraph g;
  RootCondition condition;
};

inline QscSample sample_qsc(std::mt19937_64& rng, std::initializer_list<RootCondition> allowed,
                            int max_n = 8) {
  auto admits = [&](RootCondition c) {
    for (RootCondition a : allowed)
      if (a == c) return true;
    return false;
  };
  for (;;) {
    RandomGraphOptions opts;
    opts.n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n - 1));
    opts.density = 0.10 + static_cast<double>(rng() % 30) / 100.0;
    opts.neg_fraction = 0.5;
    opts.spanning_tree = true;
    opts.balanced = (rng() & 1) != 0;  // biases the C2/C3 mix
    opts.seed = rng();
    const SignedDigraph g = random_graph(opts);
    const ConnectivityReport rep = analyze_connectivity(g);
    if (!rep.is_quasi_strongly_connected) continue;
    const RootCondition cond = classify_root_condition(g, rep);
    if (admits(cond)) return {g, cond};
  }
}

// Sign of the undirected support edge {u, v} (either direction carries it).
inline int sign_between(const SignedDigraph& g, int u, int v) {
  double w = g.weight(u, v);
  if (w == 0.0) w = g.weight(v, u);
  return w > 0 ? 1 : (w < 0 ? -1 : 0);
}

}  // namespace testutil
