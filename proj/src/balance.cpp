#include "signet/balance.hpp"

#include <algorithm>
#include <queue>

namespace signet {

const char* to_string(RootCondition c) {
  switch (c) {
    case RootCondition::C1: return "C1";
    case RootCondition::C2: return "C2";
    case RootCondition::C3: return "C3";
  }
  return "?";
}

namespace {

std::vector<int> fundamental_cycle(int u, int v, const std::vector<int>& parent, int n) {
  std::vector<char> in_up(n, 0);
  for (int x = u; x != -1; x = parent[x]) in_up[x] = 1;
  int lca = -1;
  std::vector<int> down;
  for (int x = v; x != -1; x = parent[x]) {
    if (in_up[x]) {
      lca = x;
      break;
    }
    down.push_back(x);
  }
  std::vector<int> cycle;
  for (int x = u;; x = parent[x]) {
    cycle.push_back(x);
    if (x == lca) break;
  }
  for (auto it = down.rbegin(); it != down.rend(); ++it) cycle.push_back(*it);
  return cycle;
}

}  // namespace

BalanceVerdict gauge_partition(const SignedDigraph& g) {
  const int n = g.n();
  // Undirected parity constraints: every directed edge requires
  // sigma_i * sigma_j == sign(w).
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (int i = 0; i < n; ++i)
    for (int j : g.in_neighbors(i)) {
      const int s = g.weight(i, j) > 0 ? 1 : -1;
      adj[i].push_back({j, s});
      adj[j].push_back({i, s});
    }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  BalanceVerdict verdict;
  std::vector<int> sigma(n, 0), parent(n, -1);
  for (int start = 0; start < n; ++start) {
    if (sigma[start] != 0) continue;
    sigma[start] = 1;
    std::queue<int> queue;
    queue.push(start);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop();
      for (auto [v, s] : adj[u]) {
        if (sigma[v] == 0) {
          sigma[v] = sigma[u] * s;
          parent[v] = u;
          queue.push(v);
        } else if (sigma[v] != sigma[u] * s) {
          verdict.balanced = false;
          verdict.witness_cycle = fundamental_cycle(u, v, parent, n);
          return verdict;
        }
      }
    }
  }
  verdict.balanced = true;
  verdict.gauge = GaugeVector{std::move(sigma)};
  return verdict;
}

bool graph_balance(const SignedDigraph& g) { return gauge_partition(g).balanced; }

bool is_balanced_node(const SignedDigraph& g, int i) {
  const Subgraph sub = induced_subgraph(g, ancestor_closure(g, i));
  return gauge_partition(sub.graph).balanced;
}

RootCondition classify_root_condition(const SignedDigraph& g, const ConnectivityReport& rep) {
  if (!rep.is_quasi_strongly_connected)
    throw std::invalid_argument("root condition requires a quasi-strongly connected graph");
  if (rep.roots.size() == 1) return RootCondition::C1;
  const Subgraph root_sub = induced_subgraph(g, rep.roots);
  return graph_balance(root_sub.graph) ? RootCondition::C2 : RootCondition::C3;
}

}  // namespace signet
