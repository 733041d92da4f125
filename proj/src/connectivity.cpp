#include "signet/connectivity.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>

namespace signet {

namespace {

// Iterative Tarjan; returns component id per node (discovery order ids).
std::vector<int> tarjan_sccs(const std::vector<std::vector<int>>& adj, int& scc_count) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> index(n, -1), lowlink(n, 0), comp(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  int next_index = 0;
  scc_count = 0;
  struct Frame {
    int v;
    std::size_t child;
  };
  for (int start = 0; start < n; ++start) {
    if (index[start] != -1) continue;
    std::vector<Frame> frames{{start, 0}};
    index[start] = lowlink[start] = next_index++;
    stack.push_back(start);
    on_stack[start] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.child < adj[f.v].size()) {
        const int w = adj[f.v][f.child++];
        if (index[w] == -1) {
          index[w] = lowlink[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          lowlink[f.v] = std::min(lowlink[f.v], index[w]);
        }
      } else {
        if (lowlink[f.v] == index[f.v]) {
          int w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp[w] = scc_count;
          } while (w != f.v);
          ++scc_count;
        }
        const int v = f.v;
        frames.pop_back();
        if (!frames.empty()) lowlink[frames.back().v] = std::min(lowlink[frames.back().v], lowlink[v]);
      }
    }
  }
  return comp;
}

}  // namespace

ConnectivityReport analyze_connectivity(const SignedDigraph& g) {
  const int n = g.n();
  ConnectivityReport rep;

  // Influence digraph: edge j -> i whenever j influences i.
  std::vector<std::vector<int>> adj(n);
  for (int j = 0; j < n; ++j) adj[j] = g.out_neighbors(j);

  int scc_count = 0;
  std::vector<int> raw_comp = tarjan_sccs(adj, scc_count);

  std::vector<std::vector<int>> members(scc_count);
  for (int v = 0; v < n; ++v) members[raw_comp[v]].push_back(v);

  std::set<std::pair<int, int>> raw_edges;
  for (int j = 0; j < n; ++j)
    for (int i : adj[j])
      if (raw_comp[j] != raw_comp[i]) raw_edges.insert({raw_comp[j], raw_comp[i]});

  // Topological order over the condensation, smallest-member first among ready
  // components; this also renumbers SCC ids deterministically.
  std::vector<int> indegree(scc_count, 0);
  std::vector<std::vector<int>> cadj(scc_count);
  for (auto [a, b] : raw_edges) {
    cadj[a].push_back(b);
    ++indegree[b];
  }
  auto cmp = [&](int a, int b) { return members[a][0] > members[b][0]; };
  std::priority_queue<int, std::vector<int>, decltype(cmp)> ready(cmp);
  for (int c = 0; c < scc_count; ++c)
    if (indegree[c] == 0) ready.push(c);
  std::vector<int> new_id(scc_count, -1);
  int next = 0;
  while (!ready.empty()) {
    const int c = ready.top();
    ready.pop();
    new_id[c] = next++;
    for (int d : cadj[c])
      if (--indegree[d] == 0) ready.push(d);
  }

  rep.sccs.resize(scc_count);
  rep.scc_of.assign(n, -1);
  for (int c = 0; c < scc_count; ++c) rep.sccs[new_id[c]] = members[c];
  for (int v = 0; v < n; ++v) rep.scc_of[v] = new_id[raw_comp[v]];
  for (auto [a, b] : raw_edges) rep.condensation_edges.push_back({new_id[a], new_id[b]});
  std::sort(rep.condensation_edges.begin(), rep.condensation_edges.end());

  std::vector<bool> has_in(scc_count, false);
  for (auto [a, b] : rep.condensation_edges) {
    (void)a;
    has_in[b] = true;
  }
  for (int c = 0; c < scc_count; ++c)
    if (!has_in[c]) rep.source_sccs.push_back(c);

  // Weak components: union over the undirected support.
  std::vector<int> parent(n);
  for (int v = 0; v < n; ++v) parent[v] = v;
  std::function<int(int)> find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int j = 0; j < n; ++j)
    for (int i : adj[j]) parent[find(i)] = find(j);
  std::vector<std::vector<int>> wc_map(n);
  for (int v = 0; v < n; ++v) wc_map[find(v)].push_back(v);
  for (int v = 0; v < n; ++v)
    if (!wc_map[v].empty()) rep.weak_components.push_back(wc_map[v]);
  std::sort(rep.weak_components.begin(), rep.weak_components.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });

  rep.is_quasi_strongly_connected =
      rep.weak_components.size() == 1 && rep.source_sccs.size() == 1;
  if (rep.is_quasi_strongly_connected) rep.roots = rep.sccs[rep.source_sccs[0]];
  for (int c : rep.source_sccs)
    rep.leaders.insert(rep.leaders.end(), rep.sccs[c].begin(), rep.sccs[c].end());
  std::sort(rep.leaders.begin(), rep.leaders.end());
  std::vector<bool> is_leader(n, false);
  for (int v : rep.leaders) is_leader[v] = true;
  for (int v = 0; v < n; ++v)
    if (!is_leader[v]) rep.followers.push_back(v);
  return rep;
}

std::vector<int> ancestor_closure(const SignedDigraph& g, int i) {
  if (i < 0 || i >= g.n()) throw std::out_of_range("node index out of range");
  std::vector<bool> seen(g.n(), false);
  std::vector<int> stack{i};
  seen[i] = true;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int j : g.in_neighbors(v))
      if (!seen[j]) {
        seen[j] = true;
        stack.push_back(j);
      }
  }
  std::vector<int> out;
  for (int v = 0; v < g.n(); ++v)
    if (seen[v]) out.push_back(v);
  return out;
}

}  // namespace signet
