#include "signet/behavior.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>

namespace signet {

const char* to_string(Behavior b) {
  switch (b) {
    case Behavior::bipartite_consensus: return "bipartite_consensus";
    case Behavior::interval_bipartite_consensus: return "interval_bipartite_consensus";
    case Behavior::bipartite_containment_tracking: return "bipartite_containment_tracking";
    case Behavior::state_stability: return "state_stability";
  }
  return "?";
}

namespace detail {

StructureAnalysis analyze_structure(const SignedDigraph& g) {
  StructureAnalysis sa;
  sa.connectivity = analyze_connectivity(g);
  const int n = g.n();
  sa.node_balance.resize(n);
  for (int i = 0; i < n; ++i) sa.node_balance[i] = is_balanced_node(g, i);

  // Parity constraints restricted to balanced nodes.
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (int i = 0; i < n; ++i) {
    if (!sa.node_balance[i]) continue;
    for (int j : g.in_neighbors(i)) {
      if (!sa.node_balance[j]) continue;
      const int s = g.weight(i, j) > 0 ? 1 : -1;
      adj[i].push_back({j, s});
      adj[j].push_back({i, s});
    }
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  // Weak components of the balanced subgraph.
  std::vector<int> bcomp(n, -1);
  std::vector<std::vector<int>> bmembers;
  for (int start = 0; start < n; ++start) {
    if (!sa.node_balance[start] || bcomp[start] != -1) continue;
    const int id = static_cast<int>(bmembers.size());
    bmembers.push_back({});
    std::queue<int> queue;
    queue.push(start);
    bcomp[start] = id;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop();
      bmembers[id].push_back(u);
      for (auto [v, s] : adj[u]) {
        (void)s;
        if (bcomp[v] == -1) {
          bcomp[v] = id;
          queue.push(v);
        }
      }
    }
  }

  // Anchor per balanced component: the smallest member of the contained
  // source SCC with the largest smallest-member.
  std::vector<int> anchor(bmembers.size(), -1);
  for (int scc_id : sa.connectivity.source_sccs) {
    const std::vector<int>& members = sa.connectivity.sccs[scc_id];
    if (!sa.node_balance[members[0]]) continue;  // unbalanced source SCC
    const int c = bcomp[members[0]];
    anchor[c] = std::max(anchor[c], members[0]);
  }
  for (std::size_t c = 0; c < bmembers.size(); ++c) {
    std::sort(bmembers[c].begin(), bmembers[c].end());
    if (anchor[c] == -1) anchor[c] = bmembers[c][0];  // defensive; cannot happen
  }

  // Color each balanced component from its anchor.
  sa.sigma.assign(n, 0);
  for (std::size_t c = 0; c < bmembers.size(); ++c) {
    sa.sigma[anchor[c]] = 1;
    std::queue<int> queue;
    queue.push(anchor[c]);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop();
      for (auto [v, s] : adj[u]) {
        if (sa.sigma[v] == 0) {
          sa.sigma[v] = sa.sigma[u] * s;
          queue.push(v);
        } else if (sa.sigma[v] != sa.sigma[u] * s) {
          sa.gauge_conflict = true;
        }
      }
    }
  }

  // Per weak component: source SCCs, root condition, balanced sources.
  std::vector<int> wcomp_of(n, -1);
  for (std::size_t w = 0; w < sa.connectivity.weak_components.size(); ++w)
    for (int v : sa.connectivity.weak_components[w]) wcomp_of[v] = static_cast<int>(w);
  sa.components.resize(sa.connectivity.weak_components.size());
  for (std::size_t w = 0; w < sa.components.size(); ++w)
    sa.components[w].nodes = sa.connectivity.weak_components[w];
  std::vector<std::vector<std::vector<int>>> sources_of(sa.components.size());
  for (int scc_id : sa.connectivity.source_sccs) {
    const std::vector<int>& members = sa.connectivity.sccs[scc_id];
    sources_of[wcomp_of[members[0]]].push_back(members);
  }
  for (std::size_t w = 0; w < sa.components.size(); ++w) {
    auto& comp = sa.components[w];
    auto& sources = sources_of[w];
    std::sort(sources.begin(), sources.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });
    for (const auto& scc : sources) {
      comp.source_nodes.insert(comp.source_nodes.end(), scc.begin(), scc.end());
      if (sa.node_balance[scc[0]]) comp.balanced_source_sccs.push_back(scc);
    }
    std::sort(comp.source_nodes.begin(), comp.source_nodes.end());
    comp.quasi_strongly_connected = sources.size() == 1;
    if (comp.quasi_strongly_connected) {
      if (sources[0].size() == 1)
        comp.condition = RootCondition::C1;
      else
        comp.condition = sa.node_balance[sources[0][0]] ? RootCondition::C2 : RootCondition::C3;
    }
    sa.null_dim += static_cast<int>(comp.balanced_source_sccs.size());
  }
  return sa;
}

}  // namespace detail

std::vector<double> terminal_state(const SignedDigraph& g, const std::vector<double>& x0) {
  return terminal_state_t<double>(g, x0);
}

namespace {

bool all_unit_entries(const std::vector<double>& xi, const std::vector<int>& nodes) {
  for (int v : nodes)
    if (std::abs(std::abs(xi[v]) - 1.0) > kUnitEntryTol) return false;
  return true;
}

}  // namespace

BehaviorReport classify(const SignedDigraph& g) {
  const detail::StructureAnalysis sa = detail::analyze_structure(g);
  BehaviorReport rep;
  rep.node_balance = sa.node_balance;
  rep.leaders = sa.connectivity.leaders;
  rep.gauge_conflict = sa.gauge_conflict;

  // Combined constructed null vector (double view) for the |xi| = 1 tests.
  std::vector<double> xi(g.n(), 0.0);
  for (const auto& comp : sa.components) {
    const detail::ComponentBasis<double> basis = detail::component_basis<double>(g, sa, comp);
    for (const auto& xi_k : basis.xi)
      for (int v = 0; v < g.n(); ++v) xi[v] += xi_k[v];

    ComponentReport cr;
    cr.nodes = comp.nodes;
    cr.source_nodes = comp.source_nodes;
    cr.quasi_strongly_connected = comp.quasi_strongly_connected;
    cr.condition = comp.condition;
    cr.null_dim = static_cast<int>(comp.balanced_source_sccs.size());
    if (comp.quasi_strongly_connected) {
      if (cr.null_dim == 0)
        cr.behavior = Behavior::state_stability;
      else
        cr.behavior = all_unit_entries(xi, comp.nodes) ? Behavior::bipartite_consensus
                                                       : Behavior::interval_bipartite_consensus;
    } else {
      cr.behavior = cr.null_dim > 0 ? Behavior::bipartite_containment_tracking
                                    : Behavior::state_stability;
    }
    rep.components.push_back(std::move(cr));
  }

  if (sa.connectivity.is_quasi_strongly_connected) {
    const int rank = matrix_rank(laplacian_matrix<double>(g));
    if (rank == g.n()) {
      rep.behavior = Behavior::state_stability;
    } else {
      const bool bipartite = all_unit_entries(xi, sa.components[0].nodes);
      rep.behavior =
          bipartite ? Behavior::bipartite_consensus : Behavior::interval_bipartite_consensus;
      rep.strict_interval =
          !bipartite &&
          std::any_of(sa.node_balance.begin(), sa.node_balance.end(), [](bool b) { return !b; });
    }
  } else {
    const bool any_balanced =
        std::any_of(sa.node_balance.begin(), sa.node_balance.end(), [](bool b) { return b; });
    rep.behavior =
        any_balanced ? Behavior::bipartite_containment_tracking : Behavior::state_stability;
  }
  return rep;
}

BehaviorReport predict(const SignedDigraph& g, const std::vector<double>& x0) {
  BehaviorReport rep = classify(g);
  rep.theta = terminal_state(g, x0);
  for (int l : rep.leaders) {
    const double m = std::abs((*rep.theta)[l]);
    rep.leader_intervals.push_back({-m, m});
  }
  return rep;
}

namespace {

std::string list_nodes(const std::vector<int>& nodes) {
  std::ostringstream out;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i) out << ", ";
    out << "v" << (nodes[i] + 1);
  }
  return out.str();
}

}  // namespace

VerificationResult verify_report(const BehaviorReport& rep, const std::vector<double>& observed,
                                 double tol) {
  if (static_cast<int>(observed.size()) != static_cast<int>(rep.node_balance.size()))
    throw std::invalid_argument("observed state length mismatch");
  VerificationResult result;
  auto add_check = [&](const std::string& name, const std::vector<int>& offenders,
                       const std::string& what) {
    VerificationCheck check;
    check.name = name;
    check.pass = offenders.empty();
    check.detail = offenders.empty() ? "ok" : what + ": " + list_nodes(offenders);
    result.checks.push_back(std::move(check));
  };

  std::vector<int> offenders;
  switch (rep.behavior) {
    case Behavior::bipartite_consensus: {
      double modulus = 0.0;
      for (double v : observed) modulus = std::max(modulus, std::abs(v));
      for (std::size_t i = 0; i < observed.size(); ++i)
        if (std::abs(std::abs(observed[i]) - modulus) > tol)
          offenders.push_back(static_cast<int>(i));
      add_check("common_modulus", offenders, "moduli differ");
      break;
    }
    case Behavior::interval_bipartite_consensus: {
      double modulus = 0.0;
      for (int l : rep.leaders) modulus = std::max(modulus, std::abs(observed[l]));
      for (int l : rep.leaders)
        if (std::abs(std::abs(observed[l]) - modulus) > tol) offenders.push_back(l);
      add_check("root_modulus", offenders, "root moduli differ");
      offenders.clear();
      for (std::size_t i = 0; i < observed.size(); ++i)
        if (std::abs(observed[i]) > modulus + tol) offenders.push_back(static_cast<int>(i));
      add_check("interval_bound", offenders, "outside the root interval");
      break;
    }
    case Behavior::bipartite_containment_tracking: {
      double hull = 0.0;
      for (int l : rep.leaders) hull = std::max(hull, std::abs(observed[l]));
      for (std::size_t i = 0; i < observed.size(); ++i)
        if (std::abs(observed[i]) > hull + tol) offenders.push_back(static_cast<int>(i));
      add_check("containment_bound", offenders, "outside the leader interval hull");
      break;
    }
    case Behavior::state_stability: {
      for (std::size_t i = 0; i < observed.size(); ++i)
        if (std::abs(observed[i]) > tol) offenders.push_back(static_cast<int>(i));
      add_check("decay_to_zero", offenders, "did not decay to zero");
      break;
    }
  }

  if (rep.theta) {
    offenders.clear();
    for (std::size_t i = 0; i < observed.size(); ++i)
      if (std::abs(observed[i] - (*rep.theta)[i]) > tol) offenders.push_back(static_cast<int>(i));
    add_check("prediction_match", offenders, "terminal state differs from prediction");
  }

  result.pass = std::all_of(result.checks.begin(), result.checks.end(),
                            [](const VerificationCheck& c) { return c.pass; });
  return result;
}

}  // namespace signet
