#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "signet/balance.hpp"
#include "signet/connectivity.hpp"
#include "signet/errors.hpp"
#include "signet/sim.hpp"
#include "signet/spectral.hpp"

namespace signet {

// |xi_i| = 1 test tolerance in double mode (rational mode compares exactly).
inline constexpr double kUnitEntryTol = 1e-9;

enum class Behavior {
  bipartite_consensus,
  interval_bipartite_consensus,
  bipartite_containment_tracking,
  state_stability,
};

const char* to_string(Behavior b);

namespace detail {

// Sign-level structure shared by every analysis mode: connectivity, per-node
// balance, and the containment gauge (+-1 on structurally balanced nodes,
// 0 on unbalanced ones).
//
// Sign convention of the gauge: within each weak component of the subgraph
// induced on balanced nodes, sigma is fixed to +1 at the smallest member of
// the source SCC with the largest smallest-member, then propagated through
// the parity constraints. For a quasi-strongly connected graph this is the
// usual anchor (+1 at the smallest root). `gauge_conflict` reports a parity
// conflict between balanced nodes' constraints (possible only on graphs that
// are not quasi-strongly connected); the first-come color then stands, which
// affects the printed representative but never classification or terminal
// states.
struct StructureAnalysis {
  ConnectivityReport connectivity;
  std::vector<bool> node_balance;
  std::vector<int> sigma;
  bool gauge_conflict = false;

  struct Component {
    std::vector<int> nodes;         // ascending original ids
    std::vector<int> source_nodes;  // ascending original ids
    std::vector<std::vector<int>> balanced_source_sccs;
    bool quasi_strongly_connected = false;
    std::optional<RootCondition> condition;  // set when quasi-strongly connected
  };
  std::vector<Component> components;
  int null_dim = 0;  // total number of balanced source SCCs
};

StructureAnalysis analyze_structure(const SignedDigraph& g);

// Null-space basis of one weak component: one (xi_k, eta_k) pair per balanced
// source SCC, in full-graph coordinates (zero outside their support).
template <typename T>
struct ComponentBasis {
  std::vector<std::vector<T>> xi;
  std::vector<std::vector<T>> eta;
};

template <typename T>
ComponentBasis<T> component_basis(const SignedDigraph& g, const StructureAnalysis& sa,
                                  const StructureAnalysis::Component& comp) {
  ComponentBasis<T> basis;
  if (comp.balanced_source_sccs.empty()) return basis;
  const Subgraph sub = induced_subgraph(g, comp.nodes);
  std::vector<int> local_of(g.n(), -1);
  for (std::size_t k = 0; k < sub.nodes.size(); ++k) local_of[sub.nodes[k]] = static_cast<int>(k);
  std::vector<int> local_sources;
  for (int v : comp.source_nodes) local_sources.push_back(local_of[v]);
  const BlockSplit<T> bs = block_split<T>(sub.graph, local_sources);

  for (const std::vector<int>& scc : comp.balanced_source_sccs) {
    std::vector<char> in_scc(g.n(), 0);
    for (int v : scc) in_scc[v] = 1;
    // Boundary: the gauge on this SCC, zero on the other sources.
    std::vector<T> boundary(comp.source_nodes.size(), T(0));
    for (std::size_t i = 0; i < comp.source_nodes.size(); ++i)
      if (in_scc[comp.source_nodes[i]]) boundary[i] = T(sa.sigma[comp.source_nodes[i]]);
    const std::vector<T> local_xi = extend_from_roots(bs, boundary);
    std::vector<T> xi(g.n(), T(0));
    for (std::size_t k = 0; k < sub.nodes.size(); ++k) xi[sub.nodes[k]] = local_xi[k];
    basis.xi.push_back(std::move(xi));

    // Left vector: signed cofactors of the SCC's own Laplacian block.
    const Subgraph scc_sub = induced_subgraph(g, scc);
    const Matrix<T> scc_lap = laplacian_matrix<T>(scc_sub.graph);
    std::vector<T> eta(g.n(), T(0));
    for (std::size_t i = 0; i < scc_sub.nodes.size(); ++i) {
      const int v = scc_sub.nodes[i];
      eta[v] = T(sa.sigma[v]) * determinant(scc_lap.minor_removed(i, i));
    }
    basis.eta.push_back(std::move(eta));
  }
  return basis;
}

}  // namespace detail

// Constructed null-space certificate for an arbitrary signed digraph:
// quasi-strongly connected graphs use the root-block construction directly;
// otherwise the constructor runs per weak component / per source SCC and the
// per-SCC vectors are combined under the documented sign convention. Throws
// numerical_error when L has no zero eigenvalue.
template <typename T>
Certificate<T> null_certificate(const SignedDigraph& g) {
  const detail::StructureAnalysis sa = detail::analyze_structure(g);
  if (sa.null_dim == 0) throw numerical_error("no zero eigenvalue (condition C3)");
  Certificate<T> cert;
  cert.orchestrated = !sa.connectivity.is_quasi_strongly_connected;
  if (sa.connectivity.is_quasi_strongly_connected) cert.condition = sa.components[0].condition;
  cert.xi.assign(g.n(), T(0));
  cert.eta.assign(g.n(), T(0));
  for (const auto& comp : sa.components) {
    const detail::ComponentBasis<T> basis = detail::component_basis<T>(g, sa, comp);
    for (const auto& xi_k : basis.xi)
      for (int v = 0; v < g.n(); ++v) cert.xi[v] += xi_k[v];
    for (const auto& eta_k : basis.eta)
      for (int v = 0; v < g.n(); ++v) cert.eta[v] += eta_k[v];
  }
  const Matrix<T> lap = laplacian_matrix<T>(g);
  cert.det_L = determinant(lap);
  cert.inner = dot(cert.eta, cert.xi);
  cert.residual_right = inf_norm(mat_vec(lap, cert.xi));
  cert.residual_left = inf_norm(vec_mat(cert.eta, lap));
  return cert;
}

// Predicted limit of dx/dt = -L x: the spectral projection of x0 onto the
// null space along the range, assembled per weak component. Components whose
// Laplacian block is nonsingular decay to zero. Falls back to a long-horizon
// simulation (double mode only) if the projection system is singular at the
// pivot threshold.
template <typename T>
std::vector<T> terminal_state_t(const SignedDigraph& g, const std::vector<T>& x0) {
  if (static_cast<int>(x0.size()) != g.n())
    throw std::invalid_argument("initial state length must match node count");
  const detail::StructureAnalysis sa = detail::analyze_structure(g);
  std::vector<T> theta(g.n(), T(0));
  for (const auto& comp : sa.components) {
    const std::size_t d = comp.balanced_source_sccs.size();
    if (d == 0) continue;  // all eigenvalues of this block have positive real parts
    const detail::ComponentBasis<T> basis = detail::component_basis<T>(g, sa, comp);
    Matrix<T> gram(d, d);  // H^T Xi
    std::vector<T> rhs(d, T(0));
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = 0; b < d; ++b) gram(a, b) = dot(basis.eta[a], basis.xi[b]);
      rhs[a] = dot(basis.eta[a], x0);
    }
    try {
      const std::vector<T> coef = solve_linear(gram, rhs);
      for (std::size_t b = 0; b < d; ++b)
        for (int v : comp.nodes) theta[v] += coef[b] * basis.xi[b][v];
    } catch (const numerical_error&) {
      if constexpr (scalar_traits<T>::exact) {
        throw;
      } else {
        // Long-horizon fallback on the component alone.
        const Subgraph sub = induced_subgraph(g, comp.nodes);
        std::vector<double> sub_x0;
        for (int v : sub.nodes) sub_x0.push_back(x0[v]);
        SimOptions opts;
        const Matrix<double> lap = laplacian_matrix<double>(sub.graph);
        double max_diag = 0.0;
        for (int i = 0; i < sub.graph.n(); ++i) max_diag = std::max(max_diag, lap(i, i));
        if (max_diag > 0.0) opts.dt = std::min(opts.dt, 0.5 / max_diag);
        opts.t_end = 2000.0;
        opts.conv_tol = 1e-12;
        const Trajectory traj = simulate(sub.graph, sub_x0, opts);
        for (std::size_t k = 0; k < sub.nodes.size(); ++k)
          theta[sub.nodes[k]] = traj.final_state[k];
      }
    }
  }
  return theta;
}

std::vector<double> terminal_state(const SignedDigraph& g, const std::vector<double>& x0);

struct ComponentReport {
  std::vector<int> nodes;
  std::vector<int> source_nodes;
  bool quasi_strongly_connected = false;
  std::optional<RootCondition> condition;
  Behavior behavior = Behavior::state_stability;
  int null_dim = 0;
};

struct BehaviorReport {
  Behavior behavior = Behavior::state_stability;
  bool strict_interval = false;  // interval consensus that is provably not bipartite
  std::vector<bool> node_balance;
  std::vector<int> leaders;
  std::vector<ComponentReport> components;
  bool gauge_conflict = false;
  std::optional<std::vector<double>> theta;
  std::vector<std::array<double, 2>> leader_intervals;  // parallel to `leaders`
};

// Behavior classification from structure alone (no initial state): rank-based
// dichotomy on quasi-strongly connected graphs, balanced-node dichotomy
// otherwise.
BehaviorReport classify(const SignedDigraph& g);

// classify + terminal-state prediction + leader intervals.
BehaviorReport predict(const SignedDigraph& g, const std::vector<double>& x0);

struct VerificationCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerificationResult {
  bool pass = false;
  std::vector<VerificationCheck> checks;
};

// Checks the defining condition of the classified behavior against an
// observed terminal state, and the point prediction when the report has one.
VerificationResult verify_report(const BehaviorReport& rep, const std::vector<double>& observed,
                                 double tol);

}  // namespace signet
