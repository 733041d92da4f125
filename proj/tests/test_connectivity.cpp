#include <doctest.h>

#include <random>

#include "golden.hpp"
#include "helpers.hpp"
#include "signet/connectivity.hpp"

using namespace signet;
using testutil::graph_of;

TEST_CASE("sccs of a known digraph") {
  // 0 <-> 1 -> 2 <-> 3, plus 4 isolated.
  const SignedDigraph g =
      graph_of(5, {{0, 1, 1.0}, {1, 0, -1.0}, {1, 2, 1.0}, {2, 3, 1.0}, {3, 2, 1.0}});
  const ConnectivityReport rep = analyze_connectivity(g);
  REQUIRE(rep.sccs.size() == 3);
  CHECK(rep.sccs[rep.scc_of[0]] == std::vector<int>{0, 1});
  CHECK(rep.sccs[rep.scc_of[2]] == std::vector<int>{2, 3});
  CHECK(rep.sccs[rep.scc_of[4]] == std::vector<int>{4});
  // Condensation edges are topological: source id < target id.
  for (auto [a, b] : rep.condensation_edges) CHECK(a < b);
  CHECK(rep.weak_components.size() == 2);
  CHECK(rep.weak_components[0] == std::vector<int>{0, 1, 2, 3});
  CHECK(rep.weak_components[1] == std::vector<int>{4});
  CHECK_FALSE(rep.is_quasi_strongly_connected);  // two weak components
  CHECK(rep.leaders == std::vector<int>{0, 1, 4});
  CHECK(rep.followers == std::vector<int>{2, 3});
  CHECK(rep.roots.empty());
}

TEST_CASE("quasi-strong connectivity detection") {
  const SignedDigraph path = graph_of(3, {{0, 1, 1.0}, {1, 2, -1.0}});
  const ConnectivityReport prep = analyze_connectivity(path);
  CHECK(prep.is_quasi_strongly_connected);
  CHECK(prep.roots == std::vector<int>{0});
  CHECK(prep.source_sccs.size() == 1);

  const SignedDigraph cycle = graph_of(3, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 0, 1.0}});
  const ConnectivityReport crep = analyze_connectivity(cycle);
  CHECK(crep.is_quasi_strongly_connected);
  CHECK(crep.roots == std::vector<int>{0, 1, 2});
  CHECK(crep.followers.empty());

  // Two sources feeding one sink: connected but not quasi-strongly connected.
  const SignedDigraph vee = graph_of(3, {{0, 2, 1.0}, {1, 2, 1.0}});
  const ConnectivityReport vrep = analyze_connectivity(vee);
  CHECK_FALSE(vrep.is_quasi_strongly_connected);
  CHECK(vrep.weak_components.size() == 1);
  CHECK(vrep.leaders == std::vector<int>{0, 1});
  CHECK(vrep.roots.empty());

  // A single node with no edges is trivially quasi-strongly connected.
  const ConnectivityReport srep = analyze_connectivity(SignedDigraph(1));
  CHECK(srep.is_quasi_strongly_connected);
  CHECK(srep.roots == std::vector<int>{0});

  // No edges at all: every node is its own weak component and leader.
  const ConnectivityReport erep = analyze_connectivity(SignedDigraph(3));
  CHECK(erep.weak_components.size() == 3);
  CHECK(erep.leaders == std::vector<int>{0, 1, 2});
  CHECK_FALSE(erep.is_quasi_strongly_connected);
}

TEST_CASE("ancestor closures") {
  // Diamond: 0 -> 1, 0 -> 2, 1 -> 3, 2 -> 3.
  const SignedDigraph g = graph_of(4, {{0, 1, 1.0}, {0, 2, -1.0}, {1, 3, 1.0}, {2, 3, 1.0}});
  CHECK(ancestor_closure(g, 0) == std::vector<int>{0});
  CHECK(ancestor_closure(g, 1) == std::vector<int>{0, 1});
  CHECK(ancestor_closure(g, 3) == std::vector<int>{0, 1, 2, 3});

  const SignedDigraph g13 = testutil::golden13();
  CHECK(ancestor_closure(g13, 2) == std::vector<int>{0, 1, 2, 4, 5});
  CHECK(ancestor_closure(g13, 3) == std::vector<int>{3});
  CHECK(ancestor_closure(g13, 7) == std::vector<int>{3, 7, 8});
}

TEST_CASE("golden graph connectivity") {
  const ConnectivityReport rep = analyze_connectivity(testutil::golden13());
  REQUIRE(rep.source_sccs.size() == 3);
  CHECK(rep.sccs[rep.source_sccs[0]] == std::vector<int>{0, 4, 5});
  CHECK(rep.sccs[rep.source_sccs[1]] == std::vector<int>{3});
  CHECK(rep.sccs[rep.source_sccs[2]] == std::vector<int>{9});
  CHECK(rep.weak_components.size() == 1);
  CHECK_FALSE(rep.is_quasi_strongly_connected);
  CHECK(rep.leaders == testutil::golden13_leaders());
}

TEST_CASE("sccs agree with a reachability oracle") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    RandomGraphOptions opts;
    opts.n = 2 + static_cast<int>(rng() % 6);
    opts.density = 0.25;
    opts.seed = rng();
    const SignedDigraph g = random_graph(opts);
    const ConnectivityReport rep = analyze_connectivity(g);
    const auto reach = testutil::oracle_reachability(g);
    for (int u = 0; u < g.n(); ++u)
      for (int v = 0; v < g.n(); ++v) {
        const bool same = rep.scc_of[u] == rep.scc_of[v];
        CHECK(same == (reach[u][v] && reach[v][u]));
      }
    // Source SCCs are exactly those with no incoming condensation edge.
    std::vector<char> has_in(rep.sccs.size(), 0);
    for (auto [a, b] : rep.condensation_edges) has_in[b] = 1;
    for (std::size_t s = 0; s < rep.sccs.size(); ++s) {
      const bool is_source =
          std::find(rep.source_sccs.begin(), rep.source_sccs.end(), static_cast<int>(s)) !=
          rep.source_sccs.end();
      CHECK(is_source == !has_in[s]);
    }
  }
}
