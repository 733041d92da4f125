#include <doctest.h>

#include <stdexcept>

#include "golden.hpp"
#include "helpers.hpp"
#include "signet/errors.hpp"
#include "signet/graph.hpp"
#include "signet/rational.hpp"
#include "signet/spectral.hpp"

using namespace signet;
using testutil::graph_of;

TEST_CASE("construction rejects malformed graphs") {
  CHECK_THROWS_AS(SignedDigraph(0), std::invalid_argument);
  CHECK_THROWS_AS(graph_of(2, {{0, 0, 1.0}}), std::invalid_argument);   // self-loop
  CHECK_THROWS_AS(graph_of(2, {{0, 2, 1.0}}), std::invalid_argument);   // out of range
  CHECK_THROWS_AS(graph_of(2, {{0, 1, 0.0}}), std::invalid_argument);   // zero weight
  CHECK_THROWS_AS(graph_of(2, {{0, 1, 1.0}, {0, 1, 2.0}}), std::invalid_argument);  // duplicate
  CHECK_THROWS_AS(SignedDigraph(2, {{0, 1, 1.0, Rational(-1)}}), std::invalid_argument);
  CHECK_THROWS_AS(SignedDigraph(2, {}, {"only-one-label"}), std::invalid_argument);
}

TEST_CASE("weights and neighborhoods") {
  const SignedDigraph g = graph_of(3, {{0, 1, 2.0}, {2, 1, -0.5}, {1, 2, 1.0}});
  CHECK(g.n() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.weight(1, 0) == 2.0);
  CHECK(g.weight(1, 2) == -0.5);
  CHECK(g.weight(0, 1) == 0.0);
  CHECK(g.has_edge(0, 1));
  CHECK_FALSE(g.has_edge(1, 0));
  CHECK(g.in_neighbors(1) == std::vector<int>{0, 2});
  CHECK(g.out_neighbors(1) == std::vector<int>{2});
  CHECK(g.edges().size() == 3);
  CHECK(g.edges()[0].src == 0);
  CHECK_THROWS_AS(g.weight(3, 0), std::out_of_range);
}

TEST_CASE("edge list parsing") {
  const SignedDigraph g = from_edge_list("# comment\nn 4\n1 2 1.5 # trailing\n3 2 -1\n");
  CHECK(g.n() == 4);
  CHECK(g.weight(1, 0) == 1.5);
  CHECK(g.weight(1, 2) == -1.0);

  // Without a header the node count is the largest mentioned index.
  CHECK(from_edge_list("1 2 1\n2 5 1\n").n() == 5);
  // Header-only graphs have no edges.
  CHECK(from_edge_list("n 3\n").edge_count() == 0);

  CHECK_THROWS_AS(from_edge_list(""), parse_error);
  CHECK_THROWS_AS(from_edge_list("n x\n"), parse_error);
  CHECK_THROWS_AS(from_edge_list("n 2\n1 2 1\nn 3\n"), parse_error);     // late header
  CHECK_THROWS_AS(from_edge_list("n 2\n1 3 1\n"), parse_error);          // exceeds header
  CHECK_THROWS_AS(from_edge_list("1 2\n"), parse_error);                  // missing weight
  CHECK_THROWS_AS(from_edge_list("0 2 1\n"), parse_error);                // 0-based index
  CHECK_THROWS_AS(from_edge_list("1 1 1\n"), parse_error);                // self-loop
  CHECK_THROWS_AS(from_edge_list("1 2 abc\n"), parse_error);              // bad weight
  CHECK_THROWS_AS(from_edge_list("1 2 0\n"), parse_error);                // zero weight
  CHECK_THROWS_AS(from_edge_list("1 2 1\n1 2 2\n"), parse_error);         // duplicate

  // Errors carry the offending line number.
  try {
    from_edge_list("n 3\n1 2 1\n1 3 oops\n");
    CHECK(false);
  } catch (const parse_error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("exact weight views") {
  const SignedDigraph g = from_edge_list("1 2 0.1\n1 3 1.5\n2 3 1/3\n3 4 2e-3\n");
  CHECK(g.weight_exact(1, 0) == Rational(1, 10));
  CHECK(g.weight(1, 0) == 0.1);  // double view keeps the rounded literal
  CHECK(g.weight_exact(2, 0) == Rational(3, 2));
  CHECK(g.weight_exact(2, 1) == Rational(1, 3));
  CHECK(g.weight(2, 1) == to_double(Rational(1, 3)));
  CHECK(g.weight_exact(3, 2) == Rational(1, 500));

  CHECK(parse_exact_weight("3/6") == Rational(1, 2));
  CHECK(parse_exact_weight("-2.50") == Rational(-5, 2));
  CHECK(parse_exact_weight("1e2") == Rational(100));
  CHECK_FALSE(parse_exact_weight(""));
  CHECK_FALSE(parse_exact_weight("/2"));
  CHECK_FALSE(parse_exact_weight("1/"));
  CHECK_FALSE(parse_exact_weight("1/0"));
  CHECK_FALSE(parse_exact_weight("1.2.3"));
  CHECK_FALSE(parse_exact_weight("nan"));

  CHECK(rational_of(0.5) == Rational(1, 2));
  CHECK(rational_of(-1.25) == Rational(-5, 4));
  CHECK(rational_repr(Rational(-3, 16)) == "-3/16");
  CHECK(rational_repr(Rational(7)) == "7");
}

TEST_CASE("edge list round-trips both views") {
  const std::string text = "n 5\n1 2 0.1\n2 3 -1.5\n3 4 1/3\n4 5 2\n";
  const SignedDigraph g = from_edge_list(text);
  const std::string out = to_edge_list(g);
  const SignedDigraph g2 = from_edge_list(out);
  CHECK(to_edge_list(g2) == out);
  for (int i = 0; i < g.n(); ++i)
    for (int j = 0; j < g.n(); ++j) {
      CHECK(g.weight(i, j) == g2.weight(i, j));
      CHECK(g.weight_exact(i, j) == g2.weight_exact(i, j));
    }
}

TEST_CASE("weight representation picks the shortest faithful form") {
  CHECK(weight_repr(0.1, Rational(1, 10)) == "0.1");
  CHECK(weight_repr(1.5, Rational(3, 2)) == "1.5");
  CHECK(weight_repr(to_double(Rational(1, 3)), Rational(1, 3)) == "1/3");
  CHECK(weight_repr(2.0, Rational(2)) == "2");
  // Exact binary value of 0.3 is not the decimal 0.3; the expansion is used.
  const Rational q03 = rational_of(0.3);
  const std::string repr = weight_repr(0.3, q03);
  CHECK(repr != "0.3");
  CHECK(parse_exact_weight(repr) == q03);
}

TEST_CASE("unsigned view, conjugation and induced subgraphs") {
  const SignedDigraph g = graph_of(3, {{0, 1, -2.0}, {1, 2, 1.5}, {2, 0, -1.0}});
  const SignedDigraph u = induced_unsigned(g);
  CHECK(u.weight(1, 0) == 2.0);
  CHECK(u.weight_exact(1, 0) == Rational(2));

  const SignedDigraph c = conjugated(g, {1, -1, 1});
  CHECK(c.weight(1, 0) == 2.0);
  CHECK(c.weight(2, 1) == -1.5);
  CHECK(c.weight(0, 2) == -1.0);
  // Conjugating twice restores the graph.
  const SignedDigraph cc = conjugated(c, {1, -1, 1});
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(cc.weight(i, j) == g.weight(i, j));
  CHECK_THROWS_AS(conjugated(g, {1, -1}), std::invalid_argument);
  CHECK_THROWS_AS(conjugated(g, {1, 0, 1}), std::invalid_argument);

  const Subgraph sub = induced_subgraph(g, {2, 0});
  CHECK(sub.nodes == std::vector<int>{0, 2});
  CHECK(sub.graph.n() == 2);
  CHECK(sub.graph.weight(0, 1) == -1.0);  // 2 -> 0 survives
  CHECK(sub.graph.weight(1, 0) == 0.0);   // 0 -> 1 leaves the set
  CHECK_THROWS_AS(induced_subgraph(g, {}), std::invalid_argument);
  CHECK_THROWS_AS(induced_subgraph(g, {3}), std::out_of_range);
}

TEST_CASE("laplacian entries and row identities") {
  const SignedDigraph g = graph_of(3, {{0, 1, -2.0}, {2, 1, 1.0}, {1, 2, 1.5}});
  const Matrix<double> lap = laplacian_matrix<double>(g);
  CHECK(lap(1, 1) == 3.0);  // |-2| + |1|
  CHECK(lap(1, 0) == 2.0);  // -(-2)
  CHECK(lap(1, 2) == -1.0);
  CHECK(lap(2, 1) == -1.5);
  CHECK(lap(0, 0) == 0.0);

  // For all-positive weights every row of L sums to zero.
  const SignedDigraph p = graph_of(3, {{0, 1, 2.0}, {1, 2, 1.0}, {2, 0, 0.5}});
  const Matrix<double> lp = laplacian_matrix<double>(p);
  for (int i = 0; i < 3; ++i) CHECK(lp(i, 0) + lp(i, 1) + lp(i, 2) == 0.0);

  const Matrix<Rational> lq = laplacian_matrix<Rational>(g);
  CHECK(lq(1, 1) == Rational(3));
  CHECK(lq(2, 1) == Rational(-3, 2));
}

TEST_CASE("root-ordered block split") {
  const SignedDigraph g = testutil::golden13();
  const std::vector<int> roots = {0, 3, 4, 5, 9};
  const BlockSplit<double> bs = block_split<double>(g, roots);
  CHECK(bs.root_count == 5);
  CHECK(bs.order.size() == 13);
  CHECK(bs.order[0] == 0);
  CHECK(bs.order[4] == 9);
  CHECK(bs.order[5] == 1);

  // Reassembled blocks equal the permuted Laplacian.
  const Matrix<double> lap = laplacian_matrix<double>(g);
  const Matrix<double> perm = bs.permuted_laplacian();
  for (int i = 0; i < 13; ++i)
    for (int j = 0; j < 13; ++j) CHECK(perm(i, j) == lap(bs.order[i], bs.order[j]));

  // Any closed node set is a legal root block; {0, 4, 5} is the closed
  // source cycle of this graph, so it splits cleanly on its own.
  CHECK(block_split<double>(g, {0, 4, 5}).root_count == 3);
  // A set that some outside node influences is rejected: node 0 listens to 4.
  CHECK_THROWS_AS(block_split<double>(g, {0}), std::invalid_argument);
  CHECK_THROWS_AS(block_split<double>(g, {}), std::invalid_argument);
  CHECK_THROWS_AS(block_split<double>(g, {0, 0}), std::invalid_argument);

  const LaplacianView view = root_ordered_blocks(g, roots);
  CHECK(view.blocks.has_value());
  CHECK(view.matrix == perm);
  CHECK(laplacian(g).matrix == lap);
}
