#pragma once

#include <optional>
#include <string>
#include <vector>

#include "signet/matrix.hpp"
#include "signet/rational.hpp"

namespace signet {

// One weighted directed edge: `src` influences `dst` with signed weight
// w(dst, src). Node indices are 0-based in the API; file formats are 1-based.
// `exact` carries the exact rational value of the weight when the edge came
// from a text literal; when absent, the exact view is the binary value of
// `weight`.
struct Edge {
  int src = 0;
  int dst = 0;
  double weight = 0.0;
  std::optional<Rational> exact;
};

// Immutable signed digraph without self-loops. w(i, j) is the weight with
// which node j influences node i (zero = no edge).
class SignedDigraph {
 public:
  explicit SignedDigraph(int n);
  SignedDigraph(int n, const std::vector<Edge>& edges, std::vector<std::string> labels = {});

  int n() const { return n_; }
  int edge_count() const { return edge_count_; }

  double weight(int i, int j) const;
  const Rational& weight_exact(int i, int j) const;
  bool has_edge(int src, int dst) const { return weight(dst, src) != 0.0; }

  const std::vector<std::string>& labels() const { return labels_; }

  // Edges in ascending (src, dst) order.
  std::vector<Edge> edges() const;
  // Nodes j with w(i, j) != 0 (the nodes i listens to), ascending.
  std::vector<int> in_neighbors(int i) const;
  // Nodes i with w(i, j) != 0 (the nodes j influences), ascending.
  std::vector<int> out_neighbors(int j) const;

 private:
  void check_node(int i) const;

  int n_ = 0;
  int edge_count_ = 0;
  std::vector<double> wd_;
  std::vector<Rational> wq_;
  std::vector<std::string> labels_;
};

// Parses the edge-list text format: '#' starts a comment, an optional
// "n <count>" header fixes the node count, data lines are
// "<src> <dst> <weight>" with 1-based indices. Rejects self-loops, duplicate
// edges, zero weights and malformed fields.
SignedDigraph from_edge_list(const std::string& text);

// Serializes to the same format; round-trips bit-exactly (both weight views).
std::string to_edge_list(const SignedDigraph& g);

// Same topology with |w| on every edge.
SignedDigraph induced_unsigned(const SignedDigraph& g);

// Gauge transform: weights become sigma[i] * w(i, j) * sigma[j].
// sigma must hold +1/-1 per node.
SignedDigraph conjugated(const SignedDigraph& g, const std::vector<int>& sigma);

struct Subgraph {
  SignedDigraph graph;
  std::vector<int> nodes;  // nodes[k] = original index of subgraph node k
};

// Induced subgraph on the given original-node set (deduplicated, sorted).
Subgraph induced_subgraph(const SignedDigraph& g, const std::vector<int>& nodes);

template <typename T>
inline T weight_as(const SignedDigraph& g, int i, int j);
template <>
inline double weight_as<double>(const SignedDigraph& g, int i, int j) {
  return g.weight(i, j);
}
template <>
inline Rational weight_as<Rational>(const SignedDigraph& g, int i, int j) {
  return g.weight_exact(i, j);
}

template <typename T>
T abs_value(const T& x) {
  return x < T(0) ? T(-x) : x;
}

// Signed Laplacian: l_ii = sum_j |w(i,j)|, l_ij = -w(i,j) for i != j.
template <typename T>
Matrix<T> laplacian_matrix(const SignedDigraph& g) {
  const int n = g.n();
  Matrix<T> lap(n, n);
  for (int i = 0; i < n; ++i) {
    T diag(0);
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      T w = weight_as<T>(g, i, j);
      diag += abs_value(w);
      lap(i, j) = -w;
    }
    lap(i, i) = diag;
  }
  return lap;
}

// Root-ordered block decomposition of the Laplacian. With nodes permuted so
// the `m` roots come first, the Laplacian takes the form
//   [ root_lap              0                          ]
//   [ -coupling             follower_lap + diag(gain)  ]
// where root_lap is the induced root-subgraph Laplacian, coupling(i, j) is the
// weight from root j into follower i, follower_lap is the induced follower
// Laplacian and gain_i is the total |weight| entering follower i from roots.
template <typename T>
struct BlockSplit {
  std::vector<int> order;  // permutation: roots ascending, then followers ascending
  int root_count = 0;
  Matrix<T> root_lap;
  Matrix<T> coupling;
  Matrix<T> follower_lap;
  std::vector<T> input_gain;

  Matrix<T> follower_total() const {
    Matrix<T> m = follower_lap;
    for (std::size_t i = 0; i < input_gain.size(); ++i) m(i, i) += input_gain[i];
    return m;
  }

  // Reassembled permuted Laplacian (for the invariant P L P^T == blocks).
  Matrix<T> permuted_laplacian() const {
    const std::size_t m = static_cast<std::size_t>(root_count);
    const std::size_t k = input_gain.size();
    Matrix<T> lap(m + k, m + k);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) lap(i, j) = root_lap(i, j);
    Matrix<T> ft = follower_total();
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < m; ++j) lap(m + i, j) = -coupling(i, j);
      for (std::size_t j = 0; j < k; ++j) lap(m + i, m + j) = ft(i, j);
    }
    return lap;
  }
};

namespace detail {
// Validates a root set: nonempty, in range, unique, and no edge from a
// non-root into a root (otherwise the upper-right block would be nonzero).
std::vector<int> checked_root_order(const SignedDigraph& g, const std::vector<int>& roots);
}  // namespace detail

template <typename T>
BlockSplit<T> block_split(const SignedDigraph& g, const std::vector<int>& roots) {
  BlockSplit<T> bs;
  bs.order = detail::checked_root_order(g, roots);
  bs.root_count = static_cast<int>(roots.size());
  const int n = g.n();
  const int m = bs.root_count;
  const int k = n - m;
  bs.root_lap = Matrix<T>(m, m);
  bs.coupling = Matrix<T>(k, m);
  bs.follower_lap = Matrix<T>(k, k);
  bs.input_gain.assign(k, T(0));
  for (int i = 0; i < m; ++i) {
    T diag(0);
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      T w = weight_as<T>(g, bs.order[i], bs.order[j]);
      diag += abs_value(w);
      bs.root_lap(i, j) = -w;
    }
    bs.root_lap(i, i) = diag;
  }
  for (int i = 0; i < k; ++i) {
    const int oi = bs.order[m + i];
    T diag(0);
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      T w = weight_as<T>(g, oi, bs.order[m + j]);
      diag += abs_value(w);
      bs.follower_lap(i, j) = -w;
    }
    bs.follower_lap(i, i) = diag;
    T gain(0);
    for (int j = 0; j < m; ++j) {
      T w = weight_as<T>(g, oi, bs.order[j]);
      gain += abs_value(w);
      bs.coupling(i, j) = w;
    }
    bs.input_gain[i] = gain;
  }
  return bs;
}

using RootBlocks = BlockSplit<double>;

// Laplacian plus (optionally) its root-ordered block structure.
struct LaplacianView {
  Matrix<double> matrix;    // in `order` indexing
  std::vector<int> order;   // order[k] = original node index of row/col k
  std::optional<RootBlocks> blocks;
};

LaplacianView laplacian(const SignedDigraph& g);
LaplacianView root_ordered_blocks(const SignedDigraph& g, const std::vector<int>& roots);

}  // namespace signet
