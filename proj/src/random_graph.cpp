#include "signet/random_graph.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

namespace signet {

SignedDigraph random_graph(const RandomGraphOptions& opts) {
  if (opts.n < 1) throw std::invalid_argument("random_graph: n must be positive");
  if (opts.density < 0.0 || opts.density > 1.0)
    throw std::invalid_argument("random_graph: density must lie in [0, 1]");
  if (opts.neg_fraction < 0.0 || opts.neg_fraction > 1.0)
    throw std::invalid_argument("random_graph: neg_fraction must lie in [0, 1]");

  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> sixteenth(8, 40);  // magnitude k/16 in [0.5, 2.5]

  const int n = opts.n;
  auto draw_weight = [&]() {
    double w = sixteenth(rng) / 16.0;
    if (coin(rng) < opts.neg_fraction) w = -w;
    return w;
  };

  // present[i][j] marks an edge j -> i (weight at row i, column j).
  std::vector<std::vector<double>> weight(n, std::vector<double>(n, 0.0));
  if (opts.spanning_tree && n > 1) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin() + 1, order.end(), rng);
    for (int k = 1; k < n; ++k) {
      std::uniform_int_distribution<int> pick(0, k - 1);
      const int parent = order[pick(rng)];
      weight[order[k]][parent] = draw_weight();
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const bool keep = coin(rng) < opts.density;
      const double w = draw_weight();  // always consume randomness, for stable streams
      if (keep && weight[i][j] == 0.0) weight[i][j] = w;
    }

  std::vector<Edge> edges;
  if (opts.balanced) {
    std::vector<int> sigma(n);
    for (int& s : sigma) s = coin(rng) < 0.5 ? 1 : -1;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (weight[i][j] != 0.0)
          edges.push_back({j, i, sigma[i] * sigma[j] * std::abs(weight[i][j]), std::nullopt});
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (weight[i][j] != 0.0) edges.push_back({j, i, weight[i][j], std::nullopt});
  }
  return SignedDigraph(n, edges);
}

}  // namespace signet
