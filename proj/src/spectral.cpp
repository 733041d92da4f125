#include "signet/spectral.hpp"

namespace signet {

namespace detail {

std::vector<int> root_gauge_or_throw(const SignedDigraph& g, const std::vector<int>& roots) {
  const Subgraph sub = induced_subgraph(g, roots);
  const BalanceVerdict verdict = gauge_partition(sub.graph);
  if (!verdict.balanced) throw numerical_error("no zero eigenvalue (condition C3)");
  return verdict.gauge->sigma;
}

namespace {

const RootBlocks& checked_blocks(const LaplacianView& view, const GaugeVector& gauge) {
  if (!view.blocks)
    throw std::invalid_argument("Laplacian view has no root-ordered block structure");
  const RootBlocks& bs = *view.blocks;
  const std::size_t m = static_cast<std::size_t>(bs.root_count);
  if (gauge.sigma.size() != m) throw std::invalid_argument("gauge length mismatch");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      const double w = -bs.root_lap(i, j);
      if (w == 0.0) continue;
      const int s = w > 0 ? 1 : -1;
      if (gauge.sigma[i] * gauge.sigma[j] != s)
        throw std::invalid_argument("gauge does not certify the root subgraph");
    }
  return bs;
}

}  // namespace

}  // namespace detail

std::vector<double> right_eigenvector(const SignedDigraph& g, const LaplacianView& view,
                                      const GaugeVector& root_gauge) {
  (void)g;
  return right_null_vector<double>(detail::checked_blocks(view, root_gauge), root_gauge.sigma);
}

std::vector<double> left_eigenvector(const SignedDigraph& g, const LaplacianView& view,
                                     const GaugeVector& root_gauge) {
  (void)g;
  return left_null_vector<double>(detail::checked_blocks(view, root_gauge), root_gauge.sigma);
}

}  // namespace signet
