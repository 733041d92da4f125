#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "signet/balance.hpp"
#include "signet/connectivity.hpp"
#include "signet/errors.hpp"
#include "signet/graph.hpp"
#include "signet/matrix.hpp"

namespace signet {

// Relative pivot threshold for double-mode zero decisions; rational mode
// always tests exact zero.
inline constexpr double kPivotTol = 1e-12;

template <typename T>
struct scalar_traits;
template <>
struct scalar_traits<double> {
  static constexpr bool exact = false;
};
template <>
struct scalar_traits<Rational> {
  static constexpr bool exact = true;
};

template <typename T>
T inf_norm(const Matrix<T>& m) {
  T best(0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    T row(0);
    for (std::size_t j = 0; j < m.cols(); ++j) row += abs_value(m(i, j));
    if (row > best) best = row;
  }
  return best;
}

template <typename T>
T inf_norm(const std::vector<T>& v) {
  T best(0);
  for (const T& x : v) {
    T a = abs_value(x);
    if (a > best) best = a;
  }
  return best;
}

namespace detail {

// Zero threshold for pivots: exact zero in rational mode, tol*|M|_inf*n for
// doubles.
template <typename T>
T pivot_threshold(const Matrix<T>& m, double tol) {
  if constexpr (scalar_traits<T>::exact) {
    (void)m;
    (void)tol;
    return T(0);
  } else {
    return tol * inf_norm(m) * static_cast<double>(std::max(m.rows(), m.cols()));
  }
}

}  // namespace detail

// Determinant by row elimination with partial (largest-magnitude) pivoting.
// The 0x0 determinant is 1. Never used for zero/nonzero decisions in double
// mode; rank is.
template <typename T>
T determinant(Matrix<T> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant requires a square matrix");
  const std::size_t n = m.rows();
  T det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t i = col + 1; i < n; ++i)
      if (abs_value(m(i, col)) > abs_value(m(piv, col))) piv = i;
    if (m(piv, col) == T(0)) return T(0);
    if (piv != col) {
      for (std::size_t j = col; j < n; ++j) std::swap(m(piv, j), m(col, j));
      det = -det;
    }
    const T p = m(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m(i, col) == T(0)) continue;
      const T f = m(i, col) / p;
      m(i, col) = T(0);
      for (std::size_t j = col + 1; j < n; ++j) m(i, j) -= f * m(col, j);
    }
    det *= p;
  }
  return det;
}

template <typename T>
struct Echelon {
  int rank = 0;
  std::vector<std::vector<T>> null_basis;  // ascending free-column order
};

// Independent null-space oracle: reduction to reduced row echelon form with a
// pivot threshold, free columns become basis vectors. This route shares no
// code with the Cramer eigenvector construction.
template <typename T>
Echelon<T> nullspace_basis(Matrix<T> m, double tol = kPivotTol) {
  const std::size_t rows = m.rows(), cols = m.cols();
  const T thr = detail::pivot_threshold(m, tol);
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t piv = row;
    for (std::size_t i = row + 1; i < rows; ++i)
      if (abs_value(m(i, col)) > abs_value(m(piv, col))) piv = i;
    if (!(abs_value(m(piv, col)) > thr)) continue;
    if (piv != row)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(piv, j), m(row, j));
    const T p = m(row, col);
    for (std::size_t j = 0; j < cols; ++j) m(row, j) /= p;
    m(row, col) = T(1);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || m(i, col) == T(0)) continue;
      const T f = m(i, col);
      for (std::size_t j = 0; j < cols; ++j) m(i, j) -= f * m(row, j);
      m(i, col) = T(0);
    }
    pivot_cols.push_back(col);
    ++row;
  }
  Echelon<T> out;
  out.rank = static_cast<int>(pivot_cols.size());
  std::vector<char> is_pivot(cols, 0);
  for (std::size_t c : pivot_cols) is_pivot[c] = 1;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(cols, T(0));
    v[f] = T(1);
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -m(r, f);
    out.null_basis.push_back(std::move(v));
  }
  return out;
}

template <typename T>
int matrix_rank(const Matrix<T>& m, double tol = kPivotTol) {
  return nullspace_basis(m, tol).rank;
}

// Gaussian elimination solve; throws numerical_error when the matrix is
// singular at the pivot threshold.
template <typename T>
std::vector<T> solve_linear(Matrix<T> a, std::vector<T> b, double tol = kPivotTol) {
  if (a.rows() != a.cols() || b.size() != a.rows())
    throw std::invalid_argument("solve_linear dimension mismatch");
  const std::size_t n = a.rows();
  const T thr = detail::pivot_threshold(a, tol);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t i = col + 1; i < n; ++i)
      if (abs_value(a(i, col)) > abs_value(a(piv, col))) piv = i;
    if (!(abs_value(a(piv, col)) > thr)) throw numerical_error("singular linear system");
    if (piv != col) {
      for (std::size_t j = col; j < n; ++j) std::swap(a(piv, j), a(col, j));
      std::swap(b[piv], b[col]);
    }
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a(i, col) == T(0)) continue;
      const T f = a(i, col) / a(col, col);
      a(i, col) = T(0);
      for (std::size_t j = col + 1; j < n; ++j) a(i, j) -= f * a(col, j);
      b[i] -= f * b[col];
    }
  }
  std::vector<T> x(n, T(0));
  for (std::size_t ii = n; ii-- > 0;) {
    T acc = b[ii];
    for (std::size_t j = ii + 1; j < n; ++j) acc -= a(ii, j) * x[j];
    x[ii] = acc / a(ii, ii);
  }
  return x;
}

// Extends prescribed root values to the followers: the follower block F =
// follower_lap + diag(gain) must satisfy F x_f = coupling * x_r, and each
// follower entry is obtained as -det(Phi_j)/det(F) where Phi_j is F with
// column j replaced by -coupling * x_r. Returns the full vector in original
// node order.
template <typename T>
std::vector<T> extend_from_roots(const BlockSplit<T>& bs, const std::vector<T>& root_values) {
  const std::size_t m = static_cast<std::size_t>(bs.root_count);
  const std::size_t k = bs.order.size() - m;
  if (root_values.size() != m) throw std::invalid_argument("root value count mismatch");
  std::vector<T> out(bs.order.size(), T(0));
  for (std::size_t i = 0; i < m; ++i) out[bs.order[i]] = root_values[i];
  if (k == 0) return out;
  const Matrix<T> f = bs.follower_total();
  const T den = determinant(f);
  bool singular;
  if constexpr (scalar_traits<T>::exact)
    singular = den == T(0);
  else
    singular = matrix_rank(f) < static_cast<int>(k);
  if (singular)
    throw numerical_error("singular follower block: followers are not uniquely determined");
  std::vector<T> e(k, T(0));
  for (std::size_t i = 0; i < k; ++i) {
    T acc(0);
    for (std::size_t j = 0; j < m; ++j) acc += bs.coupling(i, j) * root_values[j];
    e[i] = -acc;
  }
  for (std::size_t j = 0; j < k; ++j) {
    Matrix<T> phi = f;
    phi.set_col(j, e);
    out[bs.order[m + j]] = -(determinant(phi) / den);
  }
  return out;
}

namespace detail {

template <typename T>
std::vector<T> gauge_values(const std::vector<int>& sigma) {
  std::vector<T> v(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (sigma[i] != 1 && sigma[i] != -1)
      throw std::invalid_argument("gauge entries must be +1 or -1");
    v[i] = T(sigma[i]);
  }
  return v;
}

}  // namespace detail

// Right null vector of the Laplacian: gauge signs on the roots, Cramer
// extension on the followers. `sigma` is indexed like the root block (roots
// ascending).
template <typename T>
std::vector<T> right_null_vector(const BlockSplit<T>& bs, const std::vector<int>& sigma) {
  return extend_from_roots(bs, detail::gauge_values<T>(sigma));
}

// Left null vector: eta_i = sigma_i * det(root_lap with row/col i removed) on
// roots (the 0x0 determinant is 1), zero on followers. Returned in original
// node order.
template <typename T>
std::vector<T> left_null_vector(const BlockSplit<T>& bs, const std::vector<int>& sigma) {
  const std::size_t m = static_cast<std::size_t>(bs.root_count);
  if (sigma.size() != m) throw std::invalid_argument("gauge length mismatch");
  std::vector<T> out(bs.order.size(), T(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (sigma[i] != 1 && sigma[i] != -1)
      throw std::invalid_argument("gauge entries must be +1 or -1");
    out[bs.order[i]] = T(sigma[i]) * determinant(bs.root_lap.minor_removed(i, i));
  }
  return out;
}

// Null-space certificate: the constructed eigenvector pair plus the numbers a
// consumer needs to re-check it.
template <typename T>
struct Certificate {
  std::vector<T> xi, eta;
  T det_L{0};
  T inner{0};          // eta . xi
  T residual_right{0};  // |L xi|_inf
  T residual_left{0};   // |eta^T L|_inf
  std::optional<RootCondition> condition;  // set when quasi-strongly connected
  bool orchestrated = false;  // assembled per weak component / per source SCC
};

using SpectralCertificate = Certificate<double>;

namespace detail {

// Gauge of the root subgraph mapped to root-block order; throws
// numerical_error when the root subgraph is unbalanced (condition C3).
std::vector<int> root_gauge_or_throw(const SignedDigraph& g, const std::vector<int>& roots);

}  // namespace detail

// Spec'd double-mode entry points for quasi-strongly connected graphs under
// condition C1/C2. `root_gauge.sigma` is indexed by the root subgraph's nodes
// (roots ascending).
std::vector<double> right_eigenvector(const SignedDigraph& g, const LaplacianView& view,
                                      const GaugeVector& root_gauge);
std::vector<double> left_eigenvector(const SignedDigraph& g, const LaplacianView& view,
                                     const GaugeVector& root_gauge);

// Full pipeline for a quasi-strongly connected graph: connectivity, root
// condition, gauge, both eigenvectors, residuals. Throws numerical_error for
// C3 ("no zero eigenvalue") and invalid_argument when not quasi-strongly
// connected.
template <typename T>
Certificate<T> qsc_certificate(const SignedDigraph& g) {
  const ConnectivityReport rep = analyze_connectivity(g);
  if (!rep.is_quasi_strongly_connected)
    throw std::invalid_argument("graph is not quasi-strongly connected");
  const RootCondition cond = classify_root_condition(g, rep);
  if (cond == RootCondition::C3)
    throw numerical_error("no zero eigenvalue (condition C3)");
  const std::vector<int> sigma = detail::root_gauge_or_throw(g, rep.roots);
  const BlockSplit<T> bs = block_split<T>(g, rep.roots);
  Certificate<T> cert;
  cert.condition = cond;
  cert.xi = right_null_vector(bs, sigma);
  cert.eta = left_null_vector(bs, sigma);
  const Matrix<T> lap = laplacian_matrix<T>(g);
  cert.det_L = determinant(lap);
  cert.inner = dot(cert.eta, cert.xi);
  cert.residual_right = inf_norm(mat_vec(lap, cert.xi));
  cert.residual_left = inf_norm(vec_mat(cert.eta, lap));
  return cert;
}

}  // namespace signet
