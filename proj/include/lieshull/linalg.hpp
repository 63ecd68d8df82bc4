#pragma once

// Exact linear algebra over a field scalar (Rational or Gaussian). Everything
// here is Gauss-Jordan elimination with exact zero tests, so results are
// canonical and bit-reproducible.

#include <optional>
#include <utility>
#include <vector>

#include "lieshull/errors.hpp"
#include "lieshull/scalar.hpp"

namespace lieshull {

template <typename Scalar>
struct Echelon {
  Mat<Scalar> rows;           // nonzero rows of the reduced row-echelon form
  std::vector<Index> pivots;  // pivot column of each row
};

/// Reduced row-echelon form with zero rows dropped.
template <typename Scalar>
Echelon<Scalar> rref(Mat<Scalar> a) {
  const Index m = a.rows();
  const Index n = a.cols();
  std::vector<Index> pivots;
  Index r = 0;
  for (Index c = 0; c < n && r < m; ++c) {
    Index p = r;
    while (p < m && is_zero(a(p, c))) ++p;
    if (p == m) continue;
    if (p != r) a.row(p).swap(a.row(r));
    const Scalar inv = Scalar(1) / a(r, c);
    for (Index j = c; j < n; ++j) a(r, j) *= inv;
    for (Index i = 0; i < m; ++i) {
      if (i == r || is_zero(a(i, c))) continue;
      const Scalar f = a(i, c);
      for (Index j = c; j < n; ++j) {
        if (!is_zero(a(r, j))) a(i, j) -= f * a(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return {a.topRows(r), std::move(pivots)};
}

template <typename Scalar>
Index rank(const Mat<Scalar>& a) {
  return static_cast<Index>(rref(a).pivots.size());
}

/// Basis of {x : a x = 0}, one vector per column, ordered by free column.
template <typename Scalar>
Mat<Scalar> nullspace(const Mat<Scalar>& a) {
  const Index n = a.cols();
  const auto e = rref(a);
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Index> free;
  for (Index c = 0; c < n; ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) free.push_back(c);
  Mat<Scalar> basis = Mat<Scalar>::Zero(n, static_cast<Index>(free.size()));
  for (std::size_t k = 0; k < free.size(); ++k) {
    const Index f = free[k];
    basis(f, static_cast<Index>(k)) = Scalar(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      basis(e.pivots[r], static_cast<Index>(k)) = -e.rows(static_cast<Index>(r), f);
    }
  }
  return basis;
}

/// One solution of a x = b (free variables zero), or nullopt if inconsistent.
template <typename Scalar>
std::optional<Vec<Scalar>> solve(const Mat<Scalar>& a, const Vec<Scalar>& b) {
  if (a.rows() != b.size()) throw InputError("solve: shape mismatch");
  Mat<Scalar> aug(a.rows(), a.cols() + 1);
  aug << a, b;
  const auto e = rref(aug);
  Vec<Scalar> x = Vec<Scalar>::Zero(a.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == a.cols()) return std::nullopt;
    x(e.pivots[r]) = e.rows(static_cast<Index>(r), a.cols());
  }
  return x;
}

/// Solves a X = b column by column; nullopt if any column is inconsistent.
template <typename Scalar>
std::optional<Mat<Scalar>> solve(const Mat<Scalar>& a, const Mat<Scalar>& b) {
  Mat<Scalar> x(a.cols(), b.cols());
  for (Index j = 0; j < b.cols(); ++j) {
    auto col = solve<Scalar>(a, Vec<Scalar>(b.col(j)));
    if (!col) return std::nullopt;
    x.col(j) = *col;
  }
  return x;
}

template <typename Scalar>
std::optional<Mat<Scalar>> inverse(const Mat<Scalar>& a) {
  if (a.rows() != a.cols()) throw InputError("inverse: non-square matrix");
  const Index n = a.rows();
  Mat<Scalar> aug(n, 2 * n);
  aug << a, Mat<Scalar>::Identity(n, n);
  auto e = rref(aug);
  if (static_cast<Index>(e.pivots.size()) < n || (n > 0 && e.pivots.back() >= n)) {
    return std::nullopt;
  }
  return Mat<Scalar>(e.rows.rightCols(n));
}

template <typename Scalar>
Scalar determinant(Mat<Scalar> a) {
  if (a.rows() != a.cols()) throw InputError("determinant: non-square matrix");
  const Index n = a.rows();
  Scalar det(1);
  for (Index c = 0; c < n; ++c) {
    Index p = c;
    while (p < n && is_zero(a(p, c))) ++p;
    if (p == n) return Scalar(0);
    if (p != c) {
      a.row(p).swap(a.row(c));
      det = -det;
    }
    det *= a(c, c);
    const Scalar inv = Scalar(1) / a(c, c);
    for (Index i = c + 1; i < n; ++i) {
      if (is_zero(a(i, c))) continue;
      const Scalar f = a(i, c) * inv;
      for (Index j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

template <typename Scalar>
bool is_zero_matrix(const Mat<Scalar>& a) {
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (!is_zero(a(i, j))) return false;
  return true;
}

/// True iff a^n == 0 for the n x n matrix a.
template <typename Scalar>
bool is_nilpotent_matrix(const Mat<Scalar>& a) {
  if (a.rows() != a.cols()) return false;
  Mat<Scalar> p = Mat<Scalar>::Identity(a.rows(), a.cols());
  for (Index k = 0; k < a.rows(); ++k) {
    p = p * a;
    if (is_zero_matrix(p)) return true;
  }
  return a.rows() == 0;
}

template <typename Scalar>
Mat<Scalar> commutator(const Mat<Scalar>& a, const Mat<Scalar>& b) {
  return a * b - b * a;
}

/// Column-major flattening; the inverse of unvectorize.
template <typename Scalar>
Vec<Scalar> vectorize(const Mat<Scalar>& m) {
  Vec<Scalar> v(m.size());
  Index k = 0;
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) v(k++) = m(i, j);
  return v;
}

template <typename Scalar>
Mat<Scalar> unvectorize(const Vec<Scalar>& v, Index rows, Index cols) {
  if (v.size() != rows * cols) throw InputError("unvectorize: size mismatch");
  Mat<Scalar> m(rows, cols);
  Index k = 0;
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) m(i, j) = v(k++);
  return m;
}

}  // namespace lieshull
