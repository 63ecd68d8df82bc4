#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "lieshull/lie_algebra.hpp"
#include "lieshull/polynomial.hpp"

namespace lieshull {

enum class Tri { False, True, Undetermined };
enum class Exactness { Exact, Numeric };

inline Tri to_tri(bool b) { return b ? Tri::True : Tri::False; }
std::string to_string(Tri t);
std::string to_string(Exactness e);

/// A root lambda = alpha + i beta of the adjoint action, as functionals on the
/// basis of g: alpha(b_k) = alpha[k].
struct RootFunctional {
  Eigen::VectorXd alpha;
  Eigen::VectorXd beta;
  std::optional<VectorQ> alpha_exact;
  std::optional<VectorQ> beta_exact;
  int multiplicity = 1;
};

struct ClassificationReport {
  Tri solvable = Tri::Undetermined;
  Tri nilpotent = Tri::Undetermined;
  Tri completely_solvable = Tri::Undetermined;
  Tri exponential = Tri::Undetermined;
  Exactness exactness = Exactness::Exact;
  std::vector<RootFunctional> roots;
  /// Columns form a basis whose leading segments are ideals with 1-dimensional
  /// steps; present when such a flag exists over Q.
  std::optional<MatrixQ> real_flag;
  std::vector<std::string> witnesses;
  std::vector<std::string> notes;
};

/// Decision procedure:
///  - completely solvable <=> ad(X) has only real eigenvalues for X on enough
///    points of the moment curve sum_k t^k b_k (Sturm counts, exact);
///  - exponential <=> every root alpha + i beta has beta in R.alpha; decided
///    exactly when the roots lie in Q(i), numerically otherwise.
/// Throws InputError when the structure constants violate Jacobi.
ClassificationReport classify(const LieAlgebra& g, double tol = 1e-9);

// ---- simultaneous triangularization ------------------------------------------

namespace detail {

inline bool root_less(const Rational& a, const Rational& b) {
  const Rational aa = abs(a), ab = abs(b);
  return aa != ab ? aa < ab : a < b;
}

inline bool root_less(const Gaussian& a, const Gaussian& b) {
  const bool ra = a.im.is_zero(), rb = b.im.is_zero();
  if (ra != rb) return ra;
  const Rational na = a.re * a.re + a.im * a.im, nb = b.re * b.re + b.im * b.im;
  if (na != nb) return na < nb;
  if (a.re != b.re) return a.re < b.re;
  return a.im < b.im;
}

template <typename Scalar>
Mat<Scalar> canonical_columns(const Mat<Scalar>& w) {
  return Mat<Scalar>(rref(Mat<Scalar>(w.transpose())).rows.transpose());
}

/// R with a * basis = basis * R, for an a-invariant column space.
template <typename Scalar>
Mat<Scalar> restrict_map(const Mat<Scalar>& basis, const Mat<Scalar>& a) {
  auto r = solve<Scalar>(basis, Mat<Scalar>(a * basis));
  if (!r) throw ComputationError("restrict_map: subspace is not invariant");
  return *r;
}

template <typename Scalar>
std::optional<Mat<Scalar>> eigen_search(const std::vector<Mat<Scalar>>& ops, std::size_t idx,
                                        const Mat<Scalar>& w) {
  if (idx == ops.size()) return canonical_columns(w).leftCols(1);
  const Mat<Scalar> t = restrict_map(w, ops[idx]);
  auto roots = exact_roots(char_poly(t));
  std::sort(roots.begin(), roots.end(),
            [](const Scalar& a, const Scalar& b) { return root_less(a, b); });
  const Index d = t.rows();
  for (const auto& mu : roots) {
    Mat<Scalar> shifted = t;
    for (Index i = 0; i < d; ++i) shifted(i, i) -= mu;
    const Mat<Scalar> e = nullspace(shifted);
    if (e.cols() == 0) continue;
    auto found = eigen_search(ops, idx + 1, canonical_columns(Mat<Scalar>(w * e)));
    if (found) return found;
  }
  return std::nullopt;
}

}  // namespace detail

/// Common eigenvector of matrices spanning a solvable Lie algebra of
/// operators, with eigenvalues in the scalar field; nullopt if none exists there.
template <typename Scalar>
std::optional<Vec<Scalar>> common_eigenvector(const std::vector<Mat<Scalar>>& ops, Index size) {
  std::vector<Mat<Scalar>> derived;
  for (std::size_t a = 0; a < ops.size(); ++a)
    for (std::size_t b = a + 1; b < ops.size(); ++b) derived.push_back(commutator(ops[a], ops[b]));
  Mat<Scalar> kernel = Mat<Scalar>::Identity(size, size);
  if (!derived.empty()) {
    Mat<Scalar> stacked(static_cast<Index>(derived.size()) * size, size);
    for (std::size_t k = 0; k < derived.size(); ++k)
      stacked.middleRows(static_cast<Index>(k) * size, size) = derived[k];
    kernel = detail::canonical_columns(nullspace(stacked));
  }
  if (kernel.cols() == 0) return std::nullopt;
  std::vector<Mat<Scalar>> restricted;
  for (const auto& a : ops) restricted.push_back(detail::restrict_map(kernel, a));
  const Index d = kernel.cols();
  auto w = detail::eigen_search(restricted, 0, Mat<Scalar>(Mat<Scalar>::Identity(d, d)));
  if (!w) return std::nullopt;
  return Vec<Scalar>(kernel * w->col(0));
}

/// Invertible P with P^{-1} A P upper triangular for every A in ops, found by
/// peeling common eigenvectors off successive quotients. nullopt when some
/// quotient has no common eigenvector over the scalar field.
template <typename Scalar>
std::optional<Mat<Scalar>> simultaneous_triangularization(const std::vector<Mat<Scalar>>& ops,
                                                          Index size) {
  if (size == 0) return Mat<Scalar>(0, 0);
  auto v = common_eigenvector(ops, size);
  if (!v) return std::nullopt;
  Index p = 0;
  while (is_zero((*v)(p))) ++p;
  Mat<Scalar> basis(size, size);
  basis.col(0) = *v;
  for (Index j = 0, c = 1; j < size; ++j) {
    if (j == p) continue;
    basis.col(c++) = Mat<Scalar>::Identity(size, size).col(j);
  }
  const auto inv = inverse(basis);
  if (!inv) throw ComputationError("triangularization: singular completion");
  std::vector<Mat<Scalar>> quotient_ops;
  for (const auto& a : ops) {
    const Mat<Scalar> conj = (*inv) * a * basis;
    quotient_ops.push_back(conj.bottomRightCorner(size - 1, size - 1));
  }
  auto rest = simultaneous_triangularization(quotient_ops, size - 1);
  if (!rest) return std::nullopt;
  Mat<Scalar> lift = Mat<Scalar>::Zero(size, size);
  lift(0, 0) = Scalar(1);
  lift.bottomRightCorner(size - 1, size - 1) = *rest;
  return Mat<Scalar>(basis * lift);
}

}  // namespace lieshull
