#pragma once

#include <vector>

#include "lieshull/linalg.hpp"

namespace lieshull {

/// Subspace of Q^n stored by its reduced row-echelon basis. The RREF is the
/// unique representative, so equality of subspaces is equality of matrices.
class Subspace {
 public:
  explicit Subspace(Index ambient_dim = 0);

  /// Span of the rows of `rows` (any number, possibly dependent).
  static Subspace from_rows(const MatrixQ& rows);
  /// Span of the columns of `cols`.
  static Subspace from_columns(const MatrixQ& cols);
  static Subspace from_vectors(const std::vector<VectorQ>& vectors, Index ambient_dim);
  static Subspace whole(Index ambient_dim);

  Index dim() const { return basis_.rows(); }
  Index ambient_dim() const { return ambient_; }
  bool is_zero() const { return dim() == 0; }
  bool is_whole() const { return dim() == ambient_; }

  /// r x n, rows in RREF.
  const MatrixQ& basis() const { return basis_; }
  const std::vector<Index>& pivots() const { return pivots_; }
  VectorQ vector(Index i) const { return basis_.row(i).transpose(); }
  std::vector<VectorQ> vectors() const;

  /// v minus its component along the pivot coordinates; zero iff v is in the subspace.
  VectorQ reduce(const VectorQ& v) const;
  /// Same reduction on a double vector; used for residual checks in numeric mode.
  Eigen::VectorXd reduce(const Eigen::VectorXd& v) const;
  bool contains(const VectorQ& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of a member relative to basis(); throws InputError if v is not a member.
  VectorQ coordinates(const VectorQ& v) const;

  Subspace operator+(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  /// Image under a linear map given as a (m x n) matrix acting on columns.
  Subspace image(const MatrixQ& map) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.dim() == b.dim() && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  Subspace(Index ambient, Echelon<Rational> e);

  Index ambient_;
  MatrixQ basis_;
  std::vector<Index> pivots_;
};

}  // namespace lieshull
