#include "lieshull/subspace.hpp"

namespace lieshull {

Subspace::Subspace(Index ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

Subspace::Subspace(Index ambient, Echelon<Rational> e)
    : ambient_(ambient), basis_(std::move(e.rows)), pivots_(std::move(e.pivots)) {}

Subspace Subspace::from_rows(const MatrixQ& rows) {
  return Subspace(rows.cols(), rref(rows));
}

Subspace Subspace::from_columns(const MatrixQ& cols) {
  return from_rows(MatrixQ(cols.transpose()));
}

Subspace Subspace::from_vectors(const std::vector<VectorQ>& vectors, Index ambient_dim) {
  MatrixQ rows(static_cast<Index>(vectors.size()), ambient_dim);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != ambient_dim) throw InputError("subspace: vector length mismatch");
    rows.row(static_cast<Index>(i)) = vectors[i].transpose();
  }
  return from_rows(rows);
}

Subspace Subspace::whole(Index ambient_dim) {
  return from_rows(MatrixQ::Identity(ambient_dim, ambient_dim));
}

std::vector<VectorQ> Subspace::vectors() const {
  std::vector<VectorQ> out;
  out.reserve(static_cast<std::size_t>(dim()));
  for (Index i = 0; i < dim(); ++i) out.push_back(vector(i));
  return out;
}

VectorQ Subspace::reduce(const VectorQ& v) const {
  if (v.size() != ambient_) throw InputError("subspace: vector length mismatch");
  VectorQ r = v;
  for (Index k = 0; k < dim(); ++k) {
    const Rational c = v(pivots_[static_cast<std::size_t>(k)]);
    if (!c.is_zero()) r -= c * basis_.row(k).transpose();
  }
  return r;
}

Eigen::VectorXd Subspace::reduce(const Eigen::VectorXd& v) const {
  if (v.size() != ambient_) throw InputError("subspace: vector length mismatch");
  const Eigen::MatrixXd b = to_double(basis_);
  Eigen::VectorXd r = v;
  for (Index k = 0; k < dim(); ++k) r -= v(pivots_[static_cast<std::size_t>(k)]) * b.row(k).transpose();
  return r;
}

bool Subspace::contains(const VectorQ& v) const { return is_zero_matrix<Rational>(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  for (Index i = 0; i < other.dim(); ++i)
    if (!contains(other.vector(i))) return false;
  return true;
}

VectorQ Subspace::coordinates(const VectorQ& v) const {
  if (!contains(v)) throw InputError("subspace: vector is not a member");
  VectorQ c(dim());
  for (Index k = 0; k < dim(); ++k) c(k) = v(pivots_[static_cast<std::size_t>(k)]);
  return c;
}

Subspace Subspace::operator+(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw InputError("subspace sum: ambient mismatch");
  MatrixQ rows(dim() + other.dim(), ambient_);
  rows << basis_, other.basis_;
  return from_rows(rows);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw InputError("subspace intersection: ambient mismatch");
  // x in both iff x = A^T a = B^T b; solve [A^T | -B^T] (a,b) = 0.
  MatrixQ system(ambient_, dim() + other.dim());
  system << basis_.transpose(), -other.basis_.transpose();
  const MatrixQ ker = nullspace(system);
  const MatrixQ cols = basis_.transpose() * ker.topRows(dim());
  return from_columns(cols.cols() == 0 ? MatrixQ(ambient_, 0) : cols);
}

Subspace Subspace::image(const MatrixQ& map) const {
  if (map.cols() != ambient_) throw InputError("subspace image: shape mismatch");
  return from_columns(MatrixQ(map * basis_.transpose()));
}

}  // namespace lieshull
