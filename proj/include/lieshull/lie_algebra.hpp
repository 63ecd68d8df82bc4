#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lieshull/subspace.hpp"

namespace lieshull {

/// One stored bracket [b_i, b_j] = sum_k coeffs[k] b_k, with i < j.
struct BracketEntry {
  Index i = 0;
  Index j = 0;
  std::map<Index, Rational> coeffs;
};

/// Finite-dimensional real Lie algebra given by exact structure constants on a
/// chosen basis. Only pairs i < j are stored; antisymmetry is structural and the
/// Jacobi identity is checked by validate_structure, never assumed.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  /// Throws InputError for i >= j, indices out of range, or duplicate pairs.
  LieAlgebra(std::string name, std::vector<std::string> basis_names,
             const std::vector<BracketEntry>& brackets);

  const std::string& name() const { return name_; }
  Index dim() const { return static_cast<Index>(basis_names_.size()); }
  const std::vector<std::string>& basis_names() const { return basis_names_; }

  /// Nonzero stored brackets in ascending (i, j) order.
  std::vector<BracketEntry> brackets() const;

  /// [b_i, b_j] as a coordinate vector, for any i, j.
  VectorQ structure(Index i, Index j) const;
  /// Matrix of ad(b_i).
  const MatrixQ& ad_basis(Index i) const { return ad_[static_cast<std::size_t>(i)]; }

  VectorQ basis_vector(Index i) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.basis_names_ == b.basis_names_ && a.table_ == b.table_;
  }

 private:
  std::string name_;
  std::vector<std::string> basis_names_;
  std::map<std::pair<Index, Index>, VectorQ> table_;
  std::vector<MatrixQ> ad_;
};

LieAlgebra abelian_algebra(Index n, std::string name = "");

struct JacobiViolation {
  Index i, j, k;
  VectorQ residual;
};

struct ValidationReport {
  std::vector<JacobiViolation> violations;
  bool valid() const { return violations.empty(); }
};

ValidationReport validate_structure(const LieAlgebra& g);

VectorQ bracket(const LieAlgebra& g, const VectorQ& x, const VectorQ& y);
/// Matrix of Y -> [X, Y].
MatrixQ ad(const LieAlgebra& g, const VectorQ& x);

using BracketFn = std::function<VectorQ(const VectorQ&, const VectorQ&)>;

/// Smallest subspace containing the seeds and closed under `br`: full rounds of
/// pairwise brackets until the dimension stops growing.
Subspace span_closure(const std::vector<VectorQ>& seeds, Index ambient_dim, const BracketFn& br);
Subspace lie_closure(const LieAlgebra& g, const std::vector<VectorQ>& seeds);

/// span{[a, b] : a in u, b in v}.
Subspace bracket_span(const LieAlgebra& g, const Subspace& u, const Subspace& v);
bool is_subalgebra(const LieAlgebra& g, const Subspace& u);

Subspace normalizer_subalg(const LieAlgebra& g, const Subspace& u);
Subspace centralizer_subalg(const LieAlgebra& g, const Subspace& u);
Subspace center(const LieAlgebra& g);

std::vector<Subspace> derived_series(const LieAlgebra& g);
std::vector<Subspace> lower_central_series(const LieAlgebra& g);
bool is_solvable(const LieAlgebra& g);
bool is_nilpotent(const LieAlgebra& g);

bool is_ideal(const LieAlgebra& g, const Subspace& h);

struct Quotient {
  LieAlgebra algebra;
  MatrixQ projection;            // dim(g/h) x dim(g)
  MatrixQ lift;                  // dim(g) x dim(g/h), section onto the chosen complement
  std::vector<Index> complement; // basis indices of g spanning the complement
};

/// g / ideal on the lexicographically first complement of the ideal's pivot
/// columns. Throws InputError when `ideal` is not an ideal.
Quotient quotient_algebra(const LieAlgebra& g, const Subspace& ideal);

/// Structure constants of a subalgebra in the basis given by its RREF rows.
/// Throws InputError when h is not bracket-closed.
LieAlgebra subalgebra(const LieAlgebra& g, const Subspace& h, std::string name = "");

/// R^n semidirect R.T with [T, v] = D v. Basis e_1..e_n, T.
LieAlgebra semidirect_abelian(const MatrixQ& d, std::string name = "");

/// g1 + g2 with [g1, g2] = 0; g1's basis first.
LieAlgebra direct_sum(const LieAlgebra& g1, const LieAlgebra& g2);

/// {X : sum_i x_i rho_i v = 0}.
Subspace stabilizer_subalg(const std::vector<MatrixQ>& rho, const VectorQ& v);

/// phi[b_i, b_j] == [phi b_i, phi b_j] for all basis pairs.
bool is_lie_homomorphism(const LieAlgebra& from, const LieAlgebra& to, const MatrixQ& phi);

}  // namespace lieshull
