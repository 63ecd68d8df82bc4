#pragma once

#include <memory>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "lieshull/classify.hpp"
#include "lieshull/lie_algebra.hpp"

namespace lieshull {

enum class Mode { UnipotentExact, TriangularNumeric };
std::string to_string(Mode m);
Mode parse_mode(const std::string& s);

inline constexpr double kDefaultTolerance = 1e-9;

/// Faithful (or flagged non-faithful) matrix representation of a Lie algebra;
/// the group is the one generated by exp of the realized matrices. Unipotent-exact
/// mode keeps every matrix in exact rationals; triangular-numeric mode works in
/// doubles. Operations never mix the two.
class MatrixRealization {
 public:
  /// Exact basis matrices. Commutators must match the structure constants
  /// exactly. Mode is unipotent-exact iff the basis is jointly strictly
  /// triangularizable; otherwise the matrices are used numerically.
  static std::shared_ptr<const MatrixRealization> from_exact(LieAlgebra g,
                                                             std::vector<MatrixQ> basis);
  /// Numeric basis; commutators must match within tol * scale.
  static std::shared_ptr<const MatrixRealization> from_numeric(LieAlgebra g,
                                                               std::vector<Eigen::MatrixXd> basis,
                                                               double tol = kDefaultTolerance);

  const LieAlgebra& algebra() const { return algebra_; }
  Index matrix_size() const { return size_; }
  Mode mode() const { return mode_; }
  bool exact() const { return mode_ == Mode::UnipotentExact; }
  /// Exact basis; present in unipotent-exact mode and for numeric realizations
  /// that were built from rational matrices.
  const std::optional<std::vector<MatrixQ>>& exact_basis() const { return exact_; }
  const std::vector<Eigen::MatrixXd>& numeric_basis() const { return numeric_; }
  bool faithful() const { return faithful_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  MatrixQ realize(const VectorQ& x) const;
  Eigen::MatrixXd realize(const Eigen::VectorXd& x) const;

 private:
  MatrixRealization() = default;
  void finish();

  LieAlgebra algebra_;
  Index size_ = 0;
  Mode mode_ = Mode::TriangularNumeric;
  std::optional<std::vector<MatrixQ>> exact_;
  std::vector<Eigen::MatrixXd> numeric_;
  bool faithful_ = true;
  std::vector<std::string> warnings_;
};

using RealizationPtr = std::shared_ptr<const MatrixRealization>;

/// Matrix in the group of a realization. Exact (rational) in unipotent-exact
/// mode, double otherwise.
class GroupElement {
 public:
  /// Exact mode: must be unipotent. Numeric mode: converted to double.
  GroupElement(RealizationPtr r, const MatrixQ& m);
  /// Numeric mode only: must be invertible within tolerance.
  GroupElement(RealizationPtr r, Eigen::MatrixXd m);

  const RealizationPtr& realization() const { return r_; }
  bool exact() const { return std::holds_alternative<MatrixQ>(m_); }
  const MatrixQ& exact_matrix() const;
  Eigen::MatrixXd numeric_matrix() const;

 private:
  struct Trusted {};
  GroupElement(Trusted, RealizationPtr r, std::variant<MatrixQ, Eigen::MatrixXd> m)
      : r_(std::move(r)), m_(std::move(m)) {}
  friend GroupElement multiply(const GroupElement&, const GroupElement&);
  friend GroupElement inverse(const GroupElement&);
  friend GroupElement identity(const RealizationPtr&);
  friend GroupElement group_exp(const RealizationPtr&, const VectorQ&);
  friend GroupElement group_exp(const RealizationPtr&, const Eigen::VectorXd&);

  RealizationPtr r_;
  std::variant<MatrixQ, Eigen::MatrixXd> m_;
};

GroupElement identity(const RealizationPtr& r);
/// Throws InputError when the operands belong to different realizations.
GroupElement multiply(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& a);
/// by * x * by^{-1}
GroupElement conjugate(const GroupElement& x, const GroupElement& by);
/// a b a^{-1} b^{-1}
GroupElement commutator(const GroupElement& a, const GroupElement& b);
bool approx_equal(const GroupElement& a, const GroupElement& b, double tol = kDefaultTolerance);

/// Finite generating set of a subgroup.
struct GeneratedSubgroup {
  GeneratedSubgroup(RealizationPtr r, std::vector<GroupElement> gens);
  RealizationPtr realization;
  std::vector<GroupElement> generators;
};

/// Coordinates of an algebra element relative to the realized basis; `exact`
/// is set in unipotent-exact mode.
struct Coordinates {
  std::optional<VectorQ> exact;
  Eigen::VectorXd value;
  double residual = 0.0;
};

/// Exact coordinates, or the numeric ones snapped to nearby small-denominator
/// rationals (exact dyadic value when no such rational is within tol).
VectorQ rational_coordinates(const Coordinates& c, double tol = kDefaultTolerance);

GroupElement group_exp(const RealizationPtr& r, const VectorQ& x);
GroupElement group_exp(const RealizationPtr& r, const Eigen::VectorXd& x);
/// Throws ComputationError when the log is not in the realized subalgebra
/// (exactly, or within tol in numeric mode).
Coordinates group_log(const GroupElement& m, double tol = kDefaultTolerance);

struct AdjointMatrix {
  std::optional<MatrixQ> exact;
  Eigen::MatrixXd value;
  double residual = 0.0;
};

/// Matrix of Y -> x Y x^{-1} on g. Throws ComputationError if a conjugated
/// basis matrix leaves the realized subalgebra.
AdjointMatrix adjoint_of(const GroupElement& x, double tol = kDefaultTolerance);

/// Realization by the matrices ad(b_i). Unipotent-exact iff g is nilpotent;
/// non-faithful (center != 0) realizations carry a warning.
RealizationPtr realize_adjoint(const LieAlgebra& g);

// ---- catalog ------------------------------------------------------------------

struct CatalogParams {
  Index n = 3;
  std::optional<MatrixQ> matrix;  // integer matrix for semidirect_integer
};

struct CatalogEntry {
  std::string name;
  RealizationPtr realization;
  GeneratedSubgroup subgroup;
  std::vector<std::string> notes;
};

/// heisenberg(n odd >= 3), abelian(n >= 1), aff1, semidirect_integer(A 1x1 or
/// 2x2 integer with a principal real log), paper_example. Throws InputError for
/// unknown names or invalid parameters.
CatalogEntry catalog(const std::string& name, const CatalogParams& params = {});
std::vector<std::string> catalog_names();

/// Principal real log of a 1x1 or 2x2 integer matrix in the form a I + b (A - tr/2 I),
/// with a = 0 exactly when det A = 1. Exact rational surrogate of log A whose
/// trace vanishes exactly when it should. Throws InputError when none exists.
MatrixQ semidirect_generator(const MatrixQ& a);

/// Classification asserted for a catalog example in the literature it comes from.
struct CatalogClaim {
  Tri completely_solvable;
  Tri exponential;
  std::string statement;
};

std::optional<CatalogClaim> catalog_claim(const std::string& name);

/// Discrepancy notes between a computed classification and the catalog claim
/// for `name`; empty when there is no claim or the verdicts agree.
std::vector<std::string> adjudicate_claim(const std::string& name, const ClassificationReport& report);

// ---- generator regeneration ------------------------------------------------------

/// Elementary replacement preserving the generated subgroup.
struct NielsenMove {
  enum class Kind { Invert, MultiplyRight, MultiplyLeft, Conjugate, Swap };
  Kind kind;
  std::size_t i;
  std::size_t j;
  bool invert_j;
};

std::vector<NielsenMove> random_nielsen_moves(std::size_t generators, std::size_t count,
                                              std::mt19937_64& rng);
std::vector<GroupElement> apply_moves(std::vector<GroupElement> gens,
                                      const std::vector<NielsenMove>& moves);

}  // namespace lieshull
