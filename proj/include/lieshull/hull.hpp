#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lieshull/classify.hpp"
#include "lieshull/groups.hpp"

namespace lieshull {

enum class HullMethod { LogSpan, Abelian, Recursive, Density, Verify };
std::string to_string(HullMethod m);

struct HullReport {
  HullMethod method = HullMethod::LogSpan;
  Subspace hull;
  Exactness exactness = Exactness::Exact;
  /// Distance of each generator log from the hull (0 in exact mode when inside).
  std::vector<double> membership_residuals;
  std::vector<bool> membership;
  bool bracket_closed = false;
  /// Ad(gamma_i) h = h per generator; empty when not checked.
  std::vector<bool> ad_invariant;
  /// Rank of the generator logs in h / [h, h] against its dimension.
  std::optional<Index> abelianization_rank;
  std::optional<Index> abelianization_dim;
  std::string justification;
  std::vector<std::string> warnings;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

struct TraceStep {
  std::string name;
  std::string detail;
  std::vector<std::pair<std::string, Subspace>> subspaces;
  std::vector<TraceStep> children;
};

struct DerivationTrace {
  TraceStep root;
  std::vector<std::string> notes;
};

/// Logs of the generators in algebra coordinates. Numeric logs are snapped to
/// rationals (see rational_coordinates); `exactness` reports which happened.
std::vector<VectorQ> generator_logs(const GeneratedSubgroup& gamma, double tol,
                                    Exactness* exactness = nullptr,
                                    std::vector<Coordinates>* raw = nullptr);

/// Lie closure of the generator logs, with the justification that applies to
/// the ambient algebra's classification.
HullReport log_span_hull(const GeneratedSubgroup& gamma, double tol = kDefaultTolerance);

/// Plain span of the logs of pairwise commuting generators. Throws
/// PreconditionError for non-commuting generators and ComputationError when
/// the logs fail to commute.
HullReport abelian_hull(const GeneratedSubgroup& gamma, double tol = kDefaultTolerance);

/// Membership, Ad-invariance and abelianization-rank certificates for h.
/// Throws InputError when h is not bracket-closed.
HullReport hull_verify(const GeneratedSubgroup& gamma, const Subspace& h,
                       double tol = kDefaultTolerance);

struct RecursiveHull {
  HullReport report;
  DerivationTrace trace;
};

/// Four-step construction through the commutator subgroup, the normalizer of its
/// hull and an abelian quotient. Requires a completely solvable algebra
/// (PreconditionError otherwise). The result is cross-checked against
/// log_span_hull; disagreement is recorded as a failure.
RecursiveHull hull_recursive(const GeneratedSubgroup& gamma, double tol = kDefaultTolerance);

}  // namespace lieshull
