#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lieshull/hull.hpp"

namespace lieshull {

/// Ad(Gamma) inside the operator space gl(g), flattened column-major to n^2.
struct AdjointSubgroup {
  LieAlgebra algebra;
  Subspace ad_image;                  // span of ad(b_i)
  std::vector<MatrixQ> generator_ad;  // Ad(gamma_i)
  std::vector<bool> unipotent;
};

/// Exact Ad matrices of the generators (numeric ones snapped to rationals).
AdjointSubgroup adjoint_subgroup(const GeneratedSubgroup& gamma, double tol = kDefaultTolerance);

struct DensityReport {
  bool dense = false;
  /// Lie algebra of the Zariski closure of the generated Ad-image.
  Subspace closure;
  Subspace ad_image;
  std::vector<std::string> notes;
};

/// Density test for unipotent adjoint images given directly by matrices acting
/// on g. Throws PreconditionError for a non-unipotent matrix.
DensityReport density_from_adjoint(const LieAlgebra& g, const std::vector<MatrixQ>& ads);

/// Zariski closure of Ad(Gamma) computed as the Lie closure of the unipotent
/// logs, compared with ad(g).
DensityReport is_algebraically_dense_unipotent(const GeneratedSubgroup& gamma,
                                               double tol = kDefaultTolerance);

struct InvarianceReport {
  std::vector<bool> invariant;  // Ad(gamma_i) h = h
  std::optional<std::size_t> failing_generator;
  bool dense = false;
  bool density_asserted = false;
  bool is_ideal = false;
  /// dense and invariant implies ideal; false only for a counterexample.
  bool conforms = true;
};

/// Checks Ad-invariance of h and, when Gamma is dense (tested, or asserted by
/// the caller), that h is an ideal.
InvarianceReport invariant_implies_ideal(const GeneratedSubgroup& gamma, const Subspace& h,
                                         bool assume_dense = false, double tol = kDefaultTolerance);

/// Density of the image of Gamma in g / ideal. Throws InputError when `ideal`
/// is not an ideal and PreconditionError for non-unipotent quotient Ad.
DensityReport density_in_quotient(const GeneratedSubgroup& gamma, const Subspace& ideal,
                                  double tol = kDefaultTolerance);

/// Log-span hull when Gamma is dense; otherwise restricts to the ad-preimage of
/// the closure algebra, re-tests density there and returns the hull inside it.
HullReport hull_via_density(const GeneratedSubgroup& gamma, double tol = kDefaultTolerance);

}  // namespace lieshull
