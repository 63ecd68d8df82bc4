#pragma once

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "lieshull/hull.hpp"

namespace lieshull {

struct RigidityInput {
  RealizationPtr source;
  RealizationPtr target;
  std::vector<GroupElement> generators;  // in source
  std::vector<GroupElement> images;      // in target
};

enum class Verdict { Extended, Failed };
std::string to_string(Verdict v);

struct RigidityReport {
  Verdict verdict = Verdict::Failed;
  std::string reason;
  Exactness exactness = Exactness::Exact;
  /// dim(target) x dim(source) matrix of the extending Lie algebra map.
  std::optional<MatrixQ> phi;
  Subspace graph_hull;  // in source + target
  bool projection_invertible = false;
  bool homomorphism = false;
  bool invertible = false;
  /// Max deviation of exp(phi(log gamma_i)) from the prescribed image.
  double compatibility_residual = 0.0;
  std::vector<std::string> warnings;
};

/// Hull of the graph {(gamma, alpha(gamma))} in the direct sum; when it has the
/// dimension of the source and projects isomorphically onto it, phi is read off
/// the graph and certified. Otherwise the verdict is Failed with a reason.
RigidityReport extend_isomorphism(const RigidityInput& in, double tol = kDefaultTolerance);

/// Replaces the generator list (and, identically, the image list) by another
/// list generating the same subgroup.
using Regenerator = std::function<std::pair<std::vector<GroupElement>, std::vector<GroupElement>>(
    const std::vector<GroupElement>&, const std::vector<GroupElement>&, std::mt19937_64&)>;

/// Random Nielsen moves applied to both lists.
Regenerator nielsen_regenerator(std::size_t moves = 6);

struct UniquenessReport {
  bool unique = false;
  int trials = 0;
};

/// Re-derives phi after regenerating the inputs; true iff every trial gives
/// the same phi. Throws ComputationError("hull dimension drop") when a trial's
/// graph hull is smaller than the original one, and PreconditionError when the
/// original input does not extend.
UniquenessReport check_uniqueness(const RigidityInput& in, int trials, std::mt19937_64& rng,
                                  const Regenerator& regenerate = nielsen_regenerator(),
                                  double tol = kDefaultTolerance);

}  // namespace lieshull
