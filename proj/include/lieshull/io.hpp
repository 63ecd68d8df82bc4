#pragma once

#include <string>

#include <json.hpp>

#include "lieshull/density.hpp"
#include "lieshull/rigidity.hpp"

namespace lieshull {

using Json = nlohmann::ordered_json;

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

/// "p/q" strings (or JSON integers) to rationals.
Rational rational_from_json(const Json& j);
Json to_json(const Rational& q);
/// 17 significant digits.
std::string format_double(double x);

Json to_json(const VectorQ& v);
Json to_json(const Eigen::VectorXd& v);
Json to_json(const MatrixQ& m);
Json to_json(const Eigen::MatrixXd& m);
VectorQ vector_from_json(const Json& j);
MatrixQ matrix_from_json(const Json& j);

/// {"name", "dim", "basis", "brackets": [{"i", "j", "coeffs": {"k": "p/q"}}]}, 0-based.
Json to_json(const LieAlgebra& g);
LieAlgebra algebra_from_json(const Json& j);

/// {"algebra", "matrix_size", "mode", "basis_matrices"}. Entries are "p/q"
/// strings when an exact basis exists, decimal strings otherwise.
Json to_json(const MatrixRealization& r);
RealizationPtr realization_from_json(const Json& j, double tol = kDefaultTolerance);

/// {"generators": [{"matrix": [...]}]}
Json to_json(const GeneratedSubgroup& s);
GeneratedSubgroup subgroup_from_json(const Json& j, const RealizationPtr& r);
std::vector<GroupElement> elements_from_json(const Json& j, const RealizationPtr& r);

/// {"basis": [[...]]}, rows spanning the subspace.
Json to_json(const Subspace& s);
Subspace subspace_from_json(const Json& j, Index ambient_dim);

/// {"source": realization, "target": realization, "generators": [...], "images": [...]}
RigidityInput rigidity_input_from_json(const Json& j, double tol = kDefaultTolerance);

Json to_json(const ValidationReport& r);
Json to_json(const ClassificationReport& r);
Json to_json(const HullReport& r);
Json to_json(const DerivationTrace& t);
Json to_json(const RigidityReport& r);
Json to_json(const DensityReport& r);
Json to_json(const InvarianceReport& r);

/// One "path: value" line per leaf, in document order.
std::string flatten_text(const Json& j);

}  // namespace lieshull
