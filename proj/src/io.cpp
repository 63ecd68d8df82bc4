#include "lieshull/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace lieshull {

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

struct Entry {
  bool rational = false;
  Rational q;
  double d = 0.0;
};

Entry parse_entry(const Json& j) {
  Entry e;
  if (j.is_number_integer()) {
    e.rational = true;
    e.q = Rational(j.get<long long>());
    e.d = to_double(e.q);
    return e;
  }
  if (j.is_number_float()) {
    e.d = j.get<double>();
    return e;
  }
  if (!j.is_string()) throw InputError("matrix entry must be a string or number");
  const std::string s = j.get<std::string>();
  if (s.find_first_of(".eEnN") == std::string::npos) {
    e.rational = true;
    e.q = parse_rational(s);
    e.d = to_double(e.q);
    return e;
  }
  char* end = nullptr;
  e.d = std::strtod(s.c_str(), &end);
  if (s.empty() || *end != '\0') throw InputError("malformed number '" + s + "'");
  return e;
}

std::vector<std::vector<Entry>> parse_rows(const Json& j) {
  if (!j.is_array()) throw InputError("matrix must be an array of rows");
  std::vector<std::vector<Entry>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw InputError("matrix row must be an array");
    std::vector<Entry> r;
    for (const auto& x : row) r.push_back(parse_entry(x));
    if (!rows.empty() && r.size() != rows.front().size()) throw InputError("ragged matrix");
    rows.push_back(std::move(r));
  }
  return rows;
}

bool all_rational(const std::vector<std::vector<Entry>>& rows) {
  for (const auto& r : rows)
    for (const auto& e : r)
      if (!e.rational) return false;
  return true;
}

MatrixQ rows_to_rational(const std::vector<std::vector<Entry>>& rows) {
  const Index m = static_cast<Index>(rows.size());
  const Index n = m ? static_cast<Index>(rows.front().size()) : 0;
  MatrixQ out(m, n);
  for (Index i = 0; i < m; ++i)
    for (Index k = 0; k < n; ++k) out(i, k) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)].q;
  return out;
}

Eigen::MatrixXd rows_to_double(const std::vector<std::vector<Entry>>& rows) {
  const Index m = static_cast<Index>(rows.size());
  const Index n = m ? static_cast<Index>(rows.front().size()) : 0;
  Eigen::MatrixXd out(m, n);
  for (Index i = 0; i < m; ++i)
    for (Index k = 0; k < n; ++k) out(i, k) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)].d;
  return out;
}

Index index_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer index");
  return j.get<Index>();
}

Json string_list(const std::vector<std::string>& v) { return Json(v); }

}  // namespace

Rational rational_from_json(const Json& j) {
  const Entry e = parse_entry(j);
  if (!e.rational) throw InputError("expected an exact rational, got a decimal");
  return e.q;
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const VectorQ& v) {
  Json a = Json::array();
  for (Index i = 0; i < v.size(); ++i) a.push_back(to_string(v(i)));
  return a;
}

Json to_json(const Eigen::VectorXd& v) {
  Json a = Json::array();
  for (Index i = 0; i < v.size(); ++i) a.push_back(format_double(v(i)));
  return a;
}

Json to_json(const MatrixQ& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) rows.push_back(to_json(VectorQ(m.row(i).transpose())));
  return rows;
}

Json to_json(const Eigen::MatrixXd& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) rows.push_back(to_json(Eigen::VectorXd(m.row(i).transpose())));
  return rows;
}

VectorQ vector_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("vector must be an array");
  VectorQ v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Index>(i)) = rational_from_json(j[i]);
  return v;
}

MatrixQ matrix_from_json(const Json& j) {
  const auto rows = parse_rows(j);
  if (!all_rational(rows)) throw InputError("expected exact rational entries");
  return rows_to_rational(rows);
}

// ---- algebras ----------------------------------------------------------------------

Json to_json(const LieAlgebra& g) {
  Json j;
  j["name"] = g.name();
  j["dim"] = g.dim();
  j["basis"] = g.basis_names();
  Json brackets = Json::array();
  for (const auto& b : g.brackets()) {
    Json coeffs = Json::object();
    for (const auto& [k, c] : b.coeffs) coeffs[std::to_string(k)] = to_string(c);
    brackets.push_back({{"i", b.i}, {"j", b.j}, {"coeffs", coeffs}});
  }
  j["brackets"] = brackets;
  return j;
}

LieAlgebra algebra_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw InputError("Lie algebra must be a JSON object");
    const Index dim = index_from_json(j.at("dim"), "dim");
    if (dim < 0) throw InputError("dim must be non-negative");
    std::vector<std::string> names;
    if (j.contains("basis")) {
      names = j.at("basis").get<std::vector<std::string>>();
      if (static_cast<Index>(names.size()) != dim) throw InputError("basis has " + std::to_string(names.size()) + " names, dim is " + std::to_string(dim));
    } else {
      for (Index i = 0; i < dim; ++i) names.push_back("b" + std::to_string(i));
    }
    std::vector<BracketEntry> brackets;
    for (const auto& b : j.value("brackets", Json::array())) {
      BracketEntry e;
      e.i = index_from_json(b.at("i"), "i");
      e.j = index_from_json(b.at("j"), "j");
      for (const auto& [key, value] : b.at("coeffs").items()) {
        std::size_t used = 0;
        long k = -1;
        try {
          k = std::stol(key, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used != key.size() || k < 0) throw InputError("bracket coefficient key '" + key + "' is not an index");
        if (k >= dim) throw InputError("bracket coefficient index " + key + " out of range");
        e.coeffs[k] = rational_from_json(value);
      }
      brackets.push_back(std::move(e));
    }
    return LieAlgebra(j.value("name", std::string()), std::move(names), brackets);
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed Lie algebra JSON: ") + e.what());
  }
}

// ---- realizations and subgroups ---------------------------------------------------------

Json to_json(const MatrixRealization& r) {
  Json j;
  j["algebra"] = to_json(r.algebra());
  j["matrix_size"] = r.matrix_size();
  j["mode"] = to_string(r.mode());
  Json mats = Json::array();
  for (Index i = 0; i < r.algebra().dim(); ++i) {
    if (r.exact_basis()) mats.push_back(to_json((*r.exact_basis())[static_cast<std::size_t>(i)]));
    else mats.push_back(to_json(r.numeric_basis()[static_cast<std::size_t>(i)]));
  }
  j["basis_matrices"] = mats;
  return j;
}

RealizationPtr realization_from_json(const Json& j, double tol) {
  try {
    LieAlgebra g = algebra_from_json(j.at("algebra"));
    const Index size = index_from_json(j.at("matrix_size"), "matrix_size");
    std::optional<Mode> requested;
    if (j.contains("mode")) requested = parse_mode(j.at("mode").get<std::string>());
    std::vector<std::vector<std::vector<Entry>>> mats;
    bool rational = true;
    for (const auto& m : j.at("basis_matrices")) {
      auto rows = parse_rows(m);
      if (static_cast<Index>(rows.size()) != size || (size > 0 && static_cast<Index>(rows.front().size()) != size))
        throw InputError("basis matrix does not have matrix_size " + std::to_string(size));
      rational = rational && all_rational(rows);
      mats.push_back(std::move(rows));
    }
    RealizationPtr r;
    if (rational) {
      std::vector<MatrixQ> basis;
      for (const auto& m : mats) basis.push_back(rows_to_rational(m));
      r = MatrixRealization::from_exact(std::move(g), std::move(basis));
      if (requested == Mode::TriangularNumeric && r->exact()) {
        std::vector<Eigen::MatrixXd> numeric = r->numeric_basis();
        r = MatrixRealization::from_numeric(r->algebra(), std::move(numeric), tol);
      }
    } else {
      if (requested == Mode::UnipotentExact)
        throw InputError("unipotent-exact mode needs rational matrix entries");
      std::vector<Eigen::MatrixXd> basis;
      for (const auto& m : mats) basis.push_back(rows_to_double(m));
      r = MatrixRealization::from_numeric(std::move(g), std::move(basis), tol);
    }
    if (requested == Mode::UnipotentExact && !r->exact())
      throw InputError("basis matrices are not jointly nilpotent; unipotent-exact mode is unavailable");
    return r;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed realization JSON: ") + e.what());
  }
}

Json to_json(const GeneratedSubgroup& s) {
  Json gens = Json::array();
  for (const auto& g : s.generators) {
    gens.push_back({{"matrix", g.exact() ? to_json(g.exact_matrix()) : to_json(g.numeric_matrix())}});
  }
  return Json{{"generators", gens}};
}

std::vector<GroupElement> elements_from_json(const Json& j, const RealizationPtr& r) {
  if (!j.is_array()) throw InputError("generators must be an array");
  std::vector<GroupElement> out;
  for (const auto& item : j) {
    try {
      const auto rows = parse_rows(item.is_object() ? item.at("matrix") : item);
      if (all_rational(rows)) {
        out.emplace_back(r, rows_to_rational(rows));
      } else {
        if (r->exact()) throw InputError("unipotent-exact realization needs rational group elements");
        out.emplace_back(r, rows_to_double(rows));
      }
    } catch (const Json::exception& e) {
      throw InputError(std::string("malformed group element: ") + e.what());
    }
  }
  return out;
}

GeneratedSubgroup subgroup_from_json(const Json& j, const RealizationPtr& r) {
  if (!j.is_object() || !j.contains("generators")) throw InputError("subgroup JSON needs \"generators\"");
  return GeneratedSubgroup(r, elements_from_json(j.at("generators"), r));
}

Json to_json(const Subspace& s) {
  return Json{{"dim", s.dim()}, {"ambient_dim", s.ambient_dim()}, {"basis", to_json(s.basis())}};
}

Subspace subspace_from_json(const Json& j, Index ambient_dim) {
  try {
    const Json& rows = j.is_object() ? j.at("basis") : j;
    if (!rows.is_array()) throw InputError("subspace basis must be an array of rows");
    std::vector<VectorQ> v;
    for (const auto& row : rows) {
      VectorQ x = vector_from_json(row);
      if (x.size() != ambient_dim)
        throw InputError("subspace vector has length " + std::to_string(x.size()) + ", expected " +
                         std::to_string(ambient_dim));
      v.push_back(std::move(x));
    }
    return Subspace::from_vectors(v, ambient_dim);
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed subspace JSON: ") + e.what());
  }
}

RigidityInput rigidity_input_from_json(const Json& j, double tol) {
  try {
    RigidityInput in;
    in.source = realization_from_json(j.at("source"), tol);
    in.target = realization_from_json(j.at("target"), tol);
    in.generators = elements_from_json(j.at("generators"), in.source);
    in.images = elements_from_json(j.at("images"), in.target);
    return in;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed rigidity input: ") + e.what());
  }
}

// ---- reports --------------------------------------------------------------------------

Json to_json(const ValidationReport& r) {
  Json v = Json::array();
  for (const auto& x : r.violations)
    v.push_back({{"triple", {x.i, x.j, x.k}}, {"residual", to_json(x.residual)}});
  return Json{{"valid", r.valid()}, {"violations", v}};
}

Json to_json(const ClassificationReport& r) {
  Json j;
  j["solvable"] = to_string(r.solvable);
  j["nilpotent"] = to_string(r.nilpotent);
  j["completely_solvable"] = to_string(r.completely_solvable);
  j["exponential"] = to_string(r.exponential);
  j["exactness"] = to_string(r.exactness);
  Json roots = Json::array();
  for (const auto& root : r.roots) {
    Json x;
    x["exact"] = root.alpha_exact.has_value();
    x["alpha"] = root.alpha_exact ? to_json(*root.alpha_exact) : to_json(root.alpha);
    x["beta"] = root.beta_exact ? to_json(*root.beta_exact) : to_json(root.beta);
    x["multiplicity"] = root.multiplicity;
    roots.push_back(x);
  }
  j["roots"] = roots;
  j["real_flag"] = r.real_flag ? to_json(*r.real_flag) : Json(nullptr);
  j["witnesses"] = string_list(r.witnesses);
  j["notes"] = string_list(r.notes);
  return j;
}

Json to_json(const HullReport& r) {
  Json j;
  j["method"] = to_string(r.method);
  j["exactness"] = to_string(r.exactness);
  j["hull"] = to_json(r.hull);
  j["membership"] = r.membership;
  j["membership_residuals"] = r.membership_residuals;
  j["bracket_closed"] = r.bracket_closed;
  if (!r.ad_invariant.empty()) j["ad_invariant"] = r.ad_invariant;
  if (r.abelianization_rank) {
    j["abelianization_rank"] = *r.abelianization_rank;
    j["abelianization_dim"] = *r.abelianization_dim;
  }
  j["justification"] = r.justification;
  j["passed"] = r.passed();
  j["failures"] = string_list(r.failures);
  j["warnings"] = string_list(r.warnings);
  return j;
}

namespace {

Json step_json(const TraceStep& s) {
  Json j;
  j["step"] = s.name;
  j["detail"] = s.detail;
  Json subs = Json::object();
  for (const auto& [name, sub] : s.subspaces) subs[name] = to_json(sub);
  j["subspaces"] = subs;
  Json children = Json::array();
  for (const auto& c : s.children) children.push_back(step_json(c));
  j["children"] = children;
  return j;
}

void flatten(const Json& j, const std::string& path, std::ostringstream& out) {
  if (j.is_object()) {
    if (j.empty()) out << path << ": {}\n";
    for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, out);
  } else if (j.is_array()) {
    if (j.empty()) out << path << ": []\n";
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out << path << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

Json to_json(const DerivationTrace& t) { return Json{{"root", step_json(t.root)}, {"notes", t.notes}}; }

Json to_json(const RigidityReport& r) {
  Json j;
  j["verdict"] = to_string(r.verdict);
  j["reason"] = r.reason;
  j["exactness"] = to_string(r.exactness);
  j["phi"] = r.phi ? to_json(*r.phi) : Json(nullptr);
  j["graph_hull"] = to_json(r.graph_hull);
  j["projection_invertible"] = r.projection_invertible;
  j["homomorphism"] = r.homomorphism;
  j["invertible"] = r.invertible;
  j["compatibility_residual"] = r.compatibility_residual;
  j["warnings"] = string_list(r.warnings);
  return j;
}

Json to_json(const DensityReport& r) {
  Json j;
  j["dense"] = r.dense;
  j["closure_dim"] = r.closure.dim();
  j["ad_image_dim"] = r.ad_image.dim();
  j["closure"] = to_json(r.closure);
  j["notes"] = string_list(r.notes);
  return j;
}

Json to_json(const InvarianceReport& r) {
  Json j;
  j["invariant"] = r.invariant;
  j["failing_generator"] = r.failing_generator ? Json(*r.failing_generator) : Json(nullptr);
  j["dense"] = r.dense;
  j["density_asserted"] = r.density_asserted;
  j["is_ideal"] = r.is_ideal;
  j["conforms"] = r.conforms;
  return j;
}

std::string flatten_text(const Json& j) {
  std::ostringstream out;
  flatten(j, "", out);
  return out.str();
}

}  // namespace lieshull
