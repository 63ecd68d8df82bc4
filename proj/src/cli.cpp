#include "lieshull/cli.hpp"

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lieshull/io.hpp"

namespace lieshull {

namespace {

struct Session {
  double tolerance = kDefaultTolerance;
  std::string output = "json";
  std::uint64_t seed = 20240601;
};

struct Outcome {
  Json result;
  int code = kExitOk;
  std::string exactness = "exact";
  std::vector<std::string> warnings;
};

std::string fnv1a_digest(const std::vector<std::string>& paths) {
  std::uint64_t h = 1469598103934665603ULL;
  for (const auto& p : paths) {
    std::ifstream in(p, std::ios::binary);
    char c;
    while (in.get(c)) {
      h ^= static_cast<unsigned char>(c);
      h *= 1099511628211ULL;
    }
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

LieAlgebra algebra_of(const Json& j, double tol) {
  if (j.contains("basis_matrices")) return realization_from_json(j, tol)->algebra();
  return algebra_from_json(j);
}

MatrixQ parse_matrix_arg(const std::string& text) {
  std::vector<std::vector<Rational>> rows;
  std::stringstream rs(text);
  std::string row;
  while (std::getline(rs, row, ';')) {
    std::vector<Rational> r;
    std::stringstream es(row);
    std::string entry;
    while (std::getline(es, entry, ',')) r.push_back(parse_rational(entry));
    if (!rows.empty() && r.size() != rows.front().size()) throw InputError("ragged --matrix");
    rows.push_back(std::move(r));
  }
  if (rows.empty()) throw InputError("empty --matrix");
  MatrixQ m(static_cast<Index>(rows.size()), static_cast<Index>(rows.front().size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t k = 0; k < rows[i].size(); ++k) m(static_cast<Index>(i), static_cast<Index>(k)) = rows[i][k];
  return m;
}

Outcome do_validate(const Session& s, const std::string& file, const std::string& subgroup_file) {
  const Json j = read_json_file(file);
  Outcome o;
  if (j.contains("basis_matrices")) {
    const RealizationPtr r = realization_from_json(j, s.tolerance);
    const ValidationReport v = validate_structure(r->algebra());
    o.result["kind"] = "realization";
    o.result["algebra"] = r->algebra().name();
    o.result["dim"] = r->algebra().dim();
    o.result["structure"] = to_json(v);
    o.result["mode"] = to_string(r->mode());
    o.result["matrix_size"] = r->matrix_size();
    o.result["faithful"] = r->faithful();
    o.warnings = r->warnings();
    if (!subgroup_file.empty()) {
      const GeneratedSubgroup sub = subgroup_from_json(read_json_file(subgroup_file), r);
      o.result["subgroup_generators"] = sub.generators.size();
    }
    if (!r->exact()) o.exactness = "numeric";
    o.code = v.valid() ? kExitOk : kExitInput;
  } else {
    if (!subgroup_file.empty()) throw InputError("a subgroup file needs a realization, not a bare algebra");
    const LieAlgebra g = algebra_from_json(j);
    const ValidationReport v = validate_structure(g);
    o.result["kind"] = "algebra";
    o.result["algebra"] = g.name();
    o.result["dim"] = g.dim();
    o.result["structure"] = to_json(v);
    o.code = v.valid() ? kExitOk : kExitInput;
  }
  return o;
}

Outcome do_classify(const Session& s, const std::string& file) {
  const LieAlgebra g = algebra_of(read_json_file(file), s.tolerance);
  ClassificationReport report = classify(g, s.tolerance);
  for (auto& note : adjudicate_claim(g.name(), report)) report.notes.push_back(std::move(note));
  Outcome o;
  o.result = to_json(report);
  o.result["algebra"] = g.name();
  o.exactness = to_string(report.exactness);
  return o;
}

Outcome do_hull(const Session& s, const std::string& rfile, const std::string& gfile,
                const std::string& method, bool verify) {
  const RealizationPtr r = realization_from_json(read_json_file(rfile), s.tolerance);
  const GeneratedSubgroup gamma = subgroup_from_json(read_json_file(gfile), r);
  Outcome o;
  HullReport report;
  if (method == "log-span") {
    report = log_span_hull(gamma, s.tolerance);
  } else if (method == "abelian") {
    report = abelian_hull(gamma, s.tolerance);
  } else {
    RecursiveHull rh = hull_recursive(gamma, s.tolerance);
    report = std::move(rh.report);
    o.result["trace"] = to_json(rh.trace);
  }
  o.result["report"] = to_json(report);
  bool ok = report.passed();
  if (verify) {
    const HullReport v = hull_verify(gamma, report.hull, s.tolerance);
    o.result["verification"] = to_json(v);
    ok = ok && v.passed();
  }
  o.exactness = to_string(report.exactness);
  o.warnings = report.warnings;
  for (const auto& w : r->warnings()) o.warnings.push_back(w);
  o.code = ok ? kExitOk : kExitComputation;
  return o;
}

Outcome do_rigidity(const Session& s, const std::string& file, int trials) {
  const RigidityInput in = rigidity_input_from_json(read_json_file(file), s.tolerance);
  const RigidityReport report = extend_isomorphism(in, s.tolerance);
  Outcome o;
  o.result = to_json(report);
  o.exactness = to_string(report.exactness);
  o.warnings = report.warnings;
  if (report.verdict != Verdict::Extended) {
    o.code = kExitComputation;
    return o;
  }
  std::mt19937_64 rng(s.seed);
  const UniquenessReport u = check_uniqueness(in, trials, rng, nielsen_regenerator(), s.tolerance);
  o.result["uniqueness"] = {{"unique", u.unique}, {"trials", u.trials}};
  if (!u.unique) o.code = kExitComputation;
  return o;
}

Outcome do_density(const Session& s, const std::string& rfile, const std::string& gfile,
                   const std::string& quotient_file) {
  const RealizationPtr r = realization_from_json(read_json_file(rfile), s.tolerance);
  const GeneratedSubgroup gamma = subgroup_from_json(read_json_file(gfile), r);
  Outcome o;
  o.result = to_json(is_algebraically_dense_unipotent(gamma, s.tolerance));
  o.result["hull"] = to_json(hull_via_density(gamma, s.tolerance));
  if (!quotient_file.empty()) {
    const Subspace ideal = subspace_from_json(read_json_file(quotient_file), r->algebra().dim());
    o.result["quotient"] = to_json(density_in_quotient(gamma, ideal, s.tolerance));
  }
  if (!r->exact()) o.exactness = "numeric";
  return o;
}

Outcome do_catalog(const std::string& name, Index n, const std::string& matrix,
                   const std::string& out_dir) {
  CatalogParams params;
  params.n = n;
  if (!matrix.empty()) params.matrix = parse_matrix_arg(matrix);
  const CatalogEntry entry = catalog(name, params);
  const std::filesystem::path dir(out_dir);
  std::filesystem::create_directories(dir);
  const std::string stem = entry.realization->algebra().name();
  const std::string rpath = (dir / (stem + "_realization.json")).string();
  const std::string gpath = (dir / (stem + "_subgroup.json")).string();
  write_json_file(rpath, to_json(*entry.realization));
  write_json_file(gpath, to_json(entry.subgroup));
  Outcome o;
  o.result["name"] = entry.name;
  o.result["algebra"] = stem;
  o.result["mode"] = to_string(entry.realization->mode());
  o.result["generators"] = entry.subgroup.generators.size();
  o.result["files"] = {rpath, gpath};
  o.result["notes"] = entry.notes;
  o.exactness = entry.realization->exact() ? "exact" : "numeric";
  return o;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Syndetic hulls, classification and rigidity for solvable Lie groups", "lieshull"};
  app.require_subcommand(1);
  app.fallthrough();
  Session session;
  app.add_option("--tolerance", session.tolerance, "numeric tolerance")
      ->envname("LIESHULL_TOLERANCE")
      ->check(CLI::PositiveNumber);
  app.add_option("--output", session.output, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", session.seed, "seed for randomized checks");

  std::string file, second, method = "log-span", quotient, name, matrix, out_dir = ".";
  bool verify = false;
  int trials = 10;
  Index n = 3;

  auto* validate = app.add_subcommand("validate", "check an algebra or realization (and subgroup) file");
  validate->add_option("file", file)->required();
  validate->add_option("subgroup", second);
  auto* classify_cmd = app.add_subcommand("classify", "nilpotent / completely solvable / exponential");
  classify_cmd->add_option("file", file)->required();
  auto* hull = app.add_subcommand("hull", "syndetic hull of a generated subgroup");
  hull->add_option("realization", file)->required();
  hull->add_option("subgroup", second)->required();
  hull->add_option("--method", method)->check(CLI::IsMember({"log-span", "recursive", "abelian"}));
  hull->add_flag("--verify", verify);
  auto* rigidity = app.add_subcommand("rigidity", "extend a lattice homomorphism to an isomorphism");
  rigidity->add_option("input", file)->required();
  rigidity->add_option("--trials", trials, "uniqueness trials")->check(CLI::NonNegativeNumber);
  auto* density = app.add_subcommand("density", "algebraic density of the adjoint image");
  density->add_option("realization", file)->required();
  density->add_option("subgroup", second)->required();
  density->add_option("--quotient", quotient, "ideal JSON");
  auto* catalog_cmd = app.add_subcommand("catalog", "write a catalog realization and subgroup");
  catalog_cmd->add_option("name", name)->required();
  catalog_cmd->add_option("--n", n, "dimension parameter");
  catalog_cmd->add_option("--matrix", matrix, "integer matrix as \"a,b;c,d\"");
  catalog_cmd->add_option("--out-dir", out_dir);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n" << app.help();
    return kExitInput;
  }

  const auto start = std::chrono::steady_clock::now();
  const std::string sub = app.get_subcommands().front()->get_name();
  std::vector<std::string> inputs;
  for (const auto* p : {&file, &second, &quotient})
    if (!p->empty() && sub != "catalog") inputs.push_back(*p);
  try {
    Outcome o;
    if (sub == "validate") o = do_validate(session, file, second);
    else if (sub == "classify") o = do_classify(session, file);
    else if (sub == "hull") o = do_hull(session, file, second, method, verify);
    else if (sub == "rigidity") o = do_rigidity(session, file, trials);
    else if (sub == "density") o = do_density(session, file, second, quotient);
    else o = do_catalog(name, n, matrix, out_dir);

    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
    Json report;
    report["subcommand"] = sub;
    report["inputs_digest"] = fnv1a_digest(inputs);
    report["tolerance"] = session.tolerance;
    report["seed"] = session.seed;
    report["exactness"] = o.exactness;
    report["result"] = std::move(o.result);
    report["warnings"] = o.warnings;
    report["exit_code"] = o.code;
    report["timing_ms"] = elapsed.count();
    out << (session.output == "json" ? report.dump(2) + "\n" : flatten_text(report));
    return o.code;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const PreconditionError& e) {
    err << "precondition unmet: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const ComputationError& e) {
    err << "computation failed: " << e.what() << "\n";
    return kExitComputation;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace lieshull
