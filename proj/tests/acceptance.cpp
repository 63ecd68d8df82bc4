// End-to-end acceptance checks. One PASS/FAIL line per criterion; exits
// nonzero if any criterion fails.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "lieshull/classify.hpp"
#include "lieshull/cli.hpp"
#include "lieshull/density.hpp"
#include "lieshull/hull.hpp"
#include "lieshull/io.hpp"
#include "lieshull/matrix_functions.hpp"
#include "lieshull/rigidity.hpp"
#include "support.hpp"

using namespace lieshull;
using namespace lieshull::testing;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// log(I + N) = sum_{k=1..n} (-1)^(k+1) N^k / k, terms accumulated one at a time.
MatrixQ series_log(const MatrixQ& u) {
  const Index n = u.rows();
  const MatrixQ nil = u - MatrixQ::Identity(n, n);
  MatrixQ out = MatrixQ::Zero(n, n);
  MatrixQ power = MatrixQ::Identity(n, n);
  for (Index k = 1; k <= n; ++k) {
    power = (power * nil).eval();
    const Rational coeff = Rational(k % 2 ? 1 : -1) / Rational(static_cast<int>(k));
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) out(i, j) += coeff * power(i, j);
  }
  return out;
}

Outcome exp_log_round_trip() {
  Outcome o;
  std::mt19937_64 rng(1001);
  const auto t0 = std::chrono::steady_clock::now();
  int count = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const Index n = 3 + trial % 4;
    const MatrixQ nil = random_strict_upper(rng, n, 5);
    o.require(unipotent_log<Rational>(nilpotent_exp<Rational>(nil)) == nil,
              "round trip mismatch at trial " + std::to_string(trial));
    ++count;
  }
  const double elapsed = seconds_since(t0);
  o.require(elapsed < 5.0, "took " + std::to_string(elapsed) + " s");
  if (o.ok) o.detail = std::to_string(count) + " matrices in " + std::to_string(elapsed) + " s";
  return o;
}

Outcome log_matches_series() {
  Outcome o;
  std::mt19937_64 rng(1002);
  for (int trial = 0; trial < 50; ++trial) {
    const MatrixQ u = random_unipotent(rng, 3 + trial % 4);
    o.require(unipotent_log<Rational>(u) == series_log(u), "disagreement at trial " + std::to_string(trial));
  }
  if (o.ok) o.detail = "50 unipotent matrices";
  return o;
}

Outcome classification_table() {
  Outcome o;
  struct Row {
    std::string name;
    LieAlgebra g;
    Tri nil, cs, exp;
  };
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<Row> rows{
      {"h3", h3(), Tri::True, Tri::True, Tri::True},
      {"aff1", aff1(), Tri::False, Tri::True, Tri::True},
      {"rotation", semidirect_abelian(mat2(0, -1, 1, 0)), Tri::False, Tri::False, Tri::False},
      {"spiral", semidirect_abelian(mat2(1, -1, 1, 1)), Tri::False, Tri::False, Tri::True},
  };
  for (const auto& row : rows) {
    const ClassificationReport r = classify(row.g);
    o.require(r.nilpotent == row.nil && r.completely_solvable == row.cs && r.exponential == row.exp,
              row.name + " verdicts differ");
    o.require(r.exactness == Exactness::Exact, row.name + " not exact");
  }
  const double elapsed = seconds_since(t0);
  o.require(elapsed < 1.0, "took " + std::to_string(elapsed) + " s");
  if (o.ok) o.detail = "4 rows in " + std::to_string(elapsed) + " s";
  return o;
}

std::vector<GroupElement> regenerate(const std::vector<GroupElement>& gens, std::mt19937_64& rng) {
  auto out = apply_moves(gens, random_nielsen_moves(gens.size(), 10, rng));
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  const GroupElement by = multiply(gens[pick(rng)], inverse(gens[pick(rng)]));
  for (auto& g : out) g = conjugate(g, by);
  out.push_back(multiply(out[0], out[out.size() - 1]));
  return out;
}

Outcome heisenberg_hulls() {
  Outcome o;
  const CatalogEntry h = catalog("heisenberg");
  const auto& r = h.realization;
  const GroupElement x = group_exp(r, vec({1, 0, 0})), z = group_exp(r, vec({0, 0, 1}));
  o.require(log_span_hull(h.subgroup).hull.dim() == 3, "standard lattice hull is not 3-dimensional");
  o.require(log_span_hull(GeneratedSubgroup(r, {x})).hull.dim() == 1, "{exp X} hull is not 1-dimensional");
  o.require(log_span_hull(GeneratedSubgroup(r, {x, z})).hull.dim() == 2, "{exp X, exp Z} hull is not 2-dimensional");

  std::mt19937_64 rng(1004);
  for (const auto& gens : {h.subgroup.generators, std::vector<GroupElement>{x, z}}) {
    const MatrixQ reference = log_span_hull(GeneratedSubgroup(r, gens)).hull.basis();
    for (int trial = 0; trial < 20; ++trial)
      o.require(log_span_hull(GeneratedSubgroup(r, regenerate(gens, rng))).hull.basis() == reference,
                "regenerated word set changed the basis at trial " + std::to_string(trial));
  }
  if (o.ok) o.detail = "dims 3/1/2, 40 regenerations stable";
  return o;
}

std::vector<CatalogEntry> completely_solvable_catalog() {
  std::vector<CatalogEntry> out{catalog("heisenberg"), catalog("heisenberg", CatalogParams{5, std::nullopt}),
                                catalog("abelian", CatalogParams{3, std::nullopt}), catalog("aff1")};
  for (const MatrixQ& a : {mat2(2, 1, 1, 1), mat2(3, 1, 2, 1), mat2(5, 2, 2, 1)}) {
    CatalogParams p;
    p.matrix = a;
    out.push_back(catalog("semidirect_integer", p));
  }
  return out;
}

Outcome recursive_matches_log_span() {
  Outcome o;
  int count = 0;
  for (const auto& e : completely_solvable_catalog()) {
    o.require(e.realization->algebra().dim() <= 6, e.name + " too large");
    const RecursiveHull rh = hull_recursive(e.subgroup);
    o.require(rh.report.hull == log_span_hull(e.subgroup).hull, e.name + ": subspaces differ");
    ++count;
  }
  o.require(count >= 5, "only " + std::to_string(count) + " instances");
  if (o.ok) o.detail = std::to_string(count) + " instances agree";
  return o;
}

MatrixQ h3_automorphism(int b, int e, int f) {
  MatrixQ m = MatrixQ::Identity(3, 3);
  m(0, 1) = b;
  m(2, 0) = e;
  m(2, 1) = f;
  return m;
}

Outcome rigidity() {
  Outcome o;
  std::mt19937_64 rng(1006);
  std::uniform_int_distribution<int> d(-3, 3);
  const CatalogEntry h = catalog("heisenberg");
  for (int trial = 0; trial < 10; ++trial) {
    const MatrixQ psi = h3_automorphism(d(rng), d(rng), d(rng));
    RigidityInput in{h.realization, h.realization, h.subgroup.generators, {}};
    for (const auto& g : h.subgroup.generators)
      in.images.push_back(group_exp(h.realization, VectorQ(psi * *group_log(g).exact)));
    const RigidityReport r = extend_isomorphism(in);
    o.require(r.verdict == Verdict::Extended && r.phi && *r.phi == psi,
              "automorphism not recovered at trial " + std::to_string(trial));
    if (r.verdict == Verdict::Extended)
      o.require(check_uniqueness(in, 10, rng).unique, "uniqueness failed at trial " + std::to_string(trial));
  }

  const CatalogEntry a = catalog("abelian", CatalogParams{2, std::nullopt});
  auto at = [&](std::initializer_list<int> x) { return group_exp(a.realization, vec(x)); };
  const RigidityReport plane =
      extend_isomorphism({a.realization, a.realization, a.subgroup.generators, {at({2, 1}), at({1, 1})}});
  o.require(plane.phi && *plane.phi == mat2(2, 1, 1, 1), "plane example did not give [[2,1],[1,1]]");

  const RigidityInput flat{a.realization, a.realization, a.subgroup.generators, {at({1, 1}), at({2, 2})}};
  o.require(extend_isomorphism(flat).verdict == Verdict::Failed, "rank-deficient image was extended");

  const auto dir = std::filesystem::temp_directory_path() / "lieshull_acceptance";
  std::filesystem::create_directories(dir);
  const std::string file = (dir / "flat.json").string();
  Json j;
  j["source"] = to_json(*a.realization);
  j["target"] = to_json(*a.realization);
  j["generators"] = to_json(a.subgroup)["generators"];
  j["images"] = to_json(GeneratedSubgroup(a.realization, flat.images))["generators"];
  write_json_file(file, j);
  const char* argv[] = {"lieshull", "rigidity", file.c_str()};
  std::ostringstream out, err;
  const int code = run(3, argv, out, err);
  std::filesystem::remove_all(dir);
  o.require(code == kExitComputation, "rigidity CLI exit code " + std::to_string(code) + ", expected 2");
  if (o.ok) o.detail = "10 automorphisms recovered and unique; plane exact; failure exits 2";
  return o;
}

GeneratedSubgroup free_nilpotent_lattice() {
  const FreeNilpotent f = free_nilpotent_rank2_step3();
  const RealizationPtr r = MatrixRealization::from_exact(f.algebra, f.basis);
  return GeneratedSubgroup(r, {group_exp(r, vec({1, 0, 0, 0, 0})), group_exp(r, vec({0, 1, 0, 0, 0}))});
}

Outcome density_conformance() {
  Outcome o;
  std::vector<std::pair<std::string, GeneratedSubgroup>> lattices{
      {"heisenberg 3", catalog("heisenberg").subgroup},
      {"heisenberg 5", catalog("heisenberg", CatalogParams{5, std::nullopt}).subgroup},
      {"free nilpotent", free_nilpotent_lattice()}};
  for (Index n = 1; n <= 3; ++n)
    lattices.push_back({"abelian " + std::to_string(n), catalog("abelian", CatalogParams{n, std::nullopt}).subgroup});
  for (const auto& [name, gamma] : lattices)
    o.require(is_algebraically_dense_unipotent(gamma).dense, name + " lattice not dense");

  const CatalogEntry h = catalog("heisenberg");
  const GeneratedSubgroup single(h.realization, {h.subgroup.generators[0]});
  o.require(!is_algebraically_dense_unipotent(single).dense, "rank-deficient subgroup reported dense");

  std::vector<std::pair<std::string, GeneratedSubgroup>> cases = lattices;
  cases.push_back({"heisenberg single", single});
  cases.push_back({"heisenberg x z", GeneratedSubgroup(h.realization, {h.subgroup.generators[0],
                                                                       group_exp(h.realization, vec({0, 0, 1}))})});
  std::mt19937_64 rng(1007);
  int quotients = 0, subspaces = 0;
  for (const auto& [name, gamma] : cases) {
    const LieAlgebra& g = gamma.realization->algebra();
    std::vector<Subspace> ideals{Subspace(g.dim()), center(g)};
    for (const auto& s : lower_central_series(g)) ideals.push_back(s);
    for (const auto& s : derived_series(g)) ideals.push_back(s);

    if (is_algebraically_dense_unipotent(gamma).dense) {
      for (const auto& ideal : ideals) {
        o.require(density_in_quotient(gamma, ideal).dense, name + ": density lost in a quotient");
        ++quotients;
      }
    }
    std::vector<Subspace> probes = ideals;
    for (Index i = 0; i < g.dim(); ++i) {
      probes.push_back(Subspace::from_vectors({g.basis_vector(i)}, g.dim()));
      probes.push_back(lie_closure(g, {g.basis_vector(i), random_vector(rng, g.dim(), 1, 1)}));
    }
    for (const auto& p : probes) {
      const InvarianceReport r = invariant_implies_ideal(gamma, p);
      const bool invariant = std::all_of(r.invariant.begin(), r.invariant.end(), [](bool b) { return b; });
      o.require(r.conforms && (!(r.dense && invariant) || r.is_ideal), name + ": invariant subspace is not an ideal");
      ++subspaces;
    }
  }
  if (o.ok)
    o.detail = std::to_string(lattices.size()) + " lattices dense, " + std::to_string(quotients) + " quotients, " +
               std::to_string(subspaces) + " subspaces";
  return o;
}

Outcome structural_properties() {
  Outcome o;
  std::mt19937_64 rng(1008);
  int violations = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const LieAlgebra g = random_nilpotent_algebra(rng, 6);
    const Index n = g.dim();
    if (!validate_structure(g).valid() || !brute_force_jacobi(g).empty()) ++violations;
    std::vector<VectorQ> seeds{random_vector(rng, n)};
    if (trial % 2) seeds.push_back(random_vector(rng, n));
    const Subspace u = lie_closure(g, seeds);
    const Subspace c = centralizer_subalg(g, u), nz = normalizer_subalg(g, u);
    if (!nz.contains(c)) ++violations;
    if (!is_subalgebra(g, c) || !is_subalgebra(g, nz)) ++violations;
    if (!c.contains(center(g))) ++violations;
    // u is an ideal of its normalizer: [N(u), u] stays in u.
    for (const auto& x : nz.vectors())
      for (const auto& y : u.vectors())
        if (!u.contains(table_bracket(g, x, y))) ++violations;
  }
  o.require(violations == 0, std::to_string(violations) + " violations");
  if (o.ok) o.detail = "50 algebras, zero violations";
  return o;
}

Outcome example_adjudication() {
  Outcome o;
  const CatalogEntry e = catalog("paper_example");
  ClassificationReport r = classify(e.realization->algebra());
  const std::vector<std::string> notes = adjudicate_claim(e.name, r);
  o.require(r.completely_solvable != Tri::Undetermined && r.exponential != Tri::Undetermined,
            "verdicts undetermined");
  const bool has_note = std::any_of(notes.begin(), notes.end(),
                                    [](const std::string& s) { return s.find("discrepancy") != std::string::npos; });
  o.require(has_note == (r.exponential == Tri::False), "discrepancy note inconsistent with verdict");
  const Json j = to_json(r);
  o.require(j.contains("exactness"), "report lacks an exactness marker");
  if (o.ok)
    o.detail = "completely_solvable=" + to_string(r.completely_solvable) + " exponential=" +
               to_string(r.exponential) + " (" + to_string(r.exactness) + ")" + (has_note ? ", note present" : "");
  return o;
}

std::set<std::array<Index, 3>> sorted_triples(const std::vector<std::array<Index, 3>>& raw) {
  std::set<std::array<Index, 3>> out;
  for (auto t : raw) {
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) continue;
    std::sort(t.begin(), t.end());
    out.insert(t);
  }
  return out;
}

bool flags_exact_triples(const LieAlgebra& g) {
  std::vector<std::array<Index, 3>> reported;
  for (const auto& v : validate_structure(g).violations) reported.push_back({v.i, v.j, v.k});
  return sorted_triples(reported) == sorted_triples(brute_force_jacobi(g));
}

Outcome validator_sensitivity() {
  Outcome o;
  int still_valid = 0, flagged = 0;
  for (Index i = 0; i < 3; ++i)
    for (Index j = i + 1; j < 3; ++j)
      for (Index k = 0; k < 3; ++k) {
        std::map<std::pair<Index, Index>, std::map<Index, Rational>> table{{{0, 1}, {{2, Rational(1)}}}};
        table[{i, j}][k] += 1;
        std::vector<BracketEntry> entries;
        for (const auto& [ij, coeffs] : table) entries.push_back({ij.first, ij.second, coeffs});
        const LieAlgebra g("h3+", {"X", "Y", "Z"}, entries);
        const bool brute_valid = brute_force_jacobi(g).empty();
        o.require(validate_structure(g).valid() == brute_valid, "verdict disagrees with brute force");
        o.require(flags_exact_triples(g), "wrong triple reported");
        brute_valid ? ++still_valid : ++flagged;
      }

  // Filiform [e0,e1]=e2, [e0,e2]=e3 with [e1,e2]=e1 added.
  const LieAlgebra four("filiform+", {"e0", "e1", "e2", "e3"},
                        {{0, 1, {{2, Rational(1)}}}, {0, 2, {{3, Rational(1)}}}, {1, 2, {{1, Rational(1)}}}});
  const ValidationReport r = validate_structure(four);
  o.require(!r.valid(), "4-dim corruption not flagged");
  o.require(flags_exact_triples(four), "4-dim corruption flagged at the wrong triple");
  if (o.ok)
    o.detail = std::to_string(still_valid) + " corruptions still Jacobi, " + std::to_string(flagged) +
               " flagged; 4-dim case flagged at (0,1,2)";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"exp/log round trip on strictly upper triangular matrices", exp_log_round_trip},
      {"unipotent log matches the series oracle", log_matches_series},
      {"classification table", classification_table},
      {"Heisenberg hulls and generator invariance", heisenberg_hulls},
      {"recursive hull agrees with log-span hull", recursive_matches_log_span},
      {"rigidity", rigidity},
      {"density conformance", density_conformance},
      {"structural properties of random nilpotent algebras", structural_properties},
      {"order-six example adjudication", example_adjudication},
      {"validator sensitivity", validator_sensitivity},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.ok) ++failures;
    std::cout << (o.ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": " << o.detail << "\n";
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
