#include "lieshull/hull.hpp"

#include <sstream>

namespace lieshull {

std::string to_string(HullMethod m) {
  switch (m) {
    case HullMethod::LogSpan: return "log-span";
    case HullMethod::Abelian: return "abelian";
    case HullMethod::Recursive: return "recursive";
    case HullMethod::Density: return "density";
    default: return "verify";
  }
}

std::vector<VectorQ> generator_logs(const GeneratedSubgroup& gamma, double tol, Exactness* exactness,
                                    std::vector<Coordinates>* raw) {
  std::vector<VectorQ> logs;
  bool exact = true;
  for (const auto& g : gamma.generators) {
    Coordinates c = group_log(g, tol);
    exact = exact && c.exact.has_value();
    logs.push_back(rational_coordinates(c, tol));
    if (raw) raw->push_back(std::move(c));
  }
  if (exactness) *exactness = exact ? Exactness::Exact : Exactness::Numeric;
  return logs;
}

namespace {

double inf_norm(const Eigen::VectorXd& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

/// Ad(x) h = h, exactly or within tol.
bool ad_invariant(const GroupElement& x, const Subspace& h, double tol) {
  const AdjointMatrix a = adjoint_of(x, tol);
  if (a.exact) return h.image(*a.exact) == h;
  for (Index k = 0; k < h.dim(); ++k) {
    const Eigen::VectorXd v = to_double(h.vector(k));
    const Eigen::VectorXd w = a.value * v;
    if (inf_norm(h.reduce(w)) > tol * std::max(1.0, inf_norm(w))) return false;
  }
  return true;
}

std::string describe_dims(const char* what, Index d) {
  return std::string(what) + " has dimension " + std::to_string(d);
}

struct Saturation {
  std::vector<GroupElement> words;
  Subspace hull;
  int rounds = 0;
  bool invariant = false;
};

/// Commutators of the generators, closed under conjugation by the generators
/// and further commutators until the Lie closure of their logs is Ad-invariant.
/// Words whose log already lies in the current closure are dropped: their
/// conjugates have logs in the conjugated closure, which the kept words span.
Saturation saturate_commutators(const GeneratedSubgroup& gamma, double tol) {
  const LieAlgebra& g = gamma.realization->algebra();
  const Index n = g.dim();
  Saturation sat;
  sat.hull = Subspace(n);
  std::vector<VectorQ> logs;
  auto consider = [&](const GroupElement& c) {
    VectorQ l = rational_coordinates(group_log(c, tol), tol);
    if (sat.hull.contains(l)) return;
    sat.words.push_back(c);
    logs.push_back(std::move(l));
    sat.hull = lie_closure(g, logs);
  };
  const auto& gens = gamma.generators;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) consider(commutator(gens[i], gens[j]));

  int stable = 0;
  while (true) {
    sat.invariant = true;
    for (const auto& x : gens) sat.invariant = sat.invariant && ad_invariant(x, sat.hull, tol);
    if (sat.invariant || stable >= 2) break;
    if (sat.rounds >= n) {
      throw ComputationError("commutator saturation did not stabilize within " + std::to_string(n) +
                             " rounds");
    }
    ++sat.rounds;
    const Index before = sat.hull.dim();
    const std::vector<GroupElement> current = sat.words;
    for (const auto& c : current) {
      for (const auto& x : gens) {
        consider(conjugate(c, x));
        consider(conjugate(c, inverse(x)));
        consider(commutator(x, c));
      }
    }
    stable = sat.hull.dim() == before ? stable + 1 : 0;
  }
  return sat;
}

struct Step {
  Subspace hull;
  TraceStep trace;
};

Step abelian_leaf(const GeneratedSubgroup& gamma, double tol) {
  const HullReport r = abelian_hull(gamma, tol);
  TraceStep leaf{"abelian base",
                 "commutators are trivial; hull is the span of the generator logs",
                 {{"h", r.hull}},
                 {}};
  return {r.hull, std::move(leaf)};
}

Step recursive_step(const GeneratedSubgroup& gamma, double tol, std::vector<std::string>& failures) {
  const LieAlgebra& g = gamma.realization->algebra();
  const Index n = g.dim();
  const Saturation sat = saturate_commutators(gamma, tol);
  if (sat.words.empty()) return abelian_leaf(gamma, tol);

  TraceStep root{"hull", std::to_string(gamma.generators.size()) + " generators", {}, {}};

  // (1) commutator subgroup and the hull of its saturated words.
  std::ostringstream detail;
  detail << sat.words.size() << " commutator words after " << sat.rounds
         << " saturation rounds; Ad-invariant: " << (sat.invariant ? "yes" : "no");
  TraceStep commutators{"commutator subgroup", detail.str(), {{"s'", sat.hull}}, {}};
  Step inner = recursive_step(GeneratedSubgroup(gamma.realization, sat.words), tol, failures);
  if (inner.hull != sat.hull)
    failures.push_back("recursive hull of the commutator words differs from their log-span hull");
  commutators.children.push_back(std::move(inner.trace));
  root.children.push_back(std::move(commutators));

  // (2) normalizer of s' and the quotient by s'.
  const Subspace normalizer = normalizer_subalg(g, sat.hull);
  const auto logs = generator_logs(gamma, tol);
  for (std::size_t i = 0; i < logs.size(); ++i) {
    if (!normalizer.contains(logs[i]))
      throw ComputationError("generator " + std::to_string(i) + " does not normalize s'");
  }
  const LieAlgebra sub = subalgebra(g, normalizer);
  std::vector<VectorQ> ideal_coords;
  for (const auto& v : sat.hull.vectors()) ideal_coords.push_back(normalizer.coordinates(v));
  const Quotient q = quotient_algebra(sub, Subspace::from_vectors(ideal_coords, normalizer.dim()));
  root.children.push_back(TraceStep{"normalizer and quotient",
                                    describe_dims("normalizer", normalizer.dim()) + "; " +
                                        describe_dims("quotient", q.algebra.dim()),
                                    {{"n(s')", normalizer}},
                                    {}});

  // (3) images of the generators in the quotient must commute.
  std::vector<VectorQ> images;
  for (const auto& l : logs) images.push_back(q.projection * normalizer.coordinates(l));
  for (std::size_t i = 0; i < images.size(); ++i) {
    for (std::size_t j = i + 1; j < images.size(); ++j) {
      if (!is_zero_matrix<Rational>(bracket(q.algebra, images[i], images[j]))) {
        throw ComputationError("quotient images of generators " + std::to_string(i) + " and " +
                               std::to_string(j) + " do not commute; saturation incomplete");
      }
    }
  }
  const Subspace base = Subspace::from_vectors(images, q.algebra.dim());
  root.children.push_back(TraceStep{"abelian base",
                                    describe_dims("span of quotient images", base.dim()),
                                    {{"base", base}},
                                    {}});

  // (4) preimage of the base hull.
  std::vector<VectorQ> lifted;
  for (const auto& b : base.vectors())
    lifted.push_back(normalizer.basis().transpose() * (q.lift * b));
  const Subspace hull = Subspace::from_vectors(lifted, n) + sat.hull;
  root.children.push_back(TraceStep{"preimage", describe_dims("hull", hull.dim()), {{"h", hull}}, {}});
  root.subspaces.push_back({"h", hull});
  return {hull, std::move(root)};
}

}  // namespace

HullReport log_span_hull(const GeneratedSubgroup& gamma, double tol) {
  const auto& r = *gamma.realization;
  const LieAlgebra& g = r.algebra();
  HullReport report;
  report.method = HullMethod::LogSpan;
  const auto logs = generator_logs(gamma, tol, &report.exactness);
  report.hull = lie_closure(g, logs);
  report.membership.assign(logs.size(), true);
  report.membership_residuals.assign(logs.size(), 0.0);
  report.bracket_closed = is_subalgebra(g, report.hull);
  if (r.exact()) {
    report.justification = "unipotent: Lie algebra of the Zariski closure of the generated subgroup";
    return report;
  }
  const ClassificationReport c = classify(g, tol);
  if (c.completely_solvable == Tri::True) {
    report.justification =
        "completely solvable: Lie algebra of the minimal connected subgroup containing the generated "
        "subgroup, its unique syndetic hull";
  } else {
    report.justification = "minimal connected subgroup containing the generated subgroup";
    report.warnings.push_back(
        "minimal connected subgroup only; syndetic property not guaranteed (algebra is not "
        "completely solvable)");
  }
  return report;
}

HullReport abelian_hull(const GeneratedSubgroup& gamma, double tol) {
  const auto& gens = gamma.generators;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!approx_equal(multiply(gens[i], gens[j]), multiply(gens[j], gens[i]), tol)) {
        throw PreconditionError("abelian_hull: generators " + std::to_string(i) + " and " +
                                std::to_string(j) + " do not commute");
      }
    }
  }
  const LieAlgebra& g = gamma.realization->algebra();
  HullReport report;
  report.method = HullMethod::Abelian;
  std::vector<Coordinates> raw;
  const auto logs = generator_logs(gamma, tol, &report.exactness, &raw);
  report.hull = Subspace::from_vectors(logs, g.dim());
  report.membership.assign(logs.size(), true);
  report.membership_residuals.assign(logs.size(), 0.0);
  report.justification = "abelian: span of the generator logs";

  for (std::size_t i = 0; i < gens.size(); ++i) {
    const AdjointMatrix a = adjoint_of(gens[i], tol);
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (i == j) continue;
      bool fixed;
      if (a.exact && raw[j].exact) {
        fixed = *a.exact * *raw[j].exact == *raw[j].exact;
      } else {
        const Eigen::VectorXd d = a.value * raw[j].value - raw[j].value;
        fixed = inf_norm(d) <= tol * std::max(1.0, inf_norm(raw[j].value));
      }
      if (!fixed) {
        report.failures.push_back("Ad of generator " + std::to_string(i) + " moves the log of generator " +
                                  std::to_string(j));
      }
    }
  }
  for (std::size_t i = 0; i < logs.size(); ++i) {
    for (std::size_t j = i + 1; j < logs.size(); ++j) {
      bool vanishes;
      if (raw[i].exact && raw[j].exact) {
        vanishes = is_zero_matrix<Rational>(bracket(g, logs[i], logs[j]));
      } else {
        Eigen::MatrixXd adi = Eigen::MatrixXd::Zero(g.dim(), g.dim());
        for (Index k = 0; k < g.dim(); ++k) adi += raw[i].value(k) * to_double(g.ad_basis(k));
        vanishes = inf_norm(adi * raw[j].value) <=
                   tol * std::max(1.0, inf_norm(raw[i].value) * inf_norm(raw[j].value));
      }
      if (!vanishes) {
        throw ComputationError("abelian_hull: logs of generators " + std::to_string(i) + " and " +
                               std::to_string(j) + " do not commute");
      }
    }
  }
  report.bracket_closed = true;
  return report;
}

HullReport hull_verify(const GeneratedSubgroup& gamma, const Subspace& h, double tol) {
  const LieAlgebra& g = gamma.realization->algebra();
  if (h.ambient_dim() != g.dim()) throw InputError("hull_verify: subspace has the wrong ambient dimension");
  if (!is_subalgebra(g, h)) throw InputError("hull_verify: subspace is not bracket-closed");
  HullReport report;
  report.method = HullMethod::Verify;
  report.hull = h;
  report.bracket_closed = true;
  std::vector<Coordinates> raw;
  const auto logs = generator_logs(gamma, tol, &report.exactness, &raw);

  for (std::size_t i = 0; i < logs.size(); ++i) {
    bool inside;
    double residual;
    if (raw[i].exact) {
      residual = inf_norm(to_double(h.reduce(logs[i])));
      inside = h.contains(logs[i]);
    } else {
      residual = inf_norm(h.reduce(raw[i].value));
      inside = residual <= tol * std::max(1.0, inf_norm(raw[i].value));
    }
    report.membership.push_back(inside);
    report.membership_residuals.push_back(residual);
    if (!inside) report.failures.push_back("membership fails for generator " + std::to_string(i));
  }
  for (std::size_t i = 0; i < gamma.generators.size(); ++i) {
    const bool inv = ad_invariant(gamma.generators[i], h, tol);
    report.ad_invariant.push_back(inv);
    if (!inv) report.failures.push_back("Ad-invariance fails for generator " + std::to_string(i));
  }
  const Subspace derived = bracket_span(g, h, h);
  const Subspace spanned = (Subspace::from_vectors(logs, g.dim()) + derived).intersect(h);
  report.abelianization_rank = spanned.dim() - derived.dim();
  report.abelianization_dim = h.dim() - derived.dim();
  if (*report.abelianization_rank < *report.abelianization_dim) {
    report.failures.push_back("generator logs have rank " + std::to_string(*report.abelianization_rank) +
                              " in the abelianization of dimension " +
                              std::to_string(*report.abelianization_dim));
  }
  report.justification = "certificates: membership, Ad-invariance, abelianization rank";
  return report;
}

RecursiveHull hull_recursive(const GeneratedSubgroup& gamma, double tol) {
  const auto& r = *gamma.realization;
  if (!r.exact()) {
    const ClassificationReport c = classify(r.algebra(), tol);
    if (c.completely_solvable != Tri::True)
      throw PreconditionError("hull_recursive: algebra is not completely solvable");
  }
  RecursiveHull out;
  HullReport& report = out.report;
  report.method = HullMethod::Recursive;
  const auto logs = generator_logs(gamma, tol, &report.exactness);
  Step step = recursive_step(gamma, tol, report.failures);
  report.hull = step.hull;
  for (const auto& l : logs) report.membership.push_back(report.hull.contains(l));
  report.membership_residuals.assign(logs.size(), 0.0);
  report.bracket_closed = is_subalgebra(r.algebra(), report.hull);
  report.justification = "four-step construction through the commutator subgroup";
  out.trace.root = std::move(step.trace);
  out.trace.notes.push_back(
      "the commutator subgroup is approximated by conjugation-saturated commutator words; "
      "saturation stops once their hull is Ad-invariant");

  const HullReport direct = log_span_hull(gamma, tol);
  if (direct.hull != report.hull)
    report.failures.push_back("recursive hull differs from the log-span hull");
  out.trace.notes.push_back(std::string("agrees with log-span hull: ") +
                            (direct.hull == report.hull ? "yes" : "no"));
  return out;
}

}  // namespace lieshull
