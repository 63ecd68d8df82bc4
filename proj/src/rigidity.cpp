#include "lieshull/rigidity.hpp"

#include <limits>
#include <sstream>

namespace lieshull {

std::string to_string(Verdict v) { return v == Verdict::Extended ? "extended" : "failed"; }

namespace {

RigidityReport fail(RigidityReport report, std::string reason) {
  report.verdict = Verdict::Failed;
  report.reason = std::move(reason);
  return report;
}

void check_input(const RigidityInput& in) {
  if (!in.source || !in.target) throw InputError("rigidity: missing realization");
  if (in.generators.empty()) throw InputError("rigidity: no generators");
  if (in.generators.size() != in.images.size())
    throw InputError("rigidity: generator and image counts differ");
  for (const auto& g : in.generators)
    if (g.realization() != in.source) throw InputError("rigidity: generator outside the source realization");
  for (const auto& g : in.images)
    if (g.realization() != in.target) throw InputError("rigidity: image outside the target realization");
}

}  // namespace

RigidityReport extend_isomorphism(const RigidityInput& in, double tol) {
  check_input(in);
  const LieAlgebra& g1 = in.source->algebra();
  const LieAlgebra& g2 = in.target->algebra();
  const Index n1 = g1.dim(), n2 = g2.dim();
  RigidityReport report;

  for (const auto* r : {in.source.get(), in.target.get()}) {
    if (r->exact()) continue;
    if (classify(r->algebra(), tol).completely_solvable != Tri::True) {
      report.warnings.push_back(
          "algebra " + r->algebra().name() +
          " is not completely solvable; lattices in such groups need not be strongly rigid, "
          "result not certified");
    }
  }

  Exactness e1, e2;
  const auto logs1 = generator_logs(GeneratedSubgroup(in.source, in.generators), tol, &e1);
  const auto logs2 = generator_logs(GeneratedSubgroup(in.target, in.images), tol, &e2);
  report.exactness = e1 == Exactness::Exact && e2 == Exactness::Exact ? Exactness::Exact
                                                                        : Exactness::Numeric;
  const LieAlgebra sum = direct_sum(g1, g2);
  std::vector<VectorQ> graph;
  for (std::size_t i = 0; i < logs1.size(); ++i) {
    VectorQ v(n1 + n2);
    v << logs1[i], logs2[i];
    graph.push_back(std::move(v));
  }
  report.graph_hull = lie_closure(sum, graph);
  const Index d = report.graph_hull.dim();
  if (d != n1) {
    return fail(std::move(report), "not uniform: graph hull has dimension " + std::to_string(d) +
                                       ", source algebra has dimension " + std::to_string(n1));
  }
  if (n1 != n2) {
    return fail(std::move(report), "source and target algebras have different dimensions");
  }
  // Pivots in the first n1 columns make the RREF basis [I | C]; phi = C^T.
  const auto& piv = report.graph_hull.pivots();
  report.projection_invertible = d == 0 || piv.back() < n1;
  if (!report.projection_invertible)
    return fail(std::move(report), "projection of the graph hull onto the source is singular");
  const MatrixQ phi = report.graph_hull.basis().rightCols(n2).transpose();
  report.phi = phi;

  report.homomorphism = is_lie_homomorphism(g1, g2, phi);
  report.invertible = rank(phi) == n1;
  for (std::size_t i = 0; i < logs1.size(); ++i) {
    const GroupElement mapped = group_exp(in.target, VectorQ(phi * logs1[i]));
    const Eigen::MatrixXd diff = mapped.numeric_matrix() - in.images[i].numeric_matrix();
    double residual = diff.size() ? diff.cwiseAbs().maxCoeff() : 0.0;
    if (mapped.exact() && in.images[i].exact()) {
      const bool equal = mapped.exact_matrix() == in.images[i].exact_matrix();
      residual = equal ? 0.0 : std::max(residual, std::numeric_limits<double>::min());
    }
    report.compatibility_residual = std::max(report.compatibility_residual, residual);
  }
  if (!report.homomorphism) return fail(std::move(report), "phi does not preserve brackets");
  if (!report.invertible) return fail(std::move(report), "phi is not invertible");
  double scale = 1.0;
  for (const auto& y : in.images) scale = std::max(scale, y.numeric_matrix().cwiseAbs().maxCoeff());
  const double allowed = report.exactness == Exactness::Exact ? 0.0 : 10 * tol * scale;
  if (report.compatibility_residual > allowed) {
    std::ostringstream msg;
    msg << "exp(phi(log gamma)) misses the prescribed image (residual " << report.compatibility_residual
        << ")";
    return fail(std::move(report), msg.str());
  }
  report.verdict = Verdict::Extended;
  return report;
}

Regenerator nielsen_regenerator(std::size_t moves) {
  return [moves](const std::vector<GroupElement>& gens, const std::vector<GroupElement>& images,
                 std::mt19937_64& rng) {
    const auto m = random_nielsen_moves(gens.size(), moves, rng);
    return std::make_pair(apply_moves(gens, m), apply_moves(images, m));
  };
}

UniquenessReport check_uniqueness(const RigidityInput& in, int trials, std::mt19937_64& rng,
                                  const Regenerator& regenerate, double tol) {
  const RigidityReport reference = extend_isomorphism(in, tol);
  if (reference.verdict != Verdict::Extended)
    throw PreconditionError("check_uniqueness: input does not extend (" + reference.reason + ")");
  UniquenessReport out;
  out.unique = true;
  for (int t = 0; t < trials; ++t) {
    auto [gens, images] = regenerate(in.generators, in.images, rng);
    const RigidityReport r = extend_isomorphism({in.source, in.target, gens, images}, tol);
    ++out.trials;
    if (r.graph_hull.dim() < reference.graph_hull.dim()) throw ComputationError("hull dimension drop");
    if (r.verdict != Verdict::Extended || !r.phi) {
      out.unique = false;
      continue;
    }
    if (reference.exactness == Exactness::Exact) {
      out.unique = out.unique && *r.phi == *reference.phi;
    } else {
      const double diff = (to_double(*r.phi) - to_double(*reference.phi)).cwiseAbs().maxCoeff();
      out.unique = out.unique && diff <= tol * std::max(1.0, to_double(*reference.phi).cwiseAbs().maxCoeff());
    }
  }
  return out;
}

}  // namespace lieshull
