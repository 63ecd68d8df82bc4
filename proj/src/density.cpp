#include "lieshull/density.hpp"

#include "lieshull/matrix_functions.hpp"

namespace lieshull {

namespace {

BracketFn operator_bracket(Index n) {
  return [n](const VectorQ& a, const VectorQ& b) {
    return vectorize(commutator(unvectorize(a, n, n), unvectorize(b, n, n)));
  };
}

Subspace ad_image_of(const LieAlgebra& g) {
  std::vector<VectorQ> v;
  for (Index i = 0; i < g.dim(); ++i) v.push_back(vectorize(g.ad_basis(i)));
  return Subspace::from_vectors(v, g.dim() * g.dim());
}

/// Rows spanning the annihilator of s under the standard pairing.
MatrixQ annihilator_rows(const Subspace& s) {
  if (s.is_zero()) return MatrixQ::Identity(s.ambient_dim(), s.ambient_dim());
  return nullspace(s.basis()).transpose();
}

}  // namespace

AdjointSubgroup adjoint_subgroup(const GeneratedSubgroup& gamma, double tol) {
  AdjointSubgroup out;
  out.algebra = gamma.realization->algebra();
  out.ad_image = ad_image_of(out.algebra);
  const Index n = out.algebra.dim();
  for (const auto& x : gamma.generators) {
    const AdjointMatrix a = adjoint_of(x, tol);
    MatrixQ m = a.exact ? *a.exact : rationalize(a.value, tol);
    out.unipotent.push_back(is_nilpotent_matrix<Rational>(m - MatrixQ::Identity(n, n)));
    out.generator_ad.push_back(std::move(m));
  }
  return out;
}

DensityReport density_from_adjoint(const LieAlgebra& g, const std::vector<MatrixQ>& ads) {
  const Index n = g.dim();
  std::vector<VectorQ> seeds;
  for (std::size_t i = 0; i < ads.size(); ++i) {
    if (!is_nilpotent_matrix<Rational>(ads[i] - MatrixQ::Identity(n, n))) {
      throw PreconditionError("Ad of generator " + std::to_string(i) +
                              " is not unipotent; only unipotent closures are supported");
    }
    seeds.push_back(vectorize(unipotent_log(ads[i])));
  }
  DensityReport report;
  report.closure = span_closure(seeds, n * n, operator_bracket(n));
  report.ad_image = ad_image_of(g);
  report.dense = report.closure == report.ad_image;
  if (!report.ad_image.contains(report.closure))
    report.notes.push_back("closure algebra is not contained in ad(g)");
  report.notes.push_back("closure dimension " + std::to_string(report.closure.dim()) +
                         ", ad(g) dimension " + std::to_string(report.ad_image.dim()));
  return report;
}

DensityReport is_algebraically_dense_unipotent(const GeneratedSubgroup& gamma, double tol) {
  const AdjointSubgroup adg = adjoint_subgroup(gamma, tol);
  return density_from_adjoint(adg.algebra, adg.generator_ad);
}

InvarianceReport invariant_implies_ideal(const GeneratedSubgroup& gamma, const Subspace& h,
                                         bool assume_dense, double tol) {
  const AdjointSubgroup adg = adjoint_subgroup(gamma, tol);
  if (h.ambient_dim() != adg.algebra.dim())
    throw InputError("invariant_implies_ideal: subspace has the wrong ambient dimension");
  InvarianceReport report;
  for (std::size_t i = 0; i < adg.generator_ad.size(); ++i) {
    const bool inv = h.image(adg.generator_ad[i]) == h;
    report.invariant.push_back(inv);
    if (!inv && !report.failing_generator) report.failing_generator = i;
  }
  report.density_asserted = assume_dense;
  report.dense = assume_dense || density_from_adjoint(adg.algebra, adg.generator_ad).dense;
  report.is_ideal = is_ideal(adg.algebra, h);
  report.conforms = !(report.dense && !report.failing_generator) || report.is_ideal;
  return report;
}

DensityReport density_in_quotient(const GeneratedSubgroup& gamma, const Subspace& ideal, double tol) {
  const AdjointSubgroup adg = adjoint_subgroup(gamma, tol);
  const Quotient q = quotient_algebra(adg.algebra, ideal);
  std::vector<MatrixQ> induced;
  for (const auto& m : adg.generator_ad) {
    if (ideal.image(m) != ideal) throw ComputationError("density_in_quotient: Ad moves the ideal");
    induced.push_back(q.projection * m * q.lift);
  }
  DensityReport report = density_from_adjoint(q.algebra, induced);
  report.notes.push_back("quotient of dimension " + std::to_string(q.algebra.dim()));
  return report;
}

HullReport hull_via_density(const GeneratedSubgroup& gamma, double tol) {
  const AdjointSubgroup adg = adjoint_subgroup(gamma, tol);
  const LieAlgebra& g = adg.algebra;
  if (!is_solvable(g)) throw PreconditionError("hull_via_density: algebra is not solvable");
  const DensityReport density = density_from_adjoint(g, adg.generator_ad);
  HullReport report = log_span_hull(gamma, tol);
  report.method = HullMethod::Density;
  if (density.dense) {
    report.justification = "algebraically dense: the syndetic hull exists and is the log-span hull";
    return report;
  }

  const Index n = g.dim();
  MatrixQ ad_columns(n * n, n);
  for (Index i = 0; i < n; ++i) ad_columns.col(i) = vectorize(g.ad_basis(i));
  const Subspace preimage =
      Subspace::from_columns(nullspace(MatrixQ(annihilator_rows(density.closure) * ad_columns)));
  if (!is_subalgebra(g, preimage))
    throw ComputationError("hull_via_density: ad-preimage is not bracket-closed");
  if (!preimage.contains(report.hull))
    throw ComputationError("hull_via_density: generator logs leave the ad-preimage");

  const LieAlgebra sub = subalgebra(g, preimage);
  std::vector<MatrixQ> restricted;
  for (const auto& m : adg.generator_ad) {
    MatrixQ r(preimage.dim(), preimage.dim());
    for (Index k = 0; k < preimage.dim(); ++k) {
      const VectorQ w = m * preimage.vector(k);
      if (!preimage.contains(w)) throw ComputationError("hull_via_density: Ad moves the ad-preimage");
      r.col(k) = preimage.coordinates(w);
    }
    restricted.push_back(std::move(r));
  }
  const DensityReport inner = density_from_adjoint(sub, restricted);
  report.justification = "not dense; restricted to the ad-preimage of the closure algebra (dimension " +
                         std::to_string(preimage.dim()) + "), dense there: " +
                         (inner.dense ? "yes" : "no");
  if (!inner.dense)
    report.warnings.push_back("not dense in the ad-preimage; syndetic property not certified");
  return report;
}

}  // namespace lieshull
