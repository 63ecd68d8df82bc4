#include <cmath>

#include <gtest/gtest.h>

#include "lieshull/errors.hpp"
#include "lieshull/groups.hpp"
#include "lieshull/matrix_functions.hpp"
#include "support.hpp"

using namespace lieshull;
using namespace lieshull::testing;

namespace {

std::vector<CatalogEntry> all_entries() {
  std::vector<CatalogEntry> out;
  for (const auto& name : catalog_names()) {
    CatalogParams p;
    if (name == "semidirect_integer") p.matrix = mat2(2, 1, 1, 1);
    out.push_back(catalog(name, p));
  }
  CatalogParams h5;
  h5.n = 5;
  out.push_back(catalog("heisenberg", h5));
  return out;
}

double max_abs(const Eigen::MatrixXd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace

TEST(Realization, CommutatorsMatchStructureConstants) {
  for (const auto& e : all_entries()) {
    const auto& r = *e.realization;
    const LieAlgebra& g = r.algebra();
    for (Index i = 0; i < g.dim(); ++i) {
      for (Index j = 0; j < g.dim(); ++j) {
        const VectorQ c = g.structure(i, j);
        if (r.exact_basis()) {
          const auto& b = *r.exact_basis();
          const MatrixQ lhs = commutator(b[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(j)]);
          EXPECT_EQ(lhs, r.realize(c)) << e.name << " " << i << "," << j;
        } else {
          const auto& b = r.numeric_basis();
          const Eigen::MatrixXd lhs = b[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)] -
                                      b[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(i)];
          EXPECT_LE(max_abs(lhs - r.realize(to_double(c))), 1e-12) << e.name;
        }
      }
    }
    EXPECT_TRUE(validate_structure(g).valid()) << e.name;
  }
}

TEST(Realization, RejectsInconsistentBasis) {
  MatrixQ a = MatrixQ::Zero(3, 3), b = MatrixQ::Zero(3, 3), c = MatrixQ::Zero(3, 3);
  a(0, 1) = 1;
  b(1, 2) = 1;
  c(0, 2) = 2;  // [a, b] = E02, not 2 E02
  EXPECT_THROW(MatrixRealization::from_exact(h3(), {a, b, c}), InputError);
  EXPECT_THROW(MatrixRealization::from_exact(h3(), {a, b}), InputError);
}

TEST(Catalog, HeisenbergIsUnipotentWithIntegerGenerators) {
  const CatalogEntry e = catalog("heisenberg");
  EXPECT_EQ(e.realization->matrix_size(), 3);
  EXPECT_EQ(e.realization->mode(), Mode::UnipotentExact);
  ASSERT_EQ(e.subgroup.generators.size(), 2u);
  for (const auto& g : e.subgroup.generators) {
    const MatrixQ& m = g.exact_matrix();
    for (Index i = 0; i < m.rows(); ++i)
      for (Index j = 0; j < m.cols(); ++j) EXPECT_EQ(denominator(m(i, j)), 1);
  }
  EXPECT_THROW(catalog("heisenberg", CatalogParams{4, std::nullopt}), InputError);
}

TEST(Catalog, AbelianAndErrors) {
  const CatalogEntry e = catalog("abelian", CatalogParams{2, std::nullopt});
  EXPECT_EQ(e.subgroup.generators.size(), 2u);
  EXPECT_TRUE(e.realization->algebra().brackets().empty());
  EXPECT_THROW(catalog("nonesuch"), InputError);
  EXPECT_THROW(catalog("semidirect_integer"), InputError);
  CatalogParams neg;
  neg.matrix = mat2(-1, 0, 0, -1);
  try {
    catalog("semidirect_integer", neg);
    FAIL() << "expected InputError";
  } catch (const InputError& err) {
    EXPECT_NE(std::string(err.what()).find("no principal real logarithm"), std::string::npos);
  }
}

TEST(Catalog, OrderSixExampleLattice) {
  const CatalogEntry e = catalog("paper_example");
  EXPECT_EQ(e.realization->mode(), Mode::TriangularNumeric);
  ASSERT_EQ(e.subgroup.generators.size(), 3u);
  const Coordinates c = group_log(e.subgroup.generators[2], 1e-9);
  EXPECT_NEAR(c.value(2), 1.0, 1e-9);
  EXPECT_NEAR(c.value(0), 0.0, 1e-9);
  EXPECT_NEAR(c.value(1), 0.0, 1e-9);
  // Ad of the shift generator on the R^2 ideal is A itself.
  const AdjointMatrix ad = adjoint_of(e.subgroup.generators[2], 1e-9);
  const Eigen::MatrixXd block = ad.value.topLeftCorner(2, 2);
  Eigen::Matrix2d a;
  a << 1, -1, 1, 0;
  EXPECT_LE(max_abs(block - a), 1e-9);
  const Coordinates e1 = group_log(e.subgroup.generators[0], 1e-9);
  EXPECT_NEAR(e1.value(0), 1.0, 1e-9);
}

TEST(GroupArithmetic, Examples) {
  const CatalogEntry e = catalog("heisenberg");
  const auto& r = e.realization;
  const GroupElement x = e.subgroup.generators[0], y = e.subgroup.generators[1];
  EXPECT_EQ(multiply(x, inverse(x)).exact_matrix(), identity(r).exact_matrix());
  EXPECT_EQ(commutator(x, y).exact_matrix(), group_exp(r, vec({0, 0, 1})).exact_matrix());
  EXPECT_EQ(conjugate(identity(r), y).exact_matrix(), identity(r).exact_matrix());
  EXPECT_EQ(group_exp(r, vec({0, 0, 0})).exact_matrix(), identity(r).exact_matrix());

  const CatalogEntry other = catalog("heisenberg");
  EXPECT_THROW(multiply(x, other.subgroup.generators[0]), InputError);
}

TEST(GroupLog, ExactRoundTripAndRejection) {
  const CatalogEntry e = catalog("heisenberg");
  const Coordinates c = group_log(group_exp(e.realization, vec({1, 1, 0})));
  ASSERT_TRUE(c.exact.has_value());
  EXPECT_EQ(*c.exact, vec({1, 1, 0}));

  // A unipotent matrix outside the realized subgroup.
  const auto r5 = catalog("heisenberg", CatalogParams{5, std::nullopt}).realization;
  MatrixQ m = MatrixQ::Identity(4, 4);
  m(1, 2) = 1;
  EXPECT_THROW(group_log(GroupElement(r5, m)), ComputationError);
  EXPECT_THROW(GroupElement(e.realization, mat2(1, 1, 0, 1)), InputError);
}

TEST(GroupLog, RoundTripOnRandomVectors) {
  std::mt19937_64 rng(101);
  for (const auto& e : all_entries()) {
    const auto& r = e.realization;
    const Index n = r->algebra().dim();
    for (int trial = 0; trial < 100; ++trial) {
      if (r->exact()) {
        const VectorQ x = random_vector(rng, n);
        const Coordinates c = group_log(group_exp(r, x));
        ASSERT_TRUE(c.exact.has_value()) << e.name;
        EXPECT_EQ(*c.exact, x) << e.name;
      } else {
        // Small enough to stay on the principal branch.
        const Eigen::VectorXd x = to_double(random_vector(rng, n, 2, 3)) * 0.4;
        const Coordinates c = group_log(group_exp(r, x), 1e-9);
        EXPECT_LE((c.value - x).cwiseAbs().maxCoeff(), 1e-9) << e.name;
        EXPECT_LE(c.residual, 1e-9) << e.name;
      }
    }
  }
}

TEST(Adjoint, Examples) {
  const CatalogEntry e = catalog("heisenberg");
  const auto& r = e.realization;
  EXPECT_EQ(*adjoint_of(identity(r)).exact, MatrixQ(MatrixQ::Identity(3, 3)));
  const MatrixQ adx = *adjoint_of(e.subgroup.generators[0]).exact;
  EXPECT_EQ(VectorQ(adx * vec({0, 1, 0})), vec({0, 1, 1}));
  EXPECT_EQ(VectorQ(adx * vec({1, 0, 0})), vec({1, 0, 0}));
  EXPECT_EQ(VectorQ(adx * vec({0, 0, 1})), vec({0, 0, 1}));
}

TEST(Adjoint, HomomorphismAndExpAd) {
  std::mt19937_64 rng(55);
  for (const auto& e : all_entries()) {
    const auto& r = e.realization;
    const LieAlgebra& g = r->algebra();
    for (int trial = 0; trial < 10; ++trial) {
      if (r->exact()) {
        const VectorQ a = random_vector(rng, g.dim()), b = random_vector(rng, g.dim());
        const GroupElement x = group_exp(r, a), y = group_exp(r, b);
        EXPECT_EQ(*adjoint_of(multiply(x, y)).exact, MatrixQ(*adjoint_of(x).exact * *adjoint_of(y).exact)) << e.name;
        EXPECT_EQ(*adjoint_of(x).exact, nilpotent_exp<Rational>(ad(g, a))) << e.name;
      } else {
        const Eigen::VectorXd a = to_double(random_vector(rng, g.dim(), 2, 3)) * 0.4;
        const Eigen::VectorXd b = to_double(random_vector(rng, g.dim(), 2, 3)) * 0.4;
        const GroupElement x = group_exp(r, a), y = group_exp(r, b);
        const Eigen::MatrixXd lhs = adjoint_of(multiply(x, y), 1e-9).value;
        const Eigen::MatrixXd rhs = adjoint_of(x, 1e-9).value * adjoint_of(y, 1e-9).value;
        EXPECT_LE(max_abs(lhs - rhs), 1e-8) << e.name;
        const Eigen::MatrixXd ad_a = to_double(ad(g, rationalize(a, 0.0)));
        EXPECT_LE(max_abs(adjoint_of(x, 1e-9).value - numeric_exp(ad_a)), 1e-8) << e.name;
      }
    }
  }
}

TEST(RealizeAdjoint, FaithfulnessFollowsCenter) {
  const RealizationPtr a = realize_adjoint(aff1());
  EXPECT_TRUE(a->faithful());
  EXPECT_EQ(a->matrix_size(), 2);
  EXPECT_EQ(a->mode(), Mode::TriangularNumeric);

  const RealizationPtr h = realize_adjoint(h3());
  EXPECT_FALSE(h->faithful());
  EXPECT_FALSE(h->warnings().empty());
  EXPECT_EQ(h->mode(), Mode::UnipotentExact);

  const RealizationPtr z = realize_adjoint(abelian_algebra(2));
  EXPECT_FALSE(z->faithful());
  EXPECT_TRUE(is_zero_matrix<Rational>((*z->exact_basis())[0]));
}

TEST(Nielsen, MovesPreserveGeneratedSubgroupHullDimension) {
  std::mt19937_64 rng(5);
  const CatalogEntry e = catalog("heisenberg");
  for (int trial = 0; trial < 10; ++trial) {
    const auto moves = random_nielsen_moves(2, 8, rng);
    const auto gens = apply_moves(e.subgroup.generators, moves);
    ASSERT_EQ(gens.size(), 2u);
    std::vector<VectorQ> logs;
    for (const auto& g : gens) logs.push_back(*group_log(g).exact);
    EXPECT_EQ(lie_closure(e.realization->algebra(), logs), Subspace::whole(3));
  }
}

TEST(SemidirectGenerator, TraceAndDeterminant) {
  // det A = 1 gives a traceless log; its spectrum type follows A's.
  const MatrixQ d = semidirect_generator(mat2(2, 1, 1, 1));
  EXPECT_EQ(d(0, 0) + d(1, 1), Rational(0));
  const MatrixQ d2 = semidirect_generator(mat2(1, -1, 1, 0));
  EXPECT_EQ(d2(0, 0) + d2(1, 1), Rational(0));
  EXPECT_TRUE(has_purely_imaginary_nonzero_root(char_poly(d2)));
  EXPECT_FALSE(has_purely_imaginary_nonzero_root(char_poly(d)));
}
