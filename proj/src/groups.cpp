#include "lieshull/groups.hpp"

#include <cmath>
#include <sstream>

#include "lieshull/matrix_functions.hpp"

namespace lieshull {

std::string to_string(Mode m) {
  return m == Mode::UnipotentExact ? "unipotent-exact" : "triangular-numeric";
}

Mode parse_mode(const std::string& s) {
  if (s == "unipotent-exact") return Mode::UnipotentExact;
  if (s == "triangular-numeric") return Mode::TriangularNumeric;
  throw InputError("unknown realization mode '" + s + "'");
}

namespace {

double max_abs(const Eigen::MatrixXd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

/// Annihilator rows of the column space of k (k has `size` rows).
MatrixQ annihilator(const MatrixQ& k, Index size) {
  if (k.cols() == 0) return MatrixQ::Identity(size, size);
  return nullspace<Rational>(k.transpose()).transpose();
}

/// Basis is jointly strictly triangularizable: the chain
/// V_{j+1} = {v : b v in V_j for all b} reaches the whole space.
bool jointly_nilpotent(const std::vector<MatrixQ>& basis, Index size) {
  MatrixQ v(size, 0);
  for (Index step = 0; step <= size; ++step) {
    if (v.cols() == size) return true;
    const MatrixQ ann = annihilator(v, size);
    MatrixQ stacked(ann.rows() * static_cast<Index>(basis.size()), size);
    for (std::size_t i = 0; i < basis.size(); ++i)
      stacked.middleRows(static_cast<Index>(i) * ann.rows(), ann.rows()) = ann * basis[i];
    const MatrixQ next = basis.empty() ? MatrixQ(MatrixQ::Identity(size, size)) : nullspace(stacked);
    if (next.cols() == v.cols()) return false;
    v = next;
  }
  return v.cols() == size;
}

MatrixQ stacked_basis(const std::vector<MatrixQ>& basis, Index size) {
  MatrixQ a(size * size, static_cast<Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) a.col(static_cast<Index>(i)) = vectorize(basis[i]);
  return a;
}

Eigen::MatrixXd stacked_basis(const std::vector<Eigen::MatrixXd>& basis, Index size) {
  Eigen::MatrixXd a(size * size, static_cast<Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i)
    a.col(static_cast<Index>(i)) = Eigen::Map<const Eigen::VectorXd>(basis[i].data(), size * size);
  return a;
}

void require_same(const GroupElement& a, const GroupElement& b) {
  if (a.realization() != b.realization()) throw InputError("group elements from different realizations");
}

Eigen::MatrixXd inverse_numeric(const Eigen::MatrixXd& m) {
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
  if (!lu.isInvertible()) throw ComputationError("group element is numerically singular");
  return lu.inverse();
}

struct LeastSquares {
  Eigen::VectorXd x;
  double residual;
};

LeastSquares least_squares(const Eigen::MatrixXd& a, const Eigen::VectorXd& b) {
  LeastSquares out;
  out.x = a.colPivHouseholderQr().solve(b);
  out.residual = a.cols() ? (a * out.x - b).cwiseAbs().maxCoeff() : b.cwiseAbs().maxCoeff();
  return out;
}

}  // namespace

// ---- MatrixRealization -------------------------------------------------------------

std::shared_ptr<const MatrixRealization> MatrixRealization::from_exact(LieAlgebra g,
                                                                       std::vector<MatrixQ> basis) {
  if (static_cast<Index>(basis.size()) != g.dim())
    throw InputError("realization: expected " + std::to_string(g.dim()) + " basis matrices");
  const Index size = basis.empty() ? 0 : basis.front().rows();
  for (const auto& b : basis)
    if (b.rows() != size || b.cols() != size)
      throw InputError("realization: basis matrices must be square of one size");
  for (Index i = 0; i < g.dim(); ++i) {
    for (Index j = i + 1; j < g.dim(); ++j) {
      const auto& bi = basis[static_cast<std::size_t>(i)];
      const auto& bj = basis[static_cast<std::size_t>(j)];
      MatrixQ expected = MatrixQ::Zero(size, size);
      const VectorQ s = g.structure(i, j);
      for (Index k = 0; k < g.dim(); ++k)
        if (!s(k).is_zero()) expected += s(k) * basis[static_cast<std::size_t>(k)];
      if (commutator(bi, bj) != expected) {
        throw InputError("realization: commutator of basis matrices " + std::to_string(i) + ", " +
                         std::to_string(j) + " does not match the structure constants");
      }
    }
  }
  std::shared_ptr<MatrixRealization> r(new MatrixRealization());
  r->size_ = size;
  r->mode_ = jointly_nilpotent(basis, size) ? Mode::UnipotentExact : Mode::TriangularNumeric;
  r->faithful_ = rank(stacked_basis(basis, size)) == g.dim();
  for (const auto& b : basis) r->numeric_.push_back(to_double(b));
  r->exact_ = std::move(basis);
  r->algebra_ = std::move(g);
  r->finish();
  return r;
}

std::shared_ptr<const MatrixRealization> MatrixRealization::from_numeric(
    LieAlgebra g, std::vector<Eigen::MatrixXd> basis, double tol) {
  if (static_cast<Index>(basis.size()) != g.dim())
    throw InputError("realization: expected " + std::to_string(g.dim()) + " basis matrices");
  const Index size = basis.empty() ? 0 : basis.front().rows();
  double scale = 1.0;
  for (const auto& b : basis) {
    if (b.rows() != size || b.cols() != size)
      throw InputError("realization: basis matrices must be square of one size");
    if (!b.allFinite()) throw InputError("realization: non-finite entries");
    scale = std::max(scale, max_abs(b));
  }
  for (Index i = 0; i < g.dim(); ++i) {
    for (Index j = i + 1; j < g.dim(); ++j) {
      const auto& bi = basis[static_cast<std::size_t>(i)];
      const auto& bj = basis[static_cast<std::size_t>(j)];
      Eigen::MatrixXd expected = Eigen::MatrixXd::Zero(size, size);
      const VectorQ s = g.structure(i, j);
      for (Index k = 0; k < g.dim(); ++k)
        expected += to_double(s(k)) * basis[static_cast<std::size_t>(k)];
      if (max_abs(bi * bj - bj * bi - expected) > tol * scale * scale) {
        throw InputError("realization: commutator of basis matrices " + std::to_string(i) + ", " +
                         std::to_string(j) + " does not match the structure constants");
      }
    }
  }
  std::shared_ptr<MatrixRealization> r(new MatrixRealization());
  r->size_ = size;
  r->mode_ = Mode::TriangularNumeric;
  const Eigen::MatrixXd a = stacked_basis(basis, size);
  if (g.dim() > 0) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
    r->faithful_ = svd.singularValues()(g.dim() - 1) > tol * scale;
  }
  r->numeric_ = std::move(basis);
  r->algebra_ = std::move(g);
  r->finish();
  return r;
}

void MatrixRealization::finish() {
  if (!faithful_) {
    warnings_.push_back("realization is not faithful: basis matrices are linearly dependent");
  }
}

MatrixQ MatrixRealization::realize(const VectorQ& x) const {
  if (x.size() != algebra_.dim()) throw InputError("realize: coordinate vector has wrong length");
  if (!exact_) throw InputError("realize: realization has no exact basis");
  MatrixQ m = MatrixQ::Zero(size_, size_);
  for (Index i = 0; i < x.size(); ++i)
    if (!x(i).is_zero()) m += x(i) * (*exact_)[static_cast<std::size_t>(i)];
  return m;
}

Eigen::MatrixXd MatrixRealization::realize(const Eigen::VectorXd& x) const {
  if (x.size() != algebra_.dim()) throw InputError("realize: coordinate vector has wrong length");
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(size_, size_);
  for (Index i = 0; i < x.size(); ++i) m += x(i) * numeric_[static_cast<std::size_t>(i)];
  return m;
}

// ---- GroupElement ------------------------------------------------------------------

GroupElement::GroupElement(RealizationPtr r, const MatrixQ& m) : r_(std::move(r)) {
  if (!r_) throw InputError("group element without realization");
  if (m.rows() != r_->matrix_size() || m.cols() != r_->matrix_size())
    throw InputError("group element has the wrong matrix size");
  if (r_->exact()) {
    const Index n = m.rows();
    if (!is_nilpotent_matrix<Rational>(m - MatrixQ::Identity(n, n)))
      throw InputError("group element is not unipotent");
    m_ = m;
  } else {
    if (determinant(m).is_zero()) throw InputError("group element is singular");
    m_ = to_double(m);
  }
}

GroupElement::GroupElement(RealizationPtr r, Eigen::MatrixXd m) : r_(std::move(r)) {
  if (!r_) throw InputError("group element without realization");
  if (m.rows() != r_->matrix_size() || m.cols() != r_->matrix_size())
    throw InputError("group element has the wrong matrix size");
  if (!m.allFinite()) throw InputError("group element has non-finite entries");
  if (r_->exact()) {
    *this = GroupElement(r_, to_rational(m));
    return;
  }
  const double scale = std::max(1.0, max_abs(m));
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
  lu.setThreshold(kDefaultTolerance);
  if (!lu.isInvertible() || std::abs(m.determinant()) <= kDefaultTolerance * std::pow(scale, static_cast<double>(m.rows())))
    throw InputError("group element is not invertible within tolerance");
  m_ = std::move(m);
}

const MatrixQ& GroupElement::exact_matrix() const {
  if (!exact()) throw InputError("group element is numeric");
  return std::get<MatrixQ>(m_);
}

Eigen::MatrixXd GroupElement::numeric_matrix() const {
  if (exact()) return to_double(std::get<MatrixQ>(m_));
  return std::get<Eigen::MatrixXd>(m_);
}

GroupElement identity(const RealizationPtr& r) {
  const Index n = r->matrix_size();
  if (r->exact()) return GroupElement(GroupElement::Trusted{}, r, MatrixQ(MatrixQ::Identity(n, n)));
  return GroupElement(GroupElement::Trusted{}, r, Eigen::MatrixXd(Eigen::MatrixXd::Identity(n, n)));
}

GroupElement multiply(const GroupElement& a, const GroupElement& b) {
  require_same(a, b);
  if (a.exact())
    return GroupElement(GroupElement::Trusted{}, a.r_, MatrixQ(a.exact_matrix() * b.exact_matrix()));
  return GroupElement(GroupElement::Trusted{}, a.r_,
                      Eigen::MatrixXd(std::get<Eigen::MatrixXd>(a.m_) * std::get<Eigen::MatrixXd>(b.m_)));
}

GroupElement inverse(const GroupElement& a) {
  if (a.exact()) {
    auto inv = inverse(a.exact_matrix());
    if (!inv) throw ComputationError("group element is singular");
    return GroupElement(GroupElement::Trusted{}, a.r_, *inv);
  }
  return GroupElement(GroupElement::Trusted{}, a.r_, inverse_numeric(std::get<Eigen::MatrixXd>(a.m_)));
}

GroupElement conjugate(const GroupElement& x, const GroupElement& by) {
  return multiply(multiply(by, x), inverse(by));
}

GroupElement commutator(const GroupElement& a, const GroupElement& b) {
  return multiply(multiply(a, b), multiply(inverse(a), inverse(b)));
}

bool approx_equal(const GroupElement& a, const GroupElement& b, double tol) {
  require_same(a, b);
  if (a.exact()) return a.exact_matrix() == b.exact_matrix();
  const Eigen::MatrixXd ma = a.numeric_matrix(), mb = b.numeric_matrix();
  return max_abs(ma - mb) <= tol * std::max({1.0, max_abs(ma), max_abs(mb)});
}

GeneratedSubgroup::GeneratedSubgroup(RealizationPtr r, std::vector<GroupElement> gens)
    : realization(std::move(r)), generators(std::move(gens)) {
  if (generators.empty()) throw InputError("subgroup needs at least one generator");
  for (const auto& g : generators)
    if (g.realization() != realization) throw InputError("generator from a different realization");
}

// ---- exp / log / Ad ------------------------------------------------------------------

VectorQ rational_coordinates(const Coordinates& c, double tol) {
  if (c.exact) return *c.exact;
  return rationalize(c.value, tol);
}

GroupElement group_exp(const RealizationPtr& r, const VectorQ& x) {
  if (r->exact()) return GroupElement(GroupElement::Trusted{}, r, nilpotent_exp(r->realize(x)));
  return group_exp(r, to_double(x));
}

GroupElement group_exp(const RealizationPtr& r, const Eigen::VectorXd& x) {
  if (r->exact()) return group_exp(r, VectorQ(to_rational(x)));
  return GroupElement(GroupElement::Trusted{}, r, numeric_exp(r->realize(x)));
}

Coordinates group_log(const GroupElement& m, double tol) {
  const auto& r = *m.realization();
  const Index size = r.matrix_size();
  Coordinates out;
  if (m.exact()) {
    const MatrixQ log = unipotent_log(m.exact_matrix());
    auto x = solve<Rational>(stacked_basis(*r.exact_basis(), size), vectorize(log));
    if (!x) throw ComputationError("group_log: logarithm is not in the realized subalgebra");
    out.value = to_double(*x);
    out.exact = std::move(*x);
    return out;
  }
  const NumericLog nl = triangular_log_numeric(m.numeric_matrix(), tol);
  const auto ls = least_squares(stacked_basis(r.numeric_basis(), size),
                                Eigen::Map<const Eigen::VectorXd>(nl.log.data(), size * size));
  out.value = ls.x;
  out.residual = std::max(ls.residual, nl.residual);
  if (ls.residual > tol * std::max(1.0, max_abs(nl.log))) {
    std::ostringstream msg;
    msg << "group_log: logarithm leaves the realized subalgebra (residual " << ls.residual << ")";
    throw ComputationError(msg.str());
  }
  return out;
}

AdjointMatrix adjoint_of(const GroupElement& x, double tol) {
  const auto& r = *x.realization();
  const Index n = r.algebra().dim();
  const Index size = r.matrix_size();
  AdjointMatrix out;
  if (x.exact()) {
    const MatrixQ& m = x.exact_matrix();
    const MatrixQ minv = *inverse(m);
    MatrixQ conj(size * size, n);
    for (Index j = 0; j < n; ++j)
      conj.col(j) = vectorize(MatrixQ(m * (*r.exact_basis())[static_cast<std::size_t>(j)] * minv));
    auto ad = solve<Rational>(stacked_basis(*r.exact_basis(), size), conj);
    if (!ad) throw ComputationError("adjoint_of: conjugated basis leaves the realized subalgebra");
    out.value = to_double(*ad);
    out.exact = std::move(*ad);
    return out;
  }
  const Eigen::MatrixXd m = x.numeric_matrix();
  const Eigen::MatrixXd minv = inverse_numeric(m);
  const Eigen::MatrixXd a = stacked_basis(r.numeric_basis(), size);
  out.value.resize(n, n);
  for (Index j = 0; j < n; ++j) {
    const Eigen::MatrixXd c = m * r.numeric_basis()[static_cast<std::size_t>(j)] * minv;
    const auto ls = least_squares(a, Eigen::Map<const Eigen::VectorXd>(c.data(), size * size));
    out.value.col(j) = ls.x;
    out.residual = std::max(out.residual, ls.residual);
    if (ls.residual > tol * std::max(1.0, max_abs(c))) {
      std::ostringstream msg;
      msg << "adjoint_of: conjugated basis leaves the realized subalgebra (residual "
          << ls.residual << ")";
      throw ComputationError(msg.str());
    }
  }
  return out;
}

RealizationPtr realize_adjoint(const LieAlgebra& g) {
  std::vector<MatrixQ> basis;
  for (Index i = 0; i < g.dim(); ++i) basis.push_back(g.ad_basis(i));
  return MatrixRealization::from_exact(g, std::move(basis));
}

// ---- catalog ----------------------------------------------------------------------

namespace {

MatrixQ unit(Index size, Index i, Index j) {
  MatrixQ m = MatrixQ::Zero(size, size);
  m(i, j) = 1;
  return m;
}

std::vector<GroupElement> exp_generators(const RealizationPtr& r) {
  std::vector<GroupElement> gens;
  for (Index i = 0; i < r->algebra().dim(); ++i) gens.push_back(group_exp(r, r->algebra().basis_vector(i)));
  return gens;
}

CatalogEntry heisenberg_entry(Index n) {
  if (n < 3 || n % 2 == 0) throw InputError("heisenberg: dimension must be odd and at least 3");
  const Index k = (n - 1) / 2;
  std::vector<std::string> names;
  for (Index i = 1; i <= k; ++i) names.push_back(k == 1 ? "X" : "X" + std::to_string(i));
  for (Index i = 1; i <= k; ++i) names.push_back(k == 1 ? "Y" : "Y" + std::to_string(i));
  names.push_back("Z");
  std::vector<BracketEntry> brackets;
  for (Index i = 0; i < k; ++i) brackets.push_back({i, k + i, {{2 * k, Rational(1)}}});
  LieAlgebra g("heisenberg" + std::to_string(n), names, brackets);
  const Index size = k + 2;
  std::vector<MatrixQ> basis;
  for (Index i = 0; i < k; ++i) basis.push_back(unit(size, 0, i + 1));
  for (Index i = 0; i < k; ++i) basis.push_back(unit(size, i + 1, k + 1));
  basis.push_back(unit(size, 0, k + 1));
  auto r = MatrixRealization::from_exact(std::move(g), std::move(basis));
  std::vector<GroupElement> gens;
  for (Index i = 0; i < 2 * k; ++i) gens.push_back(group_exp(r, r->algebra().basis_vector(i)));
  return {"heisenberg", r, GeneratedSubgroup(r, std::move(gens)), {}};
}

CatalogEntry abelian_entry(Index n) {
  if (n < 1) throw InputError("abelian: dimension must be at least 1");
  const Index size = n + 1;
  std::vector<MatrixQ> basis;
  for (Index i = 0; i < n; ++i) basis.push_back(unit(size, i, n));
  auto r = MatrixRealization::from_exact(abelian_algebra(n, "abelian" + std::to_string(n)),
                                         std::move(basis));
  return {"abelian", r, GeneratedSubgroup(r, exp_generators(r)), {}};
}

CatalogEntry aff1_entry() {
  LieAlgebra g("aff1", {"T", "X"}, {{0, 1, {{1, Rational(1)}}}});
  auto r = MatrixRealization::from_exact(std::move(g), {unit(2, 0, 0), unit(2, 0, 1)});
  return {"aff1", r, GeneratedSubgroup(r, exp_generators(r)),
          {"aff1 has no lattice; generators are exp of the basis"}};
}

bool is_integer_matrix(const MatrixQ& a) {
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (denominator(a(i, j)) != 1) return false;
  return true;
}

CatalogEntry semidirect_entry(const MatrixQ& a, const std::string& name) {
  const MatrixQ d = semidirect_generator(a);
  const Index k = a.rows();
  std::vector<std::string> names;
  for (Index i = 1; i <= k; ++i) names.push_back("e" + std::to_string(i));
  names.push_back("T");
  LieAlgebra base = semidirect_abelian(d, name);
  LieAlgebra g(name, names, base.brackets());
  const Index size = k + 3;
  std::vector<MatrixQ> basis;
  for (Index i = 0; i < k; ++i) basis.push_back(unit(size, i, k));
  MatrixQ t = unit(size, k + 1, k + 2);
  t.topLeftCorner(k, k) = d;
  basis.push_back(t);
  auto r = MatrixRealization::from_exact(std::move(g), std::move(basis));

  std::vector<GroupElement> gens;
  const MatrixQ id = MatrixQ::Identity(size, size);
  for (Index i = 0; i < k; ++i) gens.emplace_back(r, MatrixQ(id + unit(size, i, k)));
  MatrixQ shift = id;
  shift.topLeftCorner(k, k) = a;
  shift(k + 1, k + 2) = 1;
  gens.emplace_back(r, shift);
  std::vector<std::string> notes;
  if (!r->exact())
    notes.push_back("T is realized with a rational approximation of the principal log of A");
  return {name, r, GeneratedSubgroup(r, std::move(gens)), std::move(notes)};
}

}  // namespace

MatrixQ semidirect_generator(const MatrixQ& a) {
  if (a.rows() != a.cols() || a.rows() < 1 || a.rows() > 2)
    throw InputError("semidirect_integer: only 1x1 and 2x2 matrices are supported");
  if (!is_integer_matrix(a)) throw InputError("semidirect_integer: matrix must have integer entries");
  if (a.rows() == 1) {
    const Rational v = a(0, 0);
    if (v <= 0) throw InputError("no principal real logarithm: eigenvalue " + to_string(v));
    MatrixQ d(1, 1);
    d(0, 0) = v == 1 ? Rational(0) : exact_rational(std::log(to_double(v)));
    return d;
  }
  const Rational tr = a(0, 0) + a(1, 1);
  const Rational det = determinant(a);
  if (det.is_zero()) throw InputError("no principal real logarithm: matrix is singular");
  if (det < 0) throw InputError("no principal real logarithm: negative real eigenvalue");
  const Rational disc = tr * tr - 4 * det;
  const MatrixQ id = MatrixQ::Identity(2, 2);
  const MatrixQ traceless = a - (tr / 2) * id;
  Rational scale_part = det == 1 ? Rational(0) : exact_rational(std::log(to_double(det)) / 2);
  Rational traceless_part;
  if (disc < 0) {
    const double half_width = std::sqrt(-to_double(disc)) / 2;
    const double theta = std::atan2(half_width, to_double(tr) / 2);
    traceless_part = exact_rational(theta / half_width);
  } else if (disc > 0) {
    if (tr <= 0) throw InputError("no principal real logarithm: negative real eigenvalues");
    const double root = std::sqrt(to_double(disc));
    const double mu1 = (to_double(tr) + root) / 2, mu2 = (to_double(tr) - root) / 2;
    traceless_part = exact_rational(std::log(mu1 / mu2) / root);
  } else {
    const Rational mu = tr / 2;
    if (mu <= 0) throw InputError("no principal real logarithm: negative real eigenvalue");
    traceless_part = 1 / mu;
  }
  return scale_part * id + traceless_part * traceless;
}

CatalogEntry catalog(const std::string& name, const CatalogParams& params) {
  if (name == "heisenberg") return heisenberg_entry(params.n);
  if (name == "abelian") return abelian_entry(params.n);
  if (name == "aff1") return aff1_entry();
  if (name == "semidirect_integer") {
    if (!params.matrix) throw InputError("semidirect_integer needs an integer matrix");
    return semidirect_entry(*params.matrix, "semidirect_integer");
  }
  if (name == "paper_example") {
    MatrixQ a(2, 2);
    a << Rational(1), Rational(-1), Rational(1), Rational(0);
    auto entry = semidirect_entry(a, "paper_example");
    entry.notes.push_back("Z^2 x_A Z with A = [[1,-1],[1,0]]; T is the principal real log of A");
    return entry;
  }
  throw InputError("unknown catalog name '" + name + "'");
}

std::vector<std::string> catalog_names() {
  return {"heisenberg", "abelian", "aff1", "semidirect_integer", "paper_example"};
}

std::optional<CatalogClaim> catalog_claim(const std::string& name) {
  if (name == "paper_example") {
    return CatalogClaim{Tri::False, Tri::True,
                        "R^2 x_A R for A = [[1,-1],[1,0]] is claimed to be exponential and not "
                        "completely solvable"};
  }
  return std::nullopt;
}

std::vector<std::string> adjudicate_claim(const std::string& name, const ClassificationReport& report) {
  std::vector<std::string> notes;
  const auto claim = catalog_claim(name);
  if (!claim) return notes;
  auto check = [&](const char* what, Tri claimed, Tri computed) {
    if (computed == claimed) return;
    notes.push_back(std::string("discrepancy: ") + claim->statement + ", but the computed " + what +
                    " verdict is " + to_string(computed) + " (" + to_string(report.exactness) +
                    "); a real log of an order-6 matrix in SL(2,Z) has purely imaginary eigenvalues");
  };
  check("completely_solvable", claim->completely_solvable, report.completely_solvable);
  check("exponential", claim->exponential, report.exponential);
  return notes;
}

// ---- Nielsen moves -------------------------------------------------------------------

std::vector<NielsenMove> random_nielsen_moves(std::size_t generators, std::size_t count,
                                              std::mt19937_64& rng) {
  std::vector<NielsenMove> moves;
  if (generators == 0) return moves;
  std::uniform_int_distribution<int> kind_dist(0, generators > 1 ? 4 : 0);
  std::uniform_int_distribution<std::size_t> index_dist(0, generators - 1);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t m = 0; m < count; ++m) {
    NielsenMove move{static_cast<NielsenMove::Kind>(kind_dist(rng)), index_dist(rng), 0, coin(rng)};
    if (generators > 1) {
      do {
        move.j = index_dist(rng);
      } while (move.j == move.i);
    }
    moves.push_back(move);
  }
  return moves;
}

std::vector<GroupElement> apply_moves(std::vector<GroupElement> gens,
                                      const std::vector<NielsenMove>& moves) {
  for (const auto& mv : moves) {
    if (mv.i >= gens.size() || (mv.kind != NielsenMove::Kind::Invert && mv.j >= gens.size()))
      throw InputError("Nielsen move index out of range");
    auto& gi = gens[mv.i];
    switch (mv.kind) {
      case NielsenMove::Kind::Invert:
        gi = inverse(gi);
        break;
      case NielsenMove::Kind::Swap:
        std::swap(gens[mv.i], gens[mv.j]);
        break;
      default: {
        const GroupElement gj = mv.invert_j ? inverse(gens[mv.j]) : gens[mv.j];
        if (mv.kind == NielsenMove::Kind::MultiplyRight) gi = multiply(gi, gj);
        else if (mv.kind == NielsenMove::Kind::MultiplyLeft) gi = multiply(gj, gi);
        else gi = conjugate(gi, gj);
      }
    }
  }
  return gens;
}

}  // namespace lieshull
