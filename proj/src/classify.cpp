#include "lieshull/classify.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>

namespace lieshull {

std::string to_string(Tri t) {
  switch (t) {
    case Tri::True: return "true";
    case Tri::False: return "false";
    default: return "undetermined";
  }
}

std::string to_string(Exactness e) { return e == Exactness::Exact ? "exact" : "numeric"; }

namespace {

std::string poly_string(const RationalPolynomial& p) {
  std::ostringstream os;
  os << "[";
  for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
    os << (k ? ", " : "") << to_string(p.coefficients()[k]);
  }
  os << "]";
  return os.str();
}

std::string vector_string(const VectorQ& v) {
  std::ostringstream os;
  os << "(";
  for (Index k = 0; k < v.size(); ++k) os << (k ? ", " : "") << to_string(v(k));
  os << ")";
  return os.str();
}

/// Points of the moment curve sum_k t^k b_k for t = 0..n(n-1). A nonzero
/// functional vanishes at no more than n-1 of them, and there are at most n
/// distinct roots, so one of these points avoids every proper kernel.
std::vector<VectorQ> moment_curve_points(Index n) {
  std::vector<VectorQ> pts;
  const Index count = n * (n - 1) + 1;
  for (Index t = 0; t < count; ++t) {
    VectorQ x(n);
    Rational power(1);
    for (Index k = 0; k < n; ++k) {
      x(k) = power;
      power *= t;
    }
    pts.push_back(std::move(x));
  }
  return pts;
}

bool all_roots_real(const RationalPolynomial& p) {
  return count_real_roots_with_multiplicity(p) == p.degree();
}

std::vector<RootFunctional> exact_roots_from_flag(const LieAlgebra& g, const Mat<Gaussian>& basis) {
  const Index n = g.dim();
  const auto inv = inverse(basis);
  if (!inv) throw ComputationError("classify: singular flag basis");
  std::vector<RootFunctional> roots(static_cast<std::size_t>(n));
  for (auto& r : roots) {
    r.alpha_exact = VectorQ::Zero(n);
    r.beta_exact = VectorQ::Zero(n);
  }
  for (Index i = 0; i < n; ++i) {
    const Mat<Gaussian> conj = (*inv) * to_gaussian(g.ad_basis(i)) * basis;
    for (Index j = 0; j < n; ++j) {
      (*roots[static_cast<std::size_t>(j)].alpha_exact)(i) = conj(j, j).re;
      (*roots[static_cast<std::size_t>(j)].beta_exact)(i) = conj(j, j).im;
    }
  }
  for (auto& r : roots) {
    r.alpha = to_double(*r.alpha_exact);
    r.beta = to_double(*r.beta_exact);
  }
  return roots;
}

/// Root functionals from eigenvalue clusters of ad(X0) for a generic X0: the
/// mean of a separated cluster is linear along X0 + h b_i.
std::optional<std::vector<RootFunctional>> numeric_root_functionals(const LieAlgebra& g) {
  const Index n = g.dim();
  std::vector<Eigen::MatrixXd> ads;
  for (Index i = 0; i < n; ++i) ads.push_back(to_double(g.ad_basis(i)));
  Eigen::MatrixXd a0 = Eigen::MatrixXd::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    const double w = std::sqrt(static_cast<double>(2 * i + 3));
    a0 += (w - std::floor(w) + 0.5) * ads[static_cast<std::size_t>(i)];
  }
  auto eigenvalues = [](const Eigen::MatrixXd& m) {
    Eigen::EigenSolver<Eigen::MatrixXd> es(m, false);
    return Eigen::VectorXcd(es.eigenvalues());
  };
  const Eigen::VectorXcd ev0 = eigenvalues(a0);
  const double norm = 1.0 + a0.cwiseAbs().maxCoeff();
  const double radius = 1e-2 * norm;

  std::vector<std::complex<double>> centers;
  std::vector<std::vector<std::complex<double>>> members;
  for (Index k = 0; k < ev0.size(); ++k) {
    std::size_t c = 0;
    while (c < centers.size() && std::abs(centers[c] - ev0(k)) > radius) ++c;
    if (c == centers.size()) {
      centers.push_back(ev0(k));
      members.emplace_back();
    }
    members[c].push_back(ev0(k));
  }
  double separation = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < centers.size(); ++a)
    for (std::size_t b = a + 1; b < centers.size(); ++b)
      separation = std::min(separation, std::abs(centers[a] - centers[b]));
  if (separation < 10 * radius) return std::nullopt;

  std::vector<RootFunctional> roots(centers.size());
  std::vector<std::complex<double>> mean0(centers.size());
  for (std::size_t c = 0; c < centers.size(); ++c) {
    std::complex<double> s = 0;
    for (const auto& z : members[c]) s += z;
    mean0[c] = s / static_cast<double>(members[c].size());
    roots[c].alpha = Eigen::VectorXd::Zero(n);
    roots[c].beta = Eigen::VectorXd::Zero(n);
    roots[c].multiplicity = static_cast<int>(members[c].size());
  }
  for (Index i = 0; i < n; ++i) {
    const auto& adi = ads[static_cast<std::size_t>(i)];
    const double h = std::isfinite(separation)
                         ? 0.05 * separation / (1.0 + adi.cwiseAbs().maxCoeff() * n)
                         : 1.0 / (1.0 + adi.cwiseAbs().maxCoeff() * n);
    const Eigen::VectorXcd ev = eigenvalues(a0 + h * adi);
    std::vector<std::complex<double>> sums(centers.size(), 0.0);
    std::vector<int> counts(centers.size(), 0);
    for (Index k = 0; k < ev.size(); ++k) {
      std::size_t best = 0;
      for (std::size_t c = 1; c < centers.size(); ++c)
        if (std::abs(ev(k) - centers[c]) < std::abs(ev(k) - centers[best])) best = c;
      sums[best] += ev(k);
      ++counts[best];
    }
    for (std::size_t c = 0; c < centers.size(); ++c) {
      if (counts[c] != roots[c].multiplicity) return std::nullopt;
      const std::complex<double> d = (sums[c] / static_cast<double>(counts[c]) - mean0[c]) / h;
      roots[c].alpha(i) = d.real();
      roots[c].beta(i) = d.imag();
    }
  }
  return roots;
}

}  // namespace

ClassificationReport classify(const LieAlgebra& g, double tol) {
  const auto validation = validate_structure(g);
  if (!validation.valid()) {
    const auto& v = validation.violations.front();
    std::ostringstream msg;
    msg << "classify: Jacobi identity fails on basis triple (" << v.i << ", " << v.j << ", " << v.k
        << ")";
    throw InputError(msg.str());
  }
  const Index n = g.dim();
  ClassificationReport report;
  const bool solvable = is_solvable(g);
  const bool nilpotent = is_nilpotent(g);
  report.solvable = to_tri(solvable);
  report.nilpotent = to_tri(nilpotent);
  if (!solvable) {
    report.completely_solvable = Tri::False;
    report.exponential = Tri::False;
    report.notes.push_back(
        "algebra is not solvable; both notions are defined for solvable algebras only");
    return report;
  }

  std::vector<MatrixQ> ads;
  for (Index i = 0; i < n; ++i) ads.push_back(g.ad_basis(i));
  const auto points = moment_curve_points(n);

  // Completely solvable: every ad(X) has real spectrum.
  report.completely_solvable = Tri::True;
  for (const auto& x : points) {
    const RationalPolynomial p = char_poly(ad(g, x));
    if (!all_roots_real(p)) {
      report.completely_solvable = Tri::False;
      report.witnesses.push_back("ad(X) for X = " + vector_string(x) +
                                 " has non-real eigenvalues; characteristic polynomial " +
                                 poly_string(p));
      break;
    }
  }

  if (report.completely_solvable == Tri::True) {
    report.exponential = Tri::True;
    if (auto flag = simultaneous_triangularization(ads, n)) {
      report.real_flag = *flag;
      report.roots = exact_roots_from_flag(g, to_gaussian(*flag));
    } else {
      report.notes.push_back(
          "all roots are real but some are irrational; the flag of ideals exists over R only");
    }
    return report;
  }

  // Necessary condition, exact: no sampled ad(X) has a purely imaginary nonzero eigenvalue.
  std::vector<VectorQ> probes;
  for (Index i = 0; i < n; ++i) probes.push_back(g.basis_vector(i));
  probes.insert(probes.end(), points.begin(), points.end());
  for (const auto& x : probes) {
    const RationalPolynomial p = char_poly(ad(g, x));
    if (has_purely_imaginary_nonzero_root(p)) {
      report.exponential = Tri::False;
      report.witnesses.push_back("ad(X) for X = " + vector_string(x) +
                                 " has a nonzero purely imaginary eigenvalue; characteristic "
                                 "polynomial " +
                                 poly_string(p));
      break;
    }
  }

  std::vector<Mat<Gaussian>> gads;
  for (const auto& a : ads) gads.push_back(to_gaussian(a));
  if (auto flag = simultaneous_triangularization(gads, n)) {
    report.roots = exact_roots_from_flag(g, *flag);
    if (report.exponential == Tri::Undetermined) {
      report.exponential = Tri::True;
      for (const auto& r : report.roots) {
        const VectorQ& a = *r.alpha_exact;
        const VectorQ& b = *r.beta_exact;
        if (is_zero_matrix<Rational>(b)) continue;
        MatrixQ pair(2, n);
        pair.row(0) = a.transpose();
        pair.row(1) = b.transpose();
        if (is_zero_matrix<Rational>(a) || rank(pair) == 2) {
          report.exponential = Tri::False;
          report.witnesses.push_back("root with alpha = " + vector_string(a) + ", beta = " +
                                     vector_string(b) + " has beta not proportional to alpha");
          break;
        }
      }
    }
    return report;
  }
  if (report.exponential == Tri::False) return report;

  report.exactness = Exactness::Numeric;
  report.notes.push_back("roots are not in Q(i); exponential verdict computed numerically");
  auto roots = numeric_root_functionals(g);
  if (!roots) {
    report.notes.push_back("eigenvalue clusters could not be separated");
    return report;
  }
  report.roots = *roots;
  double scale = 1.0;
  for (const auto& a : ads) scale = std::max(scale, to_double(a).cwiseAbs().maxCoeff());
  const double zero = std::max(1e-7, tol) * scale;
  bool undetermined = false;
  for (const auto& r : report.roots) {
    const double na = r.alpha.norm(), nb = r.beta.norm();
    if (nb <= zero) continue;
    if (na <= zero) {
      report.exponential = Tri::False;
      report.witnesses.push_back("numeric root with vanishing real part");
      return report;
    }
    const double dot = r.alpha.dot(r.beta);
    const double sine = std::sqrt(std::max(0.0, 1.0 - dot * dot / (na * na * nb * nb)));
    if (sine > 1e-4) {
      report.exponential = Tri::False;
      std::ostringstream msg;
      msg << "numeric root with beta not proportional to alpha (sin angle " << sine << ")";
      report.witnesses.push_back(msg.str());
      return report;
    }
    if (sine > 1e-7) undetermined = true;
  }
  report.exponential = undetermined ? Tri::Undetermined : Tri::True;
  return report;
}

}  // namespace lieshull
