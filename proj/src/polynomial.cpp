#include "lieshull/polynomial.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace lieshull {

namespace {

int sign(const Rational& q) { return q.sign(); }

int sign_changes(const std::vector<RationalPolynomial>& seq, const Rational& x) {
  int changes = 0;
  int last = 0;
  for (const auto& p : seq) {
    const int s = sign(p(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int sign_changes_at_infinity(const std::vector<RationalPolynomial>& seq, bool positive) {
  int changes = 0;
  int last = 0;
  for (const auto& p : seq) {
    int s = sign(p.leading());
    if (!positive && p.degree() % 2 == 1) s = -s;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::vector<std::complex<double>> to_complex(const Polynomial<Gaussian>& p) {
  std::vector<std::complex<double>> c;
  for (const auto& x : p.coefficients()) c.emplace_back(to_double(x.re), to_double(x.im));
  return c;
}

Integer floor_of(const Rational& q) {
  Integer n = boost::multiprecision::numerator(q), d = boost::multiprecision::denominator(q);
  Integer f = n / d;
  if (n < 0 && f * d != n) f -= 1;
  return f;
}

/// Rational with the smallest denominator in [a, b], a <= b.
Rational simplest_between(const Rational& a, const Rational& b) {
  if (a <= 0 && b >= 0) return Rational(0);
  if (b < 0) return -simplest_between(-b, -a);
  const Integer fl = floor_of(a);
  if (Rational(fl) == a) return a;
  if (Rational(fl + 1) <= b) return Rational(fl + 1);
  return Rational(fl) + Rational(1) / simplest_between(Rational(1) / (b - Rational(fl)),
                                                       Rational(1) / (a - Rational(fl)));
}

Integer lcm_of_denominators(const std::vector<Rational>& cs) {
  Integer l(1);
  for (const auto& c : cs) {
    const Integer d = boost::multiprecision::denominator(c);
    l = l / boost::multiprecision::gcd(l, d) * d;
  }
  return l;
}

/// |leading coefficient| of the primitive integer multiple of p.
Rational integer_leading(const RationalPolynomial& p) {
  const Integer l = lcm_of_denominators(p.coefficients());
  Integer g(0);
  for (const auto& c : p.coefficients()) g = boost::multiprecision::gcd(g, Integer(boost::multiprecision::numerator(c * Rational(l))));
  return abs(p.leading() * Rational(l) / Rational(g));
}

/// Norm of the leading coefficient after clearing denominators; bounds the
/// denominators of the parts of any root in Q(i).
Rational gaussian_norm_bound(const Polynomial<Gaussian>& p) {
  std::vector<Rational> parts;
  for (const auto& c : p.coefficients()) {
    parts.push_back(c.re);
    parts.push_back(c.im);
  }
  const Rational l(lcm_of_denominators(parts));
  const Gaussian lead = p.leading();
  const Rational re = lead.re * l, im = lead.im * l;
  return std::max(Rational(1), re * re + im * im);
}

Rational round_dyadic(const Rational& x, int bits) {
  const Rational scale = Rational(Integer(1) << bits);
  return Rational(floor_of(x * scale)) / scale;
}

}  // namespace

std::vector<RationalPolynomial> sturm_sequence(const RationalPolynomial& p) {
  if (p.is_zero()) throw InputError("Sturm sequence of the zero polynomial");
  std::vector<RationalPolynomial> seq{p};
  if (p.degree() == 0) return seq;
  seq.push_back(p.derivative());
  while (seq.back().degree() > 0) {
    auto r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  return seq;
}

int count_real_roots(const RationalPolynomial& p, const std::optional<Interval>& interval) {
  if (p.is_zero()) throw InputError("count_real_roots: zero polynomial");
  if (p.degree() == 0) return 0;
  const auto seq = sturm_sequence(squarefree_part(p));
  if (!interval) return sign_changes_at_infinity(seq, false) - sign_changes_at_infinity(seq, true);
  if (interval->hi <= interval->lo) return 0;
  return sign_changes(seq, interval->lo) - sign_changes(seq, interval->hi);
}

int count_real_roots_with_multiplicity(const RationalPolynomial& p,
                                       const std::optional<Interval>& interval) {
  if (p.is_zero()) throw InputError("count_real_roots: zero polynomial");
  int total = 0;
  const auto parts = squarefree_decomposition(p);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].degree() > 0) {
      total += static_cast<int>(i + 1) * count_real_roots(parts[i], interval);
    }
  }
  return total;
}

bool has_purely_imaginary_nonzero_root(const RationalPolynomial& p) {
  if (p.is_zero()) throw InputError("has_purely_imaginary_nonzero_root: zero polynomial");
  // p(i mu) = u(mu) + i v(mu); i^k cycles 1, i, -1, -i.
  std::vector<Rational> u(p.coefficients().size(), Rational(0));
  std::vector<Rational> v(p.coefficients().size(), Rational(0));
  for (int k = 0; k <= p.degree(); ++k) {
    const Rational& c = p.coefficients()[static_cast<std::size_t>(k)];
    switch (k % 4) {
      case 0: u[static_cast<std::size_t>(k)] = c; break;
      case 1: v[static_cast<std::size_t>(k)] = c; break;
      case 2: u[static_cast<std::size_t>(k)] = -c; break;
      default: v[static_cast<std::size_t>(k)] = -c; break;
    }
  }
  RationalPolynomial g = gcd(RationalPolynomial(u), RationalPolynomial(v));
  if (g.degree() <= 0) return false;
  // Strip the root mu = 0.
  while (g.degree() > 0 && g.coeff(0).is_zero()) {
    g = divmod(g, RationalPolynomial::monomial(Rational(1), 1)).first;
  }
  return g.degree() > 0 && count_real_roots(g) > 0;
}

std::vector<std::complex<double>> numeric_roots(const std::vector<std::complex<double>>& coeffs) {
  std::size_t n = coeffs.size();
  while (n > 0 && coeffs[n - 1] == std::complex<double>(0.0, 0.0)) --n;
  if (n <= 1) return {};
  const Index deg = static_cast<Index>(n) - 1;
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
  const std::complex<double> lead = coeffs[n - 1];
  for (Index i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  for (Index i = 0; i < deg; ++i) companion(i, deg - 1) = -coeffs[static_cast<std::size_t>(i)] / lead;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  std::vector<std::complex<double>> roots;
  for (Index i = 0; i < deg; ++i) roots.push_back(solver.eigenvalues()(i));
  return roots;
}

std::vector<Rational> exact_roots(const RationalPolynomial& p) {
  std::vector<Rational> out;
  if (p.degree() <= 0) return out;
  RationalPolynomial q = squarefree_part(p);
  if (q.coeff(0).is_zero()) {
    out.push_back(Rational(0));
    q = divmod(q, RationalPolynomial::monomial(Rational(1), 1)).first;
    if (q.degree() <= 0) return out;
  }
  // A rational root of the primitive integer form has denominator dividing its
  // leading coefficient L, so two of them are at least 1/L^2 apart.
  const Rational lead = integer_leading(q);
  const Rational gap = Rational(1) / (lead * lead);
  const auto seq = sturm_sequence(q);
  Rational bound(0);
  for (int k = 0; k < q.degree(); ++k) bound = std::max(bound, Rational(abs(q.coeff(k) / q.leading())));
  bound += 1;

  std::vector<std::pair<Rational, Rational>> pending{{-bound, bound}};
  while (!pending.empty()) {
    auto [lo, hi] = pending.back();
    pending.pop_back();
    const int count = sign_changes(seq, lo) - sign_changes(seq, hi);
    if (count == 0) continue;
    if (count > 1) {
      const Rational mid = (lo + hi) / 2;
      pending.push_back({lo, mid});
      pending.push_back({mid, hi});
      continue;
    }
    // One root in (lo, hi]; lo is never a root.
    bool done = false;
    while (hi - lo >= gap) {
      if (q(hi).is_zero()) {
        out.push_back(hi);
        done = true;
        break;
      }
      const Rational mid = (lo + hi) / 2;
      if (sign_changes(seq, lo) - sign_changes(seq, mid) == 1) hi = mid;
      else lo = mid;
    }
    if (done) continue;
    const Rational candidate = simplest_between(lo, hi);
    if (q(candidate).is_zero()) out.push_back(candidate);
  }
  return out;
}

std::vector<Gaussian> exact_roots(const Polynomial<Gaussian>& p) {
  std::vector<Gaussian> out;
  if (p.degree() <= 0) return out;
  const Polynomial<Gaussian> q = squarefree_part(p);
  const Polynomial<Gaussian> dq = q.derivative();
  // Real and imaginary parts of a root in Q(i) have denominators bounded by
  // the norm of the leading coefficient of the primitive Z[i] form.
  const Rational norm_bound = gaussian_norm_bound(q);
  const Rational eps = Rational(1) / (4 * norm_bound * norm_bound);
  const double eps_d = to_double(eps);
  const int bits = eps_d > 0 ? static_cast<int>(std::ceil(-std::log2(eps_d))) + 16 : 2048;
  for (const auto& z : numeric_roots(to_complex(q))) {
    Gaussian x{exact_rational(z.real()), exact_rational(z.imag())};
    bool converged = false;
    for (int iter = 0; iter < 64 && !converged; ++iter) {
      const Gaussian d = dq(x);
      if (is_zero(d)) break;
      const Gaussian step = q(x) / d;
      x = Gaussian{round_dyadic(x.re - step.re, bits), round_dyadic(x.im - step.im, bits)};
      converged = step.re * step.re + step.im * step.im < eps * eps;
    }
    const Gaussian r{simplest_between(x.re - eps, x.re + eps), simplest_between(x.im - eps, x.im + eps)};
    if (!is_zero(q(r))) continue;
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
  }
  return out;
}

}  // namespace lieshull
