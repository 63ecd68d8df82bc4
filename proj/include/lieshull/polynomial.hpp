#pragma once

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "lieshull/linalg.hpp"

namespace lieshull {

/// Univariate polynomial over a field, coefficients constant term first and
/// trimmed so the leading coefficient is nonzero. The zero polynomial is empty.
template <typename Scalar>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(Scalar c) { return Polynomial(std::vector<Scalar>{std::move(c)}); }
  static Polynomial monomial(Scalar c, int degree) {
    std::vector<Scalar> v(static_cast<std::size_t>(degree) + 1, Scalar(0));
    v.back() = std::move(c);
    return Polynomial(std::move(v));
  }
  /// x - root
  static Polynomial linear(const Scalar& root) {
    return Polynomial(std::vector<Scalar>{-root, Scalar(1)});
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Scalar>& coefficients() const { return c_; }
  Scalar coeff(int k) const {
    return k >= 0 && k < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(k)] : Scalar(0);
  }
  const Scalar& leading() const { return c_.back(); }

  Scalar operator()(const Scalar& x) const {
    Scalar acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial derivative() const {
    std::vector<Scalar> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * Scalar(static_cast<int>(k)));
    return Polynomial(std::move(d));
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    const Scalar inv = Scalar(1) / leading();
    std::vector<Scalar> v = c_;
    for (auto& x : v) x *= inv;
    return Polynomial(std::move(v));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Scalar> v(std::max(a.c_.size(), b.c_.size()), Scalar(0));
    for (std::size_t k = 0; k < a.c_.size(); ++k) v[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) v[k] += b.c_[k];
    return Polynomial(std::move(v));
  }
  friend Polynomial operator-(const Polynomial& a) {
    std::vector<Scalar> v = a.c_;
    for (auto& x : v) x = -x;
    return Polynomial(std::move(v));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> v(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(v));
  }
  friend Polynomial operator*(const Scalar& s, const Polynomial& a) {
    return Polynomial::constant(s) * a;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  void trim() {
    while (!c_.empty() && lieshull::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<Scalar> c_;
};

using RationalPolynomial = Polynomial<Rational>;

/// Quotient and remainder; throws InputError on division by zero.
template <typename Scalar>
std::pair<Polynomial<Scalar>, Polynomial<Scalar>> divmod(const Polynomial<Scalar>& a,
                                                        const Polynomial<Scalar>& b) {
  if (b.is_zero()) throw InputError("polynomial division by zero");
  std::vector<Scalar> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial<Scalar>(), a};
  std::vector<Scalar> quot(static_cast<std::size_t>(a.degree() - db + 1), Scalar(0));
  const Scalar inv = Scalar(1) / b.leading();
  for (int k = a.degree(); k >= db; --k) {
    const Scalar f = rem[static_cast<std::size_t>(k)] * inv;
    quot[static_cast<std::size_t>(k - db)] = f;
    if (is_zero(f)) continue;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(k - db + j)] -= f * b.coeff(j);
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial<Scalar>(std::move(quot)), Polynomial<Scalar>(std::move(rem))};
}

/// Monic gcd; gcd(0, 0) = 0.
template <typename Scalar>
Polynomial<Scalar> gcd(Polynomial<Scalar> a, Polynomial<Scalar> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// p / gcd(p, p'), monic: same roots, all simple.
template <typename Scalar>
Polynomial<Scalar> squarefree_part(const Polynomial<Scalar>& p) {
  if (p.degree() <= 0) return p.monic();
  return divmod(p, gcd(p, p.derivative())).first.monic();
}

/// Yun's decomposition: p = lc * prod_i f_i^i with f_i squarefree and coprime.
/// Entry i-1 of the result is f_i.
template <typename Scalar>
std::vector<Polynomial<Scalar>> squarefree_decomposition(const Polynomial<Scalar>& p) {
  std::vector<Polynomial<Scalar>> out;
  if (p.degree() <= 0) return out;
  Polynomial<Scalar> a = p.monic();
  Polynomial<Scalar> b = gcd(a, a.derivative());
  Polynomial<Scalar> c = divmod(a, b).first;
  Polynomial<Scalar> d = divmod(a.derivative(), b).first - c.derivative();
  while (c.degree() > 0) {
    Polynomial<Scalar> f = gcd(c, d);
    out.push_back(f);
    c = divmod(c, f).first;
    d = divmod(d, f).first - c.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

/// det(x I - m) by Faddeev-LeVerrier. Monic of degree n.
template <typename Scalar>
Polynomial<Scalar> char_poly(const Mat<Scalar>& m) {
  if (m.rows() != m.cols()) throw InputError("char_poly: non-square matrix");
  const Index n = m.rows();
  std::vector<Scalar> c(static_cast<std::size_t>(n) + 1, Scalar(0));
  c[static_cast<std::size_t>(n)] = Scalar(1);
  Mat<Scalar> mk = Mat<Scalar>::Zero(n, n);
  for (Index k = 1; k <= n; ++k) {
    mk = m * mk;
    for (Index i = 0; i < n; ++i) mk(i, i) += c[static_cast<std::size_t>(n - k + 1)];
    Scalar tr(0);
    const Mat<Scalar> amk = m * mk;
    for (Index i = 0; i < n; ++i) tr += amk(i, i);
    c[static_cast<std::size_t>(n - k)] = -tr / Scalar(static_cast<int>(k));
  }
  return Polynomial<Scalar>(std::move(c));
}

// ---- real-root analysis over Q ----------------------------------------------

struct Interval {
  Rational lo;  // open end
  Rational hi;  // closed end
};

/// Sturm sequence p, p', -rem(...), ... of a nonzero polynomial.
std::vector<RationalPolynomial> sturm_sequence(const RationalPolynomial& p);

/// Number of distinct real roots (in (lo, hi] when an interval is given).
/// Throws InputError for the zero polynomial.
int count_real_roots(const RationalPolynomial& p, const std::optional<Interval>& interval = {});

/// Real roots counted with multiplicity.
int count_real_roots_with_multiplicity(const RationalPolynomial& p,
                                       const std::optional<Interval>& interval = {});

/// Whether p has a root i*mu with mu real and nonzero.
bool has_purely_imaginary_nonzero_root(const RationalPolynomial& p);

/// Distinct roots of p lying in the scalar field (Q, or Q(i) for Gaussian),
/// found numerically on the squarefree part and confirmed by exact evaluation.
/// Roots that are not exactly representable are omitted.
std::vector<Rational> exact_roots(const RationalPolynomial& p);
std::vector<Gaussian> exact_roots(const Polynomial<Gaussian>& p);

/// Numeric complex roots (companion matrix eigenvalues) of a polynomial with
/// double coefficients.
std::vector<std::complex<double>> numeric_roots(const std::vector<std::complex<double>>& coeffs);

}  // namespace lieshull
