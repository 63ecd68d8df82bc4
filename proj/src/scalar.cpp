#include "lieshull/scalar.hpp"

#include <cmath>
#include <limits>

#include "lieshull/errors.hpp"

namespace lieshull {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw InputError("malformed rational '" + std::string(whole) + "'");
  }
  Integer v{std::string(s)};
  return negative ? Integer(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  const Integer num = parse_integer(text.substr(0, slash), text);
  const std::string_view den_text = text.substr(slash + 1);
  if (!all_digits(den_text)) {
    throw InputError("malformed rational '" + std::string(text) + "'");
  }
  const Integer den(std::string{den_text});
  if (den.is_zero()) throw InputError("zero denominator in '" + std::string(text) + "'");
  // Division canonicalizes; the (num, den) constructor does not.
  return Rational(num) / Rational(den);
}

std::string to_string(const Rational& q) { return q.str(); }

std::string to_string(const Gaussian& z) {
  if (z.im.is_zero()) return to_string(z.re);
  std::string s = z.re.is_zero() ? std::string() : to_string(z.re) + (z.im > 0 ? "+" : "");
  return s + to_string(z.im) + "i";
}

Rational exact_rational(double x) {
  if (!std::isfinite(x)) throw InputError("non-finite number");
  return Rational(x);
}

Rational rationalize(double x, double tol, long max_denominator) {
  if (!std::isfinite(x)) throw InputError("non-finite number");
  // Convergents h/k of the continued fraction of x.
  Integer h_prev(1), h(static_cast<long long>(std::floor(x)));
  Integer k_prev(0), k(1);
  double frac = x - std::floor(x);
  for (int iter = 0; iter < 64; ++iter) {
    const Rational candidate = Rational(h) / Rational(k);
    if (std::abs(to_double(candidate) - x) <= tol) return candidate;
    if (frac < 1e-300) break;
    const double inv = 1.0 / frac;
    const double a = std::floor(inv);
    if (a > 1e15) break;
    frac = inv - a;
    const Integer ai(static_cast<long long>(a));
    Integer h_next = ai * h + h_prev;
    Integer k_next = ai * k + k_prev;
    if (k_next > max_denominator) break;
    h_prev = std::move(h);
    h = std::move(h_next);
    k_prev = std::move(k);
    k = std::move(k_next);
  }
  return exact_rational(x);
}

MatrixQ to_rational(const Eigen::MatrixXd& m) {
  MatrixQ out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = exact_rational(m(i, j));
  return out;
}

MatrixQ rationalize(const Eigen::MatrixXd& m, double tol) {
  MatrixQ out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = rationalize(m(i, j), tol);
  return out;
}

VectorQ rationalize(const Eigen::VectorXd& v, double tol) {
  VectorQ out(v.size());
  for (Index i = 0; i < v.size(); ++i) out(i) = rationalize(v(i), tol);
  return out;
}

Eigen::MatrixXd to_double(const MatrixQ& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = to_double(m(i, j));
  return out;
}

Eigen::VectorXd to_double(const VectorQ& v) {
  Eigen::VectorXd out(v.size());
  for (Index i = 0; i < v.size(); ++i) out(i) = to_double(v(i));
  return out;
}

Mat<Gaussian> to_gaussian(const MatrixQ& m) {
  Mat<Gaussian> out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = Gaussian(m(i, j));
  return out;
}

}  // namespace lieshull
