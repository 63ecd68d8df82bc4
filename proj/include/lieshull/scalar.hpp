#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Core>

#include <string>
#include <string_view>

namespace lieshull {

/// Exact rational number, always kept in canonical reduced form by GMP.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

using Index = Eigen::Index;

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixQ = Mat<Rational>;
using VectorQ = Vec<Rational>;

/// Element of Q(i). Only field operations are provided; there is no ordering.
struct Gaussian {
  Rational re{0};
  Rational im{0};

  Gaussian() = default;
  Gaussian(int r) : re(r) {}  // NOLINT: implicit, Eigen builds Scalar(0), Scalar(1)
  Gaussian(const Rational& r) : re(r) {}  // NOLINT
  Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  Gaussian& operator+=(const Gaussian& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Gaussian& operator-=(const Gaussian& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Gaussian& operator*=(const Gaussian& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  Gaussian& operator/=(const Gaussian& o) {
    const Rational n = o.re * o.re + o.im * o.im;
    Rational r = (re * o.re + im * o.im) / n;
    im = (im * o.re - re * o.im) / n;
    re = std::move(r);
    return *this;
  }
  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
  friend Gaussian operator-(const Gaussian& a) { return {-a.re, -a.im}; }
  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }
};

inline Gaussian conj(const Gaussian& z) { return {z.re, -z.im}; }

/// Parses "p/q", "p" or "-p/q". Throws InputError on malformed text or q == 0.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const Gaussian& z);

/// The double value exactly, as a dyadic rational.
Rational exact_rational(double x);

/// Best continued-fraction approximant p/q with q <= max_denominator and
/// |x - p/q| <= tol; falls back to exact_rational(x) when none exists.
Rational rationalize(double x, double tol, long max_denominator = 1000000);

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline bool is_zero(const Rational& q) { return q.is_zero(); }
inline bool is_zero(const Gaussian& z) { return z.re.is_zero() && z.im.is_zero(); }
inline bool is_zero(double x) { return x == 0.0; }

MatrixQ to_rational(const Eigen::MatrixXd& m);
MatrixQ rationalize(const Eigen::MatrixXd& m, double tol);
VectorQ rationalize(const Eigen::VectorXd& v, double tol);
Eigen::MatrixXd to_double(const MatrixQ& m);
Eigen::VectorXd to_double(const VectorQ& v);
Mat<Gaussian> to_gaussian(const MatrixQ& m);

}  // namespace lieshull

namespace Eigen {
template <>
struct NumTraits<lieshull::Gaussian> : GenericNumTraits<lieshull::Gaussian> {
  using Real = lieshull::Gaussian;
  using NonInteger = lieshull::Gaussian;
  using Nested = lieshull::Gaussian;
  using Literal = lieshull::Gaussian;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 20,
    AddCost = 40,
    MulCost = 160
  };
};
}  // namespace Eigen
