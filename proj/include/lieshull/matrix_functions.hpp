#pragma once

#include <Eigen/Dense>

#include "lieshull/linalg.hpp"

namespace lieshull {

/// exp(N) = sum_{k<n} N^k / k! for nilpotent N. Throws PreconditionError otherwise.
template <typename Scalar>
Mat<Scalar> nilpotent_exp(const Mat<Scalar>& n) {
  if (!is_nilpotent_matrix(n)) throw PreconditionError("nilpotent_exp: matrix is not nilpotent");
  const Index size = n.rows();
  Mat<Scalar> result = Mat<Scalar>::Identity(size, size);
  Mat<Scalar> term = Mat<Scalar>::Identity(size, size);
  for (Index k = 1; k < size; ++k) {
    term = (term * n).eval();
    term /= Scalar(static_cast<int>(k));
    if (is_zero_matrix(term)) break;
    result += term;
  }
  return result;
}

/// log(M) = sum_{k=1}^{n} (-1)^{k+1} (M - I)^k / k for unipotent M.
/// Throws PreconditionError when M - I is not nilpotent.
template <typename Scalar>
Mat<Scalar> unipotent_log(const Mat<Scalar>& m) {
  if (m.rows() != m.cols()) throw InputError("unipotent_log: non-square matrix");
  const Index size = m.rows();
  const Mat<Scalar> x = m - Mat<Scalar>::Identity(size, size);
  if (!is_nilpotent_matrix(x)) throw PreconditionError("unipotent_log: matrix is not unipotent");
  Mat<Scalar> result = Mat<Scalar>::Zero(size, size);
  Mat<Scalar> power = Mat<Scalar>::Identity(size, size);
  for (Index k = 1; k <= size; ++k) {
    power = (power * x).eval();
    if (is_zero_matrix(power)) break;
    const Scalar c = Scalar(k % 2 == 1 ? 1 : -1) / Scalar(static_cast<int>(k));
    result += c * power;
  }
  return result;
}

struct NumericLog {
  Eigen::MatrixXd log;
  double residual = 0.0;  // max |exp(log) - M|
};

/// Principal real logarithm by inverse scaling and squaring. Throws
/// PreconditionError if M has a (numerically) non-positive real eigenvalue, and
/// ComputationError if the re-exponentiation residual exceeds tol * max(1, |M|).
NumericLog triangular_log_numeric(const Eigen::MatrixXd& m, double tol);

Eigen::MatrixXd numeric_exp(const Eigen::MatrixXd& m);

}  // namespace lieshull
