#include "lieshull/matrix_functions.hpp"

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>
#include <cmath>
#include <sstream>

namespace lieshull {

NumericLog triangular_log_numeric(const Eigen::MatrixXd& m, double tol) {
  if (m.rows() != m.cols()) throw InputError("triangular_log_numeric: non-square matrix");
  if (m.rows() == 0) return {m, 0.0};
  if (!m.allFinite()) throw InputError("triangular_log_numeric: non-finite entries");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  Eigen::EigenSolver<Eigen::MatrixXd> es(m, false);
  for (Index i = 0; i < m.rows(); ++i) {
    const std::complex<double> z = es.eigenvalues()(i);
    if (std::abs(z) <= tol * scale) {
      throw PreconditionError("triangular_log_numeric: matrix is singular");
    }
    if (std::abs(z.imag()) <= tol * scale && z.real() < 0) {
      std::ostringstream msg;
      msg << "no principal real logarithm: negative real eigenvalue " << z.real();
      throw PreconditionError(msg.str());
    }
  }
  NumericLog out;
  out.log = m.log();
  out.residual = (out.log.exp() - m).cwiseAbs().maxCoeff();
  if (!out.log.allFinite() || out.residual > tol * scale) {
    std::ostringstream msg;
    msg << "triangular_log_numeric: residual " << out.residual << " exceeds tolerance";
    throw ComputationError(msg.str());
  }
  return out;
}

Eigen::MatrixXd numeric_exp(const Eigen::MatrixXd& m) {
  if (m.rows() == 0) return m;
  return m.exp();
}

}  // namespace lieshull
