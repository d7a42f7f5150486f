#pragma once

#include <Eigen/Core>

#include <stdexcept>

namespace hermitetf {

class SingularMatrixError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Row-pivoted LU factorization of a square matrix, P A = L U, with L unit lower
/// triangular. L and U share one packed matrix.
class LuFactorization {
public:
  /// Pivots with magnitude below this are treated as exact zeros.
  static constexpr double kPivotFloor = 1e-300;

  /// Throws std::invalid_argument if a is not square and SingularMatrixError if a
  /// pivot falls below kPivotFloor.
  explicit LuFactorization(Eigen::MatrixXd a);

  [[nodiscard]] Eigen::VectorXd solve(const Eigen::VectorXd& b) const;

  [[nodiscard]] Eigen::Index size() const noexcept { return lu_.rows(); }

private:
  Eigen::MatrixXd lu_;
  Eigen::VectorXi perm_;
};

/// Solves A x = b. Throws SingularMatrixError for a numerically singular A and
/// std::invalid_argument on a shape mismatch.
Eigen::VectorXd dense_solve(const Eigen::MatrixXd& a, const Eigen::VectorXd& b);

}  // namespace hermitetf
