#include "hermitetf/dense_solve.hpp"

#include <cmath>
#include <string>

namespace hermitetf {

LuFactorization::LuFactorization(Eigen::MatrixXd a) : lu_(std::move(a)) {
  if (lu_.rows() != lu_.cols()) {
    throw std::invalid_argument("LuFactorization: matrix is " + std::to_string(lu_.rows()) + "x" +
                                std::to_string(lu_.cols()) + ", expected square");
  }
  const Eigen::Index n = lu_.rows();
  perm_.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    perm_(i) = static_cast<int>(i);
  }

  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot = k;
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (std::abs(lu_(i, k)) > std::abs(lu_(pivot, k))) {
        pivot = i;
      }
    }
    if (!(std::abs(lu_(pivot, k)) >= kPivotFloor)) {
      throw SingularMatrixError("matrix is numerically singular at column " + std::to_string(k));
    }
    if (pivot != k) {
      lu_.row(k).swap(lu_.row(pivot));
      std::swap(perm_(k), perm_(pivot));
    }

    const double inv = 1.0 / lu_(k, k);
    for (Eigen::Index i = k + 1; i < n; ++i) {
      const double m = lu_(i, k) * inv;
      lu_(i, k) = m;
      for (Eigen::Index j = k + 1; j < n; ++j) {
        lu_(i, j) -= m * lu_(k, j);
      }
    }
  }
}

Eigen::VectorXd LuFactorization::solve(const Eigen::VectorXd& b) const {
  const Eigen::Index n = lu_.rows();
  if (b.size() != n) {
    throw std::invalid_argument("LuFactorization::solve: rhs has length " +
                                std::to_string(b.size()) + ", expected " + std::to_string(n));
  }

  // L y = P b
  Eigen::VectorXd x(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double sum = b(perm_(i));
    for (Eigen::Index j = 0; j < i; ++j) {
      sum -= lu_(i, j) * x(j);
    }
    x(i) = sum;
  }
  // U x = y
  for (Eigen::Index i = n - 1; i >= 0; --i) {
    double sum = x(i);
    for (Eigen::Index j = i + 1; j < n; ++j) {
      sum -= lu_(i, j) * x(j);
    }
    x(i) = sum / lu_(i, i);
  }
  return x;
}

Eigen::VectorXd dense_solve(const Eigen::MatrixXd& a, const Eigen::VectorXd& b) {
  return LuFactorization(a).solve(b);
}

}  // namespace hermitetf
