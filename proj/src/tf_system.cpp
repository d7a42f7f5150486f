#include "hermitetf/tf_system.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hermitetf {

double regularized_power_3_2(double y) {
  const double a = std::abs(y);
  return std::copysign(a * std::sqrt(a), y);
}

double regularized_power_3_2_d1(double y) { return 1.5 * std::sqrt(std::abs(y)); }

CollocatedSystem::CollocatedSystem(int basis_order, MapParams map, BoundaryTemplate tmpl)
    : basis_order_(basis_order), template_(tmpl) {
  if (basis_order < 1 || basis_order > HermiteOrder::kMax) {
    throw std::invalid_argument("CollocatedSystem: basis order " + std::to_string(basis_order) +
                                " outside [1, " + std::to_string(HermiteOrder::kMax) + "]");
  }
  grid_ = collocation_grid(basis_order, map);

  const Eigen::Index m = basis_order;
  values_.resize(m, m);
  d2_.resize(m, m);
  template_values_.resize(m);
  template_d2_.resize(m);
  inv_sqrt_nodes_.resize(m);
  for (Eigen::Index j = 0; j < m; ++j) {
    const double x = grid_.nodes[j];
    const TransformedTable t = transformed_table(basis_order, x, map);
    for (Eigen::Index i = 0; i < m; ++i) {
      values_(j, i) = t.value[i];
      d2_(j, i) = t.d2[i];
    }
    template_values_(j) = template_eval(template_, x);
    template_d2_(j) = template_d2(template_, x);
    inv_sqrt_nodes_(j) = 1.0 / std::sqrt(x);
  }
}

void CollocatedSystem::check_length(const Eigen::VectorXd& coeffs) const {
  if (coeffs.size() != basis_order_) {
    throw std::invalid_argument("coefficient vector has length " + std::to_string(coeffs.size()) +
                                ", system has basis order " + std::to_string(basis_order_));
  }
}

double CollocatedSystem::residual_at(const Eigen::VectorXd& coeffs, double x) const {
  check_length(coeffs);
  if (!(x > 0.0)) {
    throw std::domain_error("residual_at: x must be > 0, got " + std::to_string(x));
  }
  const TransformedTable t = transformed_table(basis_order_, x, map());
  const std::span<const double> a(coeffs.data(), static_cast<std::size_t>(coeffs.size()));
  const double y = template_eval(template_, x) + dot(a, t.value);
  const double ypp = template_d2(template_, x) + dot(a, t.d2);
  return ypp - (1.0 / std::sqrt(x)) * regularized_power_3_2(y);
}

Eigen::VectorXd CollocatedSystem::trial_at_nodes(const Eigen::VectorXd& coeffs) const {
  check_length(coeffs);
  return template_values_ + values_ * coeffs;
}

Eigen::VectorXd CollocatedSystem::assemble_residual(const Eigen::VectorXd& coeffs) const {
  const Eigen::VectorXd y = trial_at_nodes(coeffs);
  const Eigen::VectorXd ypp = template_d2_ + d2_ * coeffs;
  Eigen::VectorXd r(basis_order_);
  for (Eigen::Index j = 0; j < r.size(); ++j) {
    r(j) = ypp(j) - inv_sqrt_nodes_(j) * regularized_power_3_2(y(j));
  }
  return r;
}

Eigen::MatrixXd CollocatedSystem::assemble_jacobian(const Eigen::VectorXd& coeffs) const {
  const Eigen::VectorXd y = trial_at_nodes(coeffs);
  Eigen::MatrixXd jac = d2_;
  for (Eigen::Index j = 0; j < jac.rows(); ++j) {
    const double scale = inv_sqrt_nodes_(j) * regularized_power_3_2_d1(y(j));
    jac.row(j) -= scale * values_.row(j);
  }
  return jac;
}

}  // namespace hermitetf
