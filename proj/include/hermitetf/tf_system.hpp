#pragma once

#include "hermitetf/ansatz.hpp"
#include "hermitetf/domain_map.hpp"

#include <Eigen/Core>

namespace hermitetf {

/// sign(y) |y|^{3/2}: an odd, C^1 extension of y^{3/2} to negative y.
double regularized_power_3_2(double y);

/// Derivative of regularized_power_3_2: (3/2) |y|^{1/2}.
double regularized_power_3_2_d1(double y);

/// Collocated Thomas-Fermi system y'' = x^{-1/2} y^{3/2} for the trial solution
/// p + sum_{i<M} a_i H^_i, imposed at the M nodes generated by the roots of H_M.
///
/// Basis tables are computed once at construction; the object is immutable
/// afterwards and safe to share across threads.
class CollocatedSystem {
public:
  /// Throws std::invalid_argument unless 1 <= basis_order <= HermiteOrder::kMax.
  CollocatedSystem(int basis_order, MapParams map, BoundaryTemplate tmpl);

  [[nodiscard]] int basis_order() const noexcept { return basis_order_; }
  [[nodiscard]] const CollocationGrid& grid() const noexcept { return grid_; }
  [[nodiscard]] MapParams map() const noexcept { return grid_.map; }
  [[nodiscard]] BoundaryTemplate boundary_template() const noexcept { return template_; }

  /// (node j, basis i) -> H^_i(x_j)
  [[nodiscard]] const Eigen::MatrixXd& value_table() const noexcept { return values_; }
  /// (node j, basis i) -> H^_i''(x_j)
  [[nodiscard]] const Eigen::MatrixXd& d2_table() const noexcept { return d2_; }

  /// Residual p'' + sum a_i H^_i'' - x^{-1/2} (p + sum a_i H^_i)^{3/2} at an
  /// arbitrary x > 0, evaluated without the cached tables.
  /// Throws std::domain_error for x <= 0 and std::invalid_argument on a length mismatch.
  [[nodiscard]] double residual_at(const Eigen::VectorXd& coeffs, double x) const;

  /// Residual at every node.
  [[nodiscard]] Eigen::VectorXd assemble_residual(const Eigen::VectorXd& coeffs) const;

  /// d residual_j / d a_i, analytic.
  [[nodiscard]] Eigen::MatrixXd assemble_jacobian(const Eigen::VectorXd& coeffs) const;

  /// Trial solution at the nodes.
  [[nodiscard]] Eigen::VectorXd trial_at_nodes(const Eigen::VectorXd& coeffs) const;

private:
  void check_length(const Eigen::VectorXd& coeffs) const;

  int basis_order_;
  BoundaryTemplate template_;
  CollocationGrid grid_;
  Eigen::MatrixXd values_;
  Eigen::MatrixXd d2_;
  Eigen::VectorXd template_values_;
  Eigen::VectorXd template_d2_;
  Eigen::VectorXd inv_sqrt_nodes_;
};

}  // namespace hermitetf
