#pragma once

#include "hermitetf/domain_map.hpp"

#include <span>
#include <vector>

namespace hermitetf {

/// p(x) = 1 / (1 + lambda x + x^2): equals 1 at the origin and decays like x^{-2},
/// so any trial solution built on it meets y(0) = 1 and y(inf) = 0.
class BoundaryTemplate {
public:
  /// Throws std::invalid_argument unless lambda is finite and >= 0.
  explicit BoundaryTemplate(double lambda);

  [[nodiscard]] double lambda() const noexcept { return lambda_; }

  friend bool operator==(const BoundaryTemplate&, const BoundaryTemplate&) = default;

private:
  double lambda_;
};

// Closed forms; x must be >= 0 (std::domain_error otherwise).
double template_eval(BoundaryTemplate t, double x);
double template_d1(BoundaryTemplate t, double x);
double template_d2(BoundaryTemplate t, double x);

/// Trial solution y_N(x) = p(x) + sum_i a_i H^_i(x).
class SpectralSolution {
public:
  /// Throws std::invalid_argument if coefficients is empty or longer than
  /// HermiteOrder::kMax + 1.
  SpectralSolution(std::vector<double> coefficients, MapParams map, BoundaryTemplate tmpl);

  [[nodiscard]] const std::vector<double>& coefficients() const noexcept { return coefficients_; }
  [[nodiscard]] int basis_order() const noexcept { return static_cast<int>(coefficients_.size()); }
  [[nodiscard]] MapParams map() const noexcept { return map_; }
  [[nodiscard]] BoundaryTemplate boundary_template() const noexcept { return template_; }

  // x must be > 0 (std::domain_error otherwise).
  [[nodiscard]] double eval(double x) const;
  [[nodiscard]] double d1(double x) const;
  [[nodiscard]] double d2(double x) const;

  /// y_N(0+) = 1; every basis function vanishes at the origin.
  [[nodiscard]] static constexpr double value_at_origin() noexcept { return 1.0; }

  /// y_N'(0+) = p'(0) = -lambda, since x dH^_n/dx -> 0 as x -> 0+.
  [[nodiscard]] double initial_slope() const noexcept { return -template_.lambda(); }

private:
  std::vector<double> coefficients_;
  MapParams map_;
  BoundaryTemplate template_;
};

double solution_eval(const SpectralSolution& s, double x);
double solution_d2(const SpectralSolution& s, double x);
double initial_slope(const SpectralSolution& s);

/// sum_i a_i * values_i
double dot(std::span<const double> a, std::span<const double> values);

}  // namespace hermitetf
