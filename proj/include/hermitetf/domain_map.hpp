#pragma once

#include "hermitetf/hermite_basis.hpp"

#include <functional>
#include <vector>

namespace hermitetf {

/// Steepness k of the logarithmic map w = ln(z) / k between (0, inf) and the real line.
class MapParams {
public:
  /// Throws std::invalid_argument unless k is finite and positive.
  explicit MapParams(double k);

  [[nodiscard]] double k() const noexcept { return k_; }

  friend bool operator==(const MapParams&, const MapParams&) = default;

private:
  double k_;
};

/// Images of the roots of H_N on the half-line, strictly positive and ascending.
struct CollocationGrid {
  std::vector<double> nodes;
  int source_order = 0;
  MapParams map{1.0};

  [[nodiscard]] std::size_t size() const noexcept { return nodes.size(); }
};

/// ln(z) / k. Throws std::domain_error for z <= 0.
double forward_map(double z, MapParams params);

/// e^{k w}. Throws std::overflow_error when k w > 700.
double inverse_map(double w, MapParams params);

// Transformed basis H^_n(x) = h_n(ln(x)/k) and its x-derivatives. All throw
// std::domain_error for x <= 0.
double transformed_eval(HermiteOrder n, double x, MapParams params);
double transformed_d1(HermiteOrder n, double x, MapParams params);
double transformed_d2(HermiteOrder n, double x, MapParams params);

/// H^_0..H^_{count-1} and their first two x-derivatives at one point.
struct TransformedTable {
  std::vector<double> value;
  std::vector<double> d1;
  std::vector<double> d2;
};

/// Requires 1 <= count <= HermiteOrder::kMax + 1 and x > 0.
TransformedTable transformed_table(int count, double x, MapParams params);

/// Nodes e^{k r_j} for the roots r_j of H_N. Throws std::invalid_argument for N < 1.
CollocationGrid collocation_grid(int N, MapParams params);

using HalfLineFunction = std::function<double(double)>;

/// Inner product on (0, inf) with weight w(x) = 1/(k x).
///
/// Substituting x = e^{kt} turns the integral into int f(e^{kt}) g(e^{kt}) dt over
/// the line, which is evaluated with a quad_order-point Gauss-Hermite rule. The
/// transformed basis is orthogonal under this product with norm^2 = sqrt(pi).
/// Throws std::runtime_error if any integrand sample is not finite.
double half_line_inner_product(const HalfLineFunction& f, const HalfLineFunction& g,
                               MapParams params, int quad_order);

/// Default quadrature order for inner products of basis functions up to degree n.
constexpr int default_quad_order(int n) { return 2 * n + 10; }

}  // namespace hermitetf
