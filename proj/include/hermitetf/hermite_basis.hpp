#pragma once

#include <vector>

namespace hermitetf {

/// Degree of a Hermite polynomial or function, checked against the supported range [0, 200].
class HermiteOrder {
public:
  static constexpr int kMax = 200;

  /// Throws std::out_of_range when n is negative or above kMax.
  explicit HermiteOrder(int n);

  [[nodiscard]] int value() const noexcept { return n_; }

  friend bool operator==(HermiteOrder, HermiteOrder) = default;

private:
  int n_;
};

/// Gauss-Hermite rule for the weight e^{-x^2} on the real line.
struct QuadratureRule {
  std::vector<double> nodes;    ///< ascending, symmetric about 0
  std::vector<double> weights;  ///< w_j, sum to sqrt(pi)
  /// w_j * e^{x_j^2}, computed without forming e^{x_j^2}. Integrates f directly:
  /// sum_j function_weights[j] * f(x_j) ~ int f(x) dx.
  std::vector<double> function_weights;

  [[nodiscard]] std::size_t size() const noexcept { return nodes.size(); }
};

/// Physicists' Hermite polynomial H_n(x) by forward recurrence.
/// Throws std::overflow_error if the value is not representable.
double hermite_poly_eval(HermiteOrder n, double x);

/// Hermite function (2^n n!)^{-1/2} e^{-x^2/2} H_n(x), normalized so that its
/// square integrates to sqrt(pi) over the line.
///
/// Evaluated with the normalized three-term recurrence
///   h_{n+1} = sqrt(2/(n+1)) x h_n - sqrt(n/(n+1)) h_{n-1}
/// carried in a mantissa/binary-exponent form, so the Gaussian factor never
/// underflows before the polynomial growth is applied. Values too small for a
/// double flush to 0.
double hermite_fn_eval(HermiteOrder n, double x);

/// h_0(x) .. h_{n_max}(x) from a single recurrence sweep. Element i is bitwise
/// equal to hermite_fn_eval(i, x).
std::vector<double> hermite_fn_batch(HermiteOrder n_max, double x);

/// First derivative: h_n' = sqrt(n/2) h_{n-1} - sqrt((n+1)/2) h_{n+1}.
double hermite_fn_d1(HermiteOrder n, double x);

/// Second derivative from the oscillator equation: h_n'' = (x^2 - 2n - 1) h_n.
double hermite_fn_d2(HermiteOrder n, double x);

/// Value, first and second derivative of h_0..h_{n_max} at one point.
struct HermiteFnTable {
  std::vector<double> value;
  std::vector<double> d1;
  std::vector<double> d2;
};

HermiteFnTable hermite_fn_table(HermiteOrder n_max, double x);

/// Roots of H_n in ascending order. Requires n >= 1 (throws std::invalid_argument).
std::vector<double> hermite_roots(HermiteOrder n);

/// n-point Gauss-Hermite rule. Requires n >= 1 (throws std::invalid_argument).
QuadratureRule gauss_hermite_rule(HermiteOrder n);

}  // namespace hermitetf
