#include "hermitetf/hermite_basis.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hermitetf {

HermiteOrder::HermiteOrder(int n) : n_(n) {
  if (n < 0 || n > kMax) {
    throw std::out_of_range("Hermite order " + std::to_string(n) + " outside [0, " +
                            std::to_string(kMax) + "]");
  }
}

namespace {

// Past this |x| every supported Hermite function is far below the smallest
// subnormal double.
constexpr double kNegligibleAbscissa = 1.0e4;

// Mantissas are renormalized once they exceed 2^kRescaleBits.
constexpr int kRescaleBits = 300;
const double kRescaleThreshold = std::ldexp(1.0, kRescaleBits);

// h_i = mantissa[i] * 2^exponent[i]
struct ScaledSweep {
  std::vector<double> mantissa;
  std::vector<long> exponent;

  [[nodiscard]] double value(std::size_t i) const {
    return std::ldexp(mantissa[i], static_cast<int>(exponent[i]));
  }
};

ScaledSweep hermite_fn_sweep(int n_max, double x) {
  ScaledSweep s;
  s.mantissa.resize(n_max + 1);
  s.exponent.resize(n_max + 1);

  // e^{-x^2/2} = e^r * 2^m, with r in [0, ln 2).
  const double g = -0.5 * x * x;
  const double m = std::floor(g / std::numbers::ln2);
  const double r = g - m * std::numbers::ln2;
  long e = static_cast<long>(m);

  double prev = 0.0;
  double cur = std::exp(r);
  s.mantissa[0] = cur;
  s.exponent[0] = e;
  for (int i = 0; i < n_max; ++i) {
    const double a = std::sqrt(2.0 / (i + 1));
    const double b = std::sqrt(static_cast<double>(i) / (i + 1));
    const double next = a * x * cur - b * prev;
    prev = cur;
    cur = next;
    if (std::abs(cur) > kRescaleThreshold) {
      cur = std::ldexp(cur, -kRescaleBits);
      prev = std::ldexp(prev, -kRescaleBits);
      e += kRescaleBits;
    }
    s.mantissa[i + 1] = cur;
    s.exponent[i + 1] = e;
  }
  return s;
}

std::vector<double> zeros_or_nan(int count, double x) {
  return std::vector<double>(count, std::isnan(x) ? x : 0.0);
}

}  // namespace

double hermite_poly_eval(HermiteOrder n, double x) {
  double prev = 0.0;
  double cur = 1.0;
  for (int i = 0; i < n.value(); ++i) {
    const double next = 2.0 * x * cur - 2.0 * i * prev;
    prev = cur;
    cur = next;
    if (!std::isfinite(cur)) {
      throw std::overflow_error("H_" + std::to_string(n.value()) + "(" + std::to_string(x) +
                                ") is not representable as a double");
    }
  }
  return cur;
}

std::vector<double> hermite_fn_batch(HermiteOrder n_max, double x) {
  const int count = n_max.value() + 1;
  if (!std::isfinite(x) || std::abs(x) > kNegligibleAbscissa) {
    return zeros_or_nan(count, x);
  }
  const ScaledSweep sweep = hermite_fn_sweep(n_max.value(), x);
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i) {
    out[i] = sweep.value(i);
  }
  return out;
}

double hermite_fn_eval(HermiteOrder n, double x) {
  return hermite_fn_batch(n, x).back();
}

HermiteFnTable hermite_fn_table(HermiteOrder n_max, double x) {
  const int n = n_max.value();
  // One extra term for the derivative identity; the sweep never exceeds kMax + 1
  // entries, which is why this bypasses HermiteOrder.
  std::vector<double> h;
  if (!std::isfinite(x) || std::abs(x) > kNegligibleAbscissa) {
    h = zeros_or_nan(n + 2, x);
  } else {
    const ScaledSweep sweep = hermite_fn_sweep(n + 1, x);
    h.resize(n + 2);
    for (int i = 0; i < n + 2; ++i) {
      h[i] = sweep.value(i);
    }
  }

  HermiteFnTable t;
  t.value.assign(h.begin(), h.begin() + n + 1);
  t.d1.resize(n + 1);
  t.d2.resize(n + 1);
  for (int i = 0; i <= n; ++i) {
    const double down = i > 0 ? std::sqrt(i / 2.0) * h[i - 1] : 0.0;
    t.d1[i] = down - std::sqrt((i + 1) / 2.0) * h[i + 1];
    t.d2[i] = (x * x - 2.0 * i - 1.0) * h[i];
  }
  return t;
}

double hermite_fn_d1(HermiteOrder n, double x) {
  return hermite_fn_table(n, x).d1.back();
}

double hermite_fn_d2(HermiteOrder n, double x) {
  return hermite_fn_table(n, x).d2.back();
}

std::vector<double> hermite_roots(HermiteOrder order) {
  const int n = order.value();
  if (n == 0) {
    throw std::invalid_argument("H_0 has no roots");
  }

  // Symmetric tridiagonal Jacobi matrix of the recurrence: zero diagonal,
  // off-diagonal sqrt(i/2).
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd sub(std::max(n - 1, 0));
  for (int i = 1; i < n; ++i) {
    sub(i - 1) = std::sqrt(i / 2.0);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig;
  eig.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (eig.info() != Eigen::Success) {
    throw std::runtime_error("tridiagonal eigensolver failed for Hermite order " +
                             std::to_string(n));
  }
  std::vector<double> roots(eig.eigenvalues().data(), eig.eigenvalues().data() + n);
  std::sort(roots.begin(), roots.end());

  // One Newton step on h_n. Since h_n' = sqrt(2n) h_{n-1} - x h_n and h_n(root) = 0,
  // the step is h_n / (sqrt(2n) h_{n-1}), formed from mantissas so it is immune to
  // Gaussian underflow far from the origin.
  for (double& r : roots) {
    const ScaledSweep s = hermite_fn_sweep(n, r);
    const double ratio = std::ldexp(s.mantissa[n] / s.mantissa[n - 1],
                                    static_cast<int>(s.exponent[n] - s.exponent[n - 1]));
    if (std::isfinite(ratio)) {
      r -= ratio / std::sqrt(2.0 * n);
    }
  }

  // Enforce exact symmetry; the middle root of an odd order is exactly zero.
  for (int i = 0; i < n / 2; ++i) {
    const double half = 0.5 * (roots[n - 1 - i] - roots[i]);
    roots[i] = -half;
    roots[n - 1 - i] = half;
  }
  if (n % 2 == 1) {
    roots[n / 2] = 0.0;
  }
  return roots;
}

QuadratureRule gauss_hermite_rule(HermiteOrder order) {
  const int n = order.value();
  QuadratureRule rule;
  rule.nodes = hermite_roots(order);
  rule.weights.resize(n);
  rule.function_weights.resize(n);

  // Christoffel numbers: w_j e^{x_j^2} = sqrt(pi) / sum_{i<n} h_i(x_j)^2.
  const double sqrt_pi = std::sqrt(std::numbers::pi);
  for (int j = 0; j < n; ++j) {
    const double x = rule.nodes[j];
    const std::vector<double> h = hermite_fn_batch(HermiteOrder{n - 1}, x);
    double sum = 0.0;
    for (double v : h) {
      sum += v * v;
    }
    rule.function_weights[j] = sqrt_pi / sum;
    rule.weights[j] = sqrt_pi * std::exp(-x * x - std::log(sum));
  }
  return rule;
}

}  // namespace hermitetf
