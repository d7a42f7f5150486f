#include "hermitetf/ansatz.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hermitetf {

namespace {

void require_non_negative(double x, const char* what) {
  if (!(x >= 0.0)) {
    throw std::domain_error(std::string(what) + ": x must be >= 0, got " + std::to_string(x));
  }
}

}  // namespace

BoundaryTemplate::BoundaryTemplate(double lambda) : lambda_(lambda) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument("template lambda must be finite and >= 0, got " +
                                std::to_string(lambda));
  }
}

double template_eval(BoundaryTemplate t, double x) {
  require_non_negative(x, "template_eval");
  if (std::isinf(x)) {
    return 0.0;
  }
  return 1.0 / (1.0 + t.lambda() * x + x * x);
}

double template_d1(BoundaryTemplate t, double x) {
  require_non_negative(x, "template_d1");
  const double q = 1.0 + t.lambda() * x + x * x;
  return -(t.lambda() + 2.0 * x) / (q * q);
}

double template_d2(BoundaryTemplate t, double x) {
  require_non_negative(x, "template_d2");
  const double q = 1.0 + t.lambda() * x + x * x;
  const double s = t.lambda() + 2.0 * x;
  return -2.0 / (q * q) + 2.0 * s * s / (q * q * q);
}

double dot(std::span<const double> a, std::span<const double> values) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sum += a[i] * values[i];
  }
  return sum;
}

SpectralSolution::SpectralSolution(std::vector<double> coefficients, MapParams map,
                                   BoundaryTemplate tmpl)
    : coefficients_(std::move(coefficients)), map_(map), template_(tmpl) {
  if (coefficients_.empty() || coefficients_.size() > HermiteOrder::kMax + 1) {
    throw std::invalid_argument("SpectralSolution: coefficient count " +
                                std::to_string(coefficients_.size()) + " outside [1, " +
                                std::to_string(HermiteOrder::kMax + 1) + "]");
  }
}

double SpectralSolution::eval(double x) const {
  if (!(x > 0.0)) {
    throw std::domain_error("SpectralSolution::eval: x must be > 0 (use value_at_origin)");
  }
  const TransformedTable t = transformed_table(basis_order(), x, map_);
  return template_eval(template_, x) + dot(coefficients_, t.value);
}

double SpectralSolution::d1(double x) const {
  if (!(x > 0.0)) {
    throw std::domain_error("SpectralSolution::d1: x must be > 0 (use initial_slope)");
  }
  const TransformedTable t = transformed_table(basis_order(), x, map_);
  return template_d1(template_, x) + dot(coefficients_, t.d1);
}

double SpectralSolution::d2(double x) const {
  if (!(x > 0.0)) {
    throw std::domain_error("SpectralSolution::d2: x must be > 0");
  }
  const TransformedTable t = transformed_table(basis_order(), x, map_);
  return template_d2(template_, x) + dot(coefficients_, t.d2);
}

double solution_eval(const SpectralSolution& s, double x) { return s.eval(x); }
double solution_d2(const SpectralSolution& s, double x) { return s.d2(x); }
double initial_slope(const SpectralSolution& s) { return s.initial_slope(); }

}  // namespace hermitetf
