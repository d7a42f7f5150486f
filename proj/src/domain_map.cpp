#include "hermitetf/domain_map.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hermitetf {

namespace {

constexpr double kMaxExponent = 700.0;

void require_positive(double x, const char* what) {
  if (!(x > 0.0)) {
    throw std::domain_error(std::string(what) + ": argument must be > 0, got " +
                            std::to_string(x));
  }
}

}  // namespace

MapParams::MapParams(double k) : k_(k) {
  if (!(k > 0.0) || !std::isfinite(k)) {
    throw std::invalid_argument("map steepness k must be finite and > 0, got " +
                                std::to_string(k));
  }
}

double forward_map(double z, MapParams params) {
  require_positive(z, "forward_map");
  return std::log(z) / params.k();
}

double inverse_map(double w, MapParams params) {
  const double kw = params.k() * w;
  if (kw > kMaxExponent) {
    throw std::overflow_error("inverse_map: k*w = " + std::to_string(kw) + " exceeds " +
                              std::to_string(kMaxExponent));
  }
  return std::exp(kw);
}

TransformedTable transformed_table(int count, double x, MapParams params) {
  require_positive(x, "transformed_table");
  if (count < 1) {
    throw std::invalid_argument("transformed_table: count must be >= 1");
  }
  const double t = forward_map(x, params);
  HermiteFnTable h = hermite_fn_table(HermiteOrder{count - 1}, t);

  // d/dx = (1/(k x)) d/dt; d2/dx2 = (1/(k x))^2 d2/dt2 - (1/(k x^2)) d/dt.
  const double kx = params.k() * x;
  const double kxx = kx * x;
  TransformedTable out;
  out.value = std::move(h.value);
  out.d1.resize(count);
  out.d2.resize(count);
  for (int i = 0; i < count; ++i) {
    out.d1[i] = h.d1[i] / kx;
    out.d2[i] = h.d2[i] / (kx * kx) - h.d1[i] / kxx;
  }
  return out;
}

double transformed_eval(HermiteOrder n, double x, MapParams params) {
  require_positive(x, "transformed_eval");
  return hermite_fn_eval(n, forward_map(x, params));
}

double transformed_d1(HermiteOrder n, double x, MapParams params) {
  return transformed_table(n.value() + 1, x, params).d1.back();
}

double transformed_d2(HermiteOrder n, double x, MapParams params) {
  return transformed_table(n.value() + 1, x, params).d2.back();
}

CollocationGrid collocation_grid(int N, MapParams params) {
  if (N < 1) {
    throw std::invalid_argument("collocation_grid: N must be >= 1, got " + std::to_string(N));
  }
  CollocationGrid grid;
  grid.source_order = N;
  grid.map = params;
  for (double r : hermite_roots(HermiteOrder{N})) {
    grid.nodes.push_back(inverse_map(r, params));
  }
  return grid;
}

double half_line_inner_product(const HalfLineFunction& f, const HalfLineFunction& g,
                               MapParams params, int quad_order) {
  if (quad_order < 1) {
    throw std::invalid_argument("half_line_inner_product: quad_order must be >= 1");
  }
  const QuadratureRule rule = gauss_hermite_rule(HermiteOrder{quad_order});
  double sum = 0.0;
  for (std::size_t j = 0; j < rule.size(); ++j) {
    const double x = inverse_map(rule.nodes[j], params);
    const double sample = f(x) * g(x);
    if (!std::isfinite(sample)) {
      throw std::runtime_error("half_line_inner_product: non-finite integrand at x = " +
                               std::to_string(x));
    }
    sum += rule.function_weights[j] * sample;
  }
  return sum;
}

}  // namespace hermitetf
