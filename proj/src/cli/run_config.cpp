#include "hermitetf/cli/run_config.hpp"

#include "hermitetf/hermite_basis.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace hermitetf::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <class T>
T parse_number(std::string_view text, const std::string& key) {
  text = trim(text);
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw ConfigError(key, "cannot parse '" + std::string(text) + "' as a number");
  }
  return value;
}

}  // namespace

std::string_view to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::csv: return "csv";
    case OutputFormat::json: return "json";
    case OutputFormat::pretty: return "pretty";
  }
  return "csv";
}

std::optional<OutputFormat> parse_output_format(std::string_view s) {
  if (s == "csv") return OutputFormat::csv;
  if (s == "json") return OutputFormat::json;
  if (s == "pretty") return OutputFormat::pretty;
  return std::nullopt;
}

const std::vector<double>& table_abscissae() {
  static const std::vector<double> xs{0.25, 0.50, 0.75, 1.00, 1.25, 2.00, 2.25, 2.50, 2.75,
                                      3.00, 3.25, 3.50, 3.75, 4.00, 8.00, 15.0, 20.0, 30.0};
  return xs;
}

ConfigError::ConfigError(std::string key, const std::string& message)
    : std::runtime_error(key + ": " + message), key_(std::move(key)) {}

void RunConfig::validate() const {
  if (basis_order < 1 || basis_order > HermiteOrder::kMax) {
    throw ConfigError("basis_order", "must be in [1, " + std::to_string(HermiteOrder::kMax) + "]");
  }
  if (!(k > 0.0) || !std::isfinite(k)) {
    throw ConfigError("k", "must be finite and > 0");
  }
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw ConfigError("lambda", "must be finite and >= 0");
  }
  if (!(tol > 0.0)) {
    throw ConfigError("tol", "must be > 0");
  }
  if (max_iter < 1) {
    throw ConfigError("max_iter", "must be >= 1");
  }
  if (eval_points.empty()) {
    throw ConfigError("eval_points", "must not be empty");
  }
  for (double x : eval_points) {
    if (!(x > 0.0) || !std::isfinite(x)) {
      throw ConfigError("eval_points", "every point must be finite and > 0");
    }
  }
}

std::vector<double> parse_point_list(std::string_view text, const std::string& key) {
  std::vector<double> out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(parse_number<double>(text.substr(0, comma), key));
    if (comma == std::string_view::npos) {
      break;
    }
    text.remove_prefix(comma + 1);
  }
  return out;
}

RunConfig apply_config_text(RunConfig base, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') {
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no), "expected 'key = value'");
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));

    if (key == "basis_order") {
      base.basis_order = parse_number<int>(value, key);
    } else if (key == "k") {
      base.k = parse_number<double>(value, key);
    } else if (key == "lambda") {
      base.lambda = parse_number<double>(value, key);
    } else if (key == "tol") {
      base.tol = parse_number<double>(value, key);
    } else if (key == "max_iter") {
      base.max_iter = parse_number<int>(value, key);
    } else if (key == "eval_points") {
      base.eval_points = parse_point_list(value, key);
    } else if (key == "output_format") {
      const auto f = parse_output_format(value);
      if (!f) {
        throw ConfigError(key, "expected csv, json or pretty, got '" + std::string(value) + "'");
      }
      base.output_format = *f;
    } else {
      throw ConfigError(key, "unknown configuration key");
    }
  }
  return base;
}

RunConfig apply_overrides(RunConfig base, const ConfigOverrides& flags) {
  if (flags.basis_order) base.basis_order = *flags.basis_order;
  if (flags.k) base.k = *flags.k;
  if (flags.lambda) base.lambda = *flags.lambda;
  if (flags.tol) base.tol = *flags.tol;
  if (flags.max_iter) base.max_iter = *flags.max_iter;
  if (flags.eval_points) base.eval_points = *flags.eval_points;
  if (flags.output_format) base.output_format = *flags.output_format;
  return base;
}

RunConfig load_config(const std::optional<std::filesystem::path>& path,
                      const ConfigOverrides& flags) {
  RunConfig cfg;
  if (path) {
    std::ifstream in(*path);
    if (!in) {
      throw ConfigError("config", "cannot read " + path->string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    cfg = apply_config_text(std::move(cfg), buf.str());
  }
  cfg = apply_overrides(std::move(cfg), flags);
  cfg.validate();
  return cfg;
}

}  // namespace hermitetf::cli
