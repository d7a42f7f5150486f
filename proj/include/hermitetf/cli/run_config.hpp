#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hermitetf::cli {

enum class OutputFormat { csv, json, pretty };

std::string_view to_string(OutputFormat f);
std::optional<OutputFormat> parse_output_format(std::string_view s);

/// Abscissae of the published solution table.
const std::vector<double>& table_abscissae();

struct RunConfig {
  int basis_order = 15;
  double k = 0.9;
  double lambda = 1.588071;
  double tol = 1e-12;
  int max_iter = 60;
  std::vector<double> eval_points = table_abscissae();
  OutputFormat output_format = OutputFormat::csv;

  /// Throws ConfigError naming the first invalid field.
  void validate() const;
};

/// Configuration problem tied to one field or config-file key.
class ConfigError : public std::runtime_error {
public:
  ConfigError(std::string key, const std::string& message);

  [[nodiscard]] const std::string& key() const noexcept { return key_; }

private:
  std::string key_;
};

/// Values given explicitly on the command line; unset fields leave the config alone.
struct ConfigOverrides {
  std::optional<int> basis_order;
  std::optional<double> k;
  std::optional<double> lambda;
  std::optional<double> tol;
  std::optional<int> max_iter;
  std::optional<std::vector<double>> eval_points;
  std::optional<OutputFormat> output_format;
};

/// Applies a flat `key = value` document on top of base. Blank lines and lines
/// starting with '#' are ignored; eval_points takes a comma-separated list.
/// Unknown keys and unparsable values throw ConfigError.
RunConfig apply_config_text(RunConfig base, std::string_view text);

RunConfig apply_overrides(RunConfig base, const ConfigOverrides& flags);

/// defaults <- config file (if any) <- flags, then validate.
RunConfig load_config(const std::optional<std::filesystem::path>& path,
                      const ConfigOverrides& flags);

/// Parses "0.25,0.5,1" into doubles. Throws ConfigError(key) on malformed entries.
std::vector<double> parse_point_list(std::string_view text, const std::string& key);

}  // namespace hermitetf::cli
