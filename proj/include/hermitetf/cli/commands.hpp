#pragma once

#include "hermitetf/cli/reference_table.hpp"
#include "hermitetf/cli/run_config.hpp"
#include "hermitetf/newton_solver.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hermitetf::cli {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int usage = 1;
inline constexpr int not_converged = 2;
inline constexpr int threshold = 3;
}  // namespace exit_code

/// Pass/fail limits for `compare`.
struct CompareThresholds {
  double max_dev_liao = 1e-3;
  double max_dev_present = 2e-3;
  double max_scored_x = 20.0;  ///< rows beyond this x are reported, not scored
  double max_slope_dev = 0.0;
};

struct ComparisonRow {
  ReferenceRow ref;
  double y = 0.0;
  double dev_liao = 0.0;
  double dev_present = 0.0;
  bool scored = false;
};

struct ComparisonReport {
  std::vector<ComparisonRow> rows;
  double max_dev_liao = 0.0;
  double max_dev_present = 0.0;
  std::optional<std::size_t> worst_row;  ///< scored row with the largest threshold ratio
  double slope = 0.0;
  double slope_reference = 0.0;
  double slope_dev = 0.0;
  bool passed = false;
  std::string failure;  ///< empty when passed
};

ComparisonReport compare_to_reference(const SpectralSolution& solution,
                                      const ReferenceTable& table,
                                      const CompareThresholds& limits = {});

/// `samples` log-spaced points on [x_min, x_max], both endpoints included.
/// Throws std::invalid_argument unless 0 < x_min < x_max and samples >= 2.
std::vector<double> log_spaced(double x_min, double x_max, int samples);

/// (x, y_N(x)) at log-spaced points.
std::vector<std::pair<double, double>> plot_samples(const SpectralSolution& solution,
                                                    double x_min, double x_max, int samples);

/// Runs grid -> system -> Newton for a validated configuration.
ThomasFermiSolve run_pipeline(const RunConfig& cfg);

/// Output streams plus an optional path for the solution document.
struct CommandIo {
  std::ostream& out;
  std::ostream& err;
  std::optional<std::filesystem::path> solution_path;
};

int cmd_solve(const RunConfig& cfg, const CommandIo& io);
int cmd_compare(const RunConfig& cfg, const CommandIo& io,
                const ReferenceTable& table = bundled_reference_table());
int cmd_plotdata(const RunConfig& cfg, double x_min, double x_max, int samples,
                 const CommandIo& io);

/// Full command-line entry point; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hermitetf::cli
