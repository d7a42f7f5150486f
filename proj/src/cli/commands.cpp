#include "hermitetf/cli/commands.hpp"

#include "hermitetf/solution_io.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace hermitetf::cli {

namespace {

using json = nlohmann::json;

// Machine-readable numbers carry 12 significant digits.
std::string num(double v) { return fmt::format("{:.12g}", v); }

json config_to_json(const RunConfig& cfg) {
  return json{{"basis_order", cfg.basis_order}, {"k", cfg.k},
              {"lambda", cfg.lambda},           {"tol", cfg.tol},
              {"max_iter", cfg.max_iter},       {"eval_points", cfg.eval_points},
              {"output_format", to_string(cfg.output_format)}};
}

json report_summary(const SolveReport& r) {
  return json{{"converged", r.converged},
              {"iterations", r.iterations},
              {"final_residual", r.final_residual},
              {"damping_events", r.damping_events}};
}

// Solves and reports failures on err. Returns nullopt with `code` set on failure.
std::optional<ThomasFermiSolve> solve_or_report(const RunConfig& cfg, const CommandIo& io,
                                                int& code) {
  try {
    cfg.validate();
  } catch (const ConfigError& e) {
    io.err << "invalid configuration: " << e.what() << '\n';
    code = exit_code::usage;
    return std::nullopt;
  }

  std::optional<ThomasFermiSolve> result;
  try {
    result = run_pipeline(cfg);
  } catch (const SingularJacobianError& e) {
    io.err << "solve failed: " << e.what() << '\n';
    code = exit_code::not_converged;
    return std::nullopt;
  }

  if (io.solution_path) {
    save_solution(*io.solution_path, result->solution, &result->report);
  }
  if (!result->report.converged) {
    io.err << "Newton iteration did not converge\n" << serialize_report(result->report) << '\n';
    code = exit_code::not_converged;
    return std::nullopt;
  }
  code = exit_code::ok;
  return result;
}

void write_solve_output(const RunConfig& cfg, const ThomasFermiSolve& r, std::ostream& out) {
  const SpectralSolution& s = r.solution;
  switch (cfg.output_format) {
    case OutputFormat::csv:
      out << "# initial_slope=" << num(s.initial_slope()) << '\n';
      out << "x,y\n";
      for (double x : cfg.eval_points) {
        out << num(x) << ',' << num(s.eval(x)) << '\n';
      }
      break;
    case OutputFormat::json: {
      json points = json::array();
      for (double x : cfg.eval_points) {
        points.push_back(json{{"x", x}, {"y", s.eval(x)}});
      }
      const json doc{{"config", config_to_json(cfg)},
                     {"report", report_summary(r.report)},
                     {"initial_slope", s.initial_slope()},
                     {"points", points}};
      out << doc.dump(2) << '\n';
      break;
    }
    case OutputFormat::pretty:
      fmt::print(out, "Thomas-Fermi collocation: basis_order={} k={} lambda={}\n", cfg.basis_order,
                 cfg.k, cfg.lambda);
      fmt::print(out, "converged in {} iterations, max residual {:.3e}, {} damped steps\n\n",
                 r.report.iterations, r.report.final_residual, r.report.damping_events);
      fmt::print(out, "{:>10}  {:>16}\n", "x", "y(x)");
      for (double x : cfg.eval_points) {
        fmt::print(out, "{:>10.4f}  {:>16.12f}\n", x, s.eval(x));
      }
      fmt::print(out, "\ny'(0) = {}\n", s.initial_slope());
      break;
  }
}

void write_comparison(const RunConfig& cfg, const ComparisonReport& c, std::ostream& out) {
  switch (cfg.output_format) {
    case OutputFormat::csv:
      out << "x,y,y_present,y_liao,dev_present,dev_liao,scored\n";
      for (const auto& row : c.rows) {
        out << num(row.ref.x) << ',' << num(row.y) << ',' << num(row.ref.y_present) << ','
            << num(row.ref.y_liao) << ',' << num(row.dev_present) << ',' << num(row.dev_liao) << ','
            << (row.scored ? 1 : 0) << '\n';
      }
      out << "# max_dev_liao=" << num(c.max_dev_liao) << '\n';
      out << "# max_dev_present=" << num(c.max_dev_present) << '\n';
      out << "# initial_slope=" << num(c.slope) << " reference=" << num(c.slope_reference)
          << " dev=" << num(c.slope_dev) << '\n';
      out << "# passed=" << (c.passed ? "true" : "false") << '\n';
      break;
    case OutputFormat::json: {
      json rows = json::array();
      for (const auto& row : c.rows) {
        rows.push_back(json{{"x", row.ref.x},
                            {"y", row.y},
                            {"y_present", row.ref.y_present},
                            {"y_liao", row.ref.y_liao},
                            {"dev_present", row.dev_present},
                            {"dev_liao", row.dev_liao},
                            {"scored", row.scored},
                            {"suspect", row.ref.suspect}});
      }
      json doc{{"config", config_to_json(cfg)},
               {"rows", rows},
               {"max_dev_liao", c.max_dev_liao},
               {"max_dev_present", c.max_dev_present},
               {"initial_slope", c.slope},
               {"slope_reference", c.slope_reference},
               {"slope_dev", c.slope_dev},
               {"passed", c.passed}};
      if (c.worst_row) {
        doc["worst_x"] = c.rows[*c.worst_row].ref.x;
      }
      out << doc.dump(2) << '\n';
      break;
    }
    case OutputFormat::pretty:
      fmt::print(out, "{:>8}  {:>14}  {:>12}  {:>12}  {:>10}  {:>10}\n", "x", "y_N", "present",
                 "Liao", "|dy| pres", "|dy| Liao");
      for (const auto& row : c.rows) {
        fmt::print(out, "{:>8.2f}  {:>14.9f}  {:>12.9f}  {:>12.9f}  {:>10.2e}  {:>10.2e}{}\n",
                   row.ref.x, row.y, row.ref.y_present, row.ref.y_liao, row.dev_present,
                   row.dev_liao, row.scored ? "" : "  (not scored)");
      }
      fmt::print(out, "\nmax |y_N - Liao|    = {:.3e}\n", c.max_dev_liao);
      fmt::print(out, "max |y_N - present| = {:.3e}\n", c.max_dev_present);
      fmt::print(out, "y'(0) = {}  (reference {}, deviation {:.3e})\n", c.slope,
                 c.slope_reference, c.slope_dev);
      fmt::print(out, "{}\n", c.passed ? "PASS" : "FAIL");
      break;
  }
}

}  // namespace

ThomasFermiSolve run_pipeline(const RunConfig& cfg) {
  NewtonConfig newton;
  newton.tol_residual = cfg.tol;
  newton.max_iterations = cfg.max_iter;
  return solve_thomas_fermi(cfg.basis_order, MapParams{cfg.k}, BoundaryTemplate{cfg.lambda},
                            newton);
}

ComparisonReport compare_to_reference(const SpectralSolution& solution,
                                      const ReferenceTable& table,
                                      const CompareThresholds& limits) {
  ComparisonReport c;
  double worst_ratio = -1.0;
  for (const auto& ref : table.rows) {
    ComparisonRow row;
    row.ref = ref;
    row.y = solution.eval(ref.x);
    row.dev_liao = std::abs(row.y - ref.y_liao);
    row.dev_present = std::abs(row.y - ref.y_present);
    row.scored = !ref.suspect && ref.x <= limits.max_scored_x;
    if (row.scored) {
      c.max_dev_liao = std::max(c.max_dev_liao, row.dev_liao);
      c.max_dev_present = std::max(c.max_dev_present, row.dev_present);
      const double ratio = std::max(row.dev_liao / limits.max_dev_liao,
                                    row.dev_present / limits.max_dev_present);
      if (ratio > worst_ratio) {
        worst_ratio = ratio;
        c.worst_row = c.rows.size();
      }
    }
    c.rows.push_back(row);
  }

  c.slope = solution.initial_slope();
  c.slope_reference = table.slope_reference;
  c.slope_dev = std::abs(c.slope - c.slope_reference);

  if (c.max_dev_liao > limits.max_dev_liao || c.max_dev_present > limits.max_dev_present) {
    const auto& w = c.rows[*c.worst_row];
    c.failure = fmt::format("worst row x = {}: |y - y_liao| = {:.3e} (limit {:.1e}), "
                            "|y - y_present| = {:.3e} (limit {:.1e})",
                            w.ref.x, w.dev_liao, limits.max_dev_liao, w.dev_present,
                            limits.max_dev_present);
  } else if (c.slope_dev > limits.max_slope_dev) {
    c.failure = fmt::format("initial slope {} deviates from reference {} by {:.6g}", c.slope,
                            c.slope_reference, c.slope_dev);
  }
  c.passed = c.failure.empty();
  return c;
}

std::vector<double> log_spaced(double x_min, double x_max, int samples) {
  if (!(x_min > 0.0) || !(x_min < x_max) || !std::isfinite(x_max) || samples < 2) {
    throw std::invalid_argument(fmt::format(
        "plot range requires 0 < x_min < x_max and samples >= 2 (got {}, {}, {})", x_min, x_max,
        samples));
  }
  const double lo = std::log(x_min);
  const double step = (std::log(x_max) - lo) / (samples - 1);
  std::vector<double> xs(samples);
  xs.front() = x_min;
  for (int i = 1; i + 1 < samples; ++i) {
    xs[i] = std::exp(lo + i * step);
  }
  xs.back() = x_max;
  return xs;
}

std::vector<std::pair<double, double>> plot_samples(const SpectralSolution& solution,
                                                    double x_min, double x_max, int samples) {
  std::vector<std::pair<double, double>> out;
  for (double x : log_spaced(x_min, x_max, samples)) {
    out.emplace_back(x, solution.eval(x));
  }
  return out;
}

int cmd_solve(const RunConfig& cfg, const CommandIo& io) {
  int code = exit_code::ok;
  const auto result = solve_or_report(cfg, io, code);
  if (!result) {
    return code;
  }
  write_solve_output(cfg, *result, io.out);
  return exit_code::ok;
}

int cmd_compare(const RunConfig& cfg, const CommandIo& io, const ReferenceTable& table) {
  int code = exit_code::ok;
  const auto result = solve_or_report(cfg, io, code);
  if (!result) {
    return code;
  }
  const ComparisonReport c = compare_to_reference(result->solution, table);
  write_comparison(cfg, c, io.out);
  if (!c.passed) {
    io.err << "comparison threshold failure: " << c.failure << '\n';
    return exit_code::threshold;
  }
  return exit_code::ok;
}

int cmd_plotdata(const RunConfig& cfg, double x_min, double x_max, int samples,
                 const CommandIo& io) {
  std::vector<double> xs;
  try {
    xs = log_spaced(x_min, x_max, samples);
  } catch (const std::invalid_argument& e) {
    io.err << "invalid plot range: " << e.what() << '\n';
    return exit_code::usage;
  }
  int code = exit_code::ok;
  const auto result = solve_or_report(cfg, io, code);
  if (!result) {
    return code;
  }
  io.out << "x,y\n";
  for (double x : xs) {
    io.out << num(x) << ',' << num(result->solution.eval(x)) << '\n';
  }
  return exit_code::ok;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Thomas-Fermi equation solver using log-mapped Hermite function collocation",
               "hermitetf"};
  app.require_subcommand(1);

  ConfigOverrides flags;
  std::optional<std::string> eval_points;
  std::optional<std::string> format;
  std::optional<std::string> config_path;
  std::optional<std::string> out_path;
  double x_min = 0.25;
  double x_max = 30.0;
  int samples = 100;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--basis-order", flags.basis_order, "number of basis functions and nodes");
    sub->add_option("--k", flags.k, "steepness of the map x = e^{k t}");
    sub->add_option("--lambda", flags.lambda, "boundary template parameter (y'(0) = -lambda)");
    sub->add_option("--tol", flags.tol, "Newton residual tolerance (max norm)");
    sub->add_option("--max-iter", flags.max_iter, "Newton iteration cap");
    sub->add_option("--eval-points", eval_points, "comma-separated evaluation points");
    sub->add_option("--format", format, "csv, json or pretty");
    sub->add_option("--config", config_path, "key = value configuration file");
    sub->add_option("--out", out_path, "write the solution document to this path");
  };

  CLI::App* solve = app.add_subcommand("solve", "solve and tabulate y(x) and y'(0)");
  CLI::App* compare = app.add_subcommand("compare", "solve and compare with the reference table");
  CLI::App* plot = app.add_subcommand("plotdata", "solve and emit x,y at log-spaced points");
  for (CLI::App* sub : {solve, compare, plot}) {
    add_common(sub);
  }
  plot->add_option("--x-min", x_min, "left end of the plot range")->capture_default_str();
  plot->add_option("--x-max", x_max, "right end of the plot range")->capture_default_str();
  plot->add_option("--samples", samples, "number of points")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::ok : exit_code::usage;
  }

  RunConfig cfg;
  try {
    if (eval_points) {
      flags.eval_points = parse_point_list(*eval_points, "eval_points");
    }
    if (format) {
      flags.output_format = parse_output_format(*format);
      if (!flags.output_format) {
        throw ConfigError("output_format", "expected csv, json or pretty, got '" + *format + "'");
      }
    }
    std::optional<std::filesystem::path> path;
    if (config_path) {
      path = *config_path;
    }
    cfg = load_config(path, flags);
  } catch (const ConfigError& e) {
    err << "invalid configuration: " << e.what() << '\n';
    return exit_code::usage;
  }

  CommandIo io{out, err, std::nullopt};
  if (out_path) {
    io.solution_path = *out_path;
  }
  try {
    if (solve->parsed()) {
      return cmd_solve(cfg, io);
    }
    if (compare->parsed()) {
      return cmd_compare(cfg, io);
    }
    return cmd_plotdata(cfg, x_min, x_max, samples, io);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::usage;
  }
}

}  // namespace hermitetf::cli
