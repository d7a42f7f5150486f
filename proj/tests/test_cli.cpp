#include "hermitetf/cli/commands.hpp"
#include "hermitetf/cli/reference_table.hpp"
#include "hermitetf/cli/run_config.hpp"
#include "hermitetf/solution_io.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace hermitetf;
using namespace hermitetf::cli;
using doctest::Approx;

namespace {

struct TempFile {
  std::filesystem::path path;

  explicit TempFile(const std::string& name, const std::string& content = "")
      : path(std::filesystem::temp_directory_path() / name) {
    std::ofstream(path) << content;
  }
  ~TempFile() { std::filesystem::remove(path); }
};

struct CliRun {
  int code = -1;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "hermitetf");
  std::vector<const char*> argv;
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  std::ostringstream out;
  std::ostringstream err;
  CliRun r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::pair<double, double>> parse_xy_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::pair<double, double>> rows;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') {
      continue;
    }
    if (!header) {
      REQUIRE(line == "x,y");
      header = true;
      continue;
    }
    const auto comma = line.find(',');
    rows.emplace_back(std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1)));
  }
  return rows;
}

}  // namespace

TEST_CASE("default configuration is the headline run") {
  const RunConfig cfg = load_config(std::nullopt, {});
  CHECK(cfg.basis_order == 15);
  CHECK(cfg.k == 0.9);
  CHECK(cfg.lambda == 1.588071);
  CHECK(cfg.tol == 1e-12);
  CHECK(cfg.max_iter == 60);
  CHECK(cfg.eval_points.size() == 18);
  CHECK(cfg.eval_points.front() == 0.25);
  CHECK(cfg.eval_points.back() == 30.0);
  CHECK(cfg.output_format == OutputFormat::csv);
}

TEST_CASE("load_config examples") {
  SUBCASE("empty file and no flags give the defaults") {
    const TempFile f("hermitetf_empty.cfg");
    const RunConfig cfg = load_config(f.path, {});
    CHECK(cfg.basis_order == 15);
    CHECK(cfg.k == 0.9);
    CHECK(cfg.lambda == 1.588071);
  }
  SUBCASE("flags win over the file") {
    const TempFile f("hermitetf_k.cfg", "k = 0.5\nlambda = 1.2\n");
    ConfigOverrides flags;
    flags.k = 0.9;
    const RunConfig cfg = load_config(f.path, flags);
    CHECK(cfg.k == 0.9);
    CHECK(cfg.lambda == 1.2);
  }
  SUBCASE("unknown keys are rejected by name") {
    const TempFile f("hermitetf_bad.cfg", "klambda = 2\n");
    try {
      load_config(f.path, {});
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      CHECK(e.key() == "klambda");
    }
  }
}

TEST_CASE("config file parsing") {
  const RunConfig cfg = apply_config_text(RunConfig{}, R"(# comment
basis_order = 11
  k=0.75
tol = 1e-10
max_iter = 12
eval_points = 0.5, 1, 2.5
output_format = json
)");
  CHECK(cfg.basis_order == 11);
  CHECK(cfg.k == 0.75);
  CHECK(cfg.tol == 1e-10);
  CHECK(cfg.max_iter == 12);
  CHECK(cfg.eval_points == std::vector<double>{0.5, 1.0, 2.5});
  CHECK(cfg.output_format == OutputFormat::json);

  const auto key_of = [](const std::string& text) {
    try {
      apply_config_text(RunConfig{}, text);
    } catch (const ConfigError& e) {
      return e.key();
    }
    return std::string("<none>");
  };
  CHECK(key_of("basis_order = fifteen") == "basis_order");
  CHECK(key_of("basis_order = 1.5") == "basis_order");
  CHECK(key_of("k = ") == "k");
  CHECK(key_of("eval_points = 1,,2") == "eval_points");
  CHECK(key_of("output_format = xml") == "output_format");
  CHECK(key_of("just text") == "line 1");
}

TEST_CASE("validation names the offending field") {
  const auto field_of = [](RunConfig cfg) {
    try {
      cfg.validate();
    } catch (const ConfigError& e) {
      return e.key();
    }
    return std::string("<valid>");
  };
  RunConfig cfg;
  CHECK(field_of(cfg) == "<valid>");
  cfg.basis_order = 0;
  CHECK(field_of(cfg) == "basis_order");
  cfg = RunConfig{};
  cfg.k = -1.0;
  CHECK(field_of(cfg) == "k");
  cfg = RunConfig{};
  cfg.lambda = -0.5;
  CHECK(field_of(cfg) == "lambda");
  cfg = RunConfig{};
  cfg.tol = 0.0;
  CHECK(field_of(cfg) == "tol");
  cfg = RunConfig{};
  cfg.max_iter = 0;
  CHECK(field_of(cfg) == "max_iter");
  cfg = RunConfig{};
  cfg.eval_points = {1.0, 0.0};
  CHECK(field_of(cfg) == "eval_points");
  cfg.eval_points.clear();
  CHECK(field_of(cfg) == "eval_points");
}

TEST_CASE("unreadable config file is a config error") {
  CHECK_THROWS_AS(load_config(std::filesystem::path("/nonexistent/x.cfg"), {}), ConfigError);
}

TEST_CASE("bundled reference table transcribes the published values") {
  const ReferenceTable& t = bundled_reference_table();
  REQUIRE(t.rows.size() == 18);
  CHECK(t.rows[0].x == 0.25);
  CHECK(t.rows[0].y_present == 0.754795330);
  CHECK(t.rows[0].y_liao == 0.755202000);
  CHECK(t.rows[3].x == 1.0);
  CHECK(t.rows[3].y_present == 0.423811203);
  CHECK(t.rows[16].x == 20.0);
  CHECK(t.rows[16].y_liao == 0.005784940);
  CHECK(t.rows[17].x == 30.0);
  CHECK(t.rows[17].suspect);
  CHECK(t.rows[17].y_present == 0.002252634);
  for (std::size_t i = 0; i < 17; ++i) {
    CHECK_FALSE(t.rows[i].suspect);
  }
  CHECK(t.slope_present == -1.588071);
  CHECK(t.slope_reference == -1.588071);

  std::vector<double> xs;
  for (const auto& row : t.rows) {
    xs.push_back(row.x);
  }
  CHECK(xs == table_abscissae());
}

TEST_CASE("reference table parser rejects malformed input") {
  CHECK_THROWS(parse_reference_table(""));
  CHECK_THROWS(parse_reference_table("a,b\n"));
  CHECK_THROWS(parse_reference_table("x,y_present,y_liao,status\n1,2,3,ok\n"));  // no slope row
  CHECK_THROWS(parse_reference_table("x,y_present,y_liao,status\n1,2,3,maybe\nslope,1,1,ok\n"));
  CHECK_THROWS(parse_reference_table("x,y_present,y_liao,status\n1,2x,3,ok\nslope,1,1,ok\n"));
  const ReferenceTable t =
      parse_reference_table("# c\nx,y_present,y_liao,status\r\n1,2,3,ok\r\nslope,-1,-2,ok\n");
  CHECK(t.rows.size() == 1);
  CHECK(t.slope_reference == -2.0);
}

TEST_CASE("comparison against the reference table") {
  const ThomasFermiSolve s = run_pipeline(RunConfig{});
  const ComparisonReport c = compare_to_reference(s.solution, bundled_reference_table());
  CHECK(c.passed);
  CHECK(c.failure.empty());
  CHECK(c.max_dev_liao < 1e-3);
  CHECK(c.max_dev_present < 2e-3);
  CHECK(c.slope_dev == 0.0);
  REQUIRE(c.worst_row.has_value());
  CHECK(c.rows[*c.worst_row].ref.x == 0.25);
  CHECK_FALSE(c.rows.back().scored);

  RunConfig off;
  off.lambda = 1.0;
  const ComparisonReport bad =
      compare_to_reference(run_pipeline(off).solution, bundled_reference_table());
  CHECK_FALSE(bad.passed);
  CHECK(bad.slope_dev == Approx(0.588071).epsilon(1e-12));
  CHECK(bad.failure.find("worst row") != std::string::npos);
}

TEST_CASE("slope-only failure is reported") {
  ReferenceTable table = bundled_reference_table();
  table.slope_reference = -1.5;
  const ComparisonReport c = compare_to_reference(run_pipeline(RunConfig{}).solution, table);
  CHECK_FALSE(c.passed);
  CHECK(c.failure.find("initial slope") != std::string::npos);
}

TEST_CASE("log_spaced endpoints and validation") {
  const auto xs = log_spaced(0.25, 30.0, 100);
  REQUIRE(xs.size() == 100);
  CHECK(xs.front() == 0.25);
  CHECK(xs.back() == 30.0);
  CHECK(std::is_sorted(xs.begin(), xs.end()));
  CHECK(xs[1] / xs[0] == Approx(xs[99] / xs[98]).epsilon(1e-12));
  CHECK_THROWS_AS(log_spaced(1.0, 1.0, 10), std::invalid_argument);
  CHECK_THROWS_AS(log_spaced(0.0, 1.0, 10), std::invalid_argument);
  CHECK_THROWS_AS(log_spaced(1.0, 2.0, 1), std::invalid_argument);
}

TEST_CASE("solve: default csv output") {
  const CliRun r = run({"solve"});
  CHECK(r.code == exit_code::ok);
  CHECK(r.out.rfind("# initial_slope=-1.588071\nx,y\n", 0) == 0);
  const auto rows = parse_xy_csv(r.out);
  REQUIRE(rows.size() == 18);
  CHECK(rows[3].first == 1.0);
  CHECK(rows[3].second == Approx(0.423811203).epsilon(1e-8));
}

TEST_CASE("solve: json and pretty output") {
  const CliRun j = run({"solve", "--format", "json", "--eval-points", "1,2"});
  REQUIRE(j.code == exit_code::ok);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["initial_slope"].get<double>() == -1.588071);
  CHECK(doc["report"]["converged"].get<bool>());
  REQUIRE(doc["points"].size() == 2);
  CHECK(doc["points"][0]["y"].get<double>() == Approx(0.423811203).epsilon(1e-8));

  const CliRun p = run({"solve", "--format", "pretty"});
  CHECK(p.code == exit_code::ok);
  CHECK(p.out.find("y'(0) = -1.588071") != std::string::npos);
}

TEST_CASE("solve: basis order 1 smoke run") {
  const CliRun r = run({"solve", "--basis-order", "1"});
  CHECK(r.code == exit_code::ok);
  CHECK(parse_xy_csv(r.out).size() == 18);
}

TEST_CASE("solve: output is deterministic") {
  CHECK(run({"solve"}).out == run({"solve"}).out);
  CHECK(run({"plotdata"}).out == run({"plotdata"}).out);
}

TEST_CASE("solve: invalid configuration exits 1 naming the field") {
  const CliRun r = run({"solve", "--k", "-2"});
  CHECK(r.code == exit_code::usage);
  CHECK(r.err.find("k:") != std::string::npos);

  const CliRun f = run({"solve", "--format", "xml"});
  CHECK(f.code == exit_code::usage);
  CHECK(f.err.find("output_format") != std::string::npos);

  const CliRun e = run({"solve", "--eval-points", "1,abc"});
  CHECK(e.code == exit_code::usage);
  CHECK(e.err.find("eval_points") != std::string::npos);
}

TEST_CASE("solve: non-convergence exits 2 with the report") {
  const CliRun r = run({"solve", "--max-iter", "1"});
  CHECK(r.code == exit_code::not_converged);
  CHECK(r.out.empty());
  const auto brace = r.err.find('{');
  REQUIRE(brace != std::string::npos);
  const auto report = nlohmann::json::parse(r.err.substr(brace));
  CHECK_FALSE(report["converged"].get<bool>());
  CHECK(report["iterations"].get<int>() == 1);
}

TEST_CASE("usage errors exit 1") {
  CHECK(run({}).code == exit_code::usage);
  CHECK(run({"frobnicate"}).code == exit_code::usage);
  CHECK(run({"solve", "--no-such-flag"}).code == exit_code::usage);
  CHECK(run({"solve", "--basis-order", "many"}).code == exit_code::usage);
  CHECK(run({"solve", "--config", "/nonexistent/x.cfg"}).code == exit_code::usage);
  CHECK(run({"--help"}).code == exit_code::ok);
}

TEST_CASE("config file and flags through the command line") {
  const TempFile f("hermitetf_cli.cfg", "k = 0.5\neval_points = 1\noutput_format = json\n");
  const CliRun r = run({"solve", "--config", f.path.string(), "--k", "0.9"});
  REQUIRE(r.code == exit_code::ok);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["config"]["k"].get<double>() == 0.9);
  CHECK(doc["points"].size() == 1);

  const TempFile bad("hermitetf_cli_bad.cfg", "klambda = 2\n");
  const CliRun b = run({"solve", "--config", bad.path.string()});
  CHECK(b.code == exit_code::usage);
  CHECK(b.err.find("klambda") != std::string::npos);
}

TEST_CASE("--out writes a loadable solution document") {
  const TempFile f("hermitetf_cli_solution.json");
  const CliRun r = run({"solve", "--out", f.path.string()});
  REQUIRE(r.code == exit_code::ok);
  const SolutionDocument doc = load_solution(f.path);
  CHECK(doc.solution.basis_order() == 15);
  REQUIRE(doc.report.has_value());
  CHECK(doc.report->converged);
  const auto rows = parse_xy_csv(r.out);
  const auto fresh = run_pipeline(RunConfig{}).solution;
  for (const auto& [x, y] : rows) {
    CHECK(doc.solution.eval(x) == fresh.eval(x));
    CHECK(y == Approx(doc.solution.eval(x)).epsilon(1e-11));
  }
}

TEST_CASE("compare: exit codes follow the thresholds") {
  const CliRun ok = run({"compare"});
  CHECK(ok.code == exit_code::ok);
  CHECK(ok.out.find("# passed=true") != std::string::npos);

  const CliRun lam = run({"compare", "--lambda", "1.0", "--format", "json"});
  CHECK(lam.code == exit_code::threshold);
  CHECK(lam.err.find("worst row") != std::string::npos);
  const auto doc = nlohmann::json::parse(lam.out);
  CHECK(doc["slope_dev"].get<double>() == Approx(0.588071).epsilon(1e-12));
  CHECK_FALSE(doc["passed"].get<bool>());

  const CliRun pretty = run({"compare", "--format", "pretty"});
  CHECK(pretty.code == exit_code::ok);
  CHECK(pretty.out.find("PASS") != std::string::npos);

  for (int m : {7, 11, 15}) {
    RunConfig cfg;
    cfg.basis_order = m;
    const bool passed =
        compare_to_reference(run_pipeline(cfg).solution, bundled_reference_table()).passed;
    const CliRun r = run({"compare", "--basis-order", std::to_string(m)});
    CHECK(r.code == (passed ? exit_code::ok : exit_code::threshold));
  }
}

TEST_CASE("plotdata examples") {
  const CliRun r = run({"plotdata", "--x-min", "0.25", "--x-max", "30", "--samples", "100"});
  REQUIRE(r.code == exit_code::ok);
  CHECK(r.out.rfind("x,y\n", 0) == 0);
  const auto rows = parse_xy_csv(r.out);
  REQUIRE(rows.size() == 100);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i].first > rows[i - 1].first);
    CHECK(rows[i].second < rows[i - 1].second);
    CHECK(rows[i].second > 0.0);
  }

  const CliRun tiny = run({"plotdata", "--x-min", "1", "--x-max", "1.0001", "--samples", "2"});
  REQUIRE(tiny.code == exit_code::ok);
  const auto two = parse_xy_csv(tiny.out);
  REQUIRE(two.size() == 2);
  CHECK(two[0].second == Approx(0.4238).epsilon(1e-4));
  CHECK(two[1].second == Approx(0.4238).epsilon(1e-4));

  CHECK(run({"plotdata", "--x-min", "1", "--x-max", "1"}).code == exit_code::usage);
  CHECK(run({"plotdata", "--x-min", "-1"}).code == exit_code::usage);
  CHECK(run({"plotdata", "--samples", "1"}).code == exit_code::usage);
}
