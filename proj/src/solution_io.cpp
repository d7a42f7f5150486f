#include "hermitetf/solution_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace hermitetf {

namespace {

using json = nlohmann::json;

constexpr std::string_view kFormatName = "hermitetf-solution";
constexpr int kFormatVersion = 1;

json report_to_json(const SolveReport& r) {
  return json{{"converged", r.converged},
              {"iterations", r.iterations},
              {"final_residual", r.final_residual},
              {"damping_events", r.damping_events},
              {"residual_history", r.residual_history}};
}

SolveReport report_from_json(const json& j) {
  SolveReport r;
  r.converged = j.at("converged").get<bool>();
  r.iterations = j.at("iterations").get<int>();
  r.final_residual = j.at("final_residual").get<double>();
  r.damping_events = j.at("damping_events").get<int>();
  r.residual_history = j.at("residual_history").get<std::vector<double>>();
  return r;
}

}  // namespace

std::string serialize_report(const SolveReport& report) { return report_to_json(report).dump(2); }

std::string serialize_solution(const SpectralSolution& solution, const SolveReport* report) {
  json doc{{"format", kFormatName},
           {"version", kFormatVersion},
           {"basis_order", solution.basis_order()},
           {"k", solution.map().k()},
           {"lambda", solution.boundary_template().lambda()},
           {"coefficients", solution.coefficients()}};
  if (report != nullptr) {
    doc["report"] = report_to_json(*report);
  }
  return doc.dump(2);
}

SolutionDocument parse_solution(std::string_view text) {
  try {
    const json doc = json::parse(text);
    if (doc.at("format").get<std::string>() != kFormatName) {
      throw SolutionFormatError("not a " + std::string(kFormatName) + " document");
    }
    if (doc.at("version").get<int>() != kFormatVersion) {
      throw SolutionFormatError("unsupported solution format version " +
                                doc.at("version").dump());
    }
    auto coefficients = doc.at("coefficients").get<std::vector<double>>();
    const int order = doc.at("basis_order").get<int>();
    if (order != static_cast<int>(coefficients.size())) {
      throw SolutionFormatError("basis_order " + std::to_string(order) + " does not match " +
                                std::to_string(coefficients.size()) + " coefficients");
    }
    SpectralSolution solution(std::move(coefficients), MapParams{doc.at("k").get<double>()},
                              BoundaryTemplate{doc.at("lambda").get<double>()});
    std::optional<SolveReport> report;
    if (doc.contains("report")) {
      report = report_from_json(doc.at("report"));
    }
    return SolutionDocument{std::move(solution), std::move(report)};
  } catch (const json::exception& e) {
    throw SolutionFormatError(std::string("malformed solution document: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw SolutionFormatError(std::string("invalid solution parameters: ") + e.what());
  }
}

void save_solution(const std::filesystem::path& path, const SpectralSolution& solution,
                   const SolveReport* report) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  }
  out << serialize_solution(solution, report) << '\n';
}

SolutionDocument load_solution(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw SolutionFormatError("cannot read " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_solution(buf.str());
}

}  // namespace hermitetf
