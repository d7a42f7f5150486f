#pragma once

#include "hermitetf/ansatz.hpp"
#include "hermitetf/newton_solver.hpp"

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hermitetf {

class SolutionFormatError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A solution together with the report of the solve that produced it.
struct SolutionDocument {
  SpectralSolution solution;
  std::optional<SolveReport> report;
};

// JSON document:
//   { "format": "hermitetf-solution", "version": 1,
//     "basis_order": M, "k": k, "lambda": lambda,
//     "coefficients": [a_0, ..., a_{M-1}],
//     "report": { "converged", "iterations", "final_residual",
//                 "damping_events", "residual_history" } }     // optional
// Doubles are written in shortest round-trip form, so save -> load is bitwise exact.

std::string serialize_solution(const SpectralSolution& solution,
                               const SolveReport* report = nullptr);

/// Throws SolutionFormatError on malformed documents or inconsistent fields.
SolutionDocument parse_solution(std::string_view text);

std::string serialize_report(const SolveReport& report);

void save_solution(const std::filesystem::path& path, const SpectralSolution& solution,
                   const SolveReport* report = nullptr);

/// Throws SolutionFormatError if the file cannot be read or parsed.
SolutionDocument load_solution(const std::filesystem::path& path);

}  // namespace hermitetf
