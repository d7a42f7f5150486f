#pragma once

#include "hermitetf/dense_solve.hpp"
#include "hermitetf/tf_system.hpp"

#include <Eigen/Core>

#include <functional>
#include <vector>

namespace hermitetf {

struct NewtonConfig {
  double tol_residual = 1e-12;  ///< stop once ||F||_inf <= tol_residual
  double tol_step = 1e-13;      ///< stop once the accepted update has ||s dx||_inf <= tol_step
  int max_iterations = 60;
  double backtrack_factor = 0.5;
  double min_step_scale = 0x1p-20;

  /// Throws std::invalid_argument naming the first invalid field.
  void validate() const;
};

struct SolveReport {
  bool converged = false;
  int iterations = 0;
  /// ||F||_inf at the initial guess and after every accepted step.
  std::vector<double> residual_history;
  double final_residual = 0.0;
  int damping_events = 0;
};

/// F and its Jacobian, as plain callables.
struct NonlinearProblem {
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> residual;
  std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> jacobian;
};

struct NewtonResult {
  Eigen::VectorXd solution;
  SolveReport report;
};

class SingularJacobianError : public SingularMatrixError {
public:
  SingularJacobianError(int iteration, const std::string& detail);

  [[nodiscard]] int iteration() const noexcept { return iteration_; }

private:
  int iteration_;
};

/// Damped Newton iteration a <- a + s dx with J dx = -F(a). The scale s starts at 1
/// and is multiplied by backtrack_factor while ||F(a + s dx)||_inf >= ||F(a)||_inf;
/// if no scale down to min_step_scale reduces the residual, the iteration stops
/// without taking the step. Non-convergence is reported, not thrown.
NewtonResult newton_solve(const NonlinearProblem& problem, Eigen::VectorXd a0,
                          const NewtonConfig& cfg = {});

NewtonResult newton_solve(const CollocatedSystem& sys, Eigen::VectorXd a0,
                          const NewtonConfig& cfg = {});

struct ThomasFermiSolve {
  SpectralSolution solution;
  SolveReport report;
};

/// Builds the collocated system and runs Newton from a0 = 0, i.e. from y_N = p.
ThomasFermiSolve solve_thomas_fermi(int basis_order, MapParams map, BoundaryTemplate tmpl,
                                    const NewtonConfig& cfg = {});

}  // namespace hermitetf
