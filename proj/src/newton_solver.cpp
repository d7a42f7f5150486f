#include "hermitetf/newton_solver.hpp"

#include <cmath>
#include <string>

namespace hermitetf {

namespace {

double inf_norm(const Eigen::VectorXd& v) { return v.size() == 0 ? 0.0 : v.lpNorm<Eigen::Infinity>(); }

}  // namespace

void NewtonConfig::validate() const {
  if (!(tol_residual > 0.0)) throw std::invalid_argument("tol_residual must be > 0");
  if (!(tol_step > 0.0)) throw std::invalid_argument("tol_step must be > 0");
  if (max_iterations < 1) throw std::invalid_argument("max_iterations must be >= 1");
  if (!(backtrack_factor > 0.0 && backtrack_factor < 1.0)) {
    throw std::invalid_argument("backtrack_factor must be in (0, 1)");
  }
  if (!(min_step_scale > 0.0 && min_step_scale <= 1.0)) {
    throw std::invalid_argument("min_step_scale must be in (0, 1]");
  }
}

SingularJacobianError::SingularJacobianError(int iteration, const std::string& detail)
    : SingularMatrixError("singular Jacobian at Newton iteration " + std::to_string(iteration) +
                          ": " + detail),
      iteration_(iteration) {}

NewtonResult newton_solve(const NonlinearProblem& problem, Eigen::VectorXd a0,
                          const NewtonConfig& cfg) {
  cfg.validate();

  NewtonResult result;
  SolveReport& report = result.report;
  Eigen::VectorXd a = std::move(a0);
  Eigen::VectorXd f = problem.residual(a);
  double norm = inf_norm(f);
  report.residual_history.push_back(norm);

  while (norm > cfg.tol_residual && report.iterations < cfg.max_iterations) {
    Eigen::VectorXd step;
    try {
      step = dense_solve(problem.jacobian(a), -f);
    } catch (const SingularMatrixError& e) {
      throw SingularJacobianError(report.iterations, e.what());
    }

    double scale = 1.0;
    Eigen::VectorXd trial = a + step;
    Eigen::VectorXd trial_f = problem.residual(trial);
    double trial_norm = inf_norm(trial_f);
    bool stalled = false;
    // The negated comparison also rejects NaN residuals.
    while (!(trial_norm < norm)) {
      if (scale * cfg.backtrack_factor < cfg.min_step_scale) {
        stalled = true;
        break;
      }
      scale *= cfg.backtrack_factor;
      ++report.damping_events;
      trial = a + scale * step;
      trial_f = problem.residual(trial);
      trial_norm = inf_norm(trial_f);
    }
    if (stalled) {
      break;
    }

    a = std::move(trial);
    f = std::move(trial_f);
    norm = trial_norm;
    ++report.iterations;
    report.residual_history.push_back(norm);

    if (scale * inf_norm(step) <= cfg.tol_step) {
      break;
    }
  }

  report.final_residual = report.residual_history.back();
  report.converged = report.final_residual <= cfg.tol_residual;
  result.solution = std::move(a);
  return result;
}

NewtonResult newton_solve(const CollocatedSystem& sys, Eigen::VectorXd a0,
                          const NewtonConfig& cfg) {
  if (a0.size() != sys.basis_order()) {
    throw std::invalid_argument("initial guess has length " + std::to_string(a0.size()) +
                                ", system has basis order " + std::to_string(sys.basis_order()));
  }
  const NonlinearProblem problem{
      [&sys](const Eigen::VectorXd& a) { return sys.assemble_residual(a); },
      [&sys](const Eigen::VectorXd& a) { return sys.assemble_jacobian(a); },
  };
  return newton_solve(problem, std::move(a0), cfg);
}

ThomasFermiSolve solve_thomas_fermi(int basis_order, MapParams map, BoundaryTemplate tmpl,
                                    const NewtonConfig& cfg) {
  const CollocatedSystem sys(basis_order, map, tmpl);
  NewtonResult r = newton_solve(sys, Eigen::VectorXd::Zero(basis_order), cfg);
  std::vector<double> coeffs(r.solution.data(), r.solution.data() + r.solution.size());
  return ThomasFermiSolve{SpectralSolution(std::move(coeffs), map, tmpl), std::move(r.report)};
}

}  // namespace hermitetf
