#pragma once

#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace semiinf {

struct NewtonConfig {
  double tol_residual = 1e-10;  ///< max-norm residual target
  double tol_step = 1e-12;      ///< max-norm accepted-step target
  int max_iter = 200;
  double fd_step = 1e-7;        ///< relative Jacobian perturbation, scaled by 1+|x_i|
  int max_halvings = 30;

  /// Throws ConfigurationError on non-positive entries.
  void validate() const;
};

struct SolveReport {
  std::vector<double> solution;
  int iterations = 0;
  double final_residual_norm = 0.0;
  bool converged = false;
  std::vector<double> history;  ///< residual max-norm of every accepted iterate, x0 first
};

using VectorFunction = std::function<std::vector<double>(std::span<const double>)>;

/// Forward-difference Jacobian with step_i = fd_step * (1 + |x_i|).
Eigen::MatrixXd fd_jacobian(const VectorFunction& f, std::span<const double> x,
                            double fd_step = 1e-7);

/// Damped Newton on a square system.
///
/// Every accepted step strictly lowers the residual max-norm. Returns a non-converged
/// report when max_iter is exhausted or no halving decreases the residual; throws
/// SingularJacobianError when the row-equilibrated Jacobian has rcond < 1e-14.
SolveReport newton_solve(const VectorFunction& f, std::span<const double> x0,
                         const NewtonConfig& cfg = {});

double max_norm(std::span<const double> v);

}  // namespace semiinf
