#include "semiinf/newton.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "semiinf/errors.hpp"

namespace semiinf {

namespace {

constexpr double kMinRcond = 1e-14;

std::vector<double> evaluate(const VectorFunction& f, std::span<const double> x) {
  std::vector<double> r = f(x);
  if (r.size() != x.size()) {
    throw ConfigurationError("system is not square: " + std::to_string(r.size()) +
                             " equations for " + std::to_string(x.size()) + " unknowns");
  }
  return r;
}

int first_non_finite(const std::vector<double>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!std::isfinite(v[i])) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace

void NewtonConfig::validate() const {
  if (!(tol_residual > 0.0) || !(tol_step > 0.0) || !(fd_step > 0.0) || max_iter < 1 ||
      max_halvings < 0) {
    throw ConfigurationError("Newton tolerances and steps must be positive, max_iter >= 1");
  }
}

double max_norm(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) {
    if (std::isnan(x)) return x;
    m = std::max(m, std::abs(x));
  }
  return m;
}

Eigen::MatrixXd fd_jacobian(const VectorFunction& f, std::span<const double> x, double fd_step) {
  const std::vector<double> base = evaluate(f, x);
  if (int bad = first_non_finite(base); bad >= 0) {
    throw NumericError("non-finite residual component " + std::to_string(bad), bad);
  }
  const int n = static_cast<int>(x.size());
  Eigen::MatrixXd jac(n, n);
  std::vector<double> probe(x.begin(), x.end());
  for (int i = 0; i < n; ++i) {
    const double step = fd_step * (1.0 + std::abs(x[i]));
    probe[i] = x[i] + step;
    const std::vector<double> shifted = evaluate(f, probe);
    if (int bad = first_non_finite(shifted); bad >= 0) {
      throw NumericError("non-finite residual component " + std::to_string(bad) +
                             " while perturbing unknown " + std::to_string(i),
                         bad);
    }
    for (int r = 0; r < n; ++r) jac(r, i) = (shifted[r] - base[r]) / step;
    probe[i] = x[i];
  }
  return jac;
}

SolveReport newton_solve(const VectorFunction& f, std::span<const double> x0,
                         const NewtonConfig& cfg) {
  cfg.validate();
  SolveReport report;
  report.solution.assign(x0.begin(), x0.end());
  std::vector<double>& x = report.solution;
  const int n = static_cast<int>(x.size());

  std::vector<double> r = evaluate(f, x);
  if (int bad = first_non_finite(r); bad >= 0) {
    throw NumericError("initial residual component " + std::to_string(bad) + " is not finite",
                       bad);
  }
  double norm = max_norm(r);
  report.history.push_back(norm);

  for (int it = 0; it < cfg.max_iter; ++it) {
    if (norm <= cfg.tol_residual) {
      report.converged = true;
      break;
    }
    Eigen::MatrixXd jac = fd_jacobian(f, x, cfg.fd_step);
    Eigen::VectorXd rhs = -Eigen::Map<const Eigen::VectorXd>(r.data(), n);
    // Row equilibration keeps far-field rows (tiny basis values) comparable to the rest.
    for (int i = 0; i < n; ++i) {
      const double s = jac.row(i).cwiseAbs().maxCoeff();
      if (s > 0.0) {
        jac.row(i) /= s;
        rhs(i) /= s;
      }
    }
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(jac);
    const double rcond = lu.rcond();
    if (!(rcond >= kMinRcond)) {
      throw SingularJacobianError("Jacobian is numerically singular (rcond " +
                                      std::to_string(rcond) + ")",
                                  x, rcond);
    }
    const Eigen::VectorXd dx = lu.solve(rhs);

    double t = 1.0;
    bool accepted = false;
    std::vector<double> trial(n);
    std::vector<double> trial_r;
    double trial_norm = 0.0;
    for (int halving = 0; halving <= cfg.max_halvings; ++halving, t *= 0.5) {
      for (int i = 0; i < n; ++i) trial[i] = x[i] + t * dx(i);
      trial_r = evaluate(f, trial);
      trial_norm = max_norm(trial_r);
      if (std::isfinite(trial_norm) && trial_norm < norm) {
        accepted = true;
        break;
      }
    }
    if (!accepted) break;

    const double step_norm = t * dx.cwiseAbs().maxCoeff();
    x = trial;
    r = std::move(trial_r);
    norm = trial_norm;
    report.history.push_back(norm);
    report.iterations = it + 1;
    if (norm <= cfg.tol_residual || step_norm <= cfg.tol_step) {
      report.converged = true;
      break;
    }
  }
  report.final_residual_norm = norm;
  return report;
}

}  // namespace semiinf
