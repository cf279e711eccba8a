#include "semiinf/oracle.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "semiinf/errors.hpp"

namespace semiinf {

namespace {

constexpr double kBlowUp = 1e8;

bool finite_state(const State& y) {
  for (double v : y) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

State axpy(const State& y, double a, const State& k) {
  State out(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) out[i] = y[i] + a * k[i];
  return out;
}

// One far-field integration for a trial slope.
struct Trial {
  int side = 0;           // -1: target component went negative; +1: it did not
  double mismatch = 0.0;  // far-field value of the target component, NaN after blow-up
};

struct ShootProblem {
  State y0;
  double x0 = 0.0;
  double x1 = 0.0;
  int target = 0;
  Rhs rhs;
};

ShootProblem setup(const Problem& problem, const ShootConfig& cfg, double s) {
  ShootProblem sp;
  if (const auto* fp = std::get_if<FluidParams>(&problem)) {
    const FluidParams p = *fp;
    sp.y0 = {1.0, s};
    sp.x0 = 0.0;
    sp.x1 = cfg.z_max;
    sp.target = 0;
    sp.rhs = [p](double, const State& y) {
      const double d1sq = y[1] * y[1];
      return State{y[1], (p.b2 * y[0] * d1sq + p.b3 * y[0]) / (1.0 + p.b1 * d1sq)};
    };
  } else if (std::holds_alternative<ThomasFermiParams>(problem)) {
    // Integrated in t = sqrt(x): dy/dt = 2t y', dy'/dt = 2 s(y).
    const double x = cfg.tf_launch;
    const double rx = std::sqrt(x);
    sp.y0 = {1.0 + s * x + 4.0 / 3.0 * x * rx + 0.4 * s * x * x * rx, s + 2.0 * rx + s * x * rx};
    sp.x0 = rx;
    sp.x1 = std::sqrt(cfg.z_max);
    sp.target = 0;
    sp.rhs = [](double t, const State& y) {
      return State{2.0 * t * y[1], 2.0 * signed_three_halves(y[0])};
    };
  } else {
    const ConeParams p = std::get<ConeParams>(problem);
    sp.y0 = {0.0, s, -1.0};
    sp.x0 = 0.0;
    sp.x1 = cfg.z_max;
    sp.target = 1;
    sp.rhs = [p](double, const State& y) {
      return State{y[1], y[2],
                   -0.5 * (p.lambda + 5.0) * y[0] * y[2] + (2.0 * p.lambda + 1.0) / 3.0 * y[1] * y[1]};
    };
  }
  return sp;
}

Trial run_trial(const Problem& problem, const ShootConfig& cfg, double s) {
  const ShootProblem sp = setup(problem, cfg, s);
  Trial trial;
  trial.side = 1;
  State y = sp.y0;
  const int steps = static_cast<int>(std::ceil((sp.x1 - sp.x0) / cfg.step - 1e-9));
  for (int i = 0; i < steps; ++i) {
    const double x = sp.x0 + i * cfg.step;
    const double h = std::min(cfg.step, sp.x1 - x);
    const State k1 = sp.rhs(x, y);
    const State k2 = sp.rhs(x + 0.5 * h, axpy(y, 0.5 * h, k1));
    const State k3 = sp.rhs(x + 0.5 * h, axpy(y, 0.5 * h, k2));
    const State k4 = sp.rhs(x + h, axpy(y, h, k3));
    for (std::size_t c = 0; c < y.size(); ++c) y[c] += h / 6.0 * (k1[c] + 2.0 * k2[c] + 2.0 * k3[c] + k4[c]);
    const double v = y[sp.target];
    if (v < 0.0) trial.side = -1;
    if (!finite_state(y) || std::abs(v) > kBlowUp) {
      trial.mismatch = std::numeric_limits<double>::quiet_NaN();
      return trial;
    }
  }
  trial.mismatch = y[sp.target];
  return trial;
}

}  // namespace

Trajectory rk4_integrate(const Rhs& rhs, const State& y0, double x0, double x1, double step,
                         bool record) {
  if (!(step > 0.0) || !std::isfinite(step)) throw ConfigurationError("RK4 step must be > 0");
  if (!(x1 >= x0)) throw ConfigurationError("RK4 integrates forward only (x1 >= x0)");
  if (!finite_state(y0)) throw BlowUpError("initial state is not finite", x0);

  Trajectory traj;
  traj.abscissas.push_back(x0);
  traj.states.push_back(y0);
  State y = y0;
  const long steps = static_cast<long>(std::ceil((x1 - x0) / step - 1e-9));
  for (long i = 0; i < steps; ++i) {
    const double x = x0 + static_cast<double>(i) * step;
    const double h = (i == steps - 1) ? x1 - x : step;
    const State k1 = rhs(x, y);
    const State k2 = rhs(x + 0.5 * h, axpy(y, 0.5 * h, k1));
    const State k3 = rhs(x + 0.5 * h, axpy(y, 0.5 * h, k2));
    const State k4 = rhs(x + h, axpy(y, h, k3));
    for (std::size_t c = 0; c < y.size(); ++c) y[c] += h / 6.0 * (k1[c] + 2.0 * k2[c] + 2.0 * k3[c] + k4[c]);
    const double xn = (i == steps - 1) ? x1 : x + h;
    if (!finite_state(y)) throw BlowUpError("RK4 state became non-finite", xn);
    if (record || i == steps - 1) {
      traj.abscissas.push_back(xn);
      traj.states.push_back(y);
    }
  }
  return traj;
}

ShootConfig ShootConfig::defaults_for(const Problem& problem) {
  ShootConfig cfg;
  if (std::holds_alternative<ThomasFermiParams>(problem)) cfg.z_max = 30.0;
  if (std::holds_alternative<ConeParams>(problem)) cfg.bracket = {0.0, 2.0};
  return cfg;
}

ShootResult shoot(const Problem& problem, const ShootConfig& cfg) {
  if (!(cfg.z_max > 0.0) || !(cfg.step > 0.0) || !(cfg.secant_tol > 0.0) ||
      !(cfg.tf_launch > 0.0 && cfg.tf_launch < cfg.z_max)) {
    throw ConfigurationError("shooting needs z_max, step, tolerance, and launch abscissa > 0");
  }
  double a = cfg.bracket.first;
  double b = cfg.bracket.second;
  Trial ta = run_trial(problem, cfg, a);
  Trial tb = run_trial(problem, cfg, b);
  if (ta.side == tb.side) {
    throw OracleError("initial slopes " + std::to_string(a) + " and " + std::to_string(b) +
                      " do not bracket the far-field condition");
  }
  // Keep `lo` on the side where the target component goes negative.
  double lo = ta.side < 0 ? a : b;
  double hi = ta.side < 0 ? b : a;
  double mlo = ta.side < 0 ? ta.mismatch : tb.mismatch;
  double mhi = ta.side < 0 ? tb.mismatch : ta.mismatch;
  int last_side = 0;

  ShootResult result;
  double s = 0.5 * (lo + hi);
  for (int it = 1; it <= cfg.max_iter; ++it) {
    // Illinois step when both ends carry usable mismatches, otherwise bisect.
    const bool secant = std::isfinite(mlo) && std::isfinite(mhi) && mlo <= 0.0 && mhi >= 0.0 &&
                        mhi > mlo;
    s = secant ? lo - mlo * (hi - lo) / (mhi - mlo) : 0.5 * (lo + hi);
    if (!(s > std::min(lo, hi) && s < std::max(lo, hi))) s = 0.5 * (lo + hi);
    const Trial t = run_trial(problem, cfg, s);
    result.iterations = it;
    if (t.mismatch == 0.0 || std::abs(hi - lo) <= cfg.secant_tol) break;
    if (t.side < 0) {
      lo = s;
      mlo = t.mismatch;
      if (last_side < 0 && std::isfinite(mhi)) mhi *= 0.5;
    } else {
      hi = s;
      mhi = t.mismatch;
      if (last_side > 0 && std::isfinite(mlo)) mlo *= 0.5;
    }
    last_side = t.side;
    if (std::abs(hi - lo) <= cfg.secant_tol) {
      s = 0.5 * (lo + hi);
      break;
    }
    if (it == cfg.max_iter) {
      throw OracleError("shooting did not converge in " + std::to_string(cfg.max_iter) +
                        " iterations (bracket width " + std::to_string(std::abs(hi - lo)) + ")");
    }
  }
  result.initial_slope = s;

  const ShootProblem sp = setup(problem, cfg, s);
  Trajectory traj;
  try {
    traj = rk4_integrate(sp.rhs, sp.y0, sp.x0, sp.x1, cfg.step);
  } catch (const BlowUpError&) {
    // The converged slope sits on the separatrix; round-off may still diverge near z_max.
    traj = rk4_integrate(sp.rhs, sp.y0, sp.x0, sp.x0 + 0.5 * (sp.x1 - sp.x0), cfg.step);
  }
  if (std::holds_alternative<ThomasFermiParams>(problem)) {
    for (double& t : traj.abscissas) t *= t;
  }
  result.profile = std::move(traj);
  return result;
}

}  // namespace semiinf
