#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "semiinf/problems.hpp"

namespace semiinf {

using State = std::vector<double>;
using Rhs = std::function<State(double x, const State& y)>;

struct Trajectory {
  std::vector<double> abscissas;
  std::vector<State> states;

  const State& back() const { return states.back(); }
};

/// Classical fixed-step RK4 from x0 to x1; the last step is shortened to land on x1.
///
/// Throws BlowUpError at the first non-finite state. `record` = false keeps only the
/// endpoints.
Trajectory rk4_integrate(const Rhs& rhs, const State& y0, double x0, double x1, double step,
                         bool record = true);

struct ShootConfig {
  double z_max = 40.0;
  double step = 1e-3;
  double secant_tol = 1e-10;
  std::pair<double, double> bracket{-2.0, 0.0};
  int max_iter = 100;
  double tf_launch = 1e-6;  ///< Thomas-Fermi series launch abscissa

  /// Standard defaults for each problem (Thomas-Fermi: z_max 30; cone bracket (0, 2)).
  static ShootConfig defaults_for(const Problem& problem);
};

struct ShootResult {
  double initial_slope = 0.0;
  Trajectory profile;  ///< states in the problem's own variable: (f, f' [, f''])
  int iterations = 0;
};

/// Shooting on the unknown initial slope; throws OracleError after max_iter iterations.
ShootResult shoot(const Problem& problem, const ShootConfig& cfg);

}  // namespace semiinf
