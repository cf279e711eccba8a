#include <doctest.h>

#include <cmath>

#include "semiinf/errors.hpp"
#include "semiinf/newton.hpp"

using namespace semiinf;
using doctest::Approx;

namespace {

std::vector<double> square_minus_four(std::span<const double> x) { return {x[0] * x[0] - 4.0}; }

}  // namespace

TEST_CASE("fd_jacobian of simple maps") {
  const VectorFunction lin = [](std::span<const double> x) {
    return std::vector<double>{x[0] + 2.0 * x[1], 3.0 * x[0]};
  };
  const std::vector<double> p{0.3, -1.7};
  const Eigen::MatrixXd j = fd_jacobian(lin, p);
  CHECK(j(0, 0) == Approx(1.0).epsilon(1e-6));
  CHECK(j(0, 1) == Approx(2.0).epsilon(1e-6));
  CHECK(j(1, 0) == Approx(3.0).epsilon(1e-6));
  CHECK(std::abs(j(1, 1)) <= 1e-6);

  const VectorFunction id = [](std::span<const double> x) { return std::vector<double>(x.begin(), x.end()); };
  const std::vector<double> q{1.0, 2.0, 3.0};
  const Eigen::MatrixXd ji = fd_jacobian(id, q);
  CHECK((ji - Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff() <= 1e-6);

  const VectorFunction sq = [](std::span<const double> x) { return std::vector<double>{x[0] * x[0]}; };
  const std::vector<double> three{3.0};
  CHECK(fd_jacobian(sq, three)(0, 0) == Approx(6.0).epsilon(1e-5));
}

TEST_CASE("fd_jacobian reports the non-finite component") {
  const VectorFunction f = [](std::span<const double> x) {
    return std::vector<double>{x[0], x[1] > 1.0 ? NAN : x[1]};
  };
  const std::vector<double> p{0.0, 1.0};
  try {
    fd_jacobian(f, p);
    FAIL("expected a numeric error");
  } catch (const NumericError& e) {
    CHECK(e.component() == 1);
  }
}

TEST_CASE("newton on a scalar quadratic") {
  const std::vector<double> x0{3.0};
  const SolveReport r = newton_solve(square_minus_four, x0);
  CHECK(r.converged);
  CHECK(r.solution[0] == Approx(2.0).epsilon(1e-10));
  CHECK(r.iterations <= 8);
  CHECK(r.final_residual_norm <= 1e-10);
}

TEST_CASE("newton converges quadratically") {
  std::vector<double> errors;
  std::vector<double> x{3.0};
  NewtonConfig one;
  one.max_iter = 1;
  one.tol_residual = 1e-300;
  one.tol_step = 1e-300;
  errors.push_back(std::abs(x[0] - 2.0));
  for (int i = 0; i < 5; ++i) {
    x = newton_solve(square_minus_four, x, one).solution;
    errors.push_back(std::abs(x[0] - 2.0));
  }
  // e_{n+1} / e_n^2 tends to 1/4 for x^2 - 4 until the difference Jacobian's error dominates
  for (std::size_t n = 0; n + 1 < errors.size(); ++n) {
    if (errors[n] < 1e-6) break;
    const double ratio = errors[n + 1] / (errors[n] * errors[n]);
    CHECK(ratio <= 0.3);
  }
  CHECK(errors.back() <= 1e-12);
}

TEST_CASE("newton solves an affine system in one step") {
  const VectorFunction f = [](std::span<const double> x) {
    return std::vector<double>{2.0 * x[0] + x[1] - 1.0, x[0] - 3.0 * x[1] + 2.0};
  };
  NewtonConfig cfg;
  cfg.max_iter = 1;
  const std::vector<double> x0{5.0, -4.0};
  const SolveReport r = newton_solve(f, x0, cfg);
  CHECK(r.iterations == 1);
  CHECK(r.solution[0] == Approx(1.0 / 7.0).epsilon(1e-7));
  CHECK(r.solution[1] == Approx(5.0 / 7.0).epsilon(1e-7));
}

TEST_CASE("accepted iterates decrease the residual") {
  const VectorFunction f = [](std::span<const double> x) {
    return std::vector<double>{std::atan(x[0]) + 0.1 * x[1], x[1] * x[1] * x[1] - 0.5 + x[0]};
  };
  const std::vector<double> x0{4.0, 2.0};
  const SolveReport r = newton_solve(f, x0);
  CHECK(r.converged);
  for (std::size_t i = 1; i < r.history.size(); ++i) CHECK(r.history[i] < r.history[i - 1]);
}

TEST_CASE("singular Jacobian") {
  const VectorFunction f = [](std::span<const double> x) {
    return std::vector<double>{x[0] + x[1] - 1.0, 2.0 * x[0] + 2.0 * x[1] - 3.0};
  };
  const std::vector<double> x0{0.0, 0.0};
  CHECK_THROWS_AS(newton_solve(f, x0), SingularJacobianError);
}

TEST_CASE("permutation equivariance and determinism") {
  const VectorFunction f = [](std::span<const double> x) {
    return std::vector<double>{x[0] * x[0] + x[1] - 3.0, x[0] - x[1] * x[2], std::sin(x[2]) - 0.25 * x[0]};
  };
  // Equations reversed and unknowns (a, b, c) -> (c, a, b).
  const VectorFunction g = [&](std::span<const double> y) {
    const std::vector<double> x{y[1], y[2], y[0]};
    auto r = f(x);
    return std::vector<double>{r[2], r[1], r[0]};
  };
  const std::vector<double> x0{1.0, 1.5, 0.5};
  const std::vector<double> y0{0.5, 1.0, 1.5};
  const SolveReport a = newton_solve(f, x0);
  const SolveReport b = newton_solve(g, y0);
  REQUIRE(a.converged);
  REQUIRE(b.converged);
  CHECK(b.solution[1] == Approx(a.solution[0]).epsilon(1e-9));
  CHECK(b.solution[2] == Approx(a.solution[1]).epsilon(1e-9));
  CHECK(b.solution[0] == Approx(a.solution[2]).epsilon(1e-9));

  const SolveReport again = newton_solve(f, x0);
  CHECK(again.solution == a.solution);
  CHECK(again.history == a.history);
  CHECK(again.iterations == a.iterations);
}

TEST_CASE("configuration checks") {
  NewtonConfig bad;
  bad.max_iter = 0;
  const std::vector<double> x0{1.0};
  CHECK_THROWS_AS(newton_solve(square_minus_four, x0, bad), ConfigurationError);
  const VectorFunction wrong = [](std::span<const double>) { return std::vector<double>{1.0, 2.0}; };
  CHECK_THROWS_AS(newton_solve(wrong, x0), ConfigurationError);
}
