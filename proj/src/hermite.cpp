#include "semiinf/hermite.hpp"

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "semiinf/errors.hpp"

namespace semiinf {

HermiteBasis::HermiteBasis(int n_, double k_) : n(n_), k(k_) {
  if (n < 1) throw ConfigurationError("Hermite basis needs N >= 1, got " + std::to_string(n));
  if (!(k > 0.0) || !std::isfinite(k)) throw ConfigurationError("Hermite map k must be > 0");
}

double HermiteBasis::eval(int i, double x, int order) const {
  return transformed_hermite_eval(*this, i, x, order);
}

double hermite_fn_eval(int n, double t, int order) {
  check_order(order);
  if (n < 0) throw ConfigurationError("Hermite degree must be >= 0");
  if (!std::isfinite(t)) throw DomainError("Hermite argument is not finite");

  // d[m][i] = D^m H~_i(t)
  std::array<std::vector<double>, kMaxDerivativeOrder + 1> d;
  d[0].resize(n + 1);
  d[0][0] = std::exp(-0.5 * t * t);
  if (n >= 1) d[0][1] = std::sqrt(2.0) * t * d[0][0];
  for (int i = 1; i < n; ++i) {
    d[0][i + 1] = t * std::sqrt(2.0 / (i + 1)) * d[0][i] - std::sqrt(double(i) / (i + 1)) * d[0][i - 1];
  }
  // D^m H_i = sqrt(2i) D^{m-1} H_{i-1} - t D^{m-1} H_i - (m-1) D^{m-2} H_i
  for (int m = 1; m <= order; ++m) {
    d[m].resize(n + 1);
    for (int i = 0; i <= n; ++i) {
      double v = -t * d[m - 1][i];
      if (i > 0) v += std::sqrt(2.0 * i) * d[m - 1][i - 1];
      if (m >= 2) v -= (m - 1) * d[m - 2][i];
      d[m][i] = v;
    }
  }
  return d[order][n];
}

double transformed_hermite_eval(const HermiteBasis& basis, int n, double x, int order) {
  check_order(order);
  if (n < 0 || n > basis.n) {
    throw ConfigurationError("Hermite index " + std::to_string(n) + " outside 0.." +
                             std::to_string(basis.n));
  }
  if (!std::isfinite(x)) throw DomainError("Hermite argument is not finite");
  if (x < 0.0) throw DomainError("transformed Hermite argument must be >= 0");
  if (x == 0.0) return 0.0;

  const double k = basis.k;
  const double t = std::log(x) / k;
  const double p1 = 1.0 / (k * x);
  const double p2 = -1.0 / (k * x * x);
  const double p3 = 2.0 / (k * x * x * x);
  switch (order) {
    case 0:
      return hermite_fn_eval(n, t, 0);
    case 1:
      return hermite_fn_eval(n, t, 1) * p1;
    case 2:
      return hermite_fn_eval(n, t, 2) * p1 * p1 + hermite_fn_eval(n, t, 1) * p2;
    default:
      return hermite_fn_eval(n, t, 3) * p1 * p1 * p1 + 3.0 * hermite_fn_eval(n, t, 2) * p1 * p2 +
             hermite_fn_eval(n, t, 1) * p3;
  }
}

CollocationGrid hermite_nodes(const HermiteBasis& basis) {
  const int m = basis.n + 1;
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(m);
  Eigen::VectorXd off(m - 1);
  for (int i = 1; i < m; ++i) off(i - 1) = std::sqrt(0.5 * i);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, off, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NodeComputationError("Hermite Jacobi eigenproblem did not converge");
  }

  CollocationGrid grid;
  grid.nodes.reserve(m);
  for (int i = 0; i < m; ++i) {
    double t = solver.eigenvalues()(i);
    const double d = hermite_fn_eval(m, t, 1);
    if (d != 0.0) t -= hermite_fn_eval(m, t, 0) / d;
    grid.nodes.push_back(std::exp(basis.k * t));
  }
  return grid;
}

DiscreteInnerProductRule hermite_trapezoid_rule(const HermiteBasis& basis) {
  constexpr double kHalfWidth = 8.0;
  constexpr double kStep = 0.05;
  const int count = static_cast<int>(std::lround(2.0 * kHalfWidth / kStep)) + 1;
  std::vector<double> nodes(count);
  std::vector<double> weights(count, kStep);
  for (int i = 0; i < count; ++i) nodes[i] = std::exp(basis.k * (-kHalfWidth + i * kStep));
  weights.front() *= 0.5;
  weights.back() *= 0.5;
  return DiscreteInnerProductRule(std::move(nodes), std::move(weights));
}

}  // namespace semiinf
