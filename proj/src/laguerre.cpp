#include "semiinf/laguerre.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "semiinf/errors.hpp"

namespace semiinf {

namespace {

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

double laguerre_value(int n, double alpha, double x) {
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + alpha - x;
  for (int m = 2; m <= n; ++m) {
    const double next = ((2.0 * m - 1.0 + alpha - x) * cur - (m - 1.0 + alpha) * prev) / m;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace

LaguerreBasis::LaguerreBasis(int n_, double alpha_, double scale_)
    : n(n_), alpha(alpha_), scale(scale_) {
  if (n < 1) throw ConfigurationError("Laguerre basis needs N >= 1, got " + std::to_string(n));
  if (!(alpha > -1.0) || !std::isfinite(alpha)) {
    throw ConfigurationError("Laguerre alpha must be > -1");
  }
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw ConfigurationError("Laguerre scale L must be > 0");
  }
}

double LaguerreBasis::eval(int j, double x, int order) const {
  return mglf_eval(*this, j, x, order);
}

double laguerre_eval(int n, double alpha, double x, int order) {
  check_order(order);
  if (n < 0) throw ConfigurationError("Laguerre degree must be >= 0");
  if (!std::isfinite(x)) throw DomainError("Laguerre argument is not finite");
  if (order > n) return 0.0;
  const double sign = (order % 2 == 0) ? 1.0 : -1.0;
  return sign * laguerre_value(n - order, alpha + order, x);
}

double mglf_eval(const LaguerreBasis& basis, int j, double x, int order) {
  check_order(order);
  if (j < 0 || j >= basis.n) {
    throw ConfigurationError("MGLF index " + std::to_string(j) + " outside 0.." +
                             std::to_string(basis.n - 1));
  }
  if (!std::isfinite(x)) throw DomainError("MGLF argument is not finite");
  if (x < 0.0) throw DomainError("MGLF argument must be >= 0");
  const double L = basis.scale;
  const double y = x / L;
  const double decay = -1.0 / (2.0 * L);
  // Leibniz over exp(-x/2L) * L_j^1(x/L).
  double sum = 0.0;
  for (int m = 0; m <= order; ++m) {
    sum += binomial(order, m) * std::pow(decay, order - m) * laguerre_eval(j, 1.0, y, m) /
           std::pow(L, m);
  }
  return std::exp(decay * x) * sum;
}

CollocationGrid laguerre_nodes(const LaguerreBasis& basis) {
  const int n = basis.n;
  const double a = basis.alpha;
  Eigen::VectorXd diag(n);
  Eigen::VectorXd off(n > 1 ? n - 1 : 0);
  for (int i = 0; i < n; ++i) diag(i) = 2.0 * i + a + 1.0;
  for (int i = 1; i < n; ++i) off(i - 1) = std::sqrt(i * (i + a));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, off, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NodeComputationError("Laguerre Jacobi eigenproblem did not converge");
  }

  CollocationGrid grid;
  grid.nodes.reserve(n);
  for (int i = 0; i < n; ++i) {
    double y = solver.eigenvalues()(i);
    const double d = laguerre_eval(n, a, y, 1);
    if (d != 0.0) y -= laguerre_eval(n, a, y, 0) / d;
    if (!(y > 0.0)) throw NodeComputationError("Laguerre root is not positive");
    grid.nodes.push_back(y * basis.scale);
  }
  return grid;
}

DiscreteInnerProductRule mglf_quadrature_weights(const LaguerreBasis& basis,
                                                 const CollocationGrid& grid) {
  if (basis.alpha != 1.0) {
    throw UnsupportedParameterError("MGLF quadrature weights are defined for alpha = 1 only");
  }
  const int n = basis.n;
  if (static_cast<int>(grid.size()) != n) {
    throw ConfigurationError("grid size does not match the Laguerre basis");
  }
  const LaguerreBasis next(n + 2, 1.0, basis.scale);
  const double L = basis.scale;
  // Gamma(N+2) / N! = N + 1
  const double ratio = n + 1.0;
  std::vector<double> weights;
  weights.reserve(n);
  for (int j = 0; j < n; ++j) {
    const double x = grid[j];
    const double p = (n + 1.0) * mglf_eval(next, n + 1, x, 0);
    weights.push_back(x * ratio / (L * L * L * p * p));
  }
  return DiscreteInnerProductRule(grid.nodes, std::move(weights));
}

}  // namespace semiinf
