#pragma once

#include "semiinf/grid.hpp"

namespace semiinf {

/// Normalized Hermite functions carried to (0, inf) by t = ln(x)/k, indices 0..N.
struct HermiteBasis {
  int n;
  double k;

  HermiteBasis(int n, double k);

  int dimension() const noexcept { return n + 1; }
  double eval(int i, double x, int order) const;
};

/// Normalized Hermite function H~_n(t) = exp(-t^2/2) H_n(t) / sqrt(2^n n!) or a derivative.
double hermite_fn_eval(int n, double t, int order);

/// d^order/dx^order H~_n(ln(x)/k). Returns 0 at x == 0 (continuous extension).
double transformed_hermite_eval(const HermiteBasis& basis, int n, double x, int order);

/// Images e^{k t_j} of the N+1 roots t_j of H_{N+1}, ascending.
CollocationGrid hermite_nodes(const HermiteBasis& basis);

/// Trapezoid rule in t = ln(x)/k over [-8, 8] with step 0.05, expressed on x.
///
/// The weight w(x) = 1/(kx) cancels the Jacobian dx = kx dt, so the returned weights are
/// the plain trapezoid weights. Used for projections and property checks only.
DiscreteInnerProductRule hermite_trapezoid_rule(const HermiteBasis& basis);

}  // namespace semiinf
