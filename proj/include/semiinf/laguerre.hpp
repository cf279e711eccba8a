#pragma once

#include "semiinf/grid.hpp"

namespace semiinf {

/// Modified generalized Laguerre functions phi_j(x) = exp(-x/2L) L_j^1(x/L), j = 0..N-1.
///
/// `alpha` is the generalized-Laguerre parameter of the collocation nodes (roots of
/// L_N^alpha(x/L)); the trial functions themselves always use L^1. Because span{L_j^a}
/// over j < N is the same polynomial space for every a, only the nodes depend on alpha.
struct LaguerreBasis {
  int n;
  double alpha;
  double scale;

  LaguerreBasis(int n, double alpha, double scale);

  int dimension() const noexcept { return n; }
  double eval(int j, double x, int order) const;
};

/// Generalized Laguerre polynomial L_n^alpha(x) or its order-th derivative.
///
/// Derivatives use d/dx L_n^a = -L_{n-1}^{a+1}; values come from the upward three-term
/// recurrence.
double laguerre_eval(int n, double alpha, double x, int order);

/// j-th MGLF (or derivative) of `basis` at x >= 0.
double mglf_eval(const LaguerreBasis& basis, int j, double x, int order);

/// The N roots of L_N^alpha(x/L), ascending, via the Jacobi matrix plus one Newton polish.
CollocationGrid laguerre_nodes(const LaguerreBasis& basis);

/// Gauss-type rule on the Laguerre nodes reproducing <phi_m, phi_n> = Gamma(n+2)/(L^2 n!) delta_mn.
///
/// Requires alpha == 1 and `grid` equal to laguerre_nodes(basis).
DiscreteInnerProductRule mglf_quadrature_weights(const LaguerreBasis& basis,
                                                 const CollocationGrid& grid);

}  // namespace semiinf
