#pragma once

#include <vector>

#include "semiinf/grid.hpp"

namespace semiinf {

/// Conformal map carrying (0, inf) onto the real line.
enum class SincMap {
  LogSinh,  ///< Phi(x) = ln(sinh(x))
  Log,      ///< Phi(x) = ln(x)
};

/// Boundary weight multiplying each Sinc translate.
enum class SincWeight {
  RationalX,   ///< x / (x^2 + 1)
  RationalX3,  ///< x^3 / (x^3 + 1)
};

/// Composite Sinc translates W(x) S(k,h)(Phi(x)), k = -N..N.
///
/// Valid pairings: LogSinh with RationalX, Log with RationalX3.
struct SincBasis {
  int n;
  double h;
  SincMap map;
  SincWeight weight;

  SincBasis(int n, double h, SincMap map, SincWeight weight);

  int dimension() const noexcept { return 2 * n + 1; }
  /// Member at position i of the coefficient vector, i.e. translate k = i - N.
  double eval(int i, double x, int order) const;
};

/// sin(pi x) / (pi x), 1 at the origin.
double sinc(double x);

/// d^order/du^order sinc(u) for order 0..3.
double sinc_derivative(double u, int order);

/// Map derivatives {Phi, Phi', Phi'', Phi'''} at x > 0.
struct MapJet {
  double value;
  double d1;
  double d2;
  double d3;
};
MapJet map_jet(SincMap map, double x);

/// W^(order)(x) for the given weight kind; overflow-safe for large x.
double sinc_weight(SincWeight weight, double x, int order);

/// Nodes Phi^{-1}(jh), j = -N..N, ascending.
CollocationGrid sinc_nodes(const SincBasis& basis);

/// Nodal derivatives delta^(m)_{k,j} = d^m/dPhi^m S(k,h)(Phi) at Phi = jh.
class DeltaMatrix {
 public:
  DeltaMatrix(int order, double h, int n);

  int order() const noexcept { return order_; }
  double h() const noexcept { return h_; }
  int n() const noexcept { return n_; }
  int size() const noexcept { return 2 * n_ + 1; }

  /// Entry for translate k and node j, both in -N..N.
  double operator()(int k, int j) const;

 private:
  int order_;
  double h_;
  int n_;
  std::vector<double> entries_;
};

DeltaMatrix delta_matrix(const SincBasis& basis, int order);

/// k-th weighted composite member or its derivative at x > 0 (continuous limit 0 below 1e-10).
double composite_basis_eval(const SincBasis& basis, int k, double x, int order);

}  // namespace semiinf
