#include "semiinf/sinc.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "semiinf/errors.hpp"

namespace semiinf {

namespace {

constexpr double kPi = std::numbers::pi;

// d^m/dv^m (sin v / v).
double sinc_v(double v, int m) {
  if (std::abs(v) < 0.5) {
    // sin v / v = sum (-1)^i v^{2i} / (2i+1)!
    double sum = 0.0;
    double fact = 1.0;  // (2i+1)!
    for (int i = 0; i < 12; ++i) {
      if (i > 0) fact *= (2.0 * i) * (2.0 * i + 1.0);
      const int p = 2 * i;
      if (p < m) continue;
      double c = ((i % 2 == 0) ? 1.0 : -1.0) / fact;
      for (int q = 0; q < m; ++q) c *= (p - q);
      sum += c * std::pow(v, p - m);
    }
    return sum;
  }
  const double s = std::sin(v);
  const double c = std::cos(v);
  const double v2 = v * v;
  switch (m) {
    case 0:
      return s / v;
    case 1:
      return c / v - s / v2;
    case 2:
      return -s / v - 2.0 * c / v2 + 2.0 * s / (v2 * v);
    default:
      return -c / v + 3.0 * s / v2 + 6.0 * c / (v2 * v) - 6.0 * s / (v2 * v2);
  }
}

bool valid_pairing(SincMap map, SincWeight weight) {
  return (map == SincMap::LogSinh && weight == SincWeight::RationalX) ||
         (map == SincMap::Log && weight == SincWeight::RationalX3);
}

// x^a / (1 + x^3)^b without overflow for large x.
double rational3_term(double x, int a, int b) {
  if (x <= 1.0) return std::pow(x, a) / std::pow(1.0 + x * x * x, b);
  return std::pow(x, a - 3 * b) / std::pow(1.0 + std::pow(x, -3.0), b);
}

}  // namespace

SincBasis::SincBasis(int n_, double h_, SincMap map_, SincWeight weight_)
    : n(n_), h(h_), map(map_), weight(weight_) {
  if (n < 1) throw ConfigurationError("Sinc basis needs N >= 1, got " + std::to_string(n));
  if (!(h > 0.0) || !std::isfinite(h)) throw ConfigurationError("Sinc mesh h must be > 0");
  if (!valid_pairing(map, weight)) {
    throw ConfigurationError("Sinc map/weight pairing must be LogSinh+RationalX or Log+RationalX3");
  }
}

double SincBasis::eval(int i, double x, int order) const {
  if (i < 0 || i >= dimension()) {
    throw ConfigurationError("Sinc position " + std::to_string(i) + " outside 0.." +
                             std::to_string(dimension() - 1));
  }
  check_order(order);
  if (!std::isfinite(x) || x < 0.0) throw DomainError("Sinc argument must be finite and >= 0");
  if (x == 0.0) return 0.0;
  return composite_basis_eval(*this, i - n, x, order);
}

double sinc(double x) {
  const double v = kPi * x;
  if (std::abs(x) < 1e-8) return 1.0 - v * v / 6.0;
  return std::sin(v) / v;
}

double sinc_derivative(double u, int order) {
  check_order(order);
  return std::pow(kPi, order) * sinc_v(kPi * u, order);
}

MapJet map_jet(SincMap map, double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("map argument must be finite and > 0");
  if (map == SincMap::Log) return {std::log(x), 1.0 / x, -1.0 / (x * x), 2.0 / (x * x * x)};
  MapJet j{};
  if (x < 20.0) {
    const double sh = std::sinh(x);
    const double coth = std::cosh(x) / sh;
    const double csch2 = 1.0 / (sh * sh);
    j.value = std::log(sh);
    j.d1 = coth;
    j.d2 = -csch2;
    j.d3 = 2.0 * coth * csch2;
  } else {
    const double e = std::exp(-2.0 * x);
    j.value = x + std::log1p(-e) - std::numbers::ln2;
    j.d1 = (1.0 + e) / (1.0 - e);
    j.d2 = -4.0 * e / ((1.0 - e) * (1.0 - e));
    j.d3 = 2.0 * j.d1 * -j.d2;
  }
  return j;
}

double sinc_weight(SincWeight weight, double x, int order) {
  check_order(order);
  if (weight == SincWeight::RationalX) {
    const double d = 1.0 + x * x;
    switch (order) {
      case 0:
        return x / d;
      case 1:
        return (1.0 - x * x) / (d * d);
      case 2:
        return (2.0 * x * x * x - 6.0 * x) / (d * d * d);
      default:
        return (-6.0 * x * x * x * x + 36.0 * x * x - 6.0) / (d * d * d * d);
    }
  }
  switch (order) {
    case 0:
      return rational3_term(x, 3, 1);
    case 1:
      return 3.0 * rational3_term(x, 2, 2);
    case 2:
      return -12.0 * rational3_term(x, 4, 3) + 6.0 * rational3_term(x, 1, 3);
    default:
      return 60.0 * rational3_term(x, 6, 4) - 96.0 * rational3_term(x, 3, 4) +
             6.0 * rational3_term(x, 0, 4);
  }
}

CollocationGrid sinc_nodes(const SincBasis& basis) {
  CollocationGrid grid;
  grid.nodes.reserve(basis.dimension());
  for (int j = -basis.n; j <= basis.n; ++j) {
    const double jh = j * basis.h;
    if (std::abs(jh) > 700.0) {
      throw RangeError("Sinc node exponent " + std::to_string(jh) + " overflows");
    }
    const double e = std::exp(jh);
    grid.nodes.push_back(basis.map == SincMap::LogSinh ? std::asinh(e) : e);
  }
  return grid;
}

DeltaMatrix::DeltaMatrix(int order, double h, int n) : order_(order), h_(h), n_(n) {
  check_order(order);
  const int size = 2 * n + 1;
  entries_.assign(static_cast<std::size_t>(size) * size, 0.0);
  const double pi2 = kPi * kPi;
  for (int k = -n; k <= n; ++k) {
    for (int j = -n; j <= n; ++j) {
      const int m = j - k;
      const double sign = (m % 2 == 0) ? 1.0 : -1.0;
      double v = 0.0;
      if (m == 0) {
        v = (order == 0) ? 1.0 : (order == 2 ? -pi2 / (3.0 * h * h) : 0.0);
      } else {
        switch (order) {
          case 0:
            v = 0.0;
            break;
          case 1:
            v = sign / (m * h);
            break;
          case 2:
            v = -2.0 * sign / (double(m) * m * h * h);
            break;
          default:
            v = sign * (6.0 / (double(m) * m * m) - pi2 / m) / (h * h * h);
        }
      }
      entries_[static_cast<std::size_t>(k + n) * size + (j + n)] = v;
    }
  }
}

double DeltaMatrix::operator()(int k, int j) const {
  if (k < -n_ || k > n_ || j < -n_ || j > n_) {
    throw ConfigurationError("delta matrix index outside -N..N");
  }
  return entries_[static_cast<std::size_t>(k + n_) * size() + (j + n_)];
}

DeltaMatrix delta_matrix(const SincBasis& basis, int order) {
  return DeltaMatrix(order, basis.h, basis.n);
}

double composite_basis_eval(const SincBasis& basis, int k, double x, int order) {
  check_order(order);
  if (k < -basis.n || k > basis.n) {
    throw ConfigurationError("Sinc translate " + std::to_string(k) + " outside -N..N");
  }
  if (!std::isfinite(x) || !(x > 0.0)) throw DomainError("composite Sinc argument must be > 0");
  if (x < 1e-10 && basis.map == SincMap::LogSinh) return 0.0;

  const MapJet p = map_jet(basis.map, x);
  const double h = basis.h;
  const double u = (p.value - k * h) / h;
  double s[kMaxDerivativeOrder + 1] = {0.0, 0.0, 0.0, 0.0};
  for (int m = 0; m <= order; ++m) s[m] = sinc_derivative(u, m) / std::pow(h, m);

  // g = S(Phi(x)) and its x-derivatives
  double g[kMaxDerivativeOrder + 1] = {s[0], 0.0, 0.0, 0.0};
  if (order >= 1) g[1] = s[1] * p.d1;
  if (order >= 2) g[2] = s[2] * p.d1 * p.d1 + s[1] * p.d2;
  if (order >= 3) g[3] = s[3] * p.d1 * p.d1 * p.d1 + 3.0 * s[2] * p.d1 * p.d2 + s[1] * p.d3;

  static constexpr double kBinom[4][4] = {{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 2, 1, 0}, {1, 3, 3, 1}};
  double sum = 0.0;
  for (int m = 0; m <= order; ++m) {
    sum += kBinom[order][m] * sinc_weight(basis.weight, x, order - m) * g[m];
  }
  return sum;
}

}  // namespace semiinf
