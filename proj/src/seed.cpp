#include "semiinf/seed.hpp"

#include <cmath>

#include "semiinf/errors.hpp"
#include "semiinf/grid.hpp"

namespace semiinf {

double SeedProfile::eval(double x, int order) const {
  check_order(order);
  if (!std::isfinite(x) || x < 0.0) throw DomainError("seed argument must be finite and >= 0");
  const double lam = parameter;
  switch (kind) {
    case SeedKind::None:
      return 0.0;
    case SeedKind::RationalQuadratic: {
      const double q = 1.0 + lam * x + x * x;
      const double q1 = lam + 2.0 * x;
      switch (order) {
        case 0:
          return 1.0 / q;
        case 1:
          return -q1 / (q * q);
        case 2:
          return -2.0 / (q * q) + 2.0 * q1 * q1 / (q * q * q);
        default:
          return 12.0 * q1 / (q * q * q) - 6.0 * q1 * q1 * q1 / (q * q * q * q);
      }
    }
    case SeedKind::RationalLinear: {
      // lambda (-1)^m m! / (lambda + x)^{m+1}
      static constexpr double kSignedFact[4] = {1.0, -1.0, 2.0, -6.0};
      return lam * kSignedFact[order] / std::pow(lam + x, order + 1);
    }
    case SeedKind::ConeRational: {
      const double b = lam;
      const double r = b / (b + x);
      switch (order) {
        case 0:
          return 0.5 * b * b * x / (b + x);
        case 1:
          return 0.5 * b * r * r;
        case 2:
          return -r * r * r;
        default:
          return 3.0 / b * r * r * r * r;
      }
    }
  }
  return 0.0;
}

std::string to_string(SeedKind kind) {
  switch (kind) {
    case SeedKind::None:
      return "none";
    case SeedKind::RationalQuadratic:
      return "rational-quadratic";
    case SeedKind::RationalLinear:
      return "rational-linear";
    case SeedKind::ConeRational:
      return "cone-rational";
  }
  return "unknown";
}

}  // namespace semiinf
