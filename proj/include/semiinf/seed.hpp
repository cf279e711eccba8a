#pragma once

#include <string>

namespace semiinf {

enum class SeedKind {
  None,
  RationalQuadratic,  ///< 1 / (1 + lambda x + x^2)
  RationalLinear,     ///< lambda / (lambda + x)
  ConeRational,       ///< beta^2 x / (2 (beta + x))
};

/// Closed-form profile added outside the trial span to carry boundary values.
struct SeedProfile {
  SeedKind kind = SeedKind::None;
  double parameter = 0.0;

  static SeedProfile none() { return {}; }
  static SeedProfile rational_quadratic(double lambda) { return {SeedKind::RationalQuadratic, lambda}; }
  static SeedProfile rational_linear(double lambda) { return {SeedKind::RationalLinear, lambda}; }
  static SeedProfile cone_rational(double beta) { return {SeedKind::ConeRational, beta}; }

  double eval(double x, int order) const;

  friend bool operator==(const SeedProfile&, const SeedProfile&) = default;
};

std::string to_string(SeedKind kind);

}  // namespace semiinf
