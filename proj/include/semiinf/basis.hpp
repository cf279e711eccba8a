#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "semiinf/grid.hpp"
#include "semiinf/hermite.hpp"
#include "semiinf/laguerre.hpp"
#include "semiinf/seed.hpp"
#include "semiinf/sinc.hpp"

namespace semiinf {

/// One of the three trial spaces on [0, inf).
using BasisSpec = std::variant<LaguerreBasis, HermiteBasis, SincBasis>;

int dimension(const BasisSpec& basis);

/// i-th member of the basis (coefficient-vector position) or its derivative.
double basis_eval(const BasisSpec& basis, int i, double x, int order);

std::string family_name(const BasisSpec& basis);

/// Truncated series sum_i c_i B_i(x), optionally shifted by a seed profile.
class Expansion {
 public:
  Expansion(BasisSpec basis, std::vector<double> coefficients,
            std::optional<SeedProfile> seed = std::nullopt);

  const BasisSpec& basis() const noexcept { return basis_; }
  const std::vector<double>& coefficients() const noexcept { return coefficients_; }
  const std::optional<SeedProfile>& seed() const noexcept { return seed_; }

 private:
  BasisSpec basis_;
  std::vector<double> coefficients_;
  std::optional<SeedProfile> seed_;
};

double eval_expansion(const Expansion& e, double x, int order);

using RealFunction = std::function<double(double)>;

/// Discrete orthogonal projection: c_i = <f, B_i>_w / <B_i, B_i>_w.
Expansion project(const RealFunction& f, const BasisSpec& basis,
                  const DiscreteInnerProductRule& rule);

double discrete_inner_product(const RealFunction& u, const RealFunction& v,
                              const DiscreteInnerProductRule& rule);

}  // namespace semiinf
