#include "semiinf/basis.hpp"

#include <cmath>
#include <string>

#include "semiinf/errors.hpp"

namespace semiinf {

int dimension(const BasisSpec& basis) {
  return std::visit([](const auto& b) { return b.dimension(); }, basis);
}

double basis_eval(const BasisSpec& basis, int i, double x, int order) {
  return std::visit([&](const auto& b) { return b.eval(i, x, order); }, basis);
}

std::string family_name(const BasisSpec& basis) {
  switch (basis.index()) {
    case 0:
      return "mglf";
    case 1:
      return "hermite";
    default:
      return "sinc";
  }
}

Expansion::Expansion(BasisSpec basis, std::vector<double> coefficients,
                     std::optional<SeedProfile> seed)
    : basis_(std::move(basis)), coefficients_(std::move(coefficients)), seed_(seed) {
  const int dim = dimension(basis_);
  if (static_cast<int>(coefficients_.size()) != dim) {
    throw ConfigurationError("expansion has " + std::to_string(coefficients_.size()) +
                             " coefficients for a basis of dimension " + std::to_string(dim));
  }
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (!std::isfinite(coefficients_[i])) {
      throw NumericError("non-finite expansion coefficient", static_cast<int>(i));
    }
  }
}

double eval_expansion(const Expansion& e, double x, int order) {
  check_order(order);
  if (!std::isfinite(x)) throw DomainError("expansion argument is not finite");
  if (x < 0.0) throw DomainError("expansion argument must be >= 0");
  double sum = 0.0;
  const auto& c = e.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] != 0.0) sum += c[i] * basis_eval(e.basis(), static_cast<int>(i), x, order);
  }
  if (e.seed()) sum += e.seed()->eval(x, order);
  return sum;
}

double discrete_inner_product(const RealFunction& u, const RealFunction& v,
                              const DiscreteInnerProductRule& rule) {
  const auto nodes = rule.nodes();
  const auto weights = rule.weights();
  double sum = 0.0;
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    const double a = u(nodes[j]);
    const double b = v(nodes[j]);
    if (!std::isfinite(a) || !std::isfinite(b)) {
      throw NumericError("non-finite value in discrete inner product", static_cast<int>(j));
    }
    sum += a * b * weights[j];
  }
  return sum;
}

Expansion project(const RealFunction& f, const BasisSpec& basis,
                  const DiscreteInnerProductRule& rule) {
  const int dim = dimension(basis);
  if (std::holds_alternative<LaguerreBasis>(basis) && static_cast<int>(rule.size()) < dim) {
    throw ConfigurationError("Laguerre rule has fewer nodes than the basis dimension");
  }
  if (std::holds_alternative<SincBasis>(basis)) {
    throw ConfigurationError("no discrete inner-product rule is defined for the Sinc family");
  }
  std::vector<double> coefficients(dim);
  for (int i = 0; i < dim; ++i) {
    const auto phi = [&](double x) { return basis_eval(basis, i, x, 0); };
    const double norm = discrete_inner_product(phi, phi, rule);
    if (!(norm > 0.0)) {
      throw ConfigurationError("basis member " + std::to_string(i) + " has zero discrete norm");
    }
    coefficients[i] = discrete_inner_product(f, phi, rule) / norm;
  }
  return Expansion(basis, std::move(coefficients));
}

}  // namespace semiinf
