#include "semiinf/grid.hpp"

#include <cmath>
#include <string>

#include "semiinf/errors.hpp"

namespace semiinf {

void check_order(int order) {
  if (order < 0 || order > kMaxDerivativeOrder) {
    throw UnsupportedOrderError("derivative order " + std::to_string(order) +
                                " outside 0.." + std::to_string(kMaxDerivativeOrder));
  }
}

DiscreteInnerProductRule::DiscreteInnerProductRule(std::vector<double> nodes,
                                                   std::vector<double> weights)
    : nodes_(std::move(nodes)), weights_(std::move(weights)) {
  if (nodes_.empty()) throw ConfigurationError("inner-product rule has no nodes");
  if (nodes_.size() != weights_.size()) {
    throw ConfigurationError("inner-product rule: " + std::to_string(nodes_.size()) +
                             " nodes but " + std::to_string(weights_.size()) + " weights");
  }
  for (std::size_t j = 0; j < nodes_.size(); ++j) {
    if (!(nodes_[j] > 0.0) || !std::isfinite(nodes_[j])) {
      throw DomainError("inner-product rule: node " + std::to_string(j) + " is not positive");
    }
    if (j > 0 && !(nodes_[j] > nodes_[j - 1])) {
      throw ConfigurationError("inner-product rule: nodes not strictly increasing at " +
                               std::to_string(j));
    }
    if (!std::isfinite(weights_[j])) {
      throw NumericError("inner-product rule: non-finite weight", static_cast<int>(j));
    }
  }
}

}  // namespace semiinf
