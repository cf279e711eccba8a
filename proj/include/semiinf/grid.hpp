#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace semiinf {

/// Highest derivative order any basis family evaluates. The cone problem's f''' is the top.
inline constexpr int kMaxDerivativeOrder = 3;

/// Throws UnsupportedOrderError unless 0 <= order <= kMaxDerivativeOrder.
void check_order(int order);

/// Ordered nodes at which residuals are enforced.
struct CollocationGrid {
  std::vector<double> nodes;

  std::size_t size() const noexcept { return nodes.size(); }
  double operator[](std::size_t i) const { return nodes[i]; }
};

/// Nodal rule defining <u, v>_{w,N} = sum_j u(x_j) v(x_j) w_j.
///
/// Nodes are strictly increasing and positive; weights are finite.
class DiscreteInnerProductRule {
 public:
  DiscreteInnerProductRule(std::vector<double> nodes, std::vector<double> weights);

  std::span<const double> nodes() const noexcept { return nodes_; }
  std::span<const double> weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return nodes_.size(); }

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

}  // namespace semiinf
