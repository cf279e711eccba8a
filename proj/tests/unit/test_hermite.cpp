#include <doctest.h>

#include <cmath>
#include <numbers>

#include "semiinf/basis.hpp"
#include "semiinf/errors.hpp"
#include "semiinf/hermite.hpp"

using namespace semiinf;
using doctest::Approx;

TEST_CASE("hermite_fn_eval at the origin") {
  CHECK(hermite_fn_eval(0, 0.0, 0) == 1.0);
  CHECK(hermite_fn_eval(1, 0.0, 0) == 0.0);
  CHECK(hermite_fn_eval(2, 0.0, 0) == Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("hermite_fn_eval matches high-precision values") {
  // mpmath: hermite(n, t) exp(-t^2/2) / sqrt(2^n n!) and derivatives
  struct Row {
    int n;
    double t;
    double v[4];
  };
  const Row rows[] = {
      {3, 0.7, {-0.63897907165173645, 0.42017166960522226, 4.1597537564528043, -3.6298882694424279}},
      {8, -1.9, {0.16272021461183197, 1.9334257785287327, -2.1788236736524302, -26.506907990024693}},
      {12, 2.5, {0.42063653300570833, 1.2792785447812638, -7.8869349938570312, -21.883290049620154}},
  };
  for (const auto& r : rows) {
    for (int m = 0; m <= 3; ++m) CHECK(hermite_fn_eval(r.n, r.t, m) == Approx(r.v[m]).epsilon(1e-11));
  }
}

TEST_CASE("hermite functions decay") {
  for (int n = 0; n <= 20; ++n) {
    for (double t : {12.0, -12.0, 15.0, -20.0}) CHECK(std::abs(hermite_fn_eval(n, t, 0)) <= 1e-6);
  }
}

TEST_CASE("transformed_hermite_eval values") {
  for (double k : {0.5, 1.0, 3.0}) {
    const HermiteBasis b(4, k);
    CHECK(transformed_hermite_eval(b, 0, 1.0, 0) == 1.0);
    CHECK(transformed_hermite_eval(b, 0, 1.0, 1) == 0.0);
    CHECK(transformed_hermite_eval(b, 3, 0.0, 2) == 0.0);
  }
  CHECK(transformed_hermite_eval(HermiteBasis(1, 1.0), 1, std::numbers::e, 0) ==
        Approx(std::sqrt(2.0) * std::exp(-0.5)).epsilon(1e-14));

  const HermiteBasis b(4, 1.2);
  const double v4[4] = {-0.29723635707455843, -0.58254108626724939, 0.58565769297674279,
                        -0.021990063488989534};
  const double v2[4] = {0.087747644668337247, -3.2220324484687324, 6.3728885869614197,
                        32.898281267303533};
  for (int m = 0; m <= 3; ++m) {
    CHECK(transformed_hermite_eval(b, 4, 2.3, m) == Approx(v4[m]).epsilon(1e-11));
    CHECK(transformed_hermite_eval(b, 2, 0.4, m) == Approx(v2[m]).epsilon(1e-11));
  }
  CHECK_THROWS_AS(transformed_hermite_eval(b, 1, -0.5, 0), DomainError);
  CHECK_THROWS_AS(transformed_hermite_eval(b, 1, 1.0, 4), UnsupportedOrderError);
}

TEST_CASE("transformed Hermite derivatives match central differences") {
  const double step = 1e-3;
  for (double k : {0.9, 1.2}) {
    const HermiteBasis b(8, k);
    for (int n = 0; n <= 8; ++n) {
      for (double x : {0.2, 0.5, 1.0, 2.0, 4.5, 10.0}) {
        for (int m = 1; m <= 3; ++m) {
          const auto central = [&](double q) {
            return (transformed_hermite_eval(b, n, x + q, m - 1) - transformed_hermite_eval(b, n, x - q, m - 1)) / (2.0 * q);
          };
          // Richardson extrapolation removes the O(q^2) term
          const double fd = (4.0 * central(step / 2) - central(step)) / 3.0;
          INFO("k=" << k << " n=" << n << " x=" << x << " m=" << m);
          CHECK(std::abs(fd - transformed_hermite_eval(b, n, x, m)) <= 1e-5);
        }
      }
    }
  }
}

TEST_CASE("transformed Hermite vanishes near the origin") {
  for (double k : {0.5, 0.9, 1.0}) {
    const HermiteBasis b(8, k);
    for (int n = 0; n <= 8; ++n) {
      for (int m = 0; m <= 3; ++m) CHECK(std::abs(transformed_hermite_eval(b, n, 1e-6, m)) <= 1e-8);
    }
  }
}

TEST_CASE("hermite_nodes") {
  const auto g = hermite_nodes(HermiteBasis(1, 1.0));
  REQUIRE(g.size() == 2);
  CHECK(g[0] == Approx(std::exp(-1.0 / std::sqrt(2.0))).epsilon(1e-12));
  CHECK(g[1] == Approx(std::exp(1.0 / std::sqrt(2.0))).epsilon(1e-12));
  const auto g2 = hermite_nodes(HermiteBasis(1, 2.0));
  CHECK(g2[0] == Approx(std::exp(-std::sqrt(2.0))).epsilon(1e-12));
  CHECK(g2[1] == Approx(std::exp(std::sqrt(2.0))).epsilon(1e-12));

  // roots of H_4 by mpmath polyroots
  const double t4[] = {-1.6506801238857846, -0.52464762327529032, 0.52464762327529032,
                       1.6506801238857846};
  const auto g3 = hermite_nodes(HermiteBasis(3, 0.7));
  for (int i = 0; i < 4; ++i) CHECK(g3[i] == Approx(std::exp(0.7 * t4[i])).epsilon(1e-12));

  for (int n = 1; n <= 30; ++n) {
    const HermiteBasis b(n, 1.0);
    const auto nodes = hermite_nodes(b);
    CHECK(nodes.size() == static_cast<std::size_t>(n + 1));
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      CHECK(nodes[j] > 0.0);
      CHECK(std::abs(hermite_fn_eval(n + 1, std::log(nodes[j]), 0)) <= 1e-9);
      if (j > 0) CHECK(nodes[j] > nodes[j - 1]);
    }
  }
}

TEST_CASE("transformed Hermite orthogonality under the mapped trapezoid rule") {
  const double root_pi = std::sqrt(std::numbers::pi);
  for (double k : {0.5, 1.2}) {
    const HermiteBasis b(8, k);
    const auto rule = hermite_trapezoid_rule(b);
    for (int n = 0; n <= 8; ++n) {
      for (int m = 0; m <= 8; ++m) {
        const auto u = [&](double x) { return transformed_hermite_eval(b, n, x, 0); };
        const auto v = [&](double x) { return transformed_hermite_eval(b, m, x, 0); };
        const double ip = discrete_inner_product(u, v, rule);
        CHECK(std::abs(ip - (n == m ? root_pi : 0.0)) <= 1e-6);
      }
    }
  }
}
