#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "horo/quadrature.hpp"

#include <cmath>
#include <numbers>

using namespace horo;

TEST_CASE("Gauss-Legendre integrates x^k exactly up to 2n-1") {
  for (int n : {1, 2, 5, 16, 40}) {
    const Rule r = gauss_legendre(n);
    CHECK(r.x.size() == n);
    for (int k = 0; k <= 2 * n - 1; ++k) {
      double s = 0;
      for (int i = 0; i < n; ++i) s += r.w(i) * std::pow(r.x(i), k);
      const double exact = k % 2 ? 0.0 : 2.0 / (k + 1);
      CHECK(std::abs(s - exact) < 1e-13);
    }
  }
  // not exact at degree 2n
  const Rule r = gauss_legendre(3);
  double s = 0;
  for (int i = 0; i < 3; ++i) s += r.w(i) * std::pow(r.x(i), 6);
  CHECK(std::abs(s - 2.0 / 7) > 1e-3);
}

TEST_CASE("panel order") {
  CHECK(panel_order(480) == 16);
  CHECK(panel_order(600) == 8);
  CHECK(panel_order(36) == 4);
  CHECK(panel_order(34) == 2);
  CHECK(panel_order(33) == 1);
}

TEST_CASE("composite rule on exp") {
  const Rule r = composite_gauss_legendre(-1.0, 2.0, 64);
  double s = 0;
  for (Eigen::Index i = 0; i < r.x.size(); ++i) s += r.w(i) * std::exp(r.x(i));
  CHECK(std::abs(s - (std::exp(2.0) - std::exp(-1.0))) < 1e-13);
  CHECK(std::abs(r.w.sum() - 3.0) < 1e-14);
}

TEST_CASE("periodic trapezoid: int exp(cos) = 2 pi I0(1)") {
  const Rule r = periodic_trapezoid(32);
  double s = 0;
  for (Eigen::Index i = 0; i < r.x.size(); ++i) s += r.w(i) * std::exp(std::cos(r.x(i)));
  CHECK(std::abs(s - 2 * std::numbers::pi * std::cyl_bessel_i(0.0, 1.0)) < 1e-14);
  CHECK(r.x(0) == 0.0);
  CHECK(r.x(31) < 2 * std::numbers::pi);
}
