#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "horo/errors.hpp"
#include "horo/geometry.hpp"

#include <cmath>
#include <random>

using namespace horo;
using doctest::Approx;

TEST_CASE("form and reference points") {
  CHECK(quadratic(x0()) == 1.0);
  CHECK(std::abs(quadratic(zeta0())) == 0.0);
  CHECK(bilinear(x0(), zeta0()) == cplx(1.0));
  CHECK(bilinear(zeta0(), zeta0_bar()) == cplx(2.0));
  for (double s : {0.0, 0.7, 2.5}) CHECK(std::abs(quadratic(tube_point(s)) - 1.0) < 1e-12);
  CHECK(orientation(zeta0()) == -1);
  CHECK(orientation(zeta0_bar()) == 1);
}

TEST_CASE("chart of X") {
  for (double t : {-3.0, 0.0, 1.2})
    for (double th : {0.0, 1.0, 4.0}) {
      const auto p = param_X(t, th);
      CHECK(quadratic(p.v) == Approx(1.0).epsilon(1e-13));
    }
  CHECK(invariant_density(0.0) == 1.0);
  CHECK_THROWS_AS(make_hyperboloid_point(RVec3(1.0, 1.0, 0.0)), DomainError);
  CHECK_NOTHROW(make_hyperboloid_point(tube_point(1.0)));
}

TEST_CASE("tube over X") {
  CHECK_FALSE(in_D_plus(tube_point(0.0)));   // real point, boundary
  CHECK(in_D_plus(tube_point(0.5)));
  CHECK_FALSE(in_D_plus(tube_point(-0.5)));  // other sheet
  CHECK(orientation(tube_point(0.5)) == 1);
}

TEST_CASE("horopoint classes") {
  CHECK(classify_horopoint(CVec3(2.0 * zeta0())).cls == HoroClass::Interior);
  CHECK(classify_horopoint(zeta0()).cls == HoroClass::Boundary);
  CHECK(classify_horopoint(CVec3(0.5 * zeta0_bar())).cls == HoroClass::Other);
  CHECK(classify_horopoint(CVec3(3.0 * zeta0_bar())).orientation == 1);
  CHECK_THROWS_AS(classify_horopoint(CVec3(1.0, 0.0, 0.0)), DomainError);
  CHECK_THROWS_AS(classify_horopoint(CVec3::Zero()), DomainError);
  // real isotropic vector: Delta(Re) = 0
  CHECK(classify_horopoint(CVec3(1.0, 1.0, std::sqrt(2.0))).cls == HoroClass::Other);
  CHECK(to_string(HoroClass::Interior) == "interior");
}

TEST_CASE("horosphere and powers") {
  const HoroPoint z = classify_horopoint(CVec3(2.0 * zeta0()));
  // <x0, 2 zeta0> = 2
  CHECK_FALSE(on_horosphere(x0().cast<cplx>(), z));
  CHECK(std::abs(a_H_power(x0().cast<cplx>(), z, 3) - 0.125) < 1e-15);
  CHECK(ipow(cplx(0.0, 1.0), 7) == cplx(0.0, -1.0));
  CHECK(ipow(cplx(2.0, 0.0), 0) == cplx(1.0));
}

TEST_CASE("group words preserve the form") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const GroupElement g = random_word(rng);
    CHECK(g.form_defect() < 1e-10);
    CHECK((g * g.inverse()).m.isIdentity(1e-9));
    CHECK(!g.word.empty());
  }
  CHECK(horo::boost(1, 0.3).m(0, 2) == Approx(std::sinh(0.3)));
  CHECK_THROWS(horo::boost(3, 0.1));
}

TEST_CASE("equivariance of pairing and sheet under G") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 30; ++i) {
    const GroupElement g = random_word(rng);
    const CVec3 z = tube_point(0.8);
    const CVec3 w = random_horopoint(rng, -1);
    const cplx before = bilinear(z, w);
    const cplx after = bilinear(act(g, z), act(g, w));
    CHECK(std::abs(after - before) <= 1e-9 * std::abs(before) * (1.0 + g.m.norm()));
    CHECK(in_D_plus(act(g, z)));
    CHECK(orientation(act(g, w)) == -1);
    CHECK(classify_horopoint(act(g, w)).interior());
  }
}

TEST_CASE("scaling an interior point") {
  const CVec3 z = 2.0 * zeta0();
  for (double s : {1.2, 5.0, 40.0}) {
    const HoroPoint h = classify_horopoint(CVec3(s * z));
    CHECK(h.interior());
    CHECK(h.orientation == -1);
  }
}
