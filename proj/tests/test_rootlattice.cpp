#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "horo/errors.hpp"
#include "horo/rootlattice.hpp"

using namespace horo;

namespace {
WeightVector wv(std::initializer_list<Rational> xs) {
  QVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (const auto& x : xs) v(i++) = x;
  return WeightVector(v);
}
}  // namespace

// Hand values below: sl2 has <a,a> = 1; su21 is A2 with Gram [[2,-1],[-1,2]],
// alpha1 = (1,0) compact and negative, alpha2 = (0,1).

TEST_CASE("built-in data validate") {
  for (const auto& d : {sl2_datum(), rank_one_datum(2), rank_one_datum(3), group_case_datum(), su21_datum()})
    CHECK_NOTHROW(validate(d));
}

TEST_CASE("validate names the broken invariant") {
  RootDatum d = su21_datum();
  d.gram(0, 1) = Rational(0);
  try {
    validate(d);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.invariant() == "gram-symmetric");
  }
  RootDatum e = su21_datum();
  e.roots.pop_back();
  CHECK_THROWS_AS(validate(e), ValidationError);
}

TEST_CASE("coroots pair to 2") {
  const RootDatum d = su21_datum();
  for (std::size_t i = 0; i < d.roots.size(); ++i) {
    const WeightVector a(d.roots[i].coords);
    CHECK(evaluate(d, a, coroot(d, i)) == Rational(2));
  }
  CHECK(coroot(sl2_datum(), 0) == wv({2}));
  CHECK_THROWS_AS(coroot(d, 99), DomainError);
}

TEST_CASE("fundamental weights") {
  CHECK(fundamental_weights(sl2_datum())[0] == wv({1}));
  // G (a,b) = (2,0) -> (4/3, 2/3); G (a,b) = (0,2) -> (2/3, 4/3)
  const auto om = fundamental_weights(su21_datum());
  CHECK(om[0] == wv({Rational(4, 3), Rational(2, 3)}));
  CHECK(om[1] == wv({Rational(2, 3), Rational(4, 3)}));
  const QVector k = omega_coordinates(su21_datum(), Rational(2) * om[0] + Rational(5) * om[1]);
  CHECK(k(0) == Rational(2));
  CHECK(k(1) == Rational(5));
}

TEST_CASE("rho and rho_c") {
  CHECK(rho(sl2_datum()) == wv({Rational(1, 2)}));
  CHECK(rho(group_case_datum()) == wv({1}));
  CHECK(rho(rank_one_datum(3)) == wv({Rational(3, 2)}));
  CHECK(rho(su21_datum()) == wv({1, 1}));
  CHECK(rho_c(su21_datum()) == wv({1, 1}));
  CHECK(rho_c(sl2_datum()) == wv({Rational(1, 2)}));
  CHECK_THROWS_AS(rho_c(rank_one_datum(2)), UnsupportedError);
}

TEST_CASE("minimal cone membership") {
  const RootDatum d = su21_datum();  // generators (0,1), (1,1)
  CHECK(in_minimal_cone(d, wv({1, 2}), false));
  CHECK(in_minimal_cone(d, wv({1, 3}), false));
  CHECK(in_minimal_cone(d, wv({1, 1}), true));
  CHECK_FALSE(in_minimal_cone(d, wv({1, 1}), false));
  CHECK_FALSE(in_minimal_cone(d, wv({1, 0}), true));
  CHECK_FALSE(in_minimal_cone(d, wv({0, 0}), false));
  CHECK(in_minimal_cone(d, wv({0, 0}), true));
  CHECK_THROWS_AS(in_minimal_cone(d, wv({1}), true), DomainError);
  CHECK(in_minimal_cone(sl2_datum(), wv({Rational(1, 7)}), false));
  CHECK_FALSE(in_minimal_cone(sl2_datum(), wv({-1}), true));
}

TEST_CASE("compact Weyl orbit") {
  CHECK(compact_weyl_orbit(su21_datum(), su21_datum().roots[0].coords).size() == 2);
  CHECK(compact_weyl_orbit(sl2_datum(), wv({3}).coords).size() == 1);
}

TEST_CASE("classify sl2") {
  const RootDatum d = sl2_datum();
  // l2: lambda > 1/2; lc: 2(lambda - 1/2) > 1
  const auto c1 = classify(d, wv({1}));
  CHECK(c1.integral);
  CHECK(c1.positive);
  CHECK(c1.l2);
  CHECK_FALSE(c1.l1);
  CHECK_FALSE(c1.lc);
  CHECK(c1.sd == Availability::Yes);
  const auto c2 = classify(d, wv({2}));
  CHECK(c2.l1);
  CHECK(c2.lc);
  const auto c0 = classify(d, wv({0}));
  CHECK_FALSE(c0.positive);
  CHECK_FALSE(c0.l2);
  CHECK(c0.sd == Availability::No);
  CHECK_FALSE(classify(d, wv({Rational(1, 2)})).integral);
  CHECK(classify(rank_one_datum(2), wv({2})).sd == Availability::Unavailable);
  CHECK_THROWS_AS(classify(d, wv({1, 1})), DomainError);
}

TEST_CASE("rank one: positive lambda lies in Lambda_2") {
  for (int m : {1, 2, 3}) {
    const RootDatum d = rank_one_datum(m);
    for (int k = 1; k <= 6; ++k) {
      const auto c = classify(d, Rational(k) * fundamental_weights(d)[0]);
      CHECK(c.positive);
      CHECK(c.l2 == (Rational(k) > rho(d).coords(0)));
    }
  }
}

TEST_CASE("su21 omega_2 is positive but not in Lambda_2") {
  const RootDatum d = su21_datum();
  // lambda - rho = (-1/3, 1/3), G(...) = (-1, 1); pairing with (1,1) is 0
  const auto c = classify(d, fundamental_weights(d)[1]);
  CHECK(c.integral);
  CHECK(c.positive);
  CHECK_FALSE(c.l2);
}

TEST_CASE("formal dimension") {
  CHECK(formal_dimension(sl2_datum(), wv({2}), Rational(1)) == Rational(3, 2));
  CHECK(formal_dimension(su21_datum(), rho_c(su21_datum()), Rational(1)) == Rational(0));
  // lambda - rho_c = (0,2), G(0,2) = (-2,4): (-2)(4)(2)
  CHECK(formal_dimension(su21_datum(), wv({1, 3}), Rational(1)) == Rational(-16));
  CHECK(formal_dimension(su21_datum(), wv({1, 3}), Rational(1, 2)) == Rational(-8));
}

TEST_CASE("enumeration") {
  CHECK(enumerate_coefficients(2, 1).size() == 9);
  CHECK(enumerate_coefficients(2, 1).front() == std::vector<int>{-1, -1});
  CHECK(enumerate_coefficients(2, 1)[1] == std::vector<int>{-1, 0});
  const auto ws = enumerate_weights(sl2_datum(), 3);
  REQUIRE(ws.size() == 7);
  CHECK(ws.front() == wv({-3}));
  CHECK(ws.back() == wv({3}));
  CHECK_THROWS_AS(enumerate_coefficients(1, -1), DomainError);
}
