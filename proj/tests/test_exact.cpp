#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "horo/exact.hpp"

using namespace horo;

namespace {
QVector vec(std::initializer_list<long> xs) {
  QVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (long x : xs) v(i++) = Rational(x);
  return v;
}
}  // namespace

TEST_CASE("parse_rational") {
  CHECK(*parse_rational("3") == Rational(3));
  CHECK(*parse_rational("-7/14") == Rational(-1, 2));
  CHECK(*parse_rational("+2/3") == Rational(2, 3));
  CHECK_FALSE(parse_rational("1/0"));
  CHECK_FALSE(parse_rational("1/-2"));
  CHECK_FALSE(parse_rational("1.5"));
  CHECK_FALSE(parse_rational(""));
  CHECK_FALSE(parse_rational("/3"));
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK(to_string(Rational(-4, 2)) == "-2");
}

TEST_CASE("solve_exact against a hand-solved system") {
  QMatrix a(3, 3);
  a << Rational(2), Rational(1), Rational(0), Rational(1), Rational(3), Rational(1), Rational(0), Rational(1),
      Rational(4);
  // x = (1, -1/2, 1/4), by back substitution
  QVector b(3);
  b << Rational(3, 2), Rational(-1, 4), Rational(1, 2);
  const auto x = solve_exact(a, b);
  REQUIRE(x);
  CHECK((*x)(0) == Rational(1));
  CHECK((*x)(1) == Rational(-1, 2));
  CHECK((*x)(2) == Rational(1, 4));

  QMatrix s(2, 2);
  s << Rational(1), Rational(2), Rational(2), Rational(4);
  CHECK_FALSE(solve_exact(s, vec({1, 2})));
  CHECK(rank_exact(s) == 1);
}

TEST_CASE("positive definiteness by leading minors") {
  QMatrix g(2, 2);
  g << Rational(2), Rational(-1), Rational(-1), Rational(2);
  CHECK(is_positive_definite(g));
  g(1, 1) = Rational(1, 2);  // det = 0
  CHECK_FALSE(is_positive_definite(g));
  QMatrix n(2, 2);
  n << Rational(0), Rational(1), Rational(1), Rational(0);
  CHECK_FALSE(is_positive_definite(n));
}

TEST_CASE("lp_maximize on small problems with known optimum") {
  // max x + y  s.t. x + 2y + s1 = 4, 3x + y + s2 = 6  -> optimum at (8/5, 6/5), value 14/5
  QMatrix a(2, 4);
  a << Rational(1), Rational(2), Rational(1), Rational(0), Rational(3), Rational(1), Rational(0), Rational(1);
  QVector c = vec({1, 1, 0, 0});
  const LpResult r = lp_maximize(a, vec({4, 6}), c);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value == Rational(14, 5));
  CHECK(r.x(0) == Rational(8, 5));
  CHECK(r.x(1) == Rational(6, 5));

  // infeasible: x = -1, x >= 0
  QMatrix one(1, 1);
  one << Rational(1);
  CHECK(lp_maximize(one, vec({-1}), vec({0})).status == LpStatus::Infeasible);

  // unbounded: x - y = 0, maximize x
  QMatrix u(1, 2);
  u << Rational(1), Rational(-1);
  CHECK(lp_maximize(u, vec({0}), vec({1, 0})).status == LpStatus::Unbounded);

  // redundant equality rows
  QMatrix d(2, 2);
  d << Rational(1), Rational(1), Rational(2), Rational(2);
  const LpResult rd = lp_maximize(d, vec({1, 2}), vec({1, 0}));
  REQUIRE(rd.status == LpStatus::Optimal);
  CHECK(rd.value == Rational(1));
}

TEST_CASE("cone membership, open and closed") {
  QMatrix g(2, 2);  // generators e1, e2
  g << Rational(1), Rational(0), Rational(0), Rational(1);
  CHECK(cone_membership(g, vec({1, 1}), true).member);
  CHECK(cone_membership(g, vec({1, 0}), false).member);
  CHECK_FALSE(cone_membership(g, vec({1, 0}), true).member);  // boundary ray
  CHECK_FALSE(cone_membership(g, vec({-1, 1}), false).member);
  const auto m = cone_membership(g, vec({3, 5}), true);
  REQUIRE(m.member);
  CHECK(m.certificate == Rational(1));  // capped at 1
  CHECK(m.coefficients(0) == Rational(3));
  CHECK(m.coefficients(1) == Rational(5));
  CHECK(cone_membership(g, vec({1, 1000000}), true).certificate == Rational(1));
  // tiny but positive coefficient is still open-interior
  QVector v(2);
  v << Rational(1, 1000000), Rational(1);
  const auto t = cone_membership(g, v, true);
  CHECK(t.member);
  CHECK(t.certificate == Rational(1, 1000000));
}
