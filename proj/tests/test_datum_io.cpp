#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "horo/datum_io.hpp"
#include "horo/errors.hpp"

#include <string>

using namespace horo;

namespace {

std::string fixture(const std::string& name) { return std::string(HORO_FIXTURE_DIR) + "/" + name; }

bool same(const RootDatum& a, const RootDatum& b) {
  if (a.rank != b.rank || a.gram != b.gram || a.simple != b.simple || a.roots.size() != b.roots.size())
    return false;
  for (std::size_t i = 0; i < a.roots.size(); ++i) {
    const auto& x = a.roots[i];
    const auto& y = b.roots[i];
    if (x.coords != y.coords || x.kind != y.kind || x.multiplicity != y.multiplicity || x.positive != y.positive)
      return false;
  }
  if (a.sigma_plus.has_value() != b.sigma_plus.has_value()) return false;
  return !a.sigma_plus || *a.sigma_plus == *b.sigma_plus;
}

const char* kSl2 = R"(# comment
[meta]
name = t
rank = 1

[gram]
1

[roots]
1  n 1 +
-1 n 1 -

[simple]
0
)";

int parse_line(const std::string& text) {
  try {
    parse_datum(text, "t.rd");
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("shipped fixtures match the built-in data") {
  CHECK(same(load_datum(fixture("sl2.rd")), sl2_datum()));
  CHECK(same(load_datum(fixture("rank1_m1.rd")), rank_one_datum(1)));
  CHECK(same(load_datum(fixture("rank1_m2.rd")), rank_one_datum(2)));
  CHECK(same(load_datum(fixture("rank1_m3.rd")), rank_one_datum(3)));
  CHECK(same(load_datum(fixture("group_case.rd")), group_case_datum()));
  CHECK(same(load_datum(fixture("su21.rd")), su21_datum()));
}

TEST_CASE("round trip through format_datum") {
  for (const auto& d : {sl2_datum(), group_case_datum(), su21_datum()}) {
    const RootDatum back = parse_datum(format_datum(d));
    CHECK(same(back, d));
    CHECK(back.name == d.name);
  }
}

TEST_CASE("minimal text parses") {
  const RootDatum d = parse_datum(kSl2);
  CHECK(d.name == "t");
  CHECK_FALSE(d.sigma_plus);
}

TEST_CASE("diagnostics carry line numbers") {
  std::string s = kSl2;
  CHECK(parse_line(std::string(s).replace(s.find("rank = 1"), 8, "rank = x")) == 4);
  CHECK(parse_line(std::string(s).replace(s.find("1  n 1 +"), 8, "1  q 1 +")) == 10);
  CHECK(parse_line(std::string(s).replace(s.find("name = t"), 8, "colour = t")) == 3);
  CHECK(parse_line(s + "[extra]\n") == 15);
  CHECK(parse_line(s + "[gram]\n1\n") == 15);
  CHECK(parse_line("[gram]\n1\n") == 1);
}

TEST_CASE("structural errors surface as ValidationError") {
  try {
    load_datum(std::string(HORO_TEST_DATA_DIR) + "/two_noncompact_simple.rd");
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.invariant() == "one-noncompact-simple");
  }
  std::string s = kSl2;
  CHECK_THROWS_AS(parse_datum(std::string(s).replace(s.find("-1 n 1 -"), 8, "-2 n 1 -")), ValidationError);
}

TEST_CASE("missing file") {
  CHECK_THROWS_AS(load_datum("/nonexistent/x.rd"), ParseError);
}
