#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cli.hpp"
#include "horo/errors.hpp"

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

using namespace horo;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "horo");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<json> records(const std::string& text) {
  std::vector<json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) out.push_back(json::parse(line));
  return out;
}

const std::string kFix = HORO_FIXTURE_DIR;

}  // namespace

TEST_CASE("point syntax") {
  CHECK(cli::parse_point("x0") == CVec3(1.0, 0.0, 0.0));
  CHECK(cli::parse_point("2z0") == CVec3(2.0 * zeta0()));
  CHECK(cli::parse_point("-1.5z0bar") == CVec3(-1.5 * zeta0_bar()));
  CHECK(cli::parse_point("tube:0.5") == tube_point(0.5));
  CHECK(cli::parse_point("1,-2.5,3i") == CVec3(1.0, -2.5, cplx(0.0, 3.0)));
  CHECK(cli::parse_point("1-0.5i,0,0") == CVec3(cplx(1.0, -0.5), 0.0, 0.0));
  CHECK_THROWS_AS(cli::parse_point("1,2"), ParseError);
  CHECK_THROWS_AS(cli::parse_point("zz"), ParseError);
  CHECK_THROWS_AS(cli::parse_point("tube:"), ParseError);
  QuadratureSpec q;
  cli::parse_quad("8,64,64", q);
  CHECK(q.t_max == 8.0);
  CHECK(q.n_t == 64);
  CHECK_THROWS_AS(cli::parse_quad("8,64", q), ParseError);
}

TEST_CASE("transform record") {
  const Run r = run({"transform", "--f", "matrix", "--w", "2z0", "--lambda", "2", "--zeta", "2z0bar"});
  REQUIRE(r.code == 0);
  const auto recs = records(r.out);
  REQUIRE(recs.size() == 1);
  CHECK(recs[0]["schema"] == 1);
  // 4 pi^2 / 8^2
  CHECK(std::abs(recs[0]["value_re"].get<double>() - 0.61685027506808) < 1e-9);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == cli::kParse);
  CHECK(run({"bogus"}).code == cli::kParse);
  CHECK(run({"transform", "--f", "matrix", "--w", "2z0", "--lambda", "2", "--zeta", "z0"}).code == cli::kDomain);
  CHECK(run({"transform", "--f", "matrix", "--w", "2z0", "--lambda", "2", "--zeta", "1,2"}).code == cli::kParse);
  CHECK(run({"lattice", kFix + "/nope.rd"}).code == cli::kParse);
  const Run bad = run({"lattice", std::string(HORO_TEST_DATA_DIR) + "/two_noncompact_simple.rd"});
  CHECK(bad.code == cli::kParse);
  CHECK(bad.err.find("one-noncompact-simple") != std::string::npos);
  CHECK(run({"invert", "--f", "matrix", "--w", "2z0", "--lambda", "1", "--z", "tube:0.5"}).code == cli::kDomain);
  CHECK(run({"--out", "/nonexistent/dir/x.jsonl", "lattice", kFix + "/sl2.rd", "--lambda", "1"}).code ==
        cli::kParse);
}

TEST_CASE("lattice output") {
  const Run r = run({"lattice", kFix + "/su21.rd", "--lambda", "0,1", "--basis", "omega"});
  REQUIRE(r.code == 0);
  const auto recs = records(r.out);
  REQUIRE(recs.size() == 1);
  CHECK(recs[0]["positive"] == true);
  CHECK(recs[0]["lambda2"] == false);

  const Run e = run({"lattice", kFix + "/sl2.rd", "--enumerate", "3"});
  CHECK(records(e.out).size() == 7);
}

TEST_CASE("csv and determinism") {
  const std::vector<std::string> args = {"--format", "csv", "lattice", kFix + "/sl2.rd", "--lambda", "1",
                                         "--lambda", "2"};
  const Run a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  std::istringstream in(a.out);
  std::string header, row1, row2;
  std::getline(in, header);
  std::getline(in, row1);
  std::getline(in, row2);
  CHECK(header.rfind("schema,operation,datum", 0) == 0);
  CHECK(row2.substr(row2.rfind(',') + 1) == "3/2");

  const std::vector<std::string> v = {"--seed", "3", "verify", "kernel-series"};
  const Run x = run(v), y = run(v);
  CHECK(x.code == 0);
  CHECK(x.out == y.out);
}
