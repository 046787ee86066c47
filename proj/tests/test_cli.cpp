#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>

#include "sextic/cli.hpp"
#include "sextic/spectrum.hpp"

using namespace sextic::cli;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("branch lists") {
  CHECK(parse_branch_list("1..4") == std::vector<int>{1, 2, 3, 4});
  CHECK(parse_branch_list("2,5") == std::vector<int>{2, 5});
  CHECK(parse_branch_list("1..2,7") == std::vector<int>{1, 2, 7});
  for (const char* bad : {"", ",", "0", "3..1", "a", "1..x", "2.5"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_branch_list(bad), std::invalid_argument);
  }
}

TEST_CASE("grids") {
  CHECK(parse_grid("-1:1:0.5").size() == 5);
  CHECK_THROWS_AS(parse_grid("1:2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("1:2:0.1:3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("1:x:0.1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("1:0:0.1"), std::invalid_argument);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(call({}).code == 2);
  CHECK(call({"bogus"}).code == 2);
  CHECK(call({"curves", "--level", "0", "--branches", "", "--xi0", "-1:1:0.5"}).code == 2);
  CHECK(call({"curves", "--level", "2"}).code == 2);
  CHECK(call({"curves", "--level", "1", "--energy-sign", "0"}).code == 2);
  CHECK(call({"curves", "--xi0", "1:2"}).code == 2);
  CHECK(call({"curves", "--format", "xml"}).code == 2);
  CHECK(call({"spectrum", "--level", "1", "--v6", "0"}).code == 2);
  CHECK(call({"spectrum", "--level", "1", "--v6", "-1"}).code == 2);
  CHECK(call({"spectrum", "--mass", "0"}).code == 2);
  CHECK(call({"wavefunction", "--branch", "5"}).code == 2);
  CHECK(call({"verify", "--suite", "nope"}).code == 2);
  const Run r = call({"spectrum", "--v6", "0"});
  CHECK(r.err.find("v6") != std::string::npos);
  CHECK(r.out.empty());
}

TEST_CASE("curves csv") {
  const Run r = call({"curves", "--level", "0", "--branches", "1..3", "--xi0", "-1:1:0.5"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  int rows = 0;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.rfind("#", 0) == 0) continue;
    if (!header) {
      CHECK(line == "branch,xi0,w_exact,w_approx,abs_error");
      header = true;
      continue;
    }
    ++rows;
    CHECK(std::count(line.begin(), line.end(), ',') == 4);
  }
  CHECK(rows == 15);
  CHECK(r.out.find("# schema_version: 1") == 0);
}

TEST_CASE("curves json") {
  const Run r = call({"curves", "--level", "1", "--branches", "1,2", "--xi0", "-4:-3:0.25", "--energy-sign", "1",
                      "--format", "json"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["schema_version"] == "1");
  CHECK(j["command"] == "curves");
  CHECK(j["columns"].size() == 5);
  CHECK(j["rows"].size() == 10);
  CHECK(j["summary"]["energy_sign"] == 1.0);
  for (const auto& row : j["rows"]) {
    const double xi0 = row[1], w = row[2];
    CHECK(w >= 0.0);
    CHECK(w <= xi0 * xi0);
  }
}

TEST_CASE("spectrum") {
  const Run one = call({"spectrum", "--level", "1", "--v2", "2", "--format", "json"});
  REQUIRE(one.code == 0);
  const json j = json::parse(one.out);
  REQUIRE(j["rows"].size() == 2);
  CHECK(double(j["rows"][0][4]) == doctest::Approx(-2.0 * std::sqrt(2.0)).epsilon(1e-12));
  CHECK(double(j["rows"][1][4]) == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-12));
  const Run zero = call({"spectrum", "--level", "0", "--v0", "0.75", "--format", "json"});
  REQUIRE(zero.code == 0);
  const json z = json::parse(zero.out);
  REQUIRE(z["rows"].size() == 1);
  CHECK(double(z["rows"][0][4]) == doctest::Approx(0.75).epsilon(1e-14));
  const Run cplx = call({"spectrum", "--level", "1", "--v2", "-2", "--format", "json"});
  REQUIRE(cplx.code == 0);
  CHECK(json::parse(cplx.out)["summary"]["complex_roots"] == 2.0);
}

TEST_CASE("wavefunction") {
  const Run r = call({"wavefunction", "--level", "1", "--v2", "2", "--branch", "1", "--r-max", "3", "--samples",
                      "50", "--format", "json"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["rows"].size() == 50);
  CHECK(double(j["summary"]["ode_residual"]) <= 1e-6);
  CHECK(std::isfinite(double(j["summary"]["origin_condition"])));
  const sextic::Potential on = sextic::level_potential(0, {0.0, -3.0}, 1.0);
  char v2[32], v4[32];
  std::snprintf(v2, sizeof v2, "%.17g", on.v2);
  std::snprintf(v4, sizeof v4, "%.17g", on.v4);
  const Run b = call({"wavefunction", "--level", "0", "--v2", v2, "--v4", v4, "--branch", "1", "--format", "json"});
  REQUIRE(b.code == 0);
  const json jb = json::parse(b.out);
  CHECK(std::abs(double(jb["summary"]["origin_condition"])) <= 1e-9);
  CHECK(double(jb["summary"]["ode_residual"]) <= 1e-6);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"curves", "--level", "0", "--branches", "1..4", "--xi0", "-2:2:0.1"};
  const Run a = call(args);
  const Run b = call(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const std::string path = "test_cli_out.csv";
  auto with_out = args;
  with_out.insert(with_out.end(), {"--out", path});
  REQUIRE(call(with_out).code == 0);
  std::ifstream f(path);
  const std::string file((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  CHECK(file == a.out);
  std::remove(path.c_str());
}

TEST_CASE("verify") {
  const Run ok = call({"verify", "--suite", "qes"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("dictionary round trip") != std::string::npos);
  CHECK(call({"verify", "--suite", "heun", "--perturb-qpoly"}).code == 1);
}

TEST_CASE("record validation") {
  OutputRecord rec;
  rec.columns = {"a", "b"};
  rec.rows = {{1.0, 2.0}, {3.0}};
  CHECK_THROWS_AS(rec.validate(), std::logic_error);
  rec.rows = {{1.0, NAN}};
  CHECK_THROWS_AS(rec.validate(), std::logic_error);
}
