#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "superspace/cli.hpp"

using namespace superspace;

namespace {
std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}
int run_cmd(const std::string& args) {
  const std::string cmd = std::string(SRADON_BINARY) + " " + args;
  const int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}
}  // namespace

TEST_CASE("polynomial literal parser") {
  Dims d{2, 2};
  auto p = cli::parse_polynomial("3/2*x1^2*xf1 + x2 - 1/3", d);
  auto expect = (SuperPolynomial::variable(2, 4, 0, 2) *
                 SuperPolynomial::fermion(2, 4, 0))
                    .scaled(Scalar(Rational(3, 2))) +
                SuperPolynomial::variable(2, 4, 1) -
                SuperPolynomial::constant(2, 4, Scalar(Rational(1, 3)));
  CHECK(p == expect);
  CHECK_THROWS_WITH_AS(cli::parse_polynomial("xf2*xf1", d),
                       doctest::Contains("ascending"), std::runtime_error);
  CHECK_THROWS_WITH_AS(cli::parse_polynomial("x9", d),
                       doctest::Contains("out of range"), std::runtime_error);
  CHECK_THROWS_AS(cli::parse_polynomial("x1 +", d), std::runtime_error);
  CHECK_THROWS_AS(cli::parse_polynomial("xf1^2", d), std::runtime_error);
}

TEST_CASE("reports are byte-identical across runs at fixed seed") {
  const std::string a = "cli_report_a.json", b = "cli_report_b.json";
  REQUIRE(run_cmd("verify --suite sl2 --suite distributions --dims 2,1 "
                  "--seed 42 --out " +
                  a + " > /dev/null") == 0);
  REQUIRE(run_cmd("verify --suite sl2 --suite distributions --dims 2,1 "
                  "--seed 42 --out " +
                  b + " > /dev/null") == 0);
  const std::string ca = slurp(a), cb = slurp(b);
  REQUIRE(!ca.empty());
  CHECK(ca == cb);
}

TEST_CASE("exit codes") {
  CHECK(run_cmd("verify --suite sl2 --dims 1,1 > /dev/null") == 0);
  // unsupported inversion case exits 0
  CHECK(run_cmd("verify --suite invert --dims 3,2 > /dev/null") == 0);
  // usage errors exit 2
  CHECK(run_cmd("verify --suite nosuch --dims 1,1 > /dev/null 2>&1") == 2);
  CHECK(run_cmd("pizzetti --dims 0,1 'xf2*xf1' > /dev/null 2>&1") == 2);
  CHECK(run_cmd("nosuchcommand > /dev/null 2>&1") == 2);
}

TEST_CASE("inversion records carry the full schema") {
  const std::string path = "cli_inversions.json";
  REQUIRE(run_cmd("verify --suite invert --dims 3,1 --sphere-degree 10 "
                  "--inversion-out " +
                  path + " > /dev/null") == 0);
  const std::string body = slurp(path);
  for (const char* key : {"\"case\"", "\"dims\"", "\"y\"", "\"recovered\"",
                          "\"reference\"", "\"abs_err\"", "\"rel_err\"",
                          "\"quadrature_budget\""})
    CHECK(body.find(key) != std::string::npos);
}
