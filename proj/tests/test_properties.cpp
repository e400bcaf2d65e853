// Randomized invariant suites, one test case per suite.
#include "adjideal/suite.hpp"

#include <doctest.h>

using namespace adjideal;

namespace {
void run_suite(const std::string& name) {
  for (const auto& r : suite::run(name, {})) {
    INFO(r.suite << "/" << r.name << " seed " << r.seed << ": " << r.detail);
    CHECK(r.pass);
    CHECK(r.cases > 0);
  }
}
}  // namespace

TEST_CASE("monomial invariants") { run_suite("monomial"); }
TEST_CASE("scene invariants") { run_suite("scene"); }
TEST_CASE("snc invariants") { run_suite("snc"); }
TEST_CASE("resolution invariants") { run_suite("resolution"); }
TEST_CASE("numeric invariants") { run_suite("numeric"); }
TEST_CASE("worked examples") { run_suite("fixtures"); }

TEST_CASE("a failing seed reproduces") {
  suite::Options o;
  o.seed = 12345;
  o.scale = 0.2;
  auto a = suite::run("snc", o), b = suite::run("snc", o);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].seed == b[i].seed);
    CHECK(a[i].cases == b[i].cases);
  }
}
