#include "adjideal/errors.hpp"
#include "adjideal/monomial.hpp"
#include "adjideal/suite.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace adjideal;

namespace {
MonomialIdeal I(int dim, std::vector<Exponent> g) { return minimalize(dim, std::move(g)); }
}  // namespace

TEST_CASE("minimalize drops divisible generators") {
  CHECK(I(2, {{2, 0}, {1, 1}, {3, 1}}).generators() == std::vector<Exponent>{{1, 1}, {2, 0}});
  CHECK(I(2, {}).is_zero());
  CHECK(I(2, {{0, 0}}).is_unit());
  CHECK_THROWS_AS(minimalize(2, {{1, 0}, {1, 0, 0}}), Error);
}

TEST_CASE("combine on spec examples") {
  CHECK(combine(I(2, {{1, 0}}), I(2, {{0, 1}}), Combine::intersection) == I(2, {{1, 1}}));
  CHECK(combine(I(2, {{1, 1}}), I(2, {{1, 0}}), Combine::colon) == I(2, {{0, 1}}));
  auto m = I(2, {{1, 0}, {0, 1}});
  CHECK(combine(m, m, Combine::product) == I(2, {{2, 0}, {1, 1}, {0, 2}}));
}

TEST_CASE("combine matches brute force membership") {
  suite::Rng rng(11);
  for (int t = 0; t < 150; ++t) {
    int n = suite::uniform_int(rng, 1, 3);
    auto a = suite::random_ideal(rng, n, 4, 3), b = suite::random_ideal(rng, n, 4, 3);
    CHECK(oracle::agrees_on_box(combine(a, b, Combine::sum), [&](const Exponent& x) { return a.contains(x) || b.contains(x); }, 7));
    CHECK(oracle::agrees_on_box(combine(a, b, Combine::intersection), [&](const Exponent& x) { return a.contains(x) && b.contains(x); }, 7));
    CHECK(oracle::agrees_on_box(combine(a, b, Combine::colon), [&](const Exponent& x) {
      for (const auto& g : b.generators()) {
        Exponent y = x;
        for (int i = 0; i < n; ++i) y[i] += g[i];
        if (!a.contains(y)) return false;
      }
      return true;
    }, 7));
    CHECK(oracle::agrees_on_box(combine(a, b, Combine::product), [&](const Exponent& x) {
      for (const auto& g : a.generators())
        for (const auto& h : b.generators()) {
          bool ok = true;
          for (int i = 0; i < n; ++i) ok = ok && g[i] + h[i] <= x[i];
          if (ok) return true;
        }
      return false;
    }, 7));
  }
}

TEST_CASE("annihilator quotient") {
  CHECK(annihilator_quotient(MonomialIdeal::unit(2), I(2, {{1, 1}})) == I(2, {{1, 1}}));
  CHECK(annihilator_quotient(I(2, {{1, 1}}), I(2, {{1, 1}})).is_unit());
  auto m = I(2, {{1, 0}, {0, 1}});
  CHECK(annihilator_quotient(m, I(2, {{2, 0}, {1, 1}, {0, 2}})) == m);
  CHECK_THROWS_AS(annihilator_quotient(I(2, {{1, 1}}), m), Error);
  CHECK(is_principal(annihilator_quotient(MonomialIdeal::unit(2), I(2, {{1, 1}}))));
}

TEST_CASE("radical, gcd, primes") {
  CHECK(radical(I(2, {{2, 1}})) == I(2, {{1, 1}}));
  CHECK(gcd_generators(I(2, {{2, 0}, {1, 1}})) == Exponent{1, 0});
  CHECK_THROWS_AS(gcd_generators(MonomialIdeal::zero(2)), Error);
  CHECK(minimal_primes(I(3, {{1, 1, 0}, {0, 0, 1}})) == std::vector<std::vector<int>>{{0, 2}, {1, 2}});
  suite::Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    int n = suite::uniform_int(rng, 1, 3);
    auto a = suite::random_ideal(rng, n, 4, 3);
    // x ∈ √a iff a high power of x lies in a.
    CHECK(oracle::agrees_on_box(radical(a), [&](const Exponent& x) {
      Exponent y = x;
      for (auto& v : y) v *= 4;
      return a.contains(y);
    }, 4));
  }
}

TEST_CASE("staircase minimal points") {
  auto got = staircase_minimal_points(3, {{{1, 1, 0}, 1}, {{1, 1, 1}, 3}});
  std::vector<Exponent> want{{1, 0, 2}, {0, 1, 2}, {2, 0, 1}, {1, 1, 1}, {0, 2, 1},
                             {3, 0, 0}, {2, 1, 0}, {1, 2, 0}, {0, 3, 0}};
  CHECK(got == minimalize(3, want));
  CHECK(got.generators().size() == want.size());
  CHECK(staircase_minimal_points(2, {}).is_unit());
  CHECK(staircase_minimal_points(2, {{{1, 0}, 2}}) == I(2, {{2, 0}}));
}

TEST_CASE("localize and restrict") {
  auto a = I(2, {{2, 0}, {1, 3}});
  CHECK(localize(a, {false, true}) == I(2, {{1, 0}}));
  CHECK(restrict_to(I(3, {{1, 0, 2}, {0, 1, 0}}), {0, 2}).dim() == 2);
}

TEST_CASE("rendering") {
  CHECK(render_ideal(I(2, {{2, 0}, {0, 1}})) == "⟨z1^2, z2⟩");
  CHECK(render_ideal(MonomialIdeal::unit(2)) == "⟨1⟩");
  CHECK(render_ideal(MonomialIdeal::zero(2)) == "0");
}
