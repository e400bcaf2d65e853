#include "adjideal/errors.hpp"
#include "adjideal/fixtures.hpp"
#include "adjideal/kernels.hpp"
#include "adjideal/numeric.hpp"
#include "adjideal/suite.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace adjideal;

namespace {
// Independent 1-D check: for the disc, R(ε) = ε·π·e·∫_0^∞ du/((1+u)(1+log(1+u))^{1+ε}) = π·e exactly.
double disc_closed() { return M_PI * M_E; }
}  // namespace

TEST_CASE("disc residue function is constant") {
  for (double eps : {0.4, 0.2, 0.1, 0.05}) {
    Estimate e = estimate_R({disc_snc_data(), {0}, 1, eps});
    REQUIRE(e.value.has_value());
    CHECK(std::abs(*e.value - disc_closed()) <= 3 * e.stderr_ + 1e-12);
  }
}

TEST_CASE("cross σ=2 at ε = 0.1 by an independent quadrature") {
  // R(ε) = ε π² e ∫∫ du1 du2 / (L² (1+log L)^{1+ε}), L = 1 + u1 + u2.
  // Polar in s = u1+u2: ∫_0^∞ s ds /((1+s)² (1+log(1+s))^{1+ε}); with
  // w = 1+log(1+s): ∫_1^∞ (1 − e^{1−w}) w^{−1−ε} dw = 1/ε − e·E_{1+ε}(1).
  double eps = 0.1;
  // e·E_p(1) = ∫_0^∞ e^{-t} (1+t)^{-p} dt, by Gauss–Laguerre-free trapezoid on a long range.
  double acc = 0, h = 1e-4;
  for (double t = 0; t < 60; t += h) {
    double f0 = std::exp(-t) * std::pow(1 + t, -1 - eps), f1 = std::exp(-t - h) * std::pow(1 + t + h, -1 - eps);
    acc += 0.5 * h * (f0 + f1);
  }
  double want = eps * M_PI * M_PI * M_E * (1 / eps - acc);
  Estimate e = estimate_R({cross_snc_data(), {0, 0}, 2, eps});
  REQUIRE(e.value.has_value());
  CHECK(*e.value == doctest::Approx(want).epsilon(1e-7));
}

TEST_CASE("divergence witnesses") {
  Estimate e = estimate_R({cross_snc_data(), {0, 0}, 1, 0.1});
  CHECK(e.diverged);
  CHECK_FALSE(e.witness.empty());
  SncData d;
  d.b = {1, 0};
  d.nu = {0, 1};
  CHECK(estimate_R({d, {0, 0}, 3, 0.1}).diverged);
  CHECK_THROWS_AS(estimate_R({cross_snc_data(), {0, 0}, 2, 0.0}), Error);
}

TEST_CASE("Monte Carlo agrees with the tensor rule") {
  IntegralSpec spec{cross_snc_data(), {1, 0}, 1, 0.2, 1, Sampler::tensor, 5, 40000};
  Estimate t = estimate_R(spec);
  spec.sampler = Sampler::monte_carlo;
  Estimate m = estimate_R(spec);
  REQUIRE(t.value.has_value());
  REQUIRE(m.value.has_value());
  CHECK(std::abs(*t.value - *m.value) <= 4 * m.stderr_);
  CHECK(m.stderr_ > 0);
  Estimate again = estimate_R(spec);
  CHECK(*again.value == *m.value);
  spec.seed = 6;
  CHECK(*estimate_R(spec).value != *m.value);
}

TEST_CASE("probe verdicts on spec examples") {
  CHECK(divergence_probe(cross_snc_data(), {0, 0}, 1).verdict == ProbeVerdict::divergent);
  CHECK(divergence_probe(cross_snc_data(), {0, 0}, 2).verdict == ProbeVerdict::convergent);
  SncData d;
  d.b = {1, 0};
  d.nu = {0, 1};
  for (int s = 0; s <= 2; ++s) CHECK(divergence_probe(d, {0, 0}, s).verdict == ProbeVerdict::divergent);
}

TEST_CASE("probe agrees with the integrability oracle") {
  suite::Rng rng(7);
  int conclusive = 0, total = 60;
  for (int t = 0; t < total; ++t) {
    SncData d = suite::random_snc(rng, 3);
    Exponent f = suite::random_exponent(rng, d.dim(), 3);
    int s = suite::uniform_int(rng, 0, 3);
    ProbeResult p = divergence_probe(d, f, s);
    if (p.verdict == ProbeVerdict::inconclusive) continue;
    ++conclusive;
    CHECK((p.verdict == ProbeVerdict::convergent) == oracle::member(d, f, s));
  }
  CHECK(conclusive >= total * 95 / 100);
}

TEST_CASE("residue norm verification") {
  NumericOptions o;
  CHECK(verify_residue_norm(disc_snc_data(), {0}, 1, o).pass);
  o.rel_tol = 0.02;
  NormCheck c = verify_residue_norm(cross_snc_data(), {0, 0}, 2, o);
  CHECK(c.pass);
  CHECK(c.deviation < 0.02);
  NormCheck z = verify_residue_norm(cross_snc_data(), {1, 0}, 2, o);
  CHECK(z.closed_form.is_zero());
  CHECK(z.pass);
  NormCheck inf = verify_residue_norm(cross_snc_data(), {0, 0}, 1, o);
  CHECK(inf.closed_form.is_infinite());
  CHECK(inf.pass);
  o.schedule = {0.1};
  CHECK_THROWS_AS(verify_residue_norm(disc_snc_data(), {0}, 1, o), Error);
}

TEST_CASE("x log x inequality") {
  CHECK(xlogx_check(1, 1, 0.5, {-1, -M_E, -10}).pass);
  std::vector<double> grid;
  for (double x = 0; x <= 6; x += 0.1) grid.push_back(-std::pow(10.0, x));
  XlogxReport r = xlogx_check(2, 0.1, 0.01, grid);
  CHECK(r.pass);
  CHECK(r.min_slack >= 0);
  CHECK_THROWS_AS(xlogx_check(1, 1, 0.5, {-0.5}), Error);
}

TEST_CASE("extension estimate") {
  NumericOptions o;
  ExtensionCheck c = verify_extension_estimate(cross_snc_data(), {{{0, 1}, Exponent{0, 0}}}, 2, o);
  CHECK(c.pass);
  CHECK(c.bound_value == doctest::Approx(M_PI * M_PI * M_E));
  ExtensionCheck z = verify_extension_estimate(cross_snc_data(), {{{0}, std::nullopt}, {{1}, std::nullopt}}, 1, o);
  CHECK(z.pass);
}

TEST_CASE("SIMD kernels match the scalar reference") {
  const kernels::KernelTable& s = kernels::scalar_table();
  const kernels::KernelTable* v = kernels::avx2_table();
  if (!v) {
    MESSAGE("no AVX2 on this host");
    return;
  }
  std::vector<double> x, ya, yb;
  for (int i = 0; i < 1001; ++i) x.push_back(-745 + 1.5 * i);
  x.push_back(0);
  x.push_back(-800);
  x.push_back(720);
  ya.resize(x.size());
  yb.resize(x.size());
  s.exp_v(x.data(), x.size(), ya.data());
  v->exp_v(x.data(), x.size(), yb.data());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (std::isinf(ya[i])) CHECK(std::isinf(yb[i]));
    else CHECK(std::abs(ya[i] - yb[i]) <= 4e-16 * ya[i] + 1e-300);
  }
  for (auto& t : x) t = std::exp(t / 4);
  s.log_v(x.data(), x.size(), ya.data());
  v->log_v(x.data(), x.size(), yb.data());
  for (std::size_t i = 0; i < x.size(); ++i) CHECK(std::abs(ya[i] - yb[i]) <= 1e-15 * std::max(1.0, std::abs(ya[i])));
  // Whole estimates agree under either table.
  kernels::select("scalar");
  Estimate a = estimate_R({cross_snc_data(), {1, 0}, 1, 0.1});
  ProbeResult pa = divergence_probe(cross_snc_data(), {0, 0}, 2);
  kernels::select("avx2");
  Estimate b = estimate_R({cross_snc_data(), {1, 0}, 1, 0.1});
  ProbeResult pb = divergence_probe(cross_snc_data(), {0, 0}, 2);
  kernels::reset();
  CHECK(*a.value == doctest::Approx(*b.value).epsilon(1e-13));
  REQUIRE(pa.log_integral.size() == pb.log_integral.size());
  for (std::size_t i = 0; i < pa.log_integral.size(); ++i)
    CHECK(pa.log_integral[i] == doctest::Approx(pb.log_integral[i]).epsilon(1e-12));
}
