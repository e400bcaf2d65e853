#include "adjideal/errors.hpp"
#include "adjideal/fixtures.hpp"
#include "adjideal/resolution.hpp"
#include "adjideal/suite.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace adjideal;

namespace {
MonomialIdeal I(int dim, std::vector<Exponent> g) { return minimalize(dim, std::move(g)); }
TwistedIdeal at0(const TwistedIdeal& t) { return stalk(t, std::vector<Rational>(t.dim, 0)); }
MonomialIdeal base_part(const TwistedIdeal& t) {
  REQUIRE(t.sections.empty());
  return t.ideal;
}
}  // namespace

TEST_CASE("scene validation and Lelong numbers") {
  Fixture cross = make_fixture("cross2d");
  CHECK(validate_scene(cross.scene).valid);
  Scene bad = cross.scene;
  bad.psi.offset = 0;
  CHECK_FALSE(validate_scene(bad).valid);
  Chart id = identity_chart(3, {"D1", "D2", "D3"});
  Potential p;
  p.atoms.push_back({1, I(3, {{2, 0, 0}, {0, 1, 0}}), ""});
  CHECK(lelong(p, "D1", id) == 0);
  Potential q;
  q.atoms.push_back({Rational(3, 2), I(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), ""});
  CHECK(lelong(q, "D1", id) == 0);
  SncWeights w = snc_weights(cross.scene.psi, identity_chart(2, {"S1", "S2"}));
  CHECK(w.weights == RationalVector{1, 1});
  CHECK(w.offset == -1);
  CHECK_THROWS_AS(snc_weights(q, id), Error);
}

TEST_CASE("blow-up chart pullbacks and discrepancies") {
  Fixture cross = make_fixture("cross2d");
  CHECK(toric_k_rel(cross.cert) == cross.cert.k_rel);
  QDivisor psi = pullback_divisor(cross.cert, cross.scene.psi);
  CHECK(coefficient(psi, "E") == 2);
  CHECK(coefficient(psi, "S1") == 1);
  bool found = false;
  for (const auto& ch : cross.cert.charts) {
    SncWeights w = snc_weights(cross.scene.psi, ch);
    if (w.weights == RationalVector{2, 1}) found = true;
  }
  CHECK(found);
  // Tampered K_rel is rejected by the consistency gate.
  ResolutionCertificate bad = cross.cert;
  bad.k_rel["E"] = 2;
  CHECK_THROWS_AS(validate_certificate(bad, cross.scene), Error);
}

TEST_CASE("E/R split") {
  ERSplit cross = e_r_decomposition(make_fixture("cross2d").cert, make_fixture("cross2d").scene);
  CHECK(cross.R == QDivisor{{"E", 1}});
  Fixture d3 = make_fixture("delta3", Rational(1, 2));
  ERSplit d = e_r_decomposition(d3.cert, d3.scene);
  CHECK(coefficient(d.R, "E1") == 1);
  CHECK(coefficient(d.R, "E2") == 2);
  Fixture cusp = make_fixture("cusp");
  ERSplit c = e_r_decomposition(cusp.cert, cusp.scene);
  CHECK(c.R == QDivisor{{"E1", 1}, {"E2", 2}, {"E3", 3}});
}

TEST_CASE("pushforwards") {
  Fixture d3 = make_fixture("delta3", Rational(1, 2));
  TwistedIdeal t = pushforward_divisor(d3.scene, d3.cert, QDivisor{{"E1", -1}, {"E2", -3}});
  CHECK(oracle::agrees_on_box(base_part(t), [](const Exponent& a) { return a[0] + a[1] >= 1 && a[0] + a[1] + a[2] >= 3; }, 5));
  Fixture cusp = make_fixture("cusp");
  CHECK(at0(pushforward_divisor(cusp.scene, cusp.cert, QDivisor{{"E3", -2}})).ideal == I(3, {{1, 0, 0}, {0, 1, 0}}));
  Fixture cross = make_fixture("cross2d");
  CHECK(pushforward_divisor(cross.scene, cross.cert, QDivisor{{"E", -1}}).ideal == I(2, {{1, 0}, {0, 1}}));
}

TEST_CASE("cusp adjoint ideals") {
  Fixture cusp = make_fixture("cusp");
  CHECK(at0(adjoint_ideal_global(cusp.scene, cusp.cert, 1)).ideal == I(3, {{2, 0, 0}, {0, 1, 0}}));
  CHECK(at0(adjoint_ideal_global(cusp.scene, cusp.cert, 2)).ideal == I(3, {{1, 0, 0}, {0, 1, 0}}));
  TwistedIdeal j0 = adjoint_ideal_global(cusp.scene, cusp.cert, 0);
  CHECK(j0.render() == "⟨(z1^3-z2^2)⟩");
  AlgebraicAdjoints alg = el_hm_adjoint(cusp.scene, cusp.cert);
  REQUIRE(alg.el.has_value());
  CHECK(at0(*alg.el).ideal == I(3, {{2, 0, 0}, {0, 1, 0}}));
  CHECK(at0(alg.hm).ideal == I(3, {{2, 0, 0}, {0, 1, 0}}));
}

TEST_CASE("EL needs separated strict transforms") {
  Scene s;
  s.dim = 2;
  s.psi.offset = -1;
  s.psi.atoms.push_back({1, I(2, {{1, 1}}), ""});
  CHECK_THROWS_AS(compare_adjoints(s, identity_certificate(2)), Error);
}

TEST_CASE("comparison on the triple-plane example") {
  for (const Rational& c : {Rational(0), Rational(1, 2)}) {
    Fixture d3 = make_fixture("delta3", c);
    CompareReport r = compare_adjoints(d3.scene, d3.cert);
    CHECK(r.el_equal);
    CHECK(r.hm_equal);
  }
  Fixture d3 = make_fixture("delta3", Rational(1));
  CompareReport r = compare_adjoints(d3.scene, d3.cert);
  CHECK(r.el_in_j1);
  CHECK(r.hm_in_jtop);
  CHECK_FALSE(r.hm_equal);
  CHECK(r.zero_locus_meets_centres);
}

TEST_CASE("classification on spec examples") {
  Fixture cross = make_fixture("cross2d");
  CHECK(classify_pair(cross.scene, cross.cert).verdict == PairClass::lc);
  Scene half;
  half.dim = 1;
  half.psi.offset = -1;
  half.psi.atoms.push_back({Rational(1, 2), I(1, {{1}}), ""});
  CHECK(classify_pair(half, identity_certificate(1)).verdict == PairClass::klt);
  Fixture cusp = make_fixture("cusp");
  CHECK(classify_pair(cusp.scene, cusp.cert).verdict == PairClass::not_lc);
}

TEST_CASE("classification agrees with the discrepancy oracle") {
  suite::Rng rng(99);
  for (int t = 0; t < 60; ++t) {
    suite::Instance in = suite::random_boundary(rng);
    INFO(in.label);
    CHECK(oracle::from_engine(classify_pair(in.scene, in.cert).verdict) == oracle::classify(in.scene, in.cert));
  }
}

TEST_CASE("inversion of adjunction examples") {
  auto scene = [](Rational t) {
    Scene s;
    s.dim = 2;
    s.psi.offset = -1;
    s.psi.atoms.push_back({1, I(2, {{1, 0}}), ""});
    if (t != 0) s.psi.atoms.push_back({t, I(2, {{0, 1}}), ""});
    return s;
  };
  InversionReport half = inversion_check(scene(Rational(1, 2)), identity_certificate(2));
  CHECK(half.plt);
  CHECK(half.diff_klt);
  CHECK(half.consistent);
  InversionReport cross = inversion_check(scene(1), identity_certificate(2));
  CHECK_FALSE(cross.plt);
  CHECK_FALSE(cross.diff_klt);
  CHECK(cross.consistent);
  InversionReport line = inversion_check(scene(0), identity_certificate(2));
  CHECK(line.plt);
  CHECK(line.consistent);
}

TEST_CASE("connectedness") {
  for (const auto& name : fixture_names()) {
    Fixture f = make_fixture(name);
    CHECK(connectedness_check(f.scene, f.cert).all_connected);
  }
}

TEST_CASE("isometry on the blown-up cross") {
  Fixture cross = make_fixture("cross2d");
  for (const Exponent& f : {Exponent{0, 0}, Exponent{1, 0}, Exponent{1, 1}})
    for (int s : {1, 2}) CHECK(residue_isometry_check(cross.scene, cross.cert, f, s).equal);
  auto r = residue_isometry_check(cross.scene, cross.cert, {0, 0}, 2);
  CHECK(r.downstairs.render() == "pi^2*e");
}
