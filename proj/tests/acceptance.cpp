// Acceptance criteria 1-10. One PASS/FAIL line per criterion; exit status is
// the number of failures. Expected values come either from the worked
// examples (transcribed below) or from test-side oracles.
#include "adjideal/fixtures.hpp"
#include "adjideal/numeric.hpp"
#include "adjideal/resolution.hpp"
#include "adjideal/suite.hpp"
#include "oracles.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace adjideal;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream notes;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) notes << "first failure: ";
      else notes << "; ";
      notes << what;
    }
    pass = pass && ok;
  }
};

int failures = 0;

void report(int n, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << n << ": " << title;
  std::string notes = o.notes.str();
  if (!notes.empty()) std::cout << " | " << notes;
  std::cout << std::endl;
  if (!o.pass) ++failures;
}

TwistedIdeal at0(const TwistedIdeal& t) { return stalk(t, std::vector<Rational>(t.dim, 0)); }

MonomialIdeal from_predicate(int dim, const std::function<bool(const Exponent&)>& pred, int bound) {
  return minimalize(dim, oracle::minimal_in_box(dim, pred, bound));
}

// --- criterion 1: brute force over hand-written charts of the Δ³ tower -----

struct HandChart {
  std::vector<Exponent> z;                // z_i as exponents of (y1, y2, y3)
  std::vector<std::string> divisor;       // divisor name of y_j ("" if none)
};

// First blow up {z1 = z2 = 0} (E1), then E1 ∩ {z3 = 0}' (E2).
const std::vector<HandChart>& delta3_charts() {
  static const std::vector<HandChart> charts{
      {{{1, 0, 0}, {1, 1, 0}, {1, 0, 1}}, {"E2", "S2", "Z3"}},
      {{{1, 0, 1}, {1, 1, 1}, {0, 0, 1}}, {"E1", "S2", "E2"}},
      {{{1, 1, 0}, {1, 0, 0}, {1, 0, 1}}, {"E2", "S1", "Z3"}},
      {{{1, 1, 1}, {1, 0, 1}, {0, 0, 1}}, {"E1", "S1", "E2"}},
  };
  return charts;
}

// z^a ∈ π_*(O(−Σ k_D D) · I(strata)), strata given as sets of divisor names.
bool in_pushforward(const Exponent& a, const std::map<std::string, int>& k,
                    const std::vector<std::set<std::string>>& strata) {
  for (const auto& ch : delta3_charts()) {
    std::map<std::string, int> excess;
    for (int j = 0; j < 3; ++j) {
      int e = 0;
      for (int i = 0; i < 3; ++i) e += a[i] * ch.z[i][j];
      const std::string& name = ch.divisor[j];
      int need = k.count(name) ? k.at(name) : 0;
      if (e < need) return false;
      excess[name] = e - need;
    }
    for (const auto& p : strata) {
      bool contained = true, vanishes = false;
      for (const auto& name : p) {
        if (!excess.count(name)) contained = false;
        else if (excess[name] >= 1) vanishes = true;
      }
      if (contained && !vanishes) return false;
    }
  }
  return true;
}

std::vector<std::set<std::string>> subsets(const std::vector<std::string>& comps, int size) {
  std::vector<std::set<std::string>> out;
  int n = static_cast<int>(comps.size());
  for (int mask = 0; mask < (1 << n); ++mask) {
    if (__builtin_popcount(mask) != size) continue;
    std::set<std::string> s;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) s.insert(comps[i]);
    out.push_back(s);
  }
  return out;
}

void criterion1(Outcome& o) {
  const std::vector<std::string> gamma{"S1", "S2", "E1"}, gamma_e2{"S1", "S2", "E1", "E2"};
  for (const Rational& c : {Rational(0), Rational(1, 2), Rational(1), Rational(3, 2), Rational(2)}) {
    std::string tag = "c=" + to_string(c) + ": ";
    Fixture f = make_fixture("delta3", c);
    bool nat = is_integer(c) && c >= 1;
    int fl = static_cast<int>(floor_of(c));
    int top = nat ? fl - 1 : fl;
    auto ideal = [&](const std::map<std::string, int>& k, const std::vector<std::set<std::string>>& strata) {
      return from_predicate(3, [&](const Exponent& a) { return in_pushforward(a, k, strata); }, 5);
    };
    MonomialIdeal hm = ideal({{"E2", fl}}, {}), el = ideal({{"E1", 1}, {"E2", fl}}, {});
    MonomialIdeal j0 = ideal({{"S1", 1}, {"S2", 1}, {"E1", 1}, {"E2", fl}}, {});
    MonomialIdeal j3 = ideal({{"E2", top}}, {});
    MonomialIdeal j2 = nat ? ideal({{"E2", top}}, subsets(gamma_e2, 3)) : ideal({{"E2", fl}}, {});
    MonomialIdeal j1 = nat ? ideal({{"E2", top}}, subsets(gamma_e2, 2)) : ideal({{"E2", fl}}, subsets(gamma, 2));

    AlgebraicAdjoints alg = el_hm_adjoint(f.scene, f.cert);
    o.require(alg.el && at0(*alg.el).ideal == el, tag + "EL");
    o.require(at0(alg.hm).ideal == hm, tag + "HM");
    const MonomialIdeal* want[] = {&j0, &j1, &j2, &j3};
    for (int s = 0; s <= 3; ++s)
      o.require(at0(adjoint_ideal_global(f.scene, f.cert, s)).ideal == *want[s], tag + "J_" + std::to_string(s));

    // m^c: exact off ℕ ∪ [0,1]; otherwise the ideal at m0 equals the one at 1/2.
    GlobalSetup g = global_setup(f.scene, f.cert);
    bool generic = !(nat || c <= 1);
    Rational mc = generic ? 1 - (c - fl) / 2 : Rational(1, 2);
    if (generic) {
      o.require(g.spectrum.m0 == mc, tag + "m^c = " + to_string(mc) + " vs m0 = " + to_string(g.spectrum.m0));
    } else {
      o.require(g.spectrum.m0 <= mc, tag + "m0 above 1/2");
      for (const Rational& m : {g.spectrum.m0, mc, Rational(3, 4), Rational(9, 10)})
        o.require(multiplier_ideal_global(f.scene, f.cert, m) == multiplier_ideal_global(f.scene, f.cert, mc),
                  tag + "I(m) not constant on [m0,1) at m=" + to_string(m));
    }
    o.require(multiplier_ideal_global(f.scene, f.cert, mc) != multiplier_ideal_global(f.scene, f.cert, 1),
              tag + "no jump at 1");
    std::vector<std::string> lc = g.lc_divisors;
    std::sort(lc.begin(), lc.end());
    std::vector<std::string> want_lc = nat ? std::vector<std::string>{"E1", "E2", "S1", "S2"}
                                           : std::vector<std::string>{"E1", "S1", "S2"};
    o.require(lc == want_lc, tag + "S̃^c");
    auto images = [&](int s) {
      std::vector<std::vector<int>> out;
      for (const auto& b : sigma_lc_centres_global(f.scene, f.cert, s).images) out.push_back(b.coords);
      std::sort(out.begin(), out.end());
      return out;
    };
    o.require(images(1) == std::vector<std::vector<int>>{{0}, {1}}, tag + "lc_1");
    o.require(images(2) == std::vector<std::vector<int>>{{0, 1}}, tag + "lc_2");
    o.require(images(3) == (nat ? std::vector<std::vector<int>>{{0, 1, 2}} : std::vector<std::vector<int>>{}),
              tag + "lc_3");
  }
  o.notes << (o.pass ? "EL, HM, J_0..J_3, m^c, S̃^c, lc_1..lc_3 for c in {0,1/2,1,3/2,2}" : "");
}

// --- criterion 2: cusp, against valuations of z1, z2 along E1, E2, E3 -------

void criterion2(Outcome& o) {
  Fixture f = make_fixture("cusp");
  GlobalSetup g = global_setup(f.scene, f.cert);
  const auto& jumps = g.spectrum.jumps;
  auto it = std::find(jumps.begin(), jumps.end(), Rational(1));
  o.require(it != jumps.end() && it != jumps.begin() && *(it - 1) == Rational(5, 6), "5/6 does not precede 1");
  // ord_{E1,E2,E3}(z1) = (1,1,2), ord(z2) = (1,2,3).
  auto ord = [](const Exponent& a, int e) {
    static const int v1[] = {1, 1, 2}, v2[] = {1, 2, 3};
    return a[0] * v1[e] + a[1] * v2[e];
  };
  auto base = [](const MonomialIdeal& m) {
    std::vector<Exponent> g;
    for (auto e : m.generators()) g.push_back({e[0], e[1], 0});
    return minimalize(3, g);
  };
  MonomialIdeal el = base(from_predicate(2, [&](const Exponent& a) { return ord(a, 0) >= 1 && ord(a, 1) >= 1 && ord(a, 2) >= 3; }, 4));
  MonomialIdeal hm = base(from_predicate(2, [&](const Exponent& a) { return ord(a, 2) >= 3; }, 4));
  MonomialIdeal j2 = base(from_predicate(2, [&](const Exponent& a) { return ord(a, 2) >= 2; }, 4));
  // O(−2E3)·I{p0,p1,p2}: at p0 = S̃ ∩ E3 a monomial must vanish to order 3 along E3.
  MonomialIdeal j1 = base(from_predicate(2, [&](const Exponent& a) {
    return ord(a, 2) >= 3 && (ord(a, 2) >= 3 || ord(a, 0) >= 1) && (ord(a, 2) >= 3 || ord(a, 1) >= 1);
  }, 4));
  o.require(j1 == minimalize(3, {{2, 0, 0}, {0, 1, 0}}), "oracle J_1 is not ⟨z1², z2⟩");
  o.require(j2 == minimalize(3, {{1, 0, 0}, {0, 1, 0}}), "oracle J_2 is not ⟨z1, z2⟩");
  AlgebraicAdjoints alg = el_hm_adjoint(f.scene, f.cert);
  o.require(alg.el && at0(*alg.el).ideal == el, "EL");
  o.require(at0(alg.hm).ideal == hm, "HM");
  o.require(el == j1, "EL ≠ J_1 in the oracle");
  o.require(at0(adjoint_ideal_global(f.scene, f.cert, 1)).ideal == j1, "J_1");
  o.require(at0(adjoint_ideal_global(f.scene, f.cert, 2)).ideal == j2, "J_2");
  o.require(classify_pair(f.scene, f.cert).verdict == PairClass::not_lc, "classify");
  o.require(oracle::classify(f.scene, f.cert) == oracle::Cls::not_lc, "discrepancy oracle");
  if (o.pass) o.notes << "jumps ... 5/6, 1; J_1 = EL = HM = ⟨z1², z2⟩; J_2 = ⟨z1, z2⟩; not-lc";
}

void criterion3(Outcome& o) {
  Fixture f = make_fixture("node");
  AlgebraicAdjoints alg = el_hm_adjoint(f.scene, f.cert);
  MonomialIdeal m = minimalize(3, {{1, 0, 0}, {0, 1, 0}});
  o.require(alg.el && at0(*alg.el).ideal == m, "EL is not the maximal ideal");
  o.require(at0(alg.hm).is_unit(), "HM is not the unit ideal");
  Classification c = classify_pair(f.scene, f.cert);
  o.require(c.verdict == PairClass::lc, "verdict " + to_string(c.verdict));
  o.require(oracle::classify(f.scene, f.cert) == oracle::Cls::lc, "discrepancy oracle");
  o.require(!at0(c.filtration.at(1)).is_unit(), "J_1 is the unit ideal, so the pair would be plt");
  if (o.pass) o.notes << "EL = ⟨z1, z2⟩, HM = ⟨1⟩, lc and not plt";
}

void criterion4(Outcome& o) {
  Fixture f = make_fixture("cross2d");
  o.require(multiplier_ideal_global(f.scene, f.cert, 1).ideal == minimalize(2, {{1, 1}}), "I(ψ)");
  o.require(guenancia_adjoint_snc(cross_snc_data()).is_unit(), "Guenancia adjoint");
  AlgebraicAdjoints alg = el_hm_adjoint(f.scene, f.cert);
  o.require(alg.el && alg.el->ideal == minimalize(2, {{1, 0}, {0, 1}}), "EL");
  CentreReport c2 = sigma_lc_centres_global(f.scene, f.cert, 2);
  o.require(c2.images.size() == 1 && c2.images[0].coords == std::vector<int>{0, 1}, "π(lc_2) ≠ {0}");
  // Upstairs: two distinct 2-centres p1, p2, one per chart.
  GlobalSetup g = global_setup(f.scene, f.cert);
  std::vector<std::size_t> with_point;
  for (std::size_t k = 0; k < f.cert.charts.size(); ++k)
    if (!lc_centres(g.charts[k], 2).empty()) with_point.push_back(k);
  o.require(with_point.size() == 2, "expected two upstairs 2-centres");
  if (with_point.size() != 2) return;
  MonomialIdeal j2 = adjoint_ideal_global(f.scene, f.cert, 2).ideal;
  int checked = 0;
  for (const auto& a : oracle::grid(2, 4)) {
    if (!j2.contains(a)) continue;
    std::vector<std::optional<Exponent>> germs;
    for (std::size_t k : with_point) {
      const Chart& ch = f.cert.charts[k];
      auto res = residue_restrict(g.charts[k], ch.pull(a), 2);
      germs.push_back(res.empty() ? std::nullopt : res.front().germ);
    }
    ++checked;
    o.require(germs[0] == germs[1], "f = " + render_monomial(a) + " separates p1, p2");
  }
  if (o.pass) o.notes << checked << " monomials of J_2 restrict equally to p1 and p2";
}

// --- criteria 5/6: random snc instances -------------------------------------

Rational oracle_m0(const SncData& d) {
  // Candidate crossings m = (k − b_i)/ν_i in (0,1); I(b + mν) from the floor formula.
  std::set<Rational> cand;
  for (int i = 0; i < d.dim(); ++i)
    if (d.nu[i] > 0)
      for (long k = -10; k <= 10; ++k) {
        Rational m = (Rational(k) - d.b[i]) / d.nu[i];
        if (m > 0 && m < 1) cand.insert(m);
      }
  auto ideal_at = [&](const Rational& m) {
    return from_predicate(d.dim(), [&](const Exponent& a) {
      for (int i = 0; i < d.dim(); ++i)
        if (!(Rational(a[i]) > d.b[i] + m * d.nu[i] - 1)) return false;
      return true;
    }, 6);
  };
  Rational best = 0, prev = 0;
  for (const auto& m : cand) {
    if (ideal_at(m) != ideal_at((prev + m) / 2)) best = m;
    prev = m;
  }
  return best;
}

void criteria5and6(Outcome& o5, Outcome& o6) {
  suite::Rng rng(20261014);
  const int instances = 500;
  long residue_checks = 0;
  for (int t = 0; t < instances; ++t) {
    SncData d = suite::random_snc(rng, 4, 6);
    std::string tag = "instance " + std::to_string(t) + ": ";
    auto S = d.lc_set();
    int s = static_cast<int>(S.size());
    Rational m0 = oracle_m0(d);
    o5.require(jumping_spectrum(d).m0 == m0, tag + "m0");
    std::vector<MonomialIdeal> J;
    for (int sigma = 0; sigma <= s; ++sigma) {
      J.push_back(adjoint_ideal_snc(d, sigma));
      o5.require(oracle::agrees_on_box(J.back(), [&](const Exponent& a) { return oracle::member(d, a, sigma); }, 5),
                 tag + "J_" + std::to_string(sigma) + " vs integrability oracle");
      o6.require(J.back() == adjoint_ideal_by_membership(d, sigma), tag + "two paths differ at σ=" + std::to_string(sigma));
    }
    for (int sigma = 0; sigma < s; ++sigma) o5.require(J[sigma + 1].contains(J[sigma]), tag + "filtration");
    o5.require(J[s] == multiplier_ideal_snc(combined_weights(d, m0)), tag + "J_|S| ≠ I(b + m0 ν)");
    o5.require(J[0] == multiplier_ideal_snc(combined_weights(d, 1)), tag + "J_0 ≠ I(b + ν)");
    // Kernel of restriction.
    auto pts = oracle::grid(d.dim(), 4);
    for (int sigma = 1; sigma <= s; ++sigma)
      for (const auto& a : pts) {
        if (!J[sigma].contains(a)) continue;
        auto res = residue_restrict(d, a, sigma);
        bool zero = std::none_of(res.begin(), res.end(), [](const ResidueDatum& r) { return r.germ.has_value(); });
        o5.require(zero == J[sigma - 1].contains(a), tag + "kernel at " + to_string(a));
        ++residue_checks;
      }
    // Siu identity, coordinate by coordinate.
    SiuDecomposition siu = siu_decompose(d);
    for (int i = 0; i < d.dim(); ++i) {
      bool in_s = std::find(S.begin(), S.end(), i) != S.end();
      o5.require(siu.residual.weights[i] + siu.s0[i] + (in_s ? 1 : 0) == d.b[i] + d.nu[i], tag + "Siu identity");
    }
    // Extension then residue returns the data (germ 1 on every other centre).
    for (int sigma = 1; sigma <= s; ++sigma) {
      std::vector<ResidueInput> data;
      bool on = true;
      for (const auto& c : lc_centres(d, sigma)) {
        Exponent g(d.dim(), 0);
        for (int i = 0; i < d.dim(); ++i)
          if (std::find(S.begin(), S.end(), i) == S.end()) g[i] = static_cast<int>(std::max<std::int64_t>(0, floor_of(d.lambda(i))));
        data.push_back({c, on ? std::optional<Exponent>(g) : std::nullopt});
        on = !on;
      }
      Extension ext = extension_from_residues(d, data, sigma);
      std::map<LcCentre, std::optional<Exponent>> got;
      for (const auto& m : ext.f)
        for (const auto& r : residue_restrict(d, m, sigma))
          if (r.germ) got[r.centre] = r.germ;
      for (const auto& in : data) {
        auto it = got.find(in.centre);
        o5.require((it == got.end() ? std::optional<Exponent>() : it->second) == in.germ, tag + "extension∘residue");
      }
    }
  }
  if (o5.pass) o5.notes << instances << " instances, " << residue_checks << " restriction checks, exact";
  if (o6.pass) o6.notes << instances << " instances, every σ";
}

void criterion7(Outcome& o) {
  suite::Rng rng(7);
  int conclusive = 0, agree = 0, contradictions = 0;
  const int total = 200;
  for (int t = 0; t < total; ++t) {
    SncData d = suite::random_snc(rng, 3, 6);
    Exponent f = suite::random_exponent(rng, d.dim(), 3);
    int sigma = suite::uniform_int(rng, 0, 3);
    bool member = oracle::member(d, f, sigma);
    o.require(member == membership_J(d, f, sigma), "oracle and engine membership differ");
    ProbeResult p = divergence_probe(d, f, sigma);
    if (p.verdict == ProbeVerdict::inconclusive) continue;
    ++conclusive;
    if ((p.verdict == ProbeVerdict::convergent) == member) ++agree;
    else ++contradictions;
  }
  o.require(agree * 100 >= 95 * total, "agreement " + std::to_string(agree) + "/" + std::to_string(total));
  o.require(contradictions == 0, std::to_string(contradictions) + " contradictions");
  const double pie = M_PI * M_E;
  double worst = 0;
  for (double eps : {0.4, 0.2, 0.1, 0.05}) {
    Estimate e = estimate_R({disc_snc_data(), {0}, 1, eps});
    double dev = std::abs(*e.value - pie);
    o.require(dev <= 3 * e.stderr_, "1-variable R(" + std::to_string(eps) + ") off by " + std::to_string(dev));
    worst = std::max(worst, dev / std::max(e.stderr_, 1e-300));
  }
  NumericOptions opt;
  opt.rel_tol = 0.02;
  NormCheck c = verify_residue_norm(cross_snc_data(), {0, 0}, 2, opt);
  double target = M_PI * M_PI * M_E, rel = std::abs(c.limit - target) / target;
  o.require(rel <= 0.02, "cross limit deviation " + std::to_string(rel));
  if (o.pass)
    o.notes << "probe " << agree << "/" << total << " agree (" << conclusive << " conclusive, 0 contradictions); "
            << "disc within " << worst << " SE of πe; cross limit " << c.limit << " vs π²e = " << target
            << " (" << 100 * rel << "%)";
}

void criterion8(Outcome& o) {
  Fixture f = make_fixture("cross2d");
  // A further blow-up at p1 = S1' ∩ E on top of the fixture's blow-up.
  ResolutionCertificate more = f.cert;
  for (const auto& ch : more.charts)
    if (ch.coord_of("S1") && ch.coord_of("E")) {
      more = blowup(more, ch.id, {std::min(*ch.coord_of("S1"), *ch.coord_of("E")), std::max(*ch.coord_of("S1"), *ch.coord_of("E"))}, "E'");
      break;
    }
  const double pe = M_PI * M_PI * M_E;
  struct Want {
    Exponent f;
    int sigma;
    double value;  // −1 for divergent
  };
  const std::vector<Want> want{{{0, 0}, 1, -1}, {{0, 0}, 2, pe}, {{1, 0}, 1, pe},
                               {{1, 0}, 2, 0}, {{1, 1}, 1, 0}, {{1, 1}, 2, 0}};
  for (const auto* cert : {&f.cert, &more})
    for (const auto& w : want) {
      IsometryReport r = residue_isometry_check(f.scene, *cert, w.f, w.sigma);
      std::string tag = "f=" + render_monomial(w.f) + " σ=" + std::to_string(w.sigma);
      o.require(r.equal, tag + ": " + r.downstairs.render() + " vs " + r.upstairs.render());
      if (w.value < 0) o.require(r.downstairs.is_infinite(), tag + " should diverge");
      else o.require(!r.downstairs.is_infinite() && std::abs(r.downstairs.value() - w.value) <= 1e-12 * pe, tag + " value");
    }
  if (o.pass) o.notes << "6 cases on the blown-up cross and on a further blow-up; exact equality";
}

void criterion9(Outcome& o) {
  struct Case {
    std::string name;
    SncData d;
    std::vector<ResidueInput> data;
    int sigma;
  };
  const std::vector<Case> cases{
      {"cross σ=2 g=1", cross_snc_data(), {{{0, 1}, Exponent{0, 0}}}, 2},
      {"cross σ=1 g=1 on {z2=0}", cross_snc_data(), {{{0}, std::nullopt}, {{1}, Exponent{0, 0}}}, 1},
      {"cross σ=1 zero data", cross_snc_data(), {{{0}, std::nullopt}, {{1}, std::nullopt}}, 1},
      {"disc σ=1 g=1", disc_snc_data(), {{{0}, Exponent{0}}}, 1},
  };
  int n = 0;
  for (Sampler s : {Sampler::tensor, Sampler::monte_carlo})
    for (const auto& c : cases) {
      NumericOptions opt;
      opt.sampler = s;
      opt.seed = 11;
      ExtensionCheck r = verify_extension_estimate(c.d, c.data, c.sigma, opt);
      o.require(r.pass, c.name + " (" + to_string(s) + "): " + r.failure);
      ++n;
    }
  if (o.pass) o.notes << n << " case/sampler pairs satisfy R(ε) ≤ C·R(0) + 3 SE";
}

Scene boundary(int n, const std::vector<Rational>& d) {
  Scene s;
  s.dim = n;
  s.psi.offset = -1;
  for (int i = 0; i < n; ++i) {
    if (d[i] == 0) continue;
    Exponent e(n, 0);
    e[i] = 1;
    s.psi.atoms.push_back({d[i], MonomialIdeal::principal(e), ""});
  }
  return s;
}

void criterion10(Outcome& o) {
  std::vector<suite::Instance> inst;
  for (const auto& name : fixture_names()) {
    Fixture f = make_fixture(name);
    inst.push_back({f.scene, f.cert, name});
  }
  suite::Rng rng(1010);
  for (int k = 0; k < 100; ++k) inst.push_back(suite::random_boundary(rng));
  for (const auto& in : inst) {
    auto engine = classify_pair(in.scene, in.cert).verdict;
    o.require(oracle::from_engine(engine) == oracle::classify(in.scene, in.cert), in.label + ": J-verdict " + to_string(engine));
    o.require(classify_by_discrepancy(in.scene, in.cert) == engine, in.label + ": engine discrepancy");
  }
  int families = 0;
  auto check_inv = [&](const Scene& s, const ResolutionCertificate& cert, bool diff_klt_expected, const std::string& tag) {
    InversionReport r = inversion_check(s, cert);
    bool plt = oracle::classify(s, cert) == oracle::Cls::plt || oracle::classify(s, cert) == oracle::Cls::klt;
    o.require(r.plt == plt, tag + ": plt");
    o.require(r.diff_klt == diff_klt_expected, tag + ": Diff klt");
    o.require(r.plt == r.diff_klt && r.consistent, tag + ": biconditional");
    ++families;
  };
  for (int k = 0; k <= 6; ++k) {
    Rational t(k, 6);
    check_inv(boundary(2, {1, t}), identity_certificate(2), t < 1, "{z1=0}+" + to_string(t) + "{z2=0}");
  }
  Fixture cross = make_fixture("cross2d");
  check_inv(boundary(2, {1, 1}), identity_certificate(2), false, "cross");
  check_inv(cross.scene, cross.cert, false, "cross blown up");
  for (int n = 1; n <= 3; ++n) {
    std::vector<Rational> d(n, 0);
    d[0] = 1;
    check_inv(boundary(n, d), identity_certificate(n), true, "{z1=0} in dimension " + std::to_string(n));
  }
  if (o.pass) o.notes << inst.size() << " pairs classified; " << families << " inversion instances";
}

}  // namespace

int main() {
  report(1, "triple-plane example: adjoint ideals, m^c, S̃^c, lc centres", criterion1);
  report(2, "cusp: spectrum, stalks, classification", criterion2);
  report(3, "node: EL, HM, lc not plt", criterion3);
  report(4, "cross: I(ψ), Guenancia vs EL, lc_2 image, diagonal obstruction", criterion4);
  Outcome o5, o6;
  try {
    criteria5and6(o5, o6);
  } catch (const std::exception& e) {
    o5.require(false, std::string("exception: ") + e.what());
    o6.require(false, "not reached");
  }
  for (auto [n, title, o] : {std::tuple<int, const char*, Outcome*>{5, "filtration, exactness, extension, Siu identity", &o5},
                             {6, "two-path equality", &o6}}) {
    std::cout << (o->pass ? "PASS" : "FAIL") << " criterion " << n << ": " << title << " | " << o->notes.str() << std::endl;
    if (!o->pass) ++failures;
  }
  report(7, "numeric-symbolic agreement", criterion7);
  report(8, "residue isometry under blow-up", criterion8);
  report(9, "extension estimate", criterion9);
  report(10, "classification vs discrepancies; inversion of adjunction", criterion10);
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures;
}
