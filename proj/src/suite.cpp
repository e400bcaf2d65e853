#include "adjideal/suite.hpp"

#include "adjideal/errors.hpp"
#include "adjideal/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>

namespace adjideal::suite {

int uniform_int(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rational random_rational(Rng& rng, int max_den, const Rational& lo, const Rational& hi) {
  int den = uniform_int(rng, 1, max_den);
  long a = ceil_of(lo * den), b = floor_of(hi * den);
  if (a > b) return lo;
  return Rational(a + static_cast<long>(rng() % static_cast<std::uint64_t>(b - a + 1)), den);
}

namespace {

Rational random_pole(Rng& rng, int max_den) {
  int den = uniform_int(rng, 1, max_den);
  return Rational(uniform_int(rng, 1, 3 * den), den);
}

}  // namespace

SncData random_snc(Rng& rng, int max_dim, int max_den) {
  int n = uniform_int(rng, 1, max_dim);
  SncData d;
  d.b.resize(n);
  d.nu.resize(n);
  int forced = uniform_int(rng, 0, n - 1);
  for (int i = 0; i < n; ++i) {
    int kind = i == forced ? 0 : uniform_int(rng, 0, 2);
    if (kind == 0) {
      d.nu[i] = random_pole(rng, max_den);
      d.b[i] = Rational(uniform_int(rng, 1, 3)) - d.nu[i];
    } else if (kind == 1) {
      d.nu[i] = random_pole(rng, max_den);
      Rational lambda;
      do {
        lambda = random_rational(rng, max_den, 0, 3);
      } while (is_integer(lambda) && lambda >= 1);
      d.b[i] = lambda - d.nu[i];
    } else {
      d.nu[i] = 0;
      d.b[i] = random_rational(rng, max_den, 0, 3);
    }
  }
  d.offset_psi = uniform_int(rng, 0, 1) ? Rational(-1) : -(1 + random_rational(rng, max_den, 0, 2));
  d.offset_phi = random_rational(rng, max_den, -1, 1);
  return d;
}

Exponent random_exponent(Rng& rng, int dim, int max_entry) {
  Exponent a(dim);
  for (auto& x : a) x = uniform_int(rng, 0, max_entry);
  return a;
}

MonomialIdeal random_ideal(Rng& rng, int dim, int max_gens, int max_entry) {
  std::vector<Exponent> gens;
  int k = uniform_int(rng, 1, max_gens);
  for (int i = 0; i < k; ++i) gens.push_back(random_exponent(rng, dim, max_entry));
  return minimalize(dim, gens);
}

Scene scene_from_snc(const SncData& d) {
  Scene s;
  s.dim = d.dim();
  for (int i = 0; i < s.dim; ++i) {
    Exponent e(s.dim, 0);
    e[i] = 1;
    if (d.b[i] != 0) s.phi_L.atoms.push_back({d.b[i], MonomialIdeal::principal(e), ""});
    if (d.nu[i] != 0) s.psi.atoms.push_back({d.nu[i], MonomialIdeal::principal(e), ""});
  }
  s.phi_L.offset = d.offset_phi;
  s.psi.offset = d.offset_psi;
  return s;
}

namespace {

std::vector<std::string> coordinate_names(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("D" + std::to_string(i + 1));
  return names;
}

ResolutionCertificate random_blowups(Rng& rng, ResolutionCertificate cert, int count) {
  for (int k = 0; k < count; ++k) {
    const Chart& ch = cert.charts[uniform_int(rng, 0, static_cast<int>(cert.charts.size()) - 1)];
    int n = ch.dim();
    std::vector<int> coords(n);
    for (int i = 0; i < n; ++i) coords[i] = i;
    std::shuffle(coords.begin(), coords.end(), rng);
    coords.resize(uniform_int(rng, 2, n));
    std::sort(coords.begin(), coords.end());
    cert = blowup(cert, ch.id, coords, "E" + std::to_string(k + 1));
  }
  return cert;
}

}  // namespace

Instance random_boundary(Rng& rng, int max_dim, int max_den) {
  Instance inst;
  int n = uniform_int(rng, 2, max_dim);
  inst.scene.dim = n;
  inst.scene.psi.offset = -1;
  std::ostringstream label;
  label << "Δ=(";
  for (int i = 0; i < n; ++i) {
    int r = uniform_int(rng, 0, 9);
    Rational d;
    if (r == 0)
      d = random_rational(rng, max_den, Rational(7, 6), 2);
    else if (r <= 3)
      d = 1;
    else if (r == 4)
      d = 0;
    else
      d = random_rational(rng, max_den, 0, 1);
    label << (i ? "," : "") << to_string(d);
    Exponent e(n, 0);
    e[i] = 1;
    if (d != 0) inst.scene.psi.atoms.push_back({d, MonomialIdeal::principal(e), ""});
  }
  int blowups = uniform_int(rng, 0, 2);
  label << ") blow-ups=" << blowups;
  inst.cert = random_blowups(rng, identity_certificate(n, coordinate_names(n)), blowups);
  inst.label = label.str();
  return inst;
}

Instance random_comparison(Rng& rng) {
  Instance inst;
  int n = uniform_int(rng, 2, 3);
  inst.scene.dim = n;
  std::vector<int> coords(n);
  for (int i = 0; i < n; ++i) coords[i] = i;
  std::shuffle(coords.begin(), coords.end(), rng);
  int s_size = uniform_int(rng, 1, n - 1);
  std::vector<int> S(coords.begin(), coords.begin() + s_size), free(coords.begin() + s_size, coords.end());
  std::sort(S.begin(), S.end());
  std::sort(free.begin(), free.end());
  for (int i : S) {
    Exponent e(n, 0);
    e[i] = 1;
    inst.scene.psi.atoms.push_back({1, MonomialIdeal::principal(e), ""});
  }
  inst.scene.psi.offset = -1;
  static const std::vector<Rational> cs{0, Rational(1, 2), 1, Rational(3, 2), 2, Rational(5, 3), Rational(7, 3)};
  Rational c = cs[uniform_int(rng, 0, static_cast<int>(cs.size()) - 1)];
  inst.scene.c = c;
  ResolutionCertificate cert = identity_certificate(n, coordinate_names(n));
  std::ostringstream label;
  label << "n=" << n << " S=" << to_string(Exponent(S.begin(), S.end())) << " c=" << to_string(c);
  int kind = free.size() >= 2 ? uniform_int(rng, 0, 1) : 0;
  MonomialIdeal a;
  if (kind == 0) {
    Exponent e(n, 0);
    for (int j : free) e[j] = uniform_int(rng, 0, 2);
    if (std::all_of(e.begin(), e.end(), [](int x) { return x == 0; })) e[free[0]] = 1;
    a = MonomialIdeal::principal(e);
  } else {
    Exponent e1(n, 0), e2(n, 0);
    e1[free[0]] = 1;
    e2[free[1]] = 1;
    a = minimalize(n, {e1, e2});
    cert = blowup(cert, "id", {free[0], free[1]}, "E1");
  }
  // EL needs the strict transforms of S separated.
  if (S.size() >= 2) cert = blowup(cert, cert.charts.front().id, S, "E_S");
  label << " a=" << render_ideal(a);
  if (c != 0) inst.scene.phi_L.atoms.push_back({c, a, ""});
  inst.cert = cert;
  inst.label = label.str();
  return inst;
}

std::uint64_t derive_seed(std::uint64_t master, const std::string& check) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : check) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return master ^ h;
}

std::vector<std::string> suite_names() { return {"monomial", "scene", "snc", "resolution", "numeric", "fixtures"}; }

namespace {

struct Runner {
  const Options& opt;
  std::vector<CheckResult>& out;
  std::string suite;

  long count(long base) const { return std::max<long>(1, static_cast<long>(std::lround(base * opt.scale))); }

  // body sets detail on failure and returns the number of cases run.
  void check(const std::string& name, const std::function<bool(Rng&, long&, std::string&)>& body) {
    CheckResult r;
    r.suite = suite;
    r.name = name;
    r.seed = derive_seed(opt.seed, suite + "/" + name);
    Rng rng(r.seed);
    try {
      r.pass = body(rng, r.cases, r.detail);
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    out.push_back(r);
  }
};

std::vector<Exponent> grid(int dim, int bound) {
  std::vector<Exponent> pts;
  Exponent a(dim, 0);
  while (true) {
    pts.push_back(a);
    int i = 0;
    while (i < dim && ++a[i] > bound) a[i++] = 0;
    if (i == dim) break;
  }
  return pts;
}

MonomialIdeal union_ideal(int dim, const std::vector<std::vector<int>>& centres) {
  MonomialIdeal acc = MonomialIdeal::unit(dim);
  for (const auto& p : centres) acc = combine(acc, MonomialIdeal::coordinate_prime(dim, p), Combine::intersection);
  return acc;
}

// --- monomial -------------------------------------------------------------

void monomial_suite(Runner& r) {
  r.check("minimalize-idempotent", [&](Rng& rng, long& cases, std::string& detail) {
    for (long k = 0; k < r.count(300); ++k, ++cases) {
      int n = uniform_int(rng, 1, 4);
      MonomialIdeal i = random_ideal(rng, n, 6, 4);
      if (minimalize(n, i.generators()) != i) {
        detail = render_ideal(i);
        return false;
      }
    }
    return true;
  });
  r.check("combine-laws", [&](Rng& rng, long& cases, std::string& detail) {
    for (long k = 0; k < r.count(300); ++k, ++cases) {
      int n = uniform_int(rng, 1, 4);
      MonomialIdeal a = random_ideal(rng, n, 4, 3), b = random_ideal(rng, n, 4, 3), c = random_ideal(rng, n, 4, 3);
      for (Combine op : {Combine::sum, Combine::product, Combine::intersection}) {
        if (combine(a, b, op) != combine(b, a, op) ||
            combine(combine(a, b, op), c, op) != combine(a, combine(b, c, op), op)) {
          detail = render_ideal(a) + " " + render_ideal(b) + " " + render_ideal(c);
          return false;
        }
      }
    }
    return true;
  });
  r.check("colon-adjunction", [&](Rng& rng, long& cases, std::string& detail) {
    for (long k = 0; k < r.count(300); ++k, ++cases) {
      int n = uniform_int(rng, 1, 4);
      MonomialIdeal i = random_ideal(rng, n, 5, 4), j = random_ideal(rng, n, 5, 3), kk = random_ideal(rng, n, 5, 4);
      bool lhs = combine(i, j, Combine::colon).contains(kk);
      bool rhs = i.contains(combine(kk, j, Combine::product));
      if (lhs != rhs) {
        detail = render_ideal(i) + " : " + render_ideal(j) + " vs " + render_ideal(kk);
        return false;
      }
    }
    return true;
  });
  r.check("annihilator-maximal", [&](Rng& rng, long& cases, std::string& detail) {
    for (long k = 0; k < r.count(200); ++k, ++cases) {
      int n = uniform_int(rng, 1, 3);
      MonomialIdeal i = random_ideal(rng, n, 3, 3);
      MonomialIdeal j = combine(combine(i, random_ideal(rng, n, 3, 2), Combine::product),
                                combine(i, random_ideal(rng, n, 3, 2), Combine::product), Combine::sum);
      MonomialIdeal ann = annihilator_quotient(i, j);
      if (!j.contains(combine(ann, i, Combine::product))) {
        detail = "Ann·I ⊄ J for " + render_ideal(i);
        return false;
      }
      for (const auto& m : grid(n, 4)) {
        bool kills = j.contains(combine(MonomialIdeal::principal(m), i, Combine::product));
        if (kills && !ann.contains(m)) {
          detail = "missing " + render_monomial(m) + " in Ann(" + render_ideal(i) + "/" + render_ideal(j) + ")";
          return false;
        }
      }
    }
    return true;
  });
  r.check("staircase-brute-force", [&](Rng& rng, long& cases, std::string& detail) {
    for (long k = 0; k < r.count(200); ++k, ++cases) {
      int n = uniform_int(rng, 1, 3);
      std::vector<LinearConstraint> cons;
      int m = uniform_int(rng, 0, 3);
      for (int t = 0; t < m; ++t) cons.push_back({random_exponent(rng, n, 2), uniform_int(rng, -1, 4)});
      MonomialIdeal got = staircase_minimal_points(n, cons);
      const auto& g = got.generators();
      for (std::size_t x = 0; x < g.size(); ++x)
        for (std::size_t y = 0; y < g.size(); ++y)
          if (x != y && divides(g[x], g[y])) {
            detail = "comparable generators";
            return false;
          }
      for (const auto& a : grid(n, 6)) {
        bool ok = true;
        for (const auto& c : cons) {
          long dot = 0;
          for (int i = 0; i < n; ++i) dot += static_cast<long>(c.row[i]) * a[i];
          ok = ok && dot >= c.bound;
        }
        if (ok != got.contains(a)) {
          detail = "mismatch at " + to_string(a);
          return false;
        }
      }
    }
    return true;
  });
}

// --- scene ----------------------------------------------------------------

void scene_suite(Runner& r) {
  r.check("lelong-linear", [&](Rng& rng, long& cases, std::string& detail) {
    for (long k = 0; k < r.count(200); ++k, ++cases) {
      int n = uniform_int(rng, 1, 3);
      Chart ch = identity_chart(n, coordinate_names(n));
      Potential p, q;
      for (int t = 0; t < 2; ++t) {
        p.atoms.push_back({random_rational(rng, 6, 0, 3), random_ideal(rng, n, 3, 3), ""});
        q.atoms.push_back({random_rational(rng, 6, 0, 3), random_ideal(rng, n, 3, 3), ""});
      }
      Potential pq = p;
      pq.atoms.insert(pq.atoms.end(), q.atoms.begin(), q.atoms.end());
      Rational s = random_rational(rng, 6, 0, 4);
      Potential ps = p;
      for (auto& a : ps.atoms) a.coeff *= s;
      for (int i = 0; i < n; ++i) {
        std::string d = "D" + std::to_string(i + 1);
        if (lelong(pq, d, ch) != lelong(p, d, ch) + lelong(q, d, ch) || lelong(ps, d, ch) != s * lelong(p, d, ch)) {
          detail = "divisor " + d;
          return false;
        }
      }
    }
    return true;
  });
  r.check("snc-weights-roundtrip", [&](Rng& rng, long& cases, std::string& detail) {
    for (long k = 0; k < r.count(200); ++k, ++cases) {
      int n = uniform_int(rng, 1, 4);
      SncWeights w;
      for (int i = 0; i < n; ++i) w.weights.push_back(random_rational(rng, 6, -2, 3));
      w.offset = random_rational(rng, 6, -3, 1);
      SncWeights back = snc_weights(potential_from_weights(w), identity_chart(n, coordinate_names(n)));
      if (back.weights != w.weights || back.offset != w.offset) {
        detail = "round trip changed weights";
        return false;
      }
    }
    return true;
  });
  r.check("fixtures-validate", [&](Rng&, long& cases, std::string& detail) {
    for (const auto& name : fixture_names()) {
      ++cases;
      Fixture f = make_fixture(name);
      ValidationReport v = validate_scene(f.scene);
      if (!v.valid) {
        detail = name + ": " + (v.violations.empty() ? "" : v.violations.front());
        return false;
      }
    }
    return true;
  });
}

// --- snc ------------------------------------------------------------------

bool same_residues(const std::vector<ResidueDatum>& got, const std::vector<ResidueInput>& want) {
  std::map<LcCentre, std::optional<Exponent>> a, b;
  for (const auto& g : got) a[g.centre] = g.germ;
  for (const auto& w : want) b[w.centre] = w.germ;
  for (const auto& [c, g] : b)
    if (a.count(c) ? a[c] != g : g.has_value()) return false;
  for (const auto& [c, g] : a)
    if (!b.count(c) && g) return false;
  return true;
}

// Per-centre germs of a sum of distinct monomials; each monomial has at most one nonzero residue.
std::vector<ResidueDatum> residues_of_sum(const SncData& d, const std::vector<Exponent>& f, int sigma) {
  std::map<LcCentre, ResidueDatum> acc;
  for (const auto& a : f)
    for (const auto& r : residue_restrict(d, a, sigma)) {
      auto it = acc.find(r.centre);
      if (it == acc.end() || !it->second.germ) acc[r.centre] = r;
      else if (r.germ) throw assertion_failure("two-germs", "two monomials restrict to the same centre");
    }
  std::vector<ResidueDatum> out;
  for (auto& [c, r] : acc) out.push_back(r);
  return out;
}

void snc_suite(Runner& r) {
  const long n_cases = r.count(500);
  r.check("filtration", [&](Rng& rng, long& cases, std::string& detail) {
    for (long k = 0; k < n_cases; ++k, ++cases) {
      SncData d = random_snc(rng);
      int s = static_cast<int>(d.lc_set().size());
      JumpingSpectrum sp = jumping_spectrum(d);
      std::vector<MonomialIdeal> j;
      for (int sigma = 0; sigma <= s; ++sigma) j.push_back(adjoint_ideal_snc(d, sigma));
      if (j.front() != multiplier_ideal_snc(combined_weights(d, 1)) ||
          j.back() != multiplier_ideal_snc(combined_weights(d, sp.m0))) {
        detail = "endpoints differ for " + to_string(Exponent{});
        return false;
      }
      for (int sigma = 0; sigma < s; ++sigma)
        if (!j[sigma + 1].contains(j[sigma])) {
          detail = "J_" + std::to_string(sigma) + " ⊄ J_" + std::to_string(sigma + 1);
          return false;
        }
    }
    return true;
  });
  r.check("two-path", [&](Rng& rng, long& cases, std::string& detail) {
    for (long k = 0; k < n_cases; ++k, ++cases) {
      SncData d = random_snc(rng);
      int s = static_cast<int>(d.lc_set().size());
      for (int sigma = 0; sigma <= s; ++sigma)
        if (adjoint_ideal_snc(d, sigma) != adjoint_ideal_by_membership(d, sigma)) {
          detail = "σ=" + std::to_string(sigma);
          return false;
        }
    }
    return true;
  });
  r.check("exactness", [&](Rng& rng, long& cases, std::string& detail) {
    for (long k = 0; k < n_cases; ++k, ++cases) {
      SncData d = random_snc(rng);
      int s = static_cast<int>(d.lc_set().size());
      auto pts = grid(d.dim(), 5);
      for (int sigma = 1; sigma <= s; ++sigma) {
        MonomialIdeal js = adjoint_ideal_snc(d, sigma), jprev = adjoint_ideal_snc(d, sigma - 1);
        for (const auto& a : pts) {
          if (!js.contains(a)) continue;
          auto res = residue_restrict(d, a, sigma);
          bool zero = std::none_of(res.begin(), res.end(), [](const ResidueDatum& x) { return x.germ.has_value(); });
          if (zero != jprev.contains(a)) {
            detail = "σ=" + std::to_string(sigma) + " f=" + to_string(a);
            return false;
          }
        }
      }
    }
    return true;
  });
  r.check("extension-then-residue", [&](Rng& rng, long& cases, std::string& detail) {
    for (long k = 0; k < n_cases; ++k, ++cases) {
      SncData d = random_snc(rng);
      int s = static_cast<int>(d.lc_set().size());
      int sigma = uniform_int(rng, 1, s);
      std::vector<ResidueInput> data;
      auto lc = d.lc_set();
      for (const auto& centre : lc_centres(d, sigma)) {
        ResidueInput in{centre, std::nullopt};
        if (uniform_int(rng, 0, 1)) {
          Exponent g(d.dim(), 0);
          for (int i = 0; i < d.dim(); ++i) {
            bool on_centre = std::find(centre.begin(), centre.end(), i) != centre.end();
            bool in_s = std::find(lc.begin(), lc.end(), i) != lc.end();
            if (on_centre) continue;
            g[i] = (in_s ? 0 : static_cast<int>(std::max<std::int64_t>(0, floor_of(d.lambda(i))))) +
                   uniform_int(rng, 0, 2);
          }
          in.germ = g;
        }
        data.push_back(in);
      }
      Extension ext = extension_from_residues(d, data, sigma);
      if (!same_residues(residues_of_sum(d, ext.f, sigma), data)) {
        detail = "σ=" + std::to_string(sigma) + " residues of the extension differ";
        return false;
      }
    }
    return true;
  });
  r.check("siu-identity", [&](Rng& rng, long& cases, std::string& detail) {
    for (long k = 0; k < n_cases; ++k, ++cases) {
      SncData d = random_snc(rng);
      SiuDecomposition siu = siu_decompose(d);
      std::set<int> s(siu.lc.begin(), siu.lc.end());
      for (int i = 0; i < d.dim(); ++i) {
        Rational lhs = siu.residual.weights[i] + siu.s0[i] + (s.count(i) ? 1 : 0);
        if (lhs != d.b[i] + d.nu[i] || siu.s0[i] < 0) {
          detail = "coordinate " + std::to_string(i);
          return false;
        }
      }
      if (siu.residual.offset != d.offset_phi + d.offset_psi) {
        detail = "offset";
        return false;
      }
    }
    return true;
  });
  r.check("openness", [&](Rng& rng, long& cases, std::string& detail) {
    for (long k = 0; k < n_cases; ++k, ++cases) {
      SncData d = random_snc(rng);
      Exponent f = random_exponent(rng, d.dim(), 3);
      auto margin = openness_margin(d, f);
      Rational lam = margin ? 1 + *margin / 2 : Rational(2);
      SncData scaled = d;
      for (int i = 0; i < d.dim(); ++i)
        if (d.nu[i] == 0) scaled.b[i] *= lam;
      for (int sigma = 0; sigma <= d.dim(); ++sigma)
        if (membership_J(d, f, sigma) != membership_J(scaled, f, sigma)) {
          detail = "f=" + to_string(f) + " σ=" + std::to_string(sigma);
          return false;
        }
    }
    return true;
  });
  r.check("annihilator-radical", [&](Rng& rng, long& cases, std::string& detail) {
    for (long k = 0; k < n_cases; ++k, ++cases) {
      SncData d = random_snc(rng);
      int s = static_cast<int>(d.lc_set().size());
      for (int sigma = 1; sigma <= s; ++sigma) {
        MonomialIdeal ann = annihilator_quotient(adjoint_ideal_snc(d, sigma), adjoint_ideal_snc(d, sigma - 1));
        if (!is_radical(ann) || ann != union_ideal(d.dim(), lc_centres(d, sigma))) {
          detail = "σ=" + std::to_string(sigma) + " Ann=" + render_ideal(ann);
          return false;
        }
      }
    }
    return true;
  });
  r.check("guenancia-contains", [&](Rng& rng, long& cases, std::string& detail) {
    for (long k = 0; k < n_cases; ++k, ++cases) {
      SncData d = random_snc(rng);
      MonomialIdeal g = guenancia_adjoint_snc(d);
      for (int sigma = 0; sigma <= static_cast<int>(d.lc_set().size()); ++sigma)
        if (!g.contains(adjoint_ideal_snc(d, sigma))) {
          detail = "σ=" + std::to_string(sigma);
          return false;
        }
    }
    return true;
  });
}

// --- resolution -----------------------------------------------------------

std::vector<Fixture> fixture_family() {
  std::vector<Fixture> out;
  for (const auto& name : {"cross2d", "cusp", "node", "disc1d"}) out.push_back(make_fixture(name));
  for (const Rational& c : {Rational(0), Rational(1, 2), Rational(1), Rational(3, 2), Rational(2)})
    out.push_back(make_fixture("delta3", c));
  return out;
}

Scene boundary_scene(int n, const std::vector<Rational>& coeffs) {
  Scene s;
  s.dim = n;
  s.psi.offset = -1;
  for (int i = 0; i < n; ++i) {
    if (coeffs[i] == 0) continue;
    Exponent e(n, 0);
    e[i] = 1;
    s.psi.atoms.push_back({coeffs[i], MonomialIdeal::principal(e), ""});
  }
  return s;
}

void resolution_suite(Runner& r) {
  r.check("er-split", [&](Rng&, long& cases, std::string& detail) {
    for (const auto& f : fixture_family()) {
      ++cases;
      ERSplit er = e_r_decomposition(f.cert, f.scene);
      if (add(er.E, er.R) != f.cert.k_rel) {
        detail = f.name + ": E + R ≠ K";
        return false;
      }
      QDivisor total = add(add(pullback_divisor(f.cert, f.scene.phi_L), pullback_divisor(f.cert, f.scene.psi)), er.R, -1);
      for (const auto& d : f.cert.registry) {
        Rational v = coefficient(total, d.name);
        if (v < 0 || (coefficient(er.E, d.name) > 0 && v >= 1)) {
          detail = f.name + ": residual weight on " + d.name;
          return false;
        }
      }
    }
    return true;
  });
  r.check("pushforward-stability", [&](Rng& rng, long& cases, std::string& detail) {
    std::vector<Fixture> base;
    base.push_back(make_fixture("cross2d"));
    for (const Rational& c : {Rational(1, 2), Rational(1), Rational(2)}) base.push_back(make_fixture("delta3", c));
    for (long k = 0; k < r.count(20); ++k) {
      SncData d = random_snc(rng, 3);
      if (d.dim() < 2) continue;
      Fixture f;
      f.name = "random";
      f.scene = scene_from_snc(d);
      f.cert = identity_certificate(d.dim(), coordinate_names(d.dim()));
      base.push_back(f);
    }
    for (const auto& f : base) {
      ++cases;
      ResolutionCertificate more = f.cert;
      const Chart& ch = more.charts[uniform_int(rng, 0, static_cast<int>(more.charts.size()) - 1)];
      int a = uniform_int(rng, 0, ch.dim() - 1), b = (a + 1 + uniform_int(rng, 0, ch.dim() - 2)) % ch.dim();
      more = blowup(more, ch.id, {std::min(a, b), std::max(a, b)}, "X");
      for (const Rational& m : {Rational(0), Rational(1, 2), Rational(5, 6), Rational(1)})
        if (multiplier_ideal_global(f.scene, f.cert, m) != multiplier_ideal_global(f.scene, more, m)) {
          detail = f.name + ": multiplier ideal at m=" + to_string(m);
          return false;
        }
      for (int sigma = 0; sigma <= f.scene.dim; ++sigma)
        if (adjoint_ideal_global(f.scene, f.cert, sigma) != adjoint_ideal_global(f.scene, more, sigma)) {
          detail = f.name + ": J_" + std::to_string(sigma);
          return false;
        }
    }
    return true;
  });
  r.check("identity-certificate", [&](Rng& rng, long& cases, std::string& detail) {
    for (long k = 0; k < r.count(100); ++k, ++cases) {
      SncData d = random_snc(rng, 3);
      Scene s = scene_from_snc(d);
      ResolutionCertificate id = identity_certificate(d.dim(), coordinate_names(d.dim()));
      for (int sigma = 0; sigma <= static_cast<int>(d.lc_set().size()); ++sigma)
        if (adjoint_ideal_global(s, id, sigma).ideal != adjoint_ideal_snc(d, sigma)) {
          detail = "σ=" + std::to_string(sigma);
          return false;
        }
    }
    return true;
  });
  r.check("centres-radical", [&](Rng& rng, long& cases, std::string& detail) {
    std::vector<Fixture> fam = fixture_family();
    for (long k = 0; k < r.count(30); ++k) {
      SncData d = random_snc(rng, 3);
      Fixture f;
      f.name = "random";
      f.scene = scene_from_snc(d);
      f.cert = identity_certificate(d.dim(), coordinate_names(d.dim()));
      fam.push_back(f);
    }
    for (const auto& f : fam) {
      ++cases;
      int top = sigma_mlc_global(f.scene, f.cert);
      for (int sigma = 1; sigma <= top; ++sigma) {
        CentreReport rep = sigma_lc_centres_global(f.scene, f.cert, sigma);
        if (!rep.radical || !rep.agree) {
          detail = f.name + " σ=" + std::to_string(sigma);
          return false;
        }
      }
    }
    return true;
  });
  r.check("comparison-inclusions", [&](Rng& rng, long& cases, std::string& detail) {
    std::vector<Instance> inst;
    for (const auto& name : {"cross2d", "node"}) {
      Fixture f = make_fixture(name);
      inst.push_back({f.scene, f.cert, name});
    }
    for (const Rational& c : {Rational(0), Rational(1, 2), Rational(1), Rational(3, 2), Rational(2)}) {
      Fixture f = make_fixture("delta3", c);
      inst.push_back({f.scene, f.cert, "delta3 c=" + to_string(c)});
    }
    for (long k = 0; k < r.count(50); ++k) inst.push_back(random_comparison(rng));
    for (const auto& in : inst) {
      CompareReport rep = compare_adjoints(in.scene, in.cert);
      if (!rep.hypothesis_violations.empty()) continue;
      ++cases;
      if (!rep.el_in_j1 || !rep.hm_in_jtop) {
        detail = in.label + ": " + rep.summary();
        return false;
      }
    }
    return true;
  });
  r.check("connected-fibres", [&](Rng&, long& cases, std::string& detail) {
    for (const auto& f : fixture_family()) {
      ++cases;
      if (!connectedness_check(f.scene, f.cert).all_connected) {
        detail = f.name;
        return false;
      }
    }
    return true;
  });
  r.check("classification-vs-discrepancy", [&](Rng& rng, long& cases, std::string& detail) {
    std::vector<Instance> inst;
    for (const auto& f : fixture_family()) inst.push_back({f.scene, f.cert, f.name});
    for (long k = 0; k < r.count(100); ++k) inst.push_back(random_boundary(rng));
    for (const auto& in : inst) {
      ++cases;
      PairClass a = classify_pair(in.scene, in.cert).verdict, b = classify_by_discrepancy(in.scene, in.cert);
      if (a != b) {
        detail = in.label + ": J gives " + to_string(a) + ", discrepancy gives " + to_string(b);
        return false;
      }
    }
    return true;
  });
  r.check("inversion-of-adjunction", [&](Rng&, long& cases, std::string& detail) {
    std::vector<Instance> inst;
    for (int k = 0; k <= 6; ++k)
      inst.push_back({boundary_scene(2, {1, Rational(k, 6)}), identity_certificate(2, coordinate_names(2)),
                      "{z1=0}+" + to_string(Rational(k, 6)) + "{z2=0}"});
    Fixture cross = make_fixture("cross2d");
    inst.push_back({boundary_scene(2, {1, 1}), identity_certificate(2, coordinate_names(2)), "cross"});
    inst.push_back({cross.scene, cross.cert, "cross blown up"});
    for (int n = 1; n <= 3; ++n) {
      std::vector<Rational> c(n, 0);
      c[0] = 1;
      inst.push_back({boundary_scene(n, c), identity_certificate(n, coordinate_names(n)), "{z1=0} n=" + std::to_string(n)});
    }
    for (const auto& in : inst) {
      ++cases;
      if (!inversion_check(in.scene, in.cert).consistent) {
        detail = in.label;
        return false;
      }
    }
    return true;
  });
  r.check("isometry", [&](Rng&, long& cases, std::string& detail) {
    Fixture f = make_fixture("cross2d");
    for (const Exponent& a : {Exponent{0, 0}, Exponent{1, 0}, Exponent{1, 1}})
      for (int sigma : {1, 2}) {
        ++cases;
        IsometryReport rep = residue_isometry_check(f.scene, f.cert, a, sigma);
        if (!rep.equal) {
          detail = "f=" + to_string(a) + " σ=" + std::to_string(sigma) + ": " + rep.downstairs.render() +
                   " vs " + rep.upstairs.render();
          return false;
        }
      }
    return true;
  });
}

// --- numeric --------------------------------------------------------------

void numeric_suite(Runner& r) {
  r.check("probe-vs-membership", [&](Rng& rng, long& cases, std::string& detail) {
    long inconclusive = 0;
    for (long k = 0; k < r.count(200); ++k, ++cases) {
      SncData d = random_snc(rng, 3);
      Exponent f = random_exponent(rng, d.dim(), 3);
      int sigma = uniform_int(rng, 0, 3);
      ProbeResult p = divergence_probe(d, f, sigma);
      if (p.verdict == ProbeVerdict::inconclusive) {
        ++inconclusive;
        continue;
      }
      bool member = membership_J(d, f, sigma);
      if (member != (p.verdict == ProbeVerdict::convergent)) {
        detail = "contradiction at f=" + to_string(f) + " σ=" + std::to_string(sigma);
        return false;
      }
    }
    detail = std::to_string(inconclusive) + " inconclusive";
    return inconclusive * 20 < cases;
  });
  r.check("mc-determinism", [&](Rng&, long& cases, std::string& detail) {
    IntegralSpec spec{cross_snc_data(), {1, 0}, 1, 0.1, 1, Sampler::monte_carlo, 77, r.opt.budget};
    Estimate a = estimate_R(spec), b = estimate_R(spec);
    cases = 2;
    if (*a.value != *b.value || a.stderr_ != b.stderr_) {
      detail = "repeated MC estimates differ";
      return false;
    }
    return true;
  });
  r.check("monotone-in-sigma", [&](Rng& rng, long& cases, std::string& detail) {
    for (long k = 0; k < r.count(40); ++k) {
      SncData d = random_snc(rng, 2);
      Exponent f = random_exponent(rng, d.dim(), 3);
      std::optional<double> prev;
      for (int sigma = 0; sigma <= 3; ++sigma) {
        Estimate e = estimate_R({d, f, sigma, 0.1});
        if (e.diverged) continue;
        ++cases;
        if (prev && *e.value > *prev * (1 + 1e-12)) {
          detail = "R increased at σ=" + std::to_string(sigma);
          return false;
        }
        prev = e.value;
      }
    }
    return true;
  });
  r.check("xlogx", [&](Rng&, long& cases, std::string& detail) {
    std::vector<double> grid_psi;
    for (double x = 0; x <= 6; x += 0.05) grid_psi.push_back(-std::pow(10.0, x));
    auto a = xlogx_check(1, 1, 0.5, {-1, -std::exp(1.0), -10});
    auto b = xlogx_check(2, 0.1, 0.01, grid_psi);
    auto c = xlogx_check(1, 1, 1e-9, {-1});
    cases = 3;
    detail = "min slack " + std::to_string(std::min({a.min_slack, b.min_slack, c.min_slack}));
    return a.pass && b.pass && c.pass;
  });
  r.check("kernel-equivalence", [&](Rng& rng, long& cases, std::string& detail) {
    const kernels::KernelTable* v = kernels::avx2_table();
    if (!v) {
      detail = "avx2 unavailable; scalar only";
      return true;
    }
    const kernels::KernelTable& s = kernels::scalar_table();
    std::uniform_real_distribution<double> ux(-700, 700), us(0.01, 40), uw(1, 30);
    std::vector<double> x(1027), ya(1027), yb(1027), wt(1027);
    for (int round = 0; round < 20; ++round, ++cases) {
      for (auto& t : x) t = ux(rng);
      s.exp_v(x.data(), x.size(), ya.data());
      v->exp_v(x.data(), x.size(), yb.data());
      for (std::size_t i = 0; i < x.size(); ++i)
        if (std::abs(ya[i] - yb[i]) > 1e-13 * ya[i]) {
          detail = "exp at " + std::to_string(x[i]);
          return false;
        }
      for (auto& t : x) t = std::exp(ux(rng));
      s.log_v(x.data(), x.size(), ya.data());
      v->log_v(x.data(), x.size(), yb.data());
      for (std::size_t i = 0; i < x.size(); ++i)
        if (std::abs(ya[i] - yb[i]) > 1e-13 * std::max(1.0, std::abs(ya[i]))) {
          detail = "log";
          return false;
        }
      for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = us(rng);
        wt[i] = us(rng);
      }
      double w0 = uw(rng), eps = 0.05 + 0.01 * round;
      int kz = uniform_int(rng, 1, 3), sigma = uniform_int(rng, kz, 3);
      double ra = s.radial_sum(x.data(), wt.data(), x.size(), w0, kz, sigma, eps);
      double rb = v->radial_sum(x.data(), wt.data(), x.size(), w0, kz, sigma, eps);
      if (std::abs(ra - rb) > 1e-13 * std::abs(ra)) {
        detail = "radial_sum";
        return false;
      }
      s.probe_row(wt.data(), x.data(), x.size(), 0.5, 1.5, 0.7, sigma, eps, ya.data());
      v->probe_row(wt.data(), x.data(), x.size(), 0.5, 1.5, 0.7, sigma, eps, yb.data());
      for (std::size_t i = 0; i < x.size(); ++i)
        if (std::abs(ya[i] - yb[i]) > 1e-13 * std::max(1.0, std::abs(ya[i]))) {
          detail = "probe_row";
          return false;
        }
      double sa = s.sum_exp(ya.data(), ya.size(), 1.0), sb = v->sum_exp(ya.data(), ya.size(), 1.0);
      if (std::abs(sa - sb) > 1e-13 * sa) {
        detail = "sum_exp";
        return false;
      }
    }
    return true;
  });
  r.check("closed-form-limits", [&](Rng&, long& cases, std::string& detail) {
    NumericOptions o;
    o.budget = r.opt.budget;
    auto one = verify_residue_norm(disc_snc_data(), {0}, 1, o);
    o.rel_tol = 0.02;
    auto two = verify_residue_norm(cross_snc_data(), {0, 0}, 2, o);
    cases = 2;
    detail = "deviations " + std::to_string(one.deviation) + ", " + std::to_string(two.deviation);
    return one.pass && two.pass;
  });
}

// --- fixtures (worked examples) -------------------------------------------

void fixtures_suite(Runner& r) {
  auto at0 = [](const TwistedIdeal& t) { return stalk(t, std::vector<Rational>(t.dim, 0)); };
  auto gens = [](const TwistedIdeal& t, int dim, std::vector<Exponent> g) {
    return t.ideal == minimalize(t.total_dim(), [&] {
             for (auto& e : g) e.resize(t.total_dim(), 0);
             return g;
           }()) &&
           t.dim == dim;
  };
  r.check("cusp", [&](Rng&, long& cases, std::string& detail) {
    Fixture f = make_fixture("cusp");
    cases = 5;
    JumpingSpectrum sp = global_setup(f.scene, f.cert).spectrum;
    bool spec_ok = sp.jumps.size() >= 2 && sp.jumps.back() == 1 && sp.jumps[sp.jumps.size() - 2] == Rational(5, 6);
    AlgebraicAdjoints alg = el_hm_adjoint(f.scene, f.cert);
    bool j1 = gens(at0(adjoint_ideal_global(f.scene, f.cert, 1)), 2, {{2, 0}, {0, 1}});
    bool j2 = gens(at0(adjoint_ideal_global(f.scene, f.cert, 2)), 2, {{1, 0}, {0, 1}});
    bool el = alg.el && gens(at0(*alg.el), 2, {{2, 0}, {0, 1}});
    bool cl = classify_pair(f.scene, f.cert).verdict == PairClass::not_lc;
    detail = std::string(spec_ok ? "" : "spectrum ") + (j1 ? "" : "J1 ") + (j2 ? "" : "J2 ") + (el ? "" : "EL ") +
             (cl ? "" : "class");
    return spec_ok && j1 && j2 && el && cl;
  });
  r.check("node", [&](Rng&, long& cases, std::string& detail) {
    Fixture f = make_fixture("node");
    cases = 3;
    AlgebraicAdjoints alg = el_hm_adjoint(f.scene, f.cert);
    bool el = alg.el && gens(at0(*alg.el), 2, {{1, 0}, {0, 1}});
    bool hm = at0(alg.hm).is_unit();
    bool cl = classify_pair(f.scene, f.cert).verdict == PairClass::lc;
    detail = std::string(el ? "" : "EL ") + (hm ? "" : "HM ") + (cl ? "" : "class");
    return el && hm && cl;
  });
  r.check("cross", [&](Rng&, long& cases, std::string& detail) {
    Fixture f = make_fixture("cross2d");
    cases = 3;
    bool ipsi = gens(multiplier_ideal_global(f.scene, f.cert, 1), 2, {{1, 1}});
    bool gu = guenancia_adjoint_snc(cross_snc_data()).is_unit();
    auto c2 = sigma_lc_centres_global(f.scene, f.cert, 2);
    bool origin = c2.images.size() == 1 && c2.images[0].coords == std::vector<int>{0, 1};
    detail = std::string(ipsi ? "" : "I(ψ) ") + (gu ? "" : "Guenancia ") + (origin ? "" : "lc_2");
    return ipsi && gu && origin;
  });
  r.check("delta3-lc3", [&](Rng&, long& cases, std::string& detail) {
    for (const Rational& c : {Rational(0), Rational(1, 2), Rational(1), Rational(3, 2), Rational(2)}) {
      ++cases;
      Fixture f = make_fixture("delta3", c);
      auto rep = sigma_lc_centres_global(f.scene, f.cert, 3);
      bool want = is_integer(c) && c >= 1;
      if (rep.images.empty() == want) {
        detail = "c=" + to_string(c);
        return false;
      }
    }
    return true;
  });
}

}  // namespace

std::vector<CheckResult> run(const std::string& suite, const Options& opt) {
  std::vector<CheckResult> out;
  std::vector<std::string> which;
  if (suite == "all") {
    which = suite_names();
  } else {
    auto names = suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end()) throw input_error("unknown-suite", suite);
    which = {suite};
  }
  for (const auto& s : which) {
    Runner r{opt, out, s};
    if (s == "monomial") monomial_suite(r);
    else if (s == "scene") scene_suite(r);
    else if (s == "snc") snc_suite(r);
    else if (s == "resolution") resolution_suite(r);
    else if (s == "numeric") numeric_suite(r);
    else if (s == "fixtures") fixtures_suite(r);
  }
  return out;
}

}  // namespace adjideal::suite
