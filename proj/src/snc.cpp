#include "adjideal/snc.hpp"

#include "adjideal/errors.hpp"

#include <algorithm>
#include <set>

namespace adjideal {

void SncData::check() const {
  if (b.size() != nu.size()) throw input_error("dimension-mismatch", "b and nu differ in length");
  for (const auto& v : nu)
    if (v < 0) throw input_error("negative-nu", "psi weights must be non-negative");
  if (offset_psi > -1) throw hypothesis_error("psi-bound", "offset_psi must be <= -1");
}

std::vector<int> SncData::lc_set() const {
  std::vector<int> s;
  for (int i = 0; i < dim(); ++i) {
    Rational l = lambda(i);
    if (nu[i] > 0 && is_integer(l) && l >= 1) s.push_back(i);
  }
  return s;
}

MonomialIdeal multiplier_ideal_snc(const RationalVector& weights) {
  Exponent e(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) e[i] = static_cast<int>(std::max<std::int64_t>(0, floor_of(weights[i])));
  return MonomialIdeal::principal(e);
}

RationalVector combined_weights(const SncData& d, const Rational& m) {
  RationalVector w(d.dim());
  for (int i = 0; i < d.dim(); ++i) w[i] = d.b[i] + m * d.nu[i];
  return w;
}

namespace {

// Exponent of I(b + m'ν) for m' slightly below m.
Exponent exponent_below(const SncData& d, const Rational& m) {
  Exponent e(d.dim());
  for (int i = 0; i < d.dim(); ++i) {
    Rational w = d.b[i] + m * d.nu[i];
    std::int64_t f = d.nu[i] > 0 ? ceil_of(w) - 1 : floor_of(w);
    e[i] = static_cast<int>(std::max<std::int64_t>(0, f));
  }
  return e;
}

void require_lc(const SncData& d, const std::vector<int>& s) {
  if (s.empty()) throw hypothesis_error("no-jump", "m = 1 is not a jumping number (empty lc locus)");
  (void)d;
}

void reject_sigma_zero(int sigma) {
  if (sigma < 1) throw hypothesis_error("sigma-zero", "residues are defined for sigma >= 1 only");
}

}  // namespace

JumpingSpectrum jumping_spectrum(const SncData& d) {
  d.check();
  std::set<Rational> candidates;
  for (int i = 0; i < d.dim(); ++i) {
    if (d.nu[i] <= 0) continue;
    // integers k with b_i < k <= b_i + ν_i
    for (std::int64_t k = floor_of(d.b[i]) + 1; Rational(k) <= d.b[i] + d.nu[i]; ++k) {
      Rational m = (Rational(k) - d.b[i]) / d.nu[i];
      if (m > 0 && m <= 1) candidates.insert(m);
    }
  }
  JumpingSpectrum js;
  js.ideal_at.emplace_back(Rational(0), multiplier_ideal_snc(combined_weights(d, 0)));
  for (const auto& m : candidates) {
    MonomialIdeal at = multiplier_ideal_snc(combined_weights(d, m));
    if (MonomialIdeal::principal(exponent_below(d, m)) != at) {
      js.jumps.push_back(m);
      js.ideal_at.emplace_back(m, at);
    }
  }
  js.jumps_at_one = !js.jumps.empty() && js.jumps.back() == 1;
  for (const auto& m : js.jumps)
    if (m < 1) js.m0 = m;
  return js;
}

std::vector<int> lc_locus(const SncData& d) {
  std::vector<int> s = d.lc_set();
  require_lc(d, s);
  JumpingSpectrum js = jumping_spectrum(d);
  if (!js.jumps_at_one) throw assertion_failure("lc-locus", "nonempty S but no jump at m = 1");
  MonomialIdeal before = multiplier_ideal_snc(combined_weights(d, js.m0));
  MonomialIdeal at_one = multiplier_ideal_snc(combined_weights(d, 1));
  MonomialIdeal ann = annihilator_quotient(before, at_one);
  Exponent sq(d.dim(), 0);
  for (int i : s) sq[i] = 1;
  if (ann != MonomialIdeal::principal(sq) || !is_radical(ann))
    throw assertion_failure("lc-locus", "annihilator " + render_ideal(ann) + " differs from the lc set");
  return s;
}

SiuDecomposition siu_decompose(const SncData& d) {
  d.check();
  SiuDecomposition out;
  out.lc = d.lc_set();
  require_lc(d, out.lc);
  const int n = d.dim();
  out.lambda.resize(n);
  out.s0.assign(n, 0);
  out.residual.weights.assign(n, Rational(0));
  out.residual.offset = d.offset_phi + d.offset_psi;
  for (int i = 0; i < n; ++i) {
    out.lambda[i] = d.lambda(i);
    bool in_s = std::find(out.lc.begin(), out.lc.end(), i) != out.lc.end();
    if (in_s) {
      out.s0[i] = static_cast<int>(out.lambda[i].numerator()) - 1;
    } else {
      out.residual.weights[i] = out.lambda[i];
      if (out.lambda[i] < 0)
        throw hypothesis_error("not-quasi-psh", "residual weight " + to_string(out.lambda[i]) + " on coordinate " +
                                                     std::to_string(i + 1) + " is negative");
    }
  }
  return out;
}

bool membership_J(const SncData& d, const Exponent& f, int sigma) {
  if (static_cast<int>(f.size()) != d.dim()) throw input_error("dimension-mismatch", "monomial length");
  int unit_count = 0;
  for (int i = 0; i < d.dim(); ++i) {
    Rational t = d.lambda(i) - f[i];
    if (t > 1) return false;
    if (d.nu[i] == 0 && t == 1) return false;
    if (d.nu[i] > 0 && t == 1) ++unit_count;
  }
  return unit_count <= sigma;
}

MonomialIdeal adjoint_ideal_snc(const SncData& d, int sigma) {
  std::vector<int> s = d.lc_set();
  require_lc(d, s);
  JumpingSpectrum js = jumping_spectrum(d);
  MonomialIdeal base = multiplier_ideal_snc(combined_weights(d, js.m0));
  int size = static_cast<int>(s.size()) - std::max(sigma, 0);
  MonomialIdeal lc_part = squarefree_products(d.dim(), s, size);
  return combine(base, lc_part, Combine::product);
}

MonomialIdeal adjoint_ideal_by_membership(const SncData& d, int sigma) {
  require_lc(d, d.lc_set());
  const int n = d.dim();
  Exponent limit(n);
  for (int i = 0; i < n; ++i) limit[i] = static_cast<int>(std::max<std::int64_t>(0, floor_of(d.lambda(i)))) + 1;
  std::vector<Exponent> pass;
  Exponent a(n, 0);
  while (true) {
    if (membership_J(d, a, sigma)) pass.push_back(a);
    int k = 0;
    while (k < n) {
      if (a[k] < limit[k]) {
        ++a[k];
        break;
      }
      a[k] = 0;
      ++k;
    }
    if (k == n) break;
  }
  return minimalize(n, pass);
}

std::vector<LcCentre> lc_centres(const SncData& d, int sigma) {
  std::vector<int> s = d.lc_set();
  require_lc(d, s);
  std::vector<LcCentre> out;
  const int m = static_cast<int>(s.size());
  if (sigma < 0 || sigma > m) return out;
  std::vector<int> pick(m, 0);
  std::fill(pick.end() - sigma, pick.end(), 1);
  do {
    LcCentre c;
    for (int k = 0; k < m; ++k)
      if (pick[k]) c.push_back(s[k]);
    out.push_back(c);
  } while (std::next_permutation(pick.begin(), pick.end()));
  std::sort(out.begin(), out.end());
  return out;
}

int sigma_mlc(const SncData& d) {
  std::vector<int> s = d.lc_set();
  require_lc(d, s);
  return static_cast<int>(s.size());
}

std::optional<int> sigma_f(const SncData& d, const Exponent& f) {
  std::vector<int> s = d.lc_set();
  require_lc(d, s);
  for (int sigma = 0; sigma <= static_cast<int>(s.size()); ++sigma)
    if (membership_J(d, f, sigma)) return sigma;
  return std::nullopt;
}

namespace {

ExactValue centre_norm(const SncData& d, const SiuDecomposition& siu, const LcCentre& p, const Exponent& g,
                       int sigma, const Rational& rho) {
  Rational coeff = 1;
  for (int k = 2; k < sigma; ++k) coeff /= k;
  for (int i : p) coeff /= d.nu[i];
  Rational rho_power = 0;
  for (int k = 0; k < d.dim(); ++k) {
    if (std::find(p.begin(), p.end(), k) != p.end()) continue;
    Rational denom = Rational(g[k]) - siu.residual.weights[k] + 1;
    if (denom <= 0) return ExactValue::infinite();
    coeff /= denom;
    rho_power += 2 * denom;
  }
  ExactTerm t;
  t.coeff = coeff;
  t.pi_power = d.dim();
  t.e_power = -siu.residual.offset;
  t.base = rho;
  t.base_power = rho_power;
  return ExactValue::term(t);
}

}  // namespace

std::vector<ResidueDatum> residue_restrict(const SncData& d, const Exponent& f, int sigma, const Rational& rho) {
  reject_sigma_zero(sigma);
  SiuDecomposition siu = siu_decompose(d);
  if (!membership_J(d, f, sigma))
    throw hypothesis_error("not-in-J", "monomial " + to_string(f) + " is not in J_" + std::to_string(sigma));
  std::vector<ResidueDatum> out;
  for (const auto& p : lc_centres(d, sigma)) {
    ResidueDatum r;
    r.centre = p;
    r.lelong_product = 1;
    for (int i : p) r.lelong_product *= d.nu[i];
    bool nonzero = true;
    Exponent g = f;
    for (int i : siu.lc) {
      bool in_p = std::find(p.begin(), p.end(), i) != p.end();
      if (in_p) {
        if (f[i] != siu.s0[i]) nonzero = false;
        g[i] = 0;
      } else {
        if (f[i] < siu.s0[i] + 1) nonzero = false;
        g[i] = f[i] - siu.s0[i] - 1;
      }
    }
    if (nonzero) {
      r.germ = g;
      r.norm = centre_norm(d, siu, p, g, sigma, rho);
    } else {
      r.norm = ExactValue::zero();
    }
    out.push_back(r);
  }
  return out;
}

ExactValue residue_norm_closed_form(const SncData& d, const Exponent& f, int sigma, const Rational& rho) {
  reject_sigma_zero(sigma);
  if (!membership_J(d, f, sigma)) return ExactValue::infinite();
  ExactValue total;
  for (const auto& r : residue_restrict(d, f, sigma, rho)) total = total + r.norm;
  return total;
}

ExactValue residue_norm_closed_form(const SncData& d, const std::vector<Exponent>& f, int sigma, const Rational& rho) {
  ExactValue total;
  std::set<Exponent> seen;
  for (const auto& a : f) {
    if (!seen.insert(a).second) throw input_error("repeated-monomial", to_string(a));
    total = total + residue_norm_closed_form(d, a, sigma, rho);
  }
  return total;
}

Extension extension_from_residues(const SncData& d, const std::vector<ResidueInput>& data, int sigma,
                                  const Rational& rho) {
  reject_sigma_zero(sigma);
  SiuDecomposition siu = siu_decompose(d);
  std::vector<LcCentre> centres = lc_centres(d, sigma);
  std::set<LcCentre> used;
  Extension ext;
  ext.bound = ExactValue::zero();
  for (const auto& item : data) {
    LcCentre p = item.centre;
    std::sort(p.begin(), p.end());
    if (std::find(centres.begin(), centres.end(), p) == centres.end())
      throw input_error("bad-centre", "not a " + std::to_string(sigma) + "-lc centre of this chart");
    if (!used.insert(p).second) throw input_error("incompatible-data", "centre given twice");
    if (!item.germ) continue;
    const Exponent& g = *item.germ;
    if (static_cast<int>(g.size()) != d.dim()) throw input_error("dimension-mismatch", "germ length");
    for (int i : p)
      if (g[i] != 0) throw input_error("incompatible-data", "germ depends on a centre coordinate");
    Exponent f = g;
    for (int i : siu.lc) {
      bool in_p = std::find(p.begin(), p.end(), i) != p.end();
      f[i] = in_p ? siu.s0[i] : g[i] + siu.s0[i] + 1;
    }
    if (!membership_J(d, f, sigma)) throw input_error("incompatible-data", "germ has infinite centre integral");
    ext.f.push_back(f);
    ++ext.bound_constant;
  }
  std::sort(ext.f.begin(), ext.f.end());
  if (std::adjacent_find(ext.f.begin(), ext.f.end()) != ext.f.end())
    throw assertion_failure("extension", "two centres produced the same monomial");
  ExactValue r0 = residue_norm_closed_form(d, ext.f, sigma, rho);
  for (int k = 0; k < ext.bound_constant; ++k) ext.bound = ext.bound + r0;
  return ext;
}

MonomialIdeal guenancia_adjoint_snc(const SncData& d) {
  std::vector<int> s = d.lc_set();
  require_lc(d, s);
  const int n = d.dim();
  Exponent e(n);
  for (int i = 0; i < n; ++i) {
    Rational l = d.lambda(i);
    bool in_s = std::find(s.begin(), s.end(), i) != s.end();
    // in S: a_i >= λ_i − 1; otherwise a_i > λ_i − 1
    std::int64_t need = in_s ? ceil_of(l - 1) : floor_of(l - 1) + 1;
    e[i] = static_cast<int>(std::max<std::int64_t>(0, need));
  }
  return MonomialIdeal::principal(e);
}

std::optional<Rational> openness_margin(const SncData& d, const Exponent& f) {
  std::optional<Rational> delta;
  // Non-members stay non-members when non-negative weights grow.
  bool member = false;
  for (int sigma = 0; sigma <= d.dim(); ++sigma)
    if (membership_J(d, f, sigma)) member = true;
  if (!member) return delta;
  for (int k = 0; k < d.dim(); ++k) {
    if (d.nu[k] != 0 || d.b[k] <= 0) continue;
    Rational slack = 1 - (d.b[k] - f[k]);
    Rational bound = slack / d.b[k];
    if (!delta || bound < *delta) delta = bound;
  }
  return delta;
}

}  // namespace adjideal
