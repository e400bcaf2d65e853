#pragma once
// Test-side oracles, written from first principles and sharing no logic with
// the engine beyond the data types.

#include "adjideal/monomial.hpp"
#include "adjideal/resolution.hpp"
#include "adjideal/snc.hpp"

#include <functional>
#include <set>
#include <vector>

namespace oracle {

using namespace adjideal;

inline std::vector<Exponent> grid(int dim, int bound) {
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

// Does the ideal agree with an up-closed predicate on the box [0,bound]^dim?
inline bool agrees_on_box(const MonomialIdeal& i, const std::function<bool(const Exponent&)>& pred, int bound) {
  for (const auto& a : grid(i.dim(), bound))
    if (i.contains(a) != pred(a)) return false;
  return true;
}

// Minimal elements of the predicate's set inside a box.
inline std::vector<Exponent> minimal_in_box(int dim, const std::function<bool(const Exponent&)>& pred, int bound) {
  std::vector<Exponent> hits;
  for (const auto& a : grid(dim, bound))
    if (pred(a)) hits.push_back(a);
  std::vector<Exponent> out;
  for (const auto& a : hits) {
    bool minimal = true;
    for (const auto& b : hits)
      if (b != a && divides(b, a)) minimal = false;
    if (minimal) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Convergence of ∫ |z^a|² e^{−φ_L−ψ} / (|ψ|^σ log^{1+ε}|eψ|) near the origin
// for every ε > 0. In u_i = −log|z_i|² the integrand decays like
// e^{−κ·u} with κ_i = 1 + a_i − b_i − ν_i, times a power of the
// log-weight L = |offset| + ν·u. Directions with κ_i = 0 and ν_i > 0 form a
// cone of dimension k whose radial integral ∫ s^{k−1−σ} log^{−1−ε}s ds
// converges iff k ≤ σ.
inline bool member(const SncData& d, const Exponent& a, int sigma) {
  int k = 0;
  for (int i = 0; i < d.dim(); ++i) {
    Rational kappa = 1 + a[i] - d.b[i] - d.nu[i];
    if (kappa < 0) return false;
    if (kappa == 0) {
      if (d.nu[i] == 0) return false;
      ++k;
    }
  }
  return k <= sigma;
}

// Log pullback coefficients: strict components keep d_i, exceptional E gets −a_E.
inline std::map<std::string, Rational> log_pullback(const Scene& boundary, const ResolutionCertificate& cert) {
  QDivisor pulled = pullback_divisor(cert, boundary.psi);
  std::map<std::string, Rational> out;
  for (const auto& d : cert.registry) {
    Rational v = coefficient(pulled, d.name);
    if (d.kind == DivisorKind::exceptional) v -= coefficient(cert.k_rel, d.name);
    out[d.name] = v;
  }
  return out;
}

enum class Cls { klt, plt, lc, not_lc };

inline Cls classify(const Scene& boundary, const ResolutionCertificate& cert) {
  auto coeff = log_pullback(boundary, cert);
  bool lc = true, klt = true, exc_below = true;
  std::set<std::string> reduced;
  for (const auto& d : cert.registry) {
    Rational v = coeff[d.name];
    if (v > 1) lc = false;
    if (v >= 1) klt = false;
    if (d.kind == DivisorKind::exceptional && v >= 1) exc_below = false;
    if (d.kind != DivisorKind::exceptional && v == 1) reduced.insert(d.name);
  }
  if (!lc) return Cls::not_lc;
  if (klt) return Cls::klt;
  bool disjoint = true;
  for (const auto& ch : cert.charts) {
    int hits = 0;
    for (const auto& [name, slot] : ch.slots) hits += reduced.count(name) ? 1 : 0;
    if (hits > 1) disjoint = false;
  }
  return exc_below && disjoint ? Cls::plt : Cls::lc;
}

inline Cls from_engine(PairClass c) {
  switch (c) {
    case PairClass::klt: return Cls::klt;
    case PairClass::plt: return Cls::plt;
    case PairClass::lc: return Cls::lc;
    default: return Cls::not_lc;
  }
}

}  // namespace oracle
