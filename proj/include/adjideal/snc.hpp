#pragma once

#include "adjideal/exact.hpp"
#include "adjideal/monomial.hpp"
#include "adjideal/rational.hpp"
#include "adjideal/scene.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace adjideal {

// Chart-level data: φ_L weights b, ψ weights ν, constant offsets.
struct SncData {
  RationalVector b;
  RationalVector nu;
  Rational offset_psi = -1;
  Rational offset_phi = 0;

  int dim() const { return static_cast<int>(b.size()); }
  Rational lambda(int i) const { return b[i] + nu[i]; }
  // {i : ν_i > 0 and b_i + ν_i ∈ ℤ≥1}
  std::vector<int> lc_set() const;
  void check() const;
};

MonomialIdeal multiplier_ideal_snc(const RationalVector& weights);
RationalVector combined_weights(const SncData& d, const Rational& m);  // b + m·ν

struct JumpingSpectrum {
  std::vector<Rational> jumps;
  // ideal_at[k] holds on [start_k, start_{k+1}), the first start being 0.
  std::vector<std::pair<Rational, MonomialIdeal>> ideal_at;
  Rational m0 = 0;
  bool jumps_at_one = false;
};

JumpingSpectrum jumping_spectrum(const SncData& d);
std::vector<int> lc_locus(const SncData& d);

struct SiuDecomposition {
  SncWeights residual;      // weights of 𝛗 and its offset
  RationalVector lambda;    // b + ν
  Exponent s0;              // μ on S, 0 elsewhere
  std::vector<int> lc;      // S
};

SiuDecomposition siu_decompose(const SncData& d);

bool membership_J(const SncData& d, const Exponent& f, int sigma);
MonomialIdeal adjoint_ideal_snc(const SncData& d, int sigma);
// Second path: minimal monomials passing membership_J on a bounding grid.
MonomialIdeal adjoint_ideal_by_membership(const SncData& d, int sigma);

using LcCentre = std::vector<int>;  // sorted subset of S
std::vector<LcCentre> lc_centres(const SncData& d, int sigma);
int sigma_mlc(const SncData& d);
std::optional<int> sigma_f(const SncData& d, const Exponent& f);

struct ResidueDatum {
  LcCentre centre;
  std::optional<Exponent> germ;  // full length, zero on centre coordinates
  Rational lelong_product;
  ExactValue norm;
};

std::vector<ResidueDatum> residue_restrict(const SncData& d, const Exponent& f, int sigma,
                                           const Rational& polyradius = 1);
ExactValue residue_norm_closed_form(const SncData& d, const Exponent& f, int sigma, const Rational& polyradius = 1);
// Sum over a polynomial with unit coefficients (distinct monomials).
ExactValue residue_norm_closed_form(const SncData& d, const std::vector<Exponent>& f, int sigma,
                                    const Rational& polyradius = 1);

struct ResidueInput {
  LcCentre centre;
  std::optional<Exponent> germ;
};

struct Extension {
  std::vector<Exponent> f;  // distinct monomials, unit coefficients
  int bound_constant = 0;
  ExactValue bound;  // C · R(0)
};

Extension extension_from_residues(const SncData& d, const std::vector<ResidueInput>& data, int sigma,
                                  const Rational& polyradius = 1);

MonomialIdeal guenancia_adjoint_snc(const SncData& d);

// Largest δ (possibly +∞, returned as nullopt) such that scaling the ν = 0
// weights b_k by λ ∈ (1, 1+δ) leaves membership_J unchanged for f.
std::optional<Rational> openness_margin(const SncData& d, const Exponent& f);

}  // namespace adjideal
