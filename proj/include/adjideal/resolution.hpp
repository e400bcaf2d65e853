#pragma once

#include "adjideal/exact.hpp"
#include "adjideal/scene.hpp"
#include "adjideal/snc.hpp"

#include <optional>
#include <string>
#include <vector>

namespace adjideal {

struct ResolutionCertificate {
  int dim = 0;
  std::vector<Chart> charts;
  std::vector<DivisorId> registry;
  PullbackTables tables;
  QDivisor k_rel;

  const DivisorId* divisor(const std::string& name) const;
  const Chart* chart(const std::string& id) const;
  bool has_named() const;
  std::vector<std::string> names() const;
};

// Single chart, coordinate divisors named D1..Dn unless names are given.
ResolutionCertificate identity_certificate(int dim, const std::vector<std::string>& names = {});

// Consistency gate: structural checks plus recomputation of every purely
// monomial quantity. Throws on failure.
void validate_certificate(const ResolutionCertificate& cert, const Scene& scene);

// K coefficients implied by toric chart columns (coefficient = ray sum − 1).
QDivisor toric_k_rel(const ResolutionCertificate& cert);

// Star subdivision at the face spanned by `centre` coordinates of `chart_id`;
// every chart containing that face is subdivided.
ResolutionCertificate blowup(const ResolutionCertificate& cert, const std::string& chart_id,
                             const std::vector<int>& centre, const std::string& new_name = "");

// Lelong numbers of a potential along every registry divisor.
QDivisor pullback_divisor(const ResolutionCertificate& cert, const Potential& p);

struct ERSplit {
  QDivisor E;
  QDivisor R;
};

ERSplit e_r_decomposition(const ResolutionCertificate& cert, const Scene& scene);

// Chart data with b = π*φ_L − R and ν = π*ψ.
SncData chart_snc_data(const Scene& scene, const ResolutionCertificate& cert, const ERSplit& er, const Chart& chart);
// Same data indexed by registry divisors (one virtual coordinate per divisor).
SncData divisor_snc_data(const Scene& scene, const ResolutionCertificate& cert, const ERSplit& er);

// Per chart: the section h qualifies iff y^{pull h} · y^{offset} ∈ ideal.
struct ChartRequirement {
  QDivisor offset;
  MonomialIdeal ideal;
};

std::vector<NamedSection> active_sections(const Scene& scene, const ResolutionCertificate& cert);

TwistedIdeal pushforward_sheaf(const Scene& scene, const ResolutionCertificate& cert,
                               const std::vector<ChartRequirement>& requirement);
// π_*O(D).
TwistedIdeal pushforward_divisor(const Scene& scene, const ResolutionCertificate& cert, const QDivisor& d);

struct GlobalSetup {
  ERSplit er;
  std::vector<SncData> charts;
  SncData divisors;
  JumpingSpectrum spectrum;  // on the registry divisors
  std::vector<std::string> lc_divisors;  // S̃ as registry names
};

GlobalSetup global_setup(const Scene& scene, const ResolutionCertificate& cert);

TwistedIdeal multiplier_ideal_global(const Scene& scene, const ResolutionCertificate& cert, const Rational& m);
TwistedIdeal adjoint_ideal_global(const Scene& scene, const ResolutionCertificate& cert, int sigma);
// Largest chart-level lc set size; J at this index is the top of the filtration.
int sigma_mlc_global(const Scene& scene, const ResolutionCertificate& cert);
// Jumps of the pushed-forward family on [0,1].
std::vector<Rational> base_jumps(const Scene& scene, const ResolutionCertificate& cert);

struct AlgebraicAdjoints {
  QDivisor discrepancy;  // a_D on exceptional divisors
  QDivisor gamma_exc;
  QDivisor e0;
  QDivisor floor_cf;
  TwistedIdeal hm;
  std::optional<TwistedIdeal> el;  // absent when strict transforms meet
  std::string el_blocker;
};

AlgebraicAdjoints el_hm_adjoint(const Scene& scene, const ResolutionCertificate& cert);

// Closed subset V(z_i : i ∈ coords) ∩ V(named sections).
struct BaseCentre {
  std::vector<int> coords;
  std::vector<std::string> sections;
  bool operator==(const BaseCentre& o) const { return coords == o.coords && sections == o.sections; }
  bool operator<(const BaseCentre& o) const {
    return coords != o.coords ? coords < o.coords : sections < o.sections;
  }
};

BaseCentre normalize_centre(const Scene& scene, BaseCentre b);
bool centre_contained(const Scene& scene, const BaseCentre& inner, const BaseCentre& outer);
std::string render_centre(const Scene& scene, const BaseCentre& b);
std::string render_centres(const Scene& scene, const std::vector<BaseCentre>& list);

struct CentreReport {
  std::vector<BaseCentre> images;         // maximal images of upstairs σ-centres
  std::vector<BaseCentre> from_annihilator;
  bool radical = false;
  bool agree = false;
  TwistedIdeal annihilator;
};

CentreReport sigma_lc_centres_global(const Scene& scene, const ResolutionCertificate& cert, int sigma);

struct CompareReport {
  Rational c;
  TwistedIdeal el, hm, j1, jtop;
  int sigma_top = 0;
  bool el_in_j1 = false, hm_in_jtop = false;
  bool el_equal = false, hm_equal = false;
  bool zero_locus_meets_centres = false;
  std::vector<std::string> hypothesis_violations;
  std::string summary() const;
};

CompareReport compare_adjoints(const Scene& scene, const ResolutionCertificate& cert);

enum class PairClass { klt, plt, lc, not_lc };
std::string to_string(PairClass c);

struct Classification {
  PairClass verdict = PairClass::not_lc;
  int witness_sigma = -1;            // least σ with J_σ unit
  std::optional<Exponent> obstruction;  // generator of the top ideal otherwise
  std::vector<TwistedIdeal> filtration;  // J_0..J_n
};

// The scene's ψ is read as ψ_Δ = Σ d_i log|s_i|² − 1, φ_L as 0.
Classification classify_pair(const Scene& boundary, const ResolutionCertificate& cert);
// Discrepancy test straight from the certificate.
PairClass classify_by_discrepancy(const Scene& boundary, const ResolutionCertificate& cert);

struct InversionReport {
  PairClass pair_class = PairClass::not_lc;
  bool plt = false;
  bool diff_klt = false;
  std::vector<std::string> diff_lines;
  bool consistent = false;
};

InversionReport inversion_check(const Scene& boundary, const ResolutionCertificate& cert);

struct ConnectednessReport {
  struct Entry {
    BaseCentre centre;
    std::vector<std::string> components;
    bool connected = false;
  };
  std::vector<Entry> entries;
  bool all_connected = true;
};

ConnectednessReport connectedness_check(const Scene& scene, const ResolutionCertificate& cert);

struct IsometryReport {
  ExactValue downstairs;
  ExactValue upstairs;
  std::vector<std::pair<std::string, ExactValue>> per_chart;
  bool equal = false;
};

// `base` must be an snc scene on its identity certificate; `up` a blow-up of it.
IsometryReport residue_isometry_check(const Scene& scene, const ResolutionCertificate& up, const Exponent& f,
                                      int sigma);

}  // namespace adjideal
