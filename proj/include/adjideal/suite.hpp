#pragma once

#include "adjideal/fixtures.hpp"
#include "adjideal/monomial.hpp"
#include "adjideal/numeric.hpp"
#include "adjideal/resolution.hpp"
#include "adjideal/snc.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

// Random instance generators and the invariant suite behind `adjideal verify`.
namespace adjideal::suite {

using Rng = std::mt19937_64;

int uniform_int(Rng& rng, int lo, int hi);  // inclusive
Rational random_rational(Rng& rng, int max_den, const Rational& lo, const Rational& hi);

// S ≠ ∅, λ ≥ 0 everywhere, denominators ≤ max_den.
SncData random_snc(Rng& rng, int max_dim = 4, int max_den = 6);
Exponent random_exponent(Rng& rng, int dim, int max_entry);
MonomialIdeal random_ideal(Rng& rng, int dim, int max_gens, int max_entry);

// Scene whose identity chart reproduces the given chart data.
Scene scene_from_snc(const SncData& d);

struct Instance {
  Scene scene;
  ResolutionCertificate cert;
  std::string label;
};

// ψ_Δ = Σ d_i log|z_i|² − 1 with up to two random monomial blow-ups on top.
Instance random_boundary(Rng& rng, int max_dim = 3, int max_den = 6);
// Reduced snc S, φ_L = c·log|a| with V(a) avoiding the strata of S.
Instance random_comparison(Rng& rng);

struct CheckResult {
  std::string suite;
  std::string name;
  bool pass = true;
  long cases = 0;
  std::string detail;
  std::uint64_t seed = 0;
};

struct Options {
  std::uint64_t seed = 20261014;
  long budget = 20000;
  // Multiplies random case counts; 1 matches the documented sizes.
  double scale = 1.0;
};

std::vector<std::string> suite_names();  // monomial, scene, snc, resolution, numeric, fixtures
// "all" runs every suite.
std::vector<CheckResult> run(const std::string& suite, const Options& opt);

// Seed of one named check, derived from the master seed.
std::uint64_t derive_seed(std::uint64_t master, const std::string& check);

}  // namespace adjideal::suite
