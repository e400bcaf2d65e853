#pragma once

#include "adjideal/exact.hpp"
#include "adjideal/snc.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace adjideal {

enum class Sampler { tensor, monte_carlo };
std::string to_string(Sampler s);
Sampler parse_sampler(const std::string& s);

// R(ε) = ε ∫_{Δ^n} |z^f|² e^{−φ_L−ψ} / (|ψ|^σ · log^{1+ε}(e|ψ|)) dV on the unit polydisc.
struct IntegralSpec {
  SncData data;
  Exponent f;
  int sigma = 1;
  double eps = 0.1;
  Rational polyradius = 1;
  Sampler sampler = Sampler::tensor;
  std::uint64_t seed = 1;
  long budget = 20000;
};

struct Estimate {
  std::optional<double> value;
  double stderr_ = 0;
  bool diverged = false;
  std::string witness;      // divergent direction set, when diverged
  std::string diagnostics;  // direction split and rule sizes
  long samples = 0;
  std::uint64_t seed = 0;
  Sampler sampler = Sampler::tensor;
};

Estimate estimate_R(const IntegralSpec& spec);
// Sum over distinct unit-coefficient monomials; rotation invariance kills cross terms.
Estimate estimate_R(const IntegralSpec& spec, const std::vector<Exponent>& f);

enum class ProbeVerdict { convergent, divergent, inconclusive };
std::string to_string(ProbeVerdict v);

struct ProbeResult {
  ProbeVerdict verdict = ProbeVerdict::inconclusive;
  // Truncation levels X (u_i ≤ e^X − 1), log of the truncated integral, and
  // the growth exponent d log I / dX between consecutive levels.
  std::vector<double> levels;
  std::vector<double> log_integral;
  std::vector<double> growth;
  bool widened = false;
};

constexpr double kGrowthThreshold = 1e-2;

ProbeResult divergence_probe(const SncData& d, const Exponent& f, int sigma, double eps = 0.1);

struct NormCheck {
  ExactValue closed_form;
  std::vector<double> eps;
  std::vector<Estimate> estimates;
  double limit = 0;
  double limit_stderr = 0;
  double deviation = 0;  // |limit − closed|, relative when closed ≠ 0
  double tolerance = 0;
  bool pass = false;
  std::string contradiction;  // set when symbolic and numeric sides disagree on finiteness
};

struct NumericOptions {
  Sampler sampler = Sampler::tensor;
  std::uint64_t seed = 1;
  long budget = 20000;
  std::vector<double> schedule{0.4, 0.2, 0.1, 0.05};
  double rel_tol = 0.01;
};

NormCheck verify_residue_norm(const SncData& d, const Exponent& f, int sigma, const NumericOptions& opt = {});

struct XlogxReport {
  double min_slack = 0;
  double witness_psi = 0;
  bool pass = false;
};

XlogxReport xlogx_check(int sigma, double delta, double eps, const std::vector<double>& psi_values);

struct ExtensionCheck {
  Extension extension;
  double bound_value = 0;
  std::vector<double> eps;
  std::vector<Estimate> estimates;
  bool pass = false;
  std::string failure;
};

ExtensionCheck verify_extension_estimate(const SncData& d, const std::vector<ResidueInput>& data, int sigma,
                                         const NumericOptions& opt = {});

}  // namespace adjideal
