#include "adjideal/numeric.hpp"

#include "adjideal/errors.hpp"
#include "adjideal/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

namespace adjideal {

std::string to_string(Sampler s) { return s == Sampler::tensor ? "tensor" : "mc"; }

Sampler parse_sampler(const std::string& s) {
  if (s == "tensor") return Sampler::tensor;
  if (s == "mc" || s == "monte-carlo") return Sampler::monte_carlo;
  throw input_error("bad-sampler", s);
}

std::string to_string(ProbeVerdict v) {
  switch (v) {
    case ProbeVerdict::convergent: return "convergent";
    case ProbeVerdict::divergent: return "divergent";
    default: return "inconclusive";
  }
}

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

struct Rule {
  std::vector<double> x, w;  // on [−1, 1]
};

// Newton iteration on Legendre polynomials.
const Rule& gauss_legendre(int n) {
  static std::map<int, Rule> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  Rule r;
  r.x.resize(n);
  r.w.resize(n);
  for (int i = 0; i < n; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1, p1 = 0;
      for (int j = 1; j <= n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j - 1) * z * p1 - (j - 1.0) * p2) / j;
      }
      dp = n * (z * p0 - p1) / (z * z - 1);
      double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    r.x[n - 1 - i] = z;
    r.w[n - 1 - i] = 2 / ((1 - z * z) * dp * dp);
  }
  return cache.emplace(n, std::move(r)).first->second;
}

void panel_rule(const std::vector<double>& edges, int order, std::vector<double>& x, std::vector<double>& w) {
  const Rule& r = gauss_legendre(order);
  x.clear();
  w.clear();
  for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
    double a = edges[p], b = edges[p + 1], h = 0.5 * (b - a), m = 0.5 * (a + b);
    for (int i = 0; i < order; ++i) {
      x.push_back(m + h * r.x[i]);
      w.push_back(h * r.w[i]);
    }
  }
}

// Radial head in w − w0; the tail beyond kHead is integrated exactly.
constexpr double kHead = 40.0;

struct RadialRule {
  std::vector<double> s, wt;
  explicit RadialRule(int order) {
    std::vector<double> edges;
    for (int i = 0; i <= static_cast<int>(kHead); ++i) edges.push_back(i);
    panel_rule(edges, order, s, wt);
  }
};

const RadialRule& radial_rule(int order) {
  static const RadialRule coarse(8), fine(12);
  return order <= 8 ? coarse : fine;
}

// ∫_0^∞ s^{k−1} / ((A+s)^σ (1 + log(A+s))^{1+ε}) ds, or the k = 0 integrand itself.
double radial_integral(double A, int k, int sigma, double eps, int order) {
  double la = std::log(A);
  if (k == 0) return std::exp(-sigma * la - (1 + eps) * std::log1p(la));
  const RadialRule& r = radial_rule(order);
  double w0 = 1 + la;
  double head = kernels::active().radial_sum(r.s.data(), r.wt.data(), r.s.size(), w0, k, sigma, eps);
  double tail = (k == sigma) ? std::pow(w0 + kHead, -eps) / eps : 0.0;
  return head + tail;
}

struct Split {
  std::vector<int> factored, zero_rate, decaying;
  std::vector<double> kappa, nu;
  std::string witness;
  double log_prefactor = 0;
  double a0 = 1;
};

std::string coord_list(const std::vector<int>& v) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << "u" << v[i] + 1;
  os << "}";
  return os.str();
}

Split split_directions(const SncData& d, const Exponent& f, int sigma) {
  if (static_cast<int>(f.size()) != d.dim()) throw input_error("dimension-mismatch", "germ length differs from scene");
  Split sp;
  int n = d.dim();
  sp.kappa.resize(n);
  sp.nu.resize(n);
  sp.a0 = -to_double(d.offset_psi);
  sp.log_prefactor = n * std::log(std::numbers::pi) - to_double(d.offset_phi) - to_double(d.offset_psi);
  std::vector<int> negative, flat;
  for (int i = 0; i < n; ++i) {
    Rational kap = Rational(1 + f[i]) - d.b[i] - d.nu[i];
    sp.kappa[i] = to_double(kap);
    sp.nu[i] = to_double(d.nu[i]);
    bool has_pole = d.nu[i] > 0;
    if (kap < 0) {
      negative.push_back(i);
    } else if (kap == 0) {
      (has_pole ? sp.zero_rate : flat).push_back(i);
    } else {
      (has_pole ? sp.decaying : sp.factored).push_back(i);
    }
  }
  int k = static_cast<int>(sp.zero_rate.size());
  if (!negative.empty()) {
    sp.witness = "growing directions " + coord_list(negative);
  } else if (!flat.empty()) {
    sp.witness = "non-decaying directions without ψ pole " + coord_list(flat);
  } else if (k > sigma) {
    sp.witness = "zero-rate directions " + coord_list(sp.zero_rate) + " exceed σ=" + std::to_string(sigma);
  }
  for (int i : sp.factored) sp.log_prefactor -= std::log(sp.kappa[i]);
  if (k > 0) {
    sp.log_prefactor -= std::lgamma(static_cast<double>(k));
    for (int i : sp.zero_rate) sp.log_prefactor -= std::log(sp.nu[i]);
  }
  return sp;
}

// ∫ over the decaying directions of e^{−κ·u} G(a0 + ν·u), tensor Gauss in v = e^{−κu}.
double tensor_outer(const Split& sp, int sigma, double eps, int order, long& nodes) {
  static const std::vector<double> edges{0,    1e-16, 1e-12, 1e-9, 1e-6, 1e-4, 1e-3, 1e-2,
                                         0.03, 0.1,   0.2,   0.35, 0.5,  0.7,  0.85, 1.0};
  std::vector<double> v, w;
  panel_rule(edges, order, v, w);
  int k = static_cast<int>(sp.zero_rate.size());
  const auto& D = sp.decaying;
  if (D.empty()) {
    nodes = 1;
    return radial_integral(sp.a0, k, sigma, eps, order);
  }
  std::vector<std::vector<double>> shift(D.size());
  double scale = 1;
  for (std::size_t j = 0; j < D.size(); ++j) {
    double kap = sp.kappa[D[j]];
    scale /= kap;
    for (double vi : v) shift[j].push_back(sp.nu[D[j]] * (-std::log(vi) / kap));
  }
  double total = 0;
  if (D.size() == 1) {
    for (std::size_t i = 0; i < v.size(); ++i) total += w[i] * radial_integral(sp.a0 + shift[0][i], k, sigma, eps, order);
    nodes = static_cast<long>(v.size());
  } else {
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = 0; j < v.size(); ++j)
        total += w[i] * w[j] * radial_integral(sp.a0 + shift[0][i] + shift[1][j], k, sigma, eps, order);
    nodes = static_cast<long>(v.size() * v.size());
  }
  return total * scale;
}

}  // namespace

Estimate estimate_R(const IntegralSpec& spec) {
  if (!(spec.eps > 0)) throw input_error("bad-eps", "ε must be positive");
  if (spec.polyradius != 1) throw input_error("numeric-polyradius", "the numeric oracle runs on the unit polydisc");
  if (spec.sigma < 0) throw input_error("bad-sigma", "σ must be non-negative");
  spec.data.check();
  int n = spec.data.dim();
  Estimate est;
  est.seed = spec.seed;
  est.sampler = spec.sampler;
  if (spec.sampler == Sampler::tensor && n > 2) throw input_error("sampler-dimension", "tensor grid needs n ≤ 2");
  if (spec.sampler == Sampler::monte_carlo) {
    if (n > 4) throw input_error("sampler-dimension", "importance MC needs n ≤ 4");
    if (spec.budget < 10000) throw input_error("bad-budget", "MC budget must be at least 10^4");
  }
  Split sp = split_directions(spec.data, spec.f, spec.sigma);
  std::ostringstream diag;
  diag << "factored=" << coord_list(sp.factored) << " zero-rate=" << coord_list(sp.zero_rate)
       << " decaying=" << coord_list(sp.decaying);
  if (!sp.witness.empty()) {
    est.diverged = true;
    est.witness = sp.witness;
    est.diagnostics = diag.str();
    return est;
  }
  int k = static_cast<int>(sp.zero_rate.size());
  double scale = spec.eps * std::exp(sp.log_prefactor);
  if (spec.sampler == Sampler::tensor || sp.decaying.empty()) {
    long coarse_nodes = 0, fine_nodes = 0;
    double coarse = tensor_outer(sp, spec.sigma, spec.eps, 8, coarse_nodes);
    double fine = tensor_outer(sp, spec.sigma, spec.eps, 12, fine_nodes);
    est.value = scale * fine;
    // Difference between the two rule orders, floored at rounding level.
    est.stderr_ = std::max(scale * std::abs(fine - coarse), 1e-13 * std::abs(*est.value));
    est.samples = fine_nodes;
    diag << " rule=tensor";
  } else {
    std::mt19937_64 rng(spec.seed);
    const auto& D = sp.decaying;
    double inv = 1;
    for (int i : D) inv /= sp.kappa[i];
    double mean = 0, m2 = 0;
    for (long s = 0; s < spec.budget; ++s) {
      double A = sp.a0;
      for (int i : D) {
        double unif = (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;  // (0, 1]
        A += sp.nu[i] * (-std::log(unif) / sp.kappa[i]);
      }
      double g = radial_integral(A, k, spec.sigma, spec.eps, 12);
      double delta = g - mean;
      mean += delta / (s + 1);
      m2 += delta * (g - mean);
    }
    double var = spec.budget > 1 ? m2 / (spec.budget - 1) : 0;
    est.value = scale * inv * mean;
    est.stderr_ = scale * inv * std::sqrt(var / spec.budget);
    est.samples = spec.budget;
    diag << " rule=mc";
  }
  est.diagnostics = diag.str();
  return est;
}

Estimate estimate_R(const IntegralSpec& spec, const std::vector<Exponent>& f) {
  Estimate total;
  total.seed = spec.seed;
  total.sampler = spec.sampler;
  double value = 0, var = 0;
  std::uint64_t k = 0;
  for (const auto& a : f) {
    IntegralSpec s = spec;
    s.f = a;
    s.seed = spec.seed + 0x9e3779b97f4a7c15ULL * k++;
    Estimate e = estimate_R(s);
    total.samples += e.samples;
    if (e.diverged) {
      total.diverged = true;
      total.witness = to_string(a) + ": " + e.witness;
      total.value.reset();
      return total;
    }
    value += *e.value;
    var += e.stderr_ * e.stderr_;
    if (!total.diagnostics.empty()) total.diagnostics += "; ";
    total.diagnostics += e.diagnostics;
  }
  total.value = value;
  total.stderr_ = std::sqrt(var);
  return total;
}

namespace {

double log_add(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  double m = std::max(a, b);
  return m + std::log1p(std::exp(std::min(a, b) - m));
}

ProbeResult probe_at(const SncData& d, const Exponent& f, int sigma, double eps, const std::vector<double>& levels) {
  int n = d.dim();
  std::vector<double> edges{0, 0.25, 0.5, 1, 1.5, 2, 2.5, 3, 3.5, 4, 5, 6, 7, 8, 10, 12, 14, 17, 20, 25, 30, 40, 50,
                            60, 70, 80, 90, 100};
  double top = levels.back();
  for (double x = 125; x <= top + 1e-9; x += 25) edges.push_back(x);
  int order = n <= 3 ? 4 : 3;
  std::vector<double> y, w;
  panel_rule(edges, order, y, w);
  std::size_t m = y.size();
  std::vector<int> bucket(m);
  for (std::size_t i = 0; i < m; ++i) {
    int b = 0;
    while (y[i] > levels[b]) ++b;
    bucket[i] = b;
  }
  std::vector<std::vector<double>> c(n, std::vector<double>(m)), u(n, std::vector<double>(m));
  std::vector<double> nu(n);
  for (int i = 0; i < n; ++i) {
    double kap = to_double(Rational(1 + f[i]) - d.b[i] - d.nu[i]);
    nu[i] = to_double(d.nu[i]);
    for (std::size_t j = 0; j < m; ++j) {
      u[i][j] = std::expm1(y[j]);
      c[i][j] = std::log(w[j]) + y[j] - kap * u[i][j];
    }
  }
  double base = n * std::log(std::numbers::pi) - to_double(d.offset_phi) - to_double(d.offset_psi);
  double a0 = -to_double(d.offset_psi);
  std::size_t nb = levels.size();
  std::vector<double> acc(nb, kNegInf), row(m);
  // First index of each bucket along the inner axis.
  std::vector<std::size_t> seg_start(nb + 1, m);
  for (std::size_t j = m; j-- > 0;) seg_start[bucket[j]] = j;
  for (std::size_t b = nb; b-- > 0;) seg_start[b] = std::min(seg_start[b], seg_start[b + 1]);

  const auto& kt = kernels::active();
  std::vector<std::size_t> idx(std::max(n - 1, 0), 0);
  while (true) {
    double c0 = base, a = a0;
    int ob = 0;
    for (int i = 0; i + 1 < n; ++i) {
      c0 += c[i][idx[i]];
      a += nu[i] * u[i][idx[i]];
      ob = std::max(ob, bucket[idx[i]]);
    }
    kt.probe_row(c[n - 1].data(), u[n - 1].data(), m, c0, a, nu[n - 1], sigma, eps, row.data());
    for (std::size_t b = 0; b < nb; ++b) {
      std::size_t lo = seg_start[b], hi = seg_start[b + 1];
      if (lo >= hi) continue;
      double mx = *std::max_element(row.begin() + lo, row.begin() + hi);
      if (mx == kNegInf) continue;
      double seg = mx + std::log(kt.sum_exp(row.data() + lo, hi - lo, mx));
      std::size_t target = std::max<std::size_t>(b, ob);
      acc[target] = log_add(acc[target], seg);
    }
    int pos = n - 2;
    while (pos >= 0 && ++idx[pos] == m) idx[pos--] = 0;
    if (pos < 0) break;
  }
  ProbeResult res;
  res.levels = levels;
  double run = kNegInf;
  for (std::size_t b = 0; b < nb; ++b) {
    run = log_add(run, acc[b]);
    res.log_integral.push_back(run);
  }
  for (std::size_t b = 0; b + 1 < nb; ++b)
    res.growth.push_back((res.log_integral[b + 1] - res.log_integral[b]) / (levels[b + 1] - levels[b]));
  bool all_up = std::all_of(res.growth.begin(), res.growth.end(), [](double g) { return g > kGrowthThreshold; });
  bool all_flat = std::all_of(res.growth.begin(), res.growth.end(), [](double g) { return g < kGrowthThreshold; });
  res.verdict = all_up ? ProbeVerdict::divergent : all_flat ? ProbeVerdict::convergent : ProbeVerdict::inconclusive;
  return res;
}

}  // namespace

ProbeResult divergence_probe(const SncData& d, const Exponent& f, int sigma, double eps) {
  if (!(eps > 0)) throw input_error("bad-eps", "ε must be positive");
  d.check();
  if (static_cast<int>(f.size()) != d.dim()) throw input_error("dimension-mismatch", "germ length differs from scene");
  if (d.dim() > 4) throw input_error("probe-dimension", "divergence probe needs n ≤ 4");
  ProbeResult r = probe_at(d, f, sigma, eps, {100, 200, 400});
  if (r.verdict != ProbeVerdict::inconclusive) return r;
  ProbeResult wide = probe_at(d, f, sigma, eps, {150, 300, 600});
  wide.widened = true;
  return wide;
}

NormCheck verify_residue_norm(const SncData& d, const Exponent& f, int sigma, const NumericOptions& opt) {
  NormCheck rep;
  rep.closed_form = residue_norm_closed_form(d, f, sigma);
  rep.eps = opt.schedule;
  bool any_div = false;
  for (std::size_t j = 0; j < opt.schedule.size(); ++j) {
    IntegralSpec spec{d, f, sigma, opt.schedule[j], 1, opt.sampler, opt.seed + j, opt.budget};
    rep.estimates.push_back(estimate_R(spec));
    any_div = any_div || rep.estimates.back().diverged;
  }
  if (rep.closed_form.is_infinite()) {
    rep.pass = any_div;
    if (!any_div) rep.contradiction = "closed form infinite but every estimate converged";
    return rep;
  }
  if (any_div) {
    rep.contradiction = "closed form finite but R(ε) diverged";
    return rep;
  }
  std::size_t m = rep.estimates.size();
  if (m < 3) throw input_error("short-schedule", "the affine fit needs at least three ε values");
  double xbar = 0, ybar = 0;
  for (std::size_t j = 0; j < m; ++j) {
    xbar += rep.eps[j] / m;
    ybar += *rep.estimates[j].value / m;
  }
  double sxx = 0, sxy = 0;
  for (std::size_t j = 0; j < m; ++j) {
    sxx += (rep.eps[j] - xbar) * (rep.eps[j] - xbar);
    sxy += (rep.eps[j] - xbar) * (*rep.estimates[j].value - ybar);
  }
  double slope = sxy / sxx;
  rep.limit = ybar - slope * xbar;
  double rss = 0, var_stat = 0, ymax = 0;
  for (std::size_t j = 0; j < m; ++j) {
    double yj = *rep.estimates[j].value;
    double r = yj - (rep.limit + slope * rep.eps[j]);
    rss += r * r;
    double cj = 1.0 / m - xbar * (rep.eps[j] - xbar) / sxx;
    var_stat += cj * cj * rep.estimates[j].stderr_ * rep.estimates[j].stderr_;
    ymax = std::max(ymax, std::abs(yj));
  }
  double var_fit = rss / (m - 2) * (1.0 / m + xbar * xbar / sxx);
  rep.limit_stderr = std::sqrt(var_fit + var_stat);
  double closed = rep.closed_form.value();
  if (closed != 0) {
    rep.deviation = std::abs(rep.limit - closed) / std::abs(closed);
    rep.tolerance = std::max(opt.rel_tol, 3 * rep.limit_stderr / std::abs(closed));
  } else {
    rep.deviation = std::abs(rep.limit);
    rep.tolerance = std::max(opt.rel_tol * ymax, 3 * rep.limit_stderr);
  }
  rep.pass = rep.deviation <= rep.tolerance;
  return rep;
}

XlogxReport xlogx_check(int sigma, double delta, double eps, const std::vector<double>& psi_values) {
  if (!(delta > 0) || !(eps > 0)) throw input_error("bad-parameter", "δ and ε must be positive");
  XlogxReport rep;
  rep.min_slack = std::numeric_limits<double>::infinity();
  double c = std::exp(delta) * std::pow((1 + eps) / (delta * std::numbers::e), 1 + eps);
  bool ok = true;
  for (double psi : psi_values) {
    if (psi > -1) throw input_error("bad-psi", "samples must satisfy ψ ≤ −1");
    double x = -psi;
    double lhs = std::pow(x, -(sigma + delta));
    double rhs = c / (std::pow(x, sigma) * std::pow(1 + std::log(x), 1 + eps));
    double slack = rhs - lhs;
    if (slack < rep.min_slack) {
      rep.min_slack = slack;
      rep.witness_psi = psi;
    }
    // Equality is attained at log(e|ψ|) = (1+ε)/δ; allow rounding there.
    if (slack < -1e-12 * std::max(lhs, rhs)) ok = false;
  }
  rep.pass = ok;
  return rep;
}

ExtensionCheck verify_extension_estimate(const SncData& d, const std::vector<ResidueInput>& data, int sigma,
                                         const NumericOptions& opt) {
  ExtensionCheck rep;
  rep.extension = extension_from_residues(d, data, sigma);
  rep.bound_value = rep.extension.bound.value();
  rep.eps = opt.schedule;
  rep.pass = true;
  for (std::size_t j = 0; j < opt.schedule.size(); ++j) {
    Estimate e;
    if (rep.extension.f.empty()) {
      e.value = 0;
      e.seed = opt.seed + j;
      e.sampler = opt.sampler;
    } else {
      IntegralSpec spec{d, Exponent(d.dim(), 0), sigma, opt.schedule[j], 1, opt.sampler, opt.seed + j, opt.budget};
      e = estimate_R(spec, rep.extension.f);
    }
    rep.estimates.push_back(e);
    if (e.diverged) {
      rep.pass = false;
      rep.failure = "R(ε) diverged at ε=" + std::to_string(opt.schedule[j]);
      continue;
    }
    double slack = rep.bound_value + 3 * e.stderr_ + 1e-12 * std::abs(rep.bound_value) - *e.value;
    if (slack < 0) {
      rep.pass = false;
      std::ostringstream os;
      os << "R(" << opt.schedule[j] << ") = " << *e.value << " exceeds C·R(0) = " << rep.bound_value;
      rep.failure = os.str();
    }
  }
  return rep;
}

}  // namespace adjideal
