// Command line front-end: one subcommand per computation.
#include "adjideal/errors.hpp"
#include "adjideal/fixtures.hpp"
#include "adjideal/io.hpp"
#include "adjideal/numeric.hpp"
#include "adjideal/resolution.hpp"
#include "adjideal/suite.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace adjideal;
using io::json;

namespace {

struct Args {
  std::string fixture, scene_file, cert_file, snc_file, data_file;
  std::string format = "human";
  std::string c, f, stalk, m = "1", sampler = "tensor", suite = "all";
  std::uint64_t seed = 1;
  std::uint64_t suite_seed = suite::Options{}.seed;
  long budget = 20000;
  double eps = 0.1, scale = 1.0;
  int sigma = -1;
};

struct Inputs {
  Scene scene;
  ResolutionCertificate cert;
  std::string origin;
};

// A report is a list of human lines plus the same content as json.
struct Report {
  std::vector<std::string> lines;
  json body = json::object();
  json assertions = json::array();
  bool all_pass = true;

  void line(const std::string& s) { lines.push_back(s); }
  void assertion(const std::string& name, bool pass, const std::string& detail = "") {
    assertions.push_back({{"name", name}, {"pass", pass}, {"detail", detail}});
    all_pass = all_pass && pass;
    lines.push_back(std::string(pass ? "PASS " : "FAIL ") + name + (detail.empty() ? "" : "  " + detail));
  }
};

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

Exponent parse_exponent(const std::string& s, int dim) {
  if (s.empty()) return Exponent(dim, 0);
  Exponent a;
  for (const auto& t : split(s)) {
    try {
      std::size_t used = 0;
      int v = std::stoi(t, &used);
      if (used != t.size() || v < 0) throw std::invalid_argument(t);
      a.push_back(v);
    } catch (const std::exception&) {
      throw input_error("bad-exponent", "--f expects non-negative integers, got '" + s + "'");
    }
  }
  if (static_cast<int>(a.size()) != dim)
    throw input_error("dimension-mismatch", "--f has " + std::to_string(a.size()) + " entries, scene has " +
                                                std::to_string(dim));
  return a;
}

std::vector<Rational> parse_point(const std::string& s, int dim) {
  std::vector<Rational> p;
  for (const auto& t : split(s)) p.push_back(parse_rational(t));
  if (static_cast<int>(p.size()) != dim)
    throw input_error("dimension-mismatch", "--stalk needs " + std::to_string(dim) + " coordinates");
  return p;
}

Inputs load(const Args& a) {
  Inputs in;
  if (!a.fixture.empty()) {
    if (!a.scene_file.empty() || !a.cert_file.empty())
      throw input_error("conflicting-inputs", "--fixture cannot be combined with --scene/--cert");
    std::optional<Rational> c;
    if (!a.c.empty()) c = parse_rational(a.c);
    Fixture f = make_fixture(a.fixture, c);
    in.scene = f.scene;
    in.cert = f.cert;
    in.origin = "fixture " + a.fixture;
  } else if (!a.scene_file.empty()) {
    in.scene = io::scene_from_json(io::read_file(a.scene_file));
    if (!a.c.empty()) throw input_error("bad-parameter", "--c only parameterizes built-in fixtures; set c in the scene file");
    in.cert = a.cert_file.empty() ? identity_certificate(in.scene.dim) : io::certificate_from_json(io::read_file(a.cert_file));
    in.origin = "scene " + a.scene_file;
  } else {
    throw input_error("missing-input", "give --fixture or --scene");
  }
  if (in.cert.dim != in.scene.dim) throw input_error("dimension-mismatch", "certificate and scene dimensions differ");
  validate_certificate(in.cert, in.scene);
  return in;
}

json provenance(const Args& a, const Inputs* in) {
  json p = json::object();
  if (!a.fixture.empty()) p["fixture"] = a.fixture;
  if (!a.scene_file.empty()) p["scene_file"] = a.scene_file;
  if (!a.snc_file.empty()) p["snc_file"] = a.snc_file;
  if (in) {
    p["certificate_hash"] = io::certificate_hash(in->cert);
    if (in->scene.c) p["c"] = io::to_json(*in->scene.c);
  }
  return p;
}

TwistedIdeal maybe_stalk(const Args& a, const TwistedIdeal& t) {
  return a.stalk.empty() ? t : stalk(t, parse_point(a.stalk, t.dim));
}

json ideal_json(const TwistedIdeal& t) { return io::to_json(t); }

std::string estimate_line(const std::string& label, const Estimate& e) {
  std::ostringstream os;
  os << label << " = ";
  if (e.diverged) {
    os << "diverges (" << e.witness << ")";
  } else {
    os << std::setprecision(10) << *e.value << " ± " << std::setprecision(3) << e.stderr_;
  }
  os << "  [" << to_string(e.sampler) << ", seed " << e.seed << ", samples " << e.samples << "]";
  return os.str();
}

// Downstairs snc data: from --snc, or from a scene whose atoms are monomials.
SncData snc_input(const Args& a, Inputs* in) {
  if (!a.snc_file.empty()) return io::snc_from_json(io::read_file(a.snc_file));
  for (const auto* p : {&in->scene.phi_L, &in->scene.psi})
    for (const auto& atom : p->atoms)
      if (atom.is_named()) throw hypothesis_error("not-snc", "numeric residues need monomial atoms on the base");
  Chart id = identity_chart(in->scene.dim, {});
  SncData d;
  SncWeights phi = snc_weights(in->scene.phi_L, id), psi = snc_weights(in->scene.psi, id);
  d.b = phi.weights;
  d.nu = psi.weights;
  d.offset_phi = phi.offset;
  d.offset_psi = psi.offset;
  d.check();
  return d;
}

NumericOptions numeric_options(const Args& a) {
  NumericOptions o;
  o.sampler = parse_sampler(a.sampler);
  o.seed = a.seed;
  o.budget = a.budget;
  return o;
}

// --- verbs ----------------------------------------------------------------

void verb_multiplier(const Args& a, Inputs& in, Report& r) {
  Rational m = parse_rational(a.m);
  TwistedIdeal t = maybe_stalk(a, multiplier_ideal_global(in.scene, in.cert, m));
  r.line("I(φ_L + " + to_string(m) + "ψ) = " + t.render());
  r.body["m"] = io::to_json(m);
  r.body["ideal"] = ideal_json(t);
}

void verb_jumps(const Args&, Inputs& in, Report& r) {
  GlobalSetup g = global_setup(in.scene, in.cert);
  std::vector<Rational> base = base_jumps(in.scene, in.cert);
  std::string up, down;
  json ju = json::array(), jd = json::array();
  for (const auto& q : g.spectrum.jumps) {
    up += (up.empty() ? "" : ", ") + to_string(q);
    ju.push_back(io::to_json(q));
  }
  for (const auto& q : base) {
    down += (down.empty() ? "" : ", ") + to_string(q);
    jd.push_back(io::to_json(q));
  }
  std::string lc;
  for (const auto& d : g.lc_divisors) lc += (lc.empty() ? "" : ", ") + d;
  r.line("jumps upstairs: " + up);
  r.line("jumps of the pushed-forward family on [0,1]: " + down);
  r.line("m0 = " + to_string(g.spectrum.m0));
  r.line("lc divisors: " + (lc.empty() ? std::string("none") : lc));
  r.body["jumps"] = ju;
  r.body["base_jumps"] = jd;
  r.body["m0"] = io::to_json(g.spectrum.m0);
  r.body["lc_divisors"] = g.lc_divisors;
}

void verb_adjoint(const Args& a, Inputs& in, Report& r) {
  int top = sigma_mlc_global(in.scene, in.cert);
  int lo = a.sigma >= 0 ? a.sigma : 0, hi = a.sigma >= 0 ? a.sigma : top;
  json list = json::array();
  for (int s = lo; s <= hi; ++s) {
    TwistedIdeal t = maybe_stalk(a, adjoint_ideal_global(in.scene, in.cert, s));
    r.line("J_" + std::to_string(s) + " = " + t.render());
    list.push_back({{"sigma", s}, {"ideal", ideal_json(t)}});
  }
  r.body["sigma_mlc"] = top;
  r.body["adjoints"] = list;
}

void verb_lc_centres(const Args& a, Inputs& in, Report& r) {
  int top = sigma_mlc_global(in.scene, in.cert);
  int lo = a.sigma >= 1 ? a.sigma : 1, hi = a.sigma >= 1 ? a.sigma : std::max(top, 1);
  json list = json::array();
  for (int s = lo; s <= hi; ++s) {
    CentreReport c = sigma_lc_centres_global(in.scene, in.cert, s);
    r.line("lc_" + std::to_string(s) + " = " + render_centres(in.scene, c.images));
    r.line("  Ann(J_" + std::to_string(s) + "/J_" + std::to_string(s - 1) + ") = " + c.annihilator.render());
    r.assertion("lc_" + std::to_string(s) + " annihilator radical", c.radical);
    r.assertion("lc_" + std::to_string(s) + " images match annihilator locus", c.agree);
    json imgs = json::array();
    for (const auto& b : c.images) imgs.push_back({{"coords", b.coords}, {"sections", b.sections}});
    list.push_back({{"sigma", s},
                    {"centres", imgs},
                    {"rendered", render_centres(in.scene, c.images)},
                    {"annihilator", ideal_json(c.annihilator)}});
  }
  r.body["centres"] = list;
}

void verb_classify(const Args&, Inputs& in, Report& r) {
  Classification c = classify_pair(in.scene, in.cert);
  PairClass disc = classify_by_discrepancy(in.scene, in.cert);
  InversionReport inv = inversion_check(in.scene, in.cert);
  r.line("verdict: " + to_string(c.verdict));
  if (c.witness_sigma >= 0) r.line("least σ with J_σ = unit: " + std::to_string(c.witness_sigma));
  if (c.obstruction) r.line("obstruction: " + render_monomial(*c.obstruction));
  json filt = json::array();
  for (std::size_t s = 0; s < c.filtration.size(); ++s) {
    r.line("  J_" + std::to_string(s) + " = " + c.filtration[s].render());
    filt.push_back(ideal_json(c.filtration[s]));
  }
  for (const auto& l : inv.diff_lines) r.line("  " + l);
  r.assertion("discrepancy test agrees (" + to_string(disc) + ")", disc == c.verdict);
  r.assertion(std::string("inversion of adjunction: plt ") + (inv.plt ? "yes" : "no") + ", Diff klt " +
                  (inv.diff_klt ? "yes" : "no"),
              inv.consistent);
  r.body["verdict"] = to_string(c.verdict);
  r.body["discrepancy_verdict"] = to_string(disc);
  r.body["witness_sigma"] = c.witness_sigma;
  if (c.obstruction) r.body["obstruction"] = io::to_json(*c.obstruction);
  r.body["filtration"] = filt;
  r.body["inversion"] = {{"plt", inv.plt}, {"diff_klt", inv.diff_klt}, {"different", inv.diff_lines}};
}

void verb_compare(const Args& a, Inputs& in, Report& r) {
  CompareReport c = compare_adjoints(in.scene, in.cert);
  for (const auto& v : c.hypothesis_violations) r.line("hypothesis: " + v);
  CentreReport top = sigma_lc_centres_global(in.scene, in.cert, in.scene.dim);
  std::string summary = c.summary() + "; lc_" + std::to_string(in.scene.dim) + " = " + render_centres(in.scene, top.images);
  r.line(summary);
  r.line("EL = " + maybe_stalk(a, c.el).render() + "   J_1 = " + maybe_stalk(a, c.j1).render());
  r.line("HM = " + maybe_stalk(a, c.hm).render() + "   J_" + std::to_string(c.sigma_top) + " = " +
         maybe_stalk(a, c.jtop).render());
  r.assertion("EL ⊆ J_1", c.el_in_j1);
  r.assertion("HM ⊆ J_top", c.hm_in_jtop);
  r.body["summary"] = summary;
  r.body["c"] = io::to_json(c.c);
  r.body["el"] = ideal_json(maybe_stalk(a, c.el));
  r.body["hm"] = ideal_json(maybe_stalk(a, c.hm));
  r.body["j1"] = ideal_json(maybe_stalk(a, c.j1));
  r.body["jtop"] = ideal_json(maybe_stalk(a, c.jtop));
  r.body["sigma_top"] = c.sigma_top;
  r.body["el_equal"] = c.el_equal;
  r.body["hm_equal"] = c.hm_equal;
  r.body["hypothesis_violations"] = c.hypothesis_violations;
  if (!c.hypothesis_violations.empty())
    throw hypothesis_error("comparison-hypotheses", c.hypothesis_violations.front());
}

void verb_residue(const Args& a, Inputs* in, Report& r) {
  SncData d = snc_input(a, in);
  if (a.sigma < 0) throw input_error("missing-parameter", "residue needs --sigma");
  Exponent f = parse_exponent(a.f, d.dim());
  ExactValue closed = residue_norm_closed_form(d, f, a.sigma);
  r.line("f = " + render_monomial(f) + ", σ = " + std::to_string(a.sigma));
  r.line("closed form R(0) = " + closed.render() +
         (closed.is_infinite() ? "" : "  ≈ " + std::to_string(closed.value())));
  IntegralSpec spec{d, f, a.sigma, a.eps, 1, parse_sampler(a.sampler), a.seed, a.budget};
  Estimate e = estimate_R(spec);
  std::ostringstream eps_label;
  eps_label << "R(" << a.eps << ")";
  r.line(estimate_line(eps_label.str(), e));
  r.body["f"] = io::to_json(f);
  r.body["sigma"] = a.sigma;
  r.body["eps"] = a.eps;
  r.body["closed_form"] = closed.render();
  if (!closed.is_infinite()) r.body["closed_form_value"] = closed.value();
  r.body["estimate"] = io::to_json(e);
  json res = json::array();
  if (membership_J(d, f, a.sigma) && a.sigma >= 1)
    for (const auto& datum : residue_restrict(d, f, a.sigma)) {
      std::string where = "{";
      for (std::size_t k = 0; k < datum.centre.size(); ++k) where += (k ? "=z" : "z") + std::to_string(datum.centre[k] + 1);
      r.line("  residue on " + where + "=0}: " +
             (datum.germ ? render_monomial(*datum.germ) : std::string("0")) + ", norm " + datum.norm.render());
      res.push_back(io::to_json(datum));
    }
  r.body["residues"] = res;
  NormCheck chk = verify_residue_norm(d, f, a.sigma, numeric_options(a));
  std::ostringstream os;
  if (closed.is_infinite())
    os << "divergence detected at every ε";
  else
    os << "limit " << std::setprecision(8) << chk.limit << " ± " << std::setprecision(3) << chk.limit_stderr
       << ", deviation " << chk.deviation << " (tolerance " << chk.tolerance << ")";
  r.assertion("ε → 0 extrapolation matches closed form", chk.pass, os.str());
  json ests = json::array();
  for (const auto& x : chk.estimates) ests.push_back(io::to_json(x));
  r.body["limit_check"] = {{"eps", chk.eps},        {"estimates", ests},         {"limit", chk.limit},
                           {"stderr", chk.limit_stderr}, {"deviation", chk.deviation}, {"tolerance", chk.tolerance},
                           {"pass", chk.pass}};
  if (!chk.contradiction.empty()) throw assertion_failure("numeric-contradiction", chk.contradiction);
}

void verb_extend(const Args& a, Inputs* in, Report& r) {
  SncData d = snc_input(a, in);
  if (a.sigma < 1) throw input_error("missing-parameter", "extend needs --sigma >= 1");
  std::vector<ResidueInput> data;
  if (!a.data_file.empty()) {
    data = io::residue_inputs_from_json(io::read_file(a.data_file));
  } else {
    // Default: the germ 1 on every σ-centre.
    for (const auto& c : lc_centres(d, a.sigma)) data.push_back({c, Exponent(d.dim(), 0)});
  }
  ExtensionCheck chk = verify_extension_estimate(d, data, a.sigma, numeric_options(a));
  const Extension& ext = chk.extension;
  std::string fs;
  json jf = json::array();
  for (const auto& m : ext.f) {
    fs += (fs.empty() ? "" : " + ") + render_monomial(m);
    jf.push_back(io::to_json(m));
  }
  r.line("extension f = " + (fs.empty() ? std::string("0") : fs));
  r.line("bound C·R(0) = " + ext.bound.render() + "  (C = " + std::to_string(ext.bound_constant) + ")");
  json ests = json::array();
  for (const auto& e : chk.estimates) {
    r.line("  " + estimate_line("R", e));
    ests.push_back(io::to_json(e));
  }
  r.assertion("R(ε) ≤ C·R(0) within 3 standard errors", chk.pass, chk.failure);
  r.body["f"] = jf;
  r.body["bound_constant"] = ext.bound_constant;
  r.body["bound"] = ext.bound.render();
  r.body["bound_value"] = chk.bound_value;
  r.body["eps"] = chk.eps;
  r.body["estimates"] = ests;
}

void verb_verify(const Args& a, Report& r) {
  suite::Options o;
  o.seed = a.suite_seed;
  o.budget = a.budget;
  o.scale = a.scale;
  json list = json::array();
  for (const auto& c : suite::run(a.suite, o)) {
    std::ostringstream detail;
    detail << c.cases << " cases, seed " << c.seed;
    if (!c.detail.empty()) detail << ", " << c.detail;
    r.assertion(c.suite + "/" + c.name, c.pass, detail.str());
    list.push_back({{"suite", c.suite}, {"name", c.name}, {"pass", c.pass}, {"cases", c.cases}, {"seed", c.seed},
                    {"detail", c.detail}});
  }
  r.body["master_seed"] = o.seed;
  r.body["checks"] = list;
}

void emit(const Args& a, const std::string& verb, const json& prov, const Report& r) {
  if (a.format == "json") {
    json out = {{"verb", verb}, {"provenance", prov}, {"result", r.body}, {"assertions", r.assertions}};
    std::cout << out.dump(2) << "\n";
    return;
  }
  std::cout << verb;
  for (auto it = prov.begin(); it != prov.end(); ++it)
    std::cout << "  " << it.key() << "=" << (it->is_string() ? it->get<std::string>() : it->dump());
  std::cout << "\n";
  for (const auto& l : r.lines) std::cout << l << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"adjideal: adjoint ideals, lc centres and residue norms of monomial scenes"};
  app.require_subcommand(1);
  Args a;
  const std::vector<std::pair<std::string, std::string>> verbs{
      {"multiplier", "multiplier ideal I(φ_L + mψ)"},
      {"jumps", "jumping numbers and the lc divisors"},
      {"adjoint", "adjoint ideals J_σ"},
      {"lc-centres", "σ-lc centres and annihilators"},
      {"classify", "klt/plt/lc verdict for a boundary ψ = Σ d_i log|s_i|² − 1"},
      {"compare", "algebraic adjoint ideals against J_1 and the top J_σ"},
      {"residue", "residue norm: closed form, estimate and ε → 0 check"},
      {"extend", "extension from residue data with the norm estimate"},
      {"verify", "randomized invariant suite"}};
  std::map<std::string, CLI::App*> sub;
  for (const auto& [name, help] : verbs) {
    CLI::App* s = app.add_subcommand(name, help);
    sub[name] = s;
    s->add_option("--format", a.format, "human or json")->check(CLI::IsMember({"human", "json"}));
    s->add_option("--seed", a.seed, "seed for Monte Carlo sampling");
    s->add_option("--budget", a.budget, "Monte Carlo sample budget");
    if (name == "verify") {
      s->add_option("--suite", a.suite, "suite name or 'all'");
      s->add_option("--master-seed", a.suite_seed, "master seed of the randomized checks");
      s->add_option("--scale", a.scale, "multiplier on the number of random cases");
      continue;
    }
    s->add_option("--fixture", a.fixture, "built-in fixture")->check(CLI::IsMember(fixture_names()));
    s->add_option("--scene", a.scene_file, "scene JSON file");
    s->add_option("--cert", a.cert_file, "certificate JSON file (default: identity)");
    s->add_option("--c", a.c, "c parameter of a parameterized fixture");
    s->add_option("--stalk", a.stalk, "restrict ideals to the stalk at a coordinate point, e.g. 0,0");
    s->add_option("--sigma", a.sigma, "σ");
    s->add_option("--m", a.m, "m in I(φ_L + mψ)");
    if (name == "residue" || name == "extend") {
      s->add_option("--snc", a.snc_file, "snc data JSON instead of a scene");
      s->add_option("--f", a.f, "exponent of f, e.g. 1,0");
      s->add_option("--eps", a.eps, "ε for the single estimate");
      s->add_option("--sampler", a.sampler, "tensor or mc")->check(CLI::IsMember({"tensor", "mc"}));
      s->add_option("--data", a.data_file, "residue data JSON");
    }
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  std::string verb;
  for (const auto& [name, s] : sub)
    if (s->parsed()) verb = name;

  json prov;
  Report r;
  try {
    if (verb == "verify") {
      verb_verify(a, r);
      prov = provenance(a, nullptr);
    } else {
      Inputs in;
      bool snc_only = (verb == "residue" || verb == "extend") && !a.snc_file.empty();
      if (!snc_only) in = load(a);
      prov = provenance(a, snc_only ? nullptr : &in);
      if (verb == "multiplier") verb_multiplier(a, in, r);
      else if (verb == "jumps") verb_jumps(a, in, r);
      else if (verb == "adjoint") verb_adjoint(a, in, r);
      else if (verb == "lc-centres") verb_lc_centres(a, in, r);
      else if (verb == "classify") verb_classify(a, in, r);
      else if (verb == "compare") verb_compare(a, in, r);
      else if (verb == "residue") verb_residue(a, &in, r);
      else if (verb == "extend") verb_extend(a, &in, r);
    }
  } catch (const Error& e) {
    if (!r.lines.empty()) emit(a, verb, prov, r);
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  emit(a, verb, prov, r);
  return r.all_pass ? 0 : 3;
}
