#include "adjideal/io.hpp"

#include "adjideal/errors.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace adjideal::io {

namespace {

[[noreturn]] void schema(const std::string& path, const std::string& what) {
  throw input_error("schema", (path.empty() ? std::string("/") : path) + ": " + what);
}

std::string child(const std::string& path, const std::string& key) {
  std::string k;
  for (char ch : key) {
    if (ch == '~') k += "~0";
    else if (ch == '/') k += "~1";
    else k += ch;
  }
  return path + "/" + k;
}
std::string child(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

const json& field(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) schema(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema(child(path, key), "missing field");
  return *it;
}

int int_from_json(const json& j, const std::string& path) {
  if (!j.is_number_integer()) schema(path, "expected an integer");
  return j.get<int>();
}

}  // namespace

Rational rational_from_json(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) schema(path, "expected a rational string \"p/q\" or an integer");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    schema(path, e.what());
  }
}

Exponent exponent_from_json(const json& j, const std::string& path) {
  if (!j.is_array()) schema(path, "expected an integer array");
  Exponent a;
  for (std::size_t i = 0; i < j.size(); ++i) {
    int v = int_from_json(j[i], child(path, i));
    if (v < 0) schema(child(path, i), "exponent entries must be non-negative");
    a.push_back(v);
  }
  return a;
}

MonomialIdeal ideal_from_json(const json& j, int dim, const std::string& path) {
  if (!j.is_array()) schema(path, "expected an array of exponents");
  std::vector<Exponent> gens;
  for (std::size_t i = 0; i < j.size(); ++i) {
    Exponent a = exponent_from_json(j[i], child(path, i));
    if (static_cast<int>(a.size()) != dim) schema(child(path, i), "exponent length differs from dim");
    gens.push_back(a);
  }
  return minimalize(dim, gens);
}

Potential potential_from_json(const json& j, int dim, const std::string& path) {
  Potential p;
  if (!j.is_object()) schema(path, "expected an object");
  if (j.contains("offset")) p.offset = rational_from_json(j["offset"], child(path, "offset"));
  if (j.contains("atoms")) {
    const json& atoms = j["atoms"];
    std::string ap = child(path, "atoms");
    if (!atoms.is_array()) schema(ap, "expected an array");
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      std::string ip = child(ap, i);
      PotentialAtom atom;
      atom.coeff = rational_from_json(field(atoms[i], "coeff", ip), child(ip, "coeff"));
      if (atoms[i].contains("section")) {
        if (!atoms[i]["section"].is_string()) schema(child(ip, "section"), "expected a section name");
        atom.section = atoms[i]["section"].get<std::string>();
      } else {
        atom.ideal = ideal_from_json(field(atoms[i], "ideal", ip), dim, child(ip, "ideal"));
      }
      p.atoms.push_back(atom);
    }
  }
  return p;
}

Scene scene_from_json(const json& j) {
  Scene s;
  s.dim = int_from_json(field(j, "dim", ""), "/dim");
  if (s.dim < 1) schema("/dim", "dimension must be positive");
  if (j.contains("polyradius")) s.polyradius = rational_from_json(j["polyradius"], "/polyradius");
  if (j.contains("phi_L")) s.phi_L = potential_from_json(j["phi_L"], s.dim, "/phi_L");
  s.psi = potential_from_json(field(j, "psi", ""), s.dim, "/psi");
  if (j.contains("c") && !j["c"].is_null()) s.c = rational_from_json(j["c"], "/c");
  if (j.contains("sections")) {
    const json& secs = j["sections"];
    if (!secs.is_array()) schema("/sections", "expected an array");
    for (std::size_t i = 0; i < secs.size(); ++i) {
      std::string ip = child("/sections", i);
      NamedSection ns;
      const json& name = field(secs[i], "name", ip);
      if (!name.is_string()) schema(child(ip, "name"), "expected a string");
      ns.name = name.get<std::string>();
      const json& terms = field(secs[i], "terms", ip);
      std::string tp = child(ip, "terms");
      if (!terms.is_array()) schema(tp, "expected an array of [coefficient, exponent]");
      for (std::size_t t = 0; t < terms.size(); ++t) {
        std::string ttp = child(tp, t);
        if (!terms[t].is_array() || terms[t].size() != 2) schema(ttp, "expected [coefficient, exponent]");
        long coeff = int_from_json(terms[t][0], child(ttp, 0));
        Exponent a = exponent_from_json(terms[t][1], child(ttp, 1));
        if (static_cast<int>(a.size()) != s.dim) schema(child(ttp, 1), "exponent length differs from dim");
        ns.terms.emplace_back(coeff, a);
      }
      s.sections.push_back(ns);
    }
  }
  return s;
}

namespace {

QDivisor qdivisor_from_json(const json& j, const std::string& path) {
  if (!j.is_object()) schema(path, "expected an object of divisor coefficients");
  QDivisor d;
  for (auto it = j.begin(); it != j.end(); ++it) {
    Rational v = rational_from_json(it.value(), child(path, it.key()));
    if (v != 0) d[it.key()] = v;
  }
  return d;
}

}  // namespace

ResolutionCertificate certificate_from_json(const json& j) {
  ResolutionCertificate c;
  const json& charts = field(j, "charts", "");
  if (!charts.is_array() || charts.empty()) schema("/charts", "expected a non-empty array");
  for (std::size_t i = 0; i < charts.size(); ++i) {
    std::string ip = child("/charts", i);
    Chart ch;
    const json& id = field(charts[i], "id", ip);
    if (!id.is_string()) schema(child(ip, "id"), "expected a string");
    ch.id = id.get<std::string>();
    const json& pb = field(charts[i], "pullbacks", ip);
    std::string pp = child(ip, "pullbacks");
    if (!pb.is_array()) schema(pp, "expected an array of exponents");
    for (std::size_t r = 0; r < pb.size(); ++r) ch.pullbacks.push_back(exponent_from_json(pb[r], child(pp, r)));
    for (std::size_t r = 0; r < ch.pullbacks.size(); ++r)
      if (ch.pullbacks[r].size() != ch.pullbacks.size()) schema(child(pp, r), "pullback matrix must be square");
    if (i == 0) c.dim = ch.dim();
    if (ch.dim() != c.dim) schema(pp, "chart dimension differs from the first chart");
    if (charts[i].contains("slots")) {
      const json& slots = charts[i]["slots"];
      std::string sp = child(ip, "slots");
      if (!slots.is_object()) schema(sp, "expected an object name → coordinate");
      for (auto it = slots.begin(); it != slots.end(); ++it) {
        int coord = int_from_json(it.value(), child(sp, it.key()));
        if (coord < 0 || coord >= c.dim) schema(child(sp, it.key()), "coordinate index out of range");
        ch.slots[it.key()] = coord;
      }
    }
    c.charts.push_back(ch);
  }
  if (j.contains("K_rel")) c.k_rel = qdivisor_from_json(j["K_rel"], "/K_rel");
  if (j.contains("tables")) {
    const json& t = j["tables"];
    if (!t.is_object()) schema("/tables", "expected an object");
    for (auto it = t.begin(); it != t.end(); ++it) c.tables[it.key()] = qdivisor_from_json(it.value(), child("/tables", it.key()));
  }
  const json& reg = field(j, "registry", "");
  if (!reg.is_array()) schema("/registry", "expected an array");
  int next_coord = 0;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < reg.size(); ++i) {
    std::string ip = child("/registry", i);
    DivisorId d;
    if (reg[i].is_string()) {
      // Bare names: K_rel support is exceptional, the rest are coordinate divisors in order.
      d.name = reg[i].get<std::string>();
      if (c.k_rel.count(d.name)) {
        d.kind = DivisorKind::exceptional;
      } else {
        d.kind = DivisorKind::coordinate;
        d.index = next_coord++;
      }
    } else if (reg[i].is_object()) {
      const json& name = field(reg[i], "name", ip);
      if (!name.is_string()) schema(child(ip, "name"), "expected a string");
      d.name = name.get<std::string>();
      std::string kind = reg[i].value("kind", std::string("exceptional"));
      if (kind == "coordinate") {
        d.kind = DivisorKind::coordinate;
        d.index = int_from_json(field(reg[i], "index", ip), child(ip, "index"));
      } else if (kind == "exceptional") {
        d.kind = DivisorKind::exceptional;
      } else if (kind == "named") {
        d.kind = DivisorKind::named;
        const json& sec = field(reg[i], "section", ip);
        if (!sec.is_string()) schema(child(ip, "section"), "expected a section name");
        d.section = sec.get<std::string>();
      } else {
        schema(child(ip, "kind"), "expected coordinate, exceptional or named");
      }
    } else {
      schema(ip, "expected a name or a divisor object");
    }
    if (!seen.insert(d.name).second) schema(ip, "duplicate divisor name " + d.name);
    c.registry.push_back(d);
  }
  return c;
}

SncData snc_from_json(const json& j) {
  SncData d;
  const json& b = field(j, "b", "");
  const json& nu = field(j, "nu", "");
  if (!b.is_array()) schema("/b", "expected an array");
  if (!nu.is_array()) schema("/nu", "expected an array");
  if (b.size() != nu.size()) schema("/nu", "length differs from b");
  for (std::size_t i = 0; i < b.size(); ++i) d.b.push_back(rational_from_json(b[i], child("/b", i)));
  for (std::size_t i = 0; i < nu.size(); ++i) {
    Rational v = rational_from_json(nu[i], child("/nu", i));
    if (v < 0) schema(child("/nu", i), "ψ weights must be non-negative");
    d.nu.push_back(v);
  }
  if (j.contains("offset_psi")) d.offset_psi = rational_from_json(j["offset_psi"], "/offset_psi");
  if (j.contains("offset_phi")) d.offset_phi = rational_from_json(j["offset_phi"], "/offset_phi");
  if (d.offset_psi > -1) schema("/offset_psi", "offset must be ≤ −1");
  return d;
}

std::vector<ResidueInput> residue_inputs_from_json(const json& j, const std::string& path) {
  if (!j.is_array()) schema(path, "expected an array of residue data");
  std::vector<ResidueInput> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::string ip = child(path, i);
    ResidueInput r;
    const json& centre = field(j[i], "centre", ip);
    if (!centre.is_array()) schema(child(ip, "centre"), "expected coordinate indices");
    for (std::size_t k = 0; k < centre.size(); ++k) r.centre.push_back(int_from_json(centre[k], child(child(ip, "centre"), k)));
    if (j[i].contains("g") && !j[i]["g"].is_null()) r.germ = exponent_from_json(j[i]["g"], child(ip, "g"));
    out.push_back(r);
  }
  return out;
}

json to_json(const Rational& q) { return to_string(q); }

json to_json(const Exponent& a) { return json(a); }

json to_json(const MonomialIdeal& i) {
  json arr = json::array();
  for (const auto& g : i.generators()) arr.push_back(g);
  return arr;
}

json to_json(const TwistedIdeal& t) {
  return {{"variables", t.variable_names()}, {"generators", to_json(t.ideal)}, {"rendered", t.render()}};
}

json to_json(const Potential& p) {
  json atoms = json::array();
  for (const auto& a : p.atoms) {
    json o{{"coeff", to_json(a.coeff)}};
    if (a.is_named()) o["section"] = a.section;
    else o["ideal"] = to_json(a.ideal);
    atoms.push_back(o);
  }
  return {{"atoms", atoms}, {"offset", to_json(p.offset)}};
}

json to_json(const Scene& s) {
  json j{{"dim", s.dim}, {"polyradius", to_json(s.polyradius)}, {"phi_L", to_json(s.phi_L)}, {"psi", to_json(s.psi)}};
  if (s.c) j["c"] = to_json(*s.c);
  if (!s.sections.empty()) {
    json secs = json::array();
    for (const auto& ns : s.sections) {
      json terms = json::array();
      for (const auto& [coeff, a] : ns.terms) terms.push_back(json::array({coeff, a}));
      secs.push_back({{"name", ns.name}, {"terms", terms}});
    }
    j["sections"] = secs;
  }
  return j;
}

json to_json(const QDivisor& d) {
  json o = json::object();
  for (const auto& [k, v] : d) o[k] = to_json(v);
  return o;
}

json to_json(const ResolutionCertificate& c) {
  json charts = json::array();
  for (const auto& ch : c.charts) {
    json slots = json::object();
    for (const auto& [k, v] : ch.slots) slots[k] = v;
    charts.push_back({{"id", ch.id}, {"pullbacks", ch.pullbacks}, {"slots", slots}});
  }
  json reg = json::array();
  for (const auto& d : c.registry) {
    json o{{"name", d.name}};
    switch (d.kind) {
      case DivisorKind::coordinate:
        o["kind"] = "coordinate";
        o["index"] = d.index;
        break;
      case DivisorKind::exceptional: o["kind"] = "exceptional"; break;
      case DivisorKind::named:
        o["kind"] = "named";
        o["section"] = d.section;
        break;
    }
    reg.push_back(o);
  }
  json tables = json::object();
  for (const auto& [k, v] : c.tables) tables[k] = to_json(v);
  return {{"charts", charts}, {"registry", reg}, {"tables", tables}, {"K_rel", to_json(c.k_rel)}};
}

json to_json(const SncData& d) {
  json b = json::array(), nu = json::array();
  for (const auto& x : d.b) b.push_back(to_json(x));
  for (const auto& x : d.nu) nu.push_back(to_json(x));
  return {{"b", b}, {"nu", nu}, {"offset_psi", to_json(d.offset_psi)}, {"offset_phi", to_json(d.offset_phi)}};
}

json to_json(const ResidueDatum& r) {
  json j{{"centre", r.centre}, {"lelong_product", to_json(r.lelong_product)}, {"norm", r.norm.serialize()}};
  j["g"] = r.germ ? json(*r.germ) : json(nullptr);
  return j;
}

json to_json(const Estimate& e) {
  json j{{"stderr", e.stderr_}, {"diverged", e.diverged}, {"samples", e.samples}, {"seed", e.seed},
         {"sampler", to_string(e.sampler)}};
  j["value"] = e.value ? json(*e.value) : json(nullptr);
  if (!e.witness.empty()) j["witness"] = e.witness;
  if (!e.diagnostics.empty()) j["diagnostics"] = e.diagnostics;
  return j;
}

json parse_text(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw input_error("bad-json", origin + ": " + e.what());
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("missing-file", path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str(), path);
}

std::string certificate_hash(const ResolutionCertificate& c) {
  std::string s = to_json(c).dump();
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace adjideal::io
