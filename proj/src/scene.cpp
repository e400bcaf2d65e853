#include "adjideal/scene.hpp"

#include "adjideal/errors.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace adjideal {

Rational coefficient(const QDivisor& d, const std::string& name) {
  auto it = d.find(name);
  return it == d.end() ? Rational(0) : it->second;
}

QDivisor add(const QDivisor& a, const QDivisor& b, const Rational& scale_b) {
  QDivisor out = a;
  for (const auto& [k, v] : b) out[k] += scale_b * v;
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

QDivisor floor_of(const QDivisor& d) {
  QDivisor out;
  for (const auto& [k, v] : d) {
    auto f = adjideal::floor_of(v);
    if (f != 0) out[k] = Rational(f);
  }
  return out;
}

std::string to_string(const QDivisor& d) {
  if (d.empty()) return "0";
  std::string s;
  for (const auto& [k, v] : d) {
    if (!s.empty()) s += " + ";
    s += (v == 1 ? std::string() : to_string(v) + "*") + k;
  }
  return s;
}

Rational NamedSection::evaluate(const std::vector<Rational>& point) const {
  Rational total = 0;
  for (const auto& [coeff, e] : terms) {
    Rational t = coeff;
    for (std::size_t k = 0; k < e.size(); ++k)
      for (int p = 0; p < e[k]; ++p) t *= point.at(k);
    total += t;
  }
  return total;
}

std::string NamedSection::render() const {
  std::string s;
  for (const auto& [coeff, e] : terms) {
    long mag = coeff < 0 ? -coeff : coeff;
    std::string mono = render_monomial(e);
    if (s.empty())
      s += coeff < 0 ? "-" : "";
    else
      s += coeff < 0 ? "-" : "+";
    if (mag != 1)
      s += std::to_string(mag) + (mono == "1" ? "" : "*" + mono);
    else
      s += mono;
  }
  return s.empty() ? "0" : s;
}

const NamedSection* Scene::section(const std::string& name) const {
  for (const auto& s : sections)
    if (s.name == name) return &s;
  return nullptr;
}

std::optional<std::string> Chart::divisor_at(int coord) const {
  for (const auto& [name, j] : slots)
    if (j == coord) return name;
  return std::nullopt;
}

std::optional<int> Chart::coord_of(const std::string& divisor) const {
  auto it = slots.find(divisor);
  if (it == slots.end()) return std::nullopt;
  return it->second;
}

long Chart::determinant() const {
  const int n = dim();
  std::function<long(std::vector<int>, int)> rec = [&](std::vector<int> cols, int row) -> long {
    if (row == n) return 1;
    long total = 0;
    for (std::size_t k = 0; k < cols.size(); ++k) {
      int c = cols[k];
      long entry = pullbacks[row][c];
      std::vector<int> rest = cols;
      rest.erase(rest.begin() + static_cast<long>(k));
      if (entry != 0) total += ((k % 2) ? -1 : 1) * entry * rec(rest, row + 1);
    }
    return total;
  };
  std::vector<int> cols(n);
  for (int k = 0; k < n; ++k) cols[k] = k;
  return rec(cols, 0);
}

bool Chart::toric() const {
  long d = determinant();
  return d == 1 || d == -1;
}

Exponent Chart::pull(const Exponent& a) const {
  const int n = dim();
  if (static_cast<int>(a.size()) != n) throw input_error("dimension-mismatch", "pullback of " + to_string(a));
  Exponent out(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[j] += a[i] * pullbacks[i][j];
  return out;
}

Chart identity_chart(int dim, const std::vector<std::string>& names, const std::string& id) {
  Chart c;
  c.id = id;
  c.pullbacks.assign(dim, Exponent(dim, 0));
  for (int i = 0; i < dim; ++i) {
    c.pullbacks[i][i] = 1;
    if (i < static_cast<int>(names.size())) c.slots[names[i]] = i;
  }
  return c;
}

ValidationReport validate_scene(const Scene& s) {
  ValidationReport r;
  auto fail = [&](const std::string& msg) {
    r.valid = false;
    r.violations.push_back(msg);
  };
  if (s.dim <= 0) fail("dimension: must be positive");
  if (s.polyradius <= 0 || s.polyradius > 1) fail("polyradius: must lie in (0,1]");
  auto check_atoms = [&](const Potential& p, const std::string& role) {
    for (std::size_t k = 0; k < p.atoms.size(); ++k) {
      const auto& atom = p.atoms[k];
      std::string where = role + ".atoms[" + std::to_string(k) + "]";
      if (atom.is_named()) {
        if (!s.section(atom.section)) fail(where + ": unknown named section '" + atom.section + "'");
        continue;
      }
      if (atom.ideal.dim() != s.dim) fail(where + ": dimension mismatch");
      if (atom.coeff < 0 && !is_principal(atom.ideal))
        fail(where + ": negative coefficient needs a principal ideal (difference of neat potentials)");
      if (atom.ideal.is_zero()) fail(where + ": zero ideal gives an identically -inf potential");
    }
  };
  check_atoms(s.phi_L, "phi_L");
  check_atoms(s.psi, "psi");
  for (std::size_t k = 0; k < s.psi.atoms.size(); ++k) {
    const auto& atom = s.psi.atoms[k];
    std::string where = "psi.atoms[" + std::to_string(k) + "]";
    if (atom.coeff < 0) fail(where + ": psi coefficients must be non-negative");
    if (!atom.is_named() && atom.ideal.dim() == s.dim)
      for (const auto& g : atom.ideal.generators())
        if (total_degree(g) == 0) fail(where + ": generator of degree 0 breaks psi <= -1");
    if (atom.is_named())
      if (const auto* sec = s.section(atom.section))
        for (const auto& t : sec->terms)
          if (total_degree(t.second) == 0) fail(where + ": named section must vanish at the origin");
  }
  if (s.psi.offset > -1) fail("psi.offset: must be <= -1 so that psi <= -1 on the polydisc");
  if (s.c && *s.c < 0) fail("c: must be non-negative");
  for (const auto& sec : s.sections)
    for (const auto& t : sec.terms)
      if (static_cast<int>(t.second.size()) != s.dim) fail("sections." + sec.name + ": dimension mismatch");
  r.notes.push_back("the jump at m = 1 is checked by the chart engine, not here");
  return r;
}

MonomialIdeal pull_ideal(const MonomialIdeal& i, const Chart& chart) {
  std::vector<Exponent> gens;
  for (const auto& g : i.generators()) gens.push_back(chart.pull(g));
  return minimalize(chart.dim(), gens);
}

namespace {

Rational named_weight(const PotentialAtom& atom, const std::optional<std::string>& divisor,
                      const PullbackTables& tables) {
  auto it = tables.find(atom.section);
  if (it == tables.end()) throw input_error("unresolved-atom", "no pullback table for section '" + atom.section + "'");
  if (!divisor) return 0;
  return coefficient(it->second, *divisor);
}

}  // namespace

Rational lelong(const Potential& p, const std::string& divisor, const Chart& chart, const PullbackTables& tables) {
  auto j = chart.coord_of(divisor);
  if (!j) throw input_error("unresolved-divisor", "divisor '" + divisor + "' is not a coordinate of chart " + chart.id);
  Rational total = 0;
  for (const auto& atom : p.atoms) {
    if (atom.is_named()) {
      total += atom.coeff * named_weight(atom, divisor, tables);
      continue;
    }
    int best = -1;
    for (const auto& g : atom.ideal.generators()) {
      int v = chart.pull(g)[*j];
      best = best < 0 ? v : std::min(best, v);
    }
    total += atom.coeff * Rational(best < 0 ? 0 : best);
  }
  return total;
}

SncWeights snc_weights(const Potential& p, const Chart& chart, const PullbackTables& tables) {
  const int n = chart.dim();
  SncWeights w{RationalVector(n, Rational(0)), p.offset};
  for (const auto& atom : p.atoms) {
    if (atom.is_named()) {
      for (int j = 0; j < n; ++j) w.weights[j] += atom.coeff * named_weight(atom, chart.divisor_at(j), tables);
      continue;
    }
    MonomialIdeal pulled = pull_ideal(atom.ideal, chart);
    if (!is_principal(pulled))
      throw hypothesis_error("not-snc", "atom " + render_ideal(atom.ideal) + " is not principal in chart " + chart.id);
    const auto& g = pulled.generators().front();
    for (int j = 0; j < n; ++j) w.weights[j] += atom.coeff * Rational(g[j]);
  }
  return w;
}

Potential potential_from_weights(const SncWeights& w) {
  Potential p;
  p.offset = w.offset;
  const int n = static_cast<int>(w.weights.size());
  for (int j = 0; j < n; ++j) {
    if (w.weights[j] == 0) continue;
    Exponent e(n, 0);
    e[j] = 1;
    p.atoms.push_back({w.weights[j], MonomialIdeal::principal(e), ""});
  }
  return p;
}

// --- twisted ideals -------------------------------------------------------

namespace {

std::vector<Exponent> multiply_supports(const std::vector<Exponent>& a, const std::vector<Exponent>& b) {
  std::set<Exponent> out;
  for (const auto& x : a)
    for (const auto& y : b) {
      Exponent z(x.size());
      for (std::size_t k = 0; k < x.size(); ++k) z[k] = x[k] + y[k];
      out.insert(z);
    }
  return {out.begin(), out.end()};
}

// Monomial support of z^a · ∏ s_j^{k_j}, ignoring cancellations (a superset).
std::vector<Exponent> expansion_support(const std::vector<NamedSection>& sections, int dim, const Exponent& formal) {
  std::vector<Exponent> acc{Exponent(formal.begin(), formal.begin() + dim)};
  for (std::size_t s = 0; s < sections.size(); ++s) {
    std::vector<Exponent> terms;
    for (const auto& t : sections[s].terms) terms.push_back(t.second);
    for (int p = 0; p < formal[dim + s]; ++p) acc = multiply_supports(acc, terms);
  }
  return acc;
}

bool has_section_factor(int dim, const Exponent& formal) {
  for (std::size_t k = dim; k < formal.size(); ++k)
    if (formal[k] > 0) return true;
  return false;
}

bool formal_in(const std::vector<NamedSection>& sections, int dim, const MonomialIdeal& formal_ideal,
               const MonomialIdeal& monomial_part, const Exponent& g) {
  if (formal_ideal.contains(g)) return true;
  if (!has_section_factor(dim, g)) return false;
  for (const auto& m : expansion_support(sections, dim, g))
    if (!monomial_part.contains(m)) return false;
  return true;
}

}  // namespace

MonomialIdeal TwistedIdeal::monomial_part() const {
  std::vector<Exponent> gens;
  for (const auto& g : ideal.generators())
    if (!has_section_factor(dim, g)) gens.emplace_back(g.begin(), g.begin() + dim);
  return minimalize(dim, gens);
}

std::optional<std::pair<std::vector<int>, MonomialIdeal>> TwistedIdeal::factored() const {
  if (ideal.is_zero()) return std::nullopt;
  const int m = static_cast<int>(sections.size());
  std::vector<int> powers(ideal.generators().front().begin() + dim, ideal.generators().front().end());
  std::vector<Exponent> base;
  for (const auto& g : ideal.generators()) {
    for (int s = 0; s < m; ++s)
      if (g[dim + s] != powers[s]) return std::nullopt;
    base.emplace_back(g.begin(), g.begin() + dim);
  }
  return std::make_pair(powers, minimalize(dim, base));
}

bool TwistedIdeal::contains(const TwistedIdeal& other) const {
  if (other.dim != dim) throw input_error("dimension-mismatch", "twisted ideal containment");
  // Align section variables by name; sections missing on this side cannot be absorbed formally.
  MonomialIdeal mono = monomial_part();
  for (const auto& g : other.ideal.generators()) {
    Exponent lifted(total_dim(), 0);
    std::copy(g.begin(), g.begin() + dim, lifted.begin());
    bool foreign = false;
    for (std::size_t s = 0; s < other.sections.size(); ++s) {
      if (g[dim + s] == 0) continue;
      auto it = std::find_if(sections.begin(), sections.end(),
                             [&](const NamedSection& x) { return x.name == other.sections[s].name; });
      if (it == sections.end()) {
        foreign = true;
        continue;
      }
      lifted[dim + (it - sections.begin())] = g[dim + s];
    }
    if (foreign) {
      // Fall back to the expansion test on the other side's sections.
      bool all = true;
      for (const auto& m : expansion_support(other.sections, dim, g))
        if (!mono.contains(m)) all = false;
      if (!all) return false;
      continue;
    }
    if (!formal_in(sections, dim, ideal, mono, lifted)) return false;
  }
  return true;
}

bool TwistedIdeal::operator==(const TwistedIdeal& other) const { return contains(other) && other.contains(*this); }

std::vector<std::string> TwistedIdeal::variable_names() const {
  std::vector<std::string> names;
  for (int k = 0; k < dim; ++k) names.push_back("z" + std::to_string(k + 1));
  for (const auto& s : sections) names.push_back("(" + s.render() + ")");
  return names;
}

std::string TwistedIdeal::render() const { return render_ideal(ideal, variable_names()); }

TwistedIdeal twisted_from_monomial(const MonomialIdeal& i) { return TwistedIdeal{i.dim(), {}, i, i}; }

TwistedIdeal reduce_twisted(const std::vector<NamedSection>& sections, int dim, const MonomialIdeal& raw) {
  const int total = dim + static_cast<int>(sections.size());
  if (raw.dim() != total) throw input_error("dimension-mismatch", "twisted ideal variables");
  std::vector<Exponent> plain, twisted;
  for (const auto& g : raw.generators()) (has_section_factor(dim, g) ? twisted : plain).push_back(g);
  std::vector<Exponent> base;
  for (const auto& g : plain) base.emplace_back(g.begin(), g.begin() + dim);
  MonomialIdeal mono = minimalize(dim, base);
  std::vector<Exponent> kept = plain;
  for (const auto& g : twisted) {
    bool absorbed = true;
    for (const auto& m : expansion_support(sections, dim, g))
      if (!mono.contains(m)) {
        absorbed = false;
        break;
      }
    if (!absorbed) kept.push_back(g);
  }
  return TwistedIdeal{dim, sections, minimalize(total, kept), raw};
}

TwistedIdeal stalk(const TwistedIdeal& t, const std::vector<Rational>& point) {
  if (static_cast<int>(point.size()) != t.dim) throw input_error("bad-stalk", "point has wrong dimension");
  std::vector<bool> unit(t.total_dim(), false);
  for (int k = 0; k < t.dim; ++k) unit[k] = point[k] != 0;
  for (std::size_t s = 0; s < t.sections.size(); ++s) unit[t.dim + s] = t.sections[s].evaluate(point) != 0;
  MonomialIdeal local = localize(t.ideal, unit);
  // Expansions must be localized as well, so rebuild with localized sections.
  std::vector<NamedSection> secs = t.sections;
  for (auto& s : secs)
    for (auto& term : s.terms)
      for (int k = 0; k < t.dim; ++k)
        if (unit[k]) term.second[k] = 0;
  TwistedIdeal out = reduce_twisted(secs, t.dim, local);
  out.sections = t.sections;
  out.formal = localize(t.formal, unit);
  return out;
}

}  // namespace adjideal
