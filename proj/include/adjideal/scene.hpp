#pragma once

#include "adjideal/monomial.hpp"
#include "adjideal/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace adjideal {

enum class DivisorKind { coordinate, exceptional, named };

struct DivisorId {
  std::string name;
  DivisorKind kind = DivisorKind::coordinate;
  int index = -1;       // base coordinate for coordinate divisors
  std::string section;  // defining section for named divisors
};

// Finitely supported rational combination of prime divisors, keyed by name.
using QDivisor = std::map<std::string, Rational>;

Rational coefficient(const QDivisor& d, const std::string& name);
QDivisor add(const QDivisor& a, const QDivisor& b, const Rational& scale_b = 1);
QDivisor floor_of(const QDivisor& d);
std::string to_string(const QDivisor& d);

// Polynomial germ with integer coefficients; only named curves use this.
struct NamedSection {
  std::string name;
  std::vector<std::pair<long, Exponent>> terms;

  Rational evaluate(const std::vector<Rational>& point) const;
  std::string render() const;
};

struct PotentialAtom {
  Rational coeff;
  MonomialIdeal ideal;  // ignored when `section` is set
  std::string section;
  bool is_named() const { return !section.empty(); }
};

struct Potential {
  std::vector<PotentialAtom> atoms;
  Rational offset = 0;

  static Potential zero() { return {}; }
};

struct Scene {
  int dim = 0;
  Rational polyradius = 1;
  Potential phi_L;
  Potential psi;
  std::optional<Rational> c;
  std::vector<NamedSection> sections;

  const NamedSection* section(const std::string& name) const;
};

// Monomial substitution z_i = y^{pullbacks[i]} together with the divisors
// that appear as coordinate hyperplanes {y_j = 0}.
struct Chart {
  std::string id;
  std::vector<Exponent> pullbacks;
  std::map<std::string, int> slots;

  int dim() const { return static_cast<int>(pullbacks.size()); }
  std::optional<std::string> divisor_at(int coord) const;
  std::optional<int> coord_of(const std::string& divisor) const;
  long determinant() const;
  bool toric() const;
  // Image exponent of z^a in chart coordinates.
  Exponent pull(const Exponent& a) const;
};

Chart identity_chart(int dim, const std::vector<std::string>& names, const std::string& id = "id");

// Pullback tables: for each named section (or named atom key) its divisor.
using PullbackTables = std::map<std::string, QDivisor>;

struct ValidationReport {
  bool valid = true;
  std::vector<std::string> violations;
  std::vector<std::string> notes;
};

ValidationReport validate_scene(const Scene& s);

// Pulled-back monomial ideal in chart coordinates.
MonomialIdeal pull_ideal(const MonomialIdeal& i, const Chart& chart);

Rational lelong(const Potential& p, const std::string& divisor, const Chart& chart, const PullbackTables& tables = {});

struct SncWeights {
  RationalVector weights;
  Rational offset;
};

SncWeights snc_weights(const Potential& p, const Chart& chart, const PullbackTables& tables = {});

// Rebuilds a potential made of coordinate atoms log|y_j|^2 from weights.
Potential potential_from_weights(const SncWeights& w);

// Ideal in dim + sections.size() formal variables: z^a times powers of the
// named sections. Generators whose expansion lies in the section-free part are
// removed by `reduce_twisted`.
struct TwistedIdeal {
  int dim = 0;
  std::vector<NamedSection> sections;
  MonomialIdeal ideal;
  MonomialIdeal formal;  // before absorption of section generators

  int total_dim() const { return dim + static_cast<int>(sections.size()); }
  bool is_unit() const { return ideal.is_unit(); }
  bool is_zero() const { return ideal.is_zero(); }
  // Generators with no section factor, in the base variables.
  MonomialIdeal monomial_part() const;
  // Section powers shared by every generator (if the ideal factors as s^k·M).
  std::optional<std::pair<std::vector<int>, MonomialIdeal>> factored() const;
  bool contains(const TwistedIdeal& other) const;  // other ⊆ *this
  bool operator==(const TwistedIdeal& other) const;
  bool operator!=(const TwistedIdeal& other) const { return !(*this == other); }
  std::vector<std::string> variable_names() const;
  std::string render() const;
};

TwistedIdeal twisted_from_monomial(const MonomialIdeal& i);
TwistedIdeal reduce_twisted(const std::vector<NamedSection>& sections, int dim, const MonomialIdeal& raw);
// Germs at a coordinate point (entries must lie inside the polydisc).
TwistedIdeal stalk(const TwistedIdeal& t, const std::vector<Rational>& point);

}  // namespace adjideal
