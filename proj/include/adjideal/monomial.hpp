#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace adjideal {

using Exponent = std::vector<int>;

bool divides(const Exponent& a, const Exponent& b);  // a <= b componentwise
int total_degree(const Exponent& a);

// Ideal generated by monomials, always stored in minimal form with
// generators sorted lexicographically. Zero ideal: no generators.
// Unit ideal: the single zero exponent.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  explicit MonomialIdeal(int dim) : dim_(dim) {}

  static MonomialIdeal zero(int dim) { return MonomialIdeal(dim); }
  static MonomialIdeal unit(int dim);
  static MonomialIdeal principal(const Exponent& a);
  // Ideal of the coordinate subspace {z_i = 0 : i in coords}.
  static MonomialIdeal coordinate_prime(int dim, const std::vector<int>& coords);

  int dim() const { return dim_; }
  const std::vector<Exponent>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  bool contains(const Exponent& a) const;
  bool contains(const MonomialIdeal& other) const;  // other ⊆ *this
  // Largest exponent entry among generators (0 for zero/unit).
  int max_entry() const;

  bool operator==(const MonomialIdeal& other) const {
    return dim_ == other.dim_ && gens_ == other.gens_;
  }
  bool operator!=(const MonomialIdeal& other) const { return !(*this == other); }

 private:
  friend MonomialIdeal minimalize(int dim, std::vector<Exponent> gens);
  int dim_ = 0;
  std::vector<Exponent> gens_;
};

MonomialIdeal minimalize(int dim, std::vector<Exponent> gens);

enum class Combine { sum, product, intersection, colon };
MonomialIdeal combine(const MonomialIdeal& i, const MonomialIdeal& j, Combine kind);

// Ann(I/J) = ∩_{f in gens I} (J : f); requires J ⊆ I.
MonomialIdeal annihilator_quotient(const MonomialIdeal& i, const MonomialIdeal& j);

MonomialIdeal radical(const MonomialIdeal& i);
Exponent gcd_generators(const MonomialIdeal& i);
bool is_principal(const MonomialIdeal& i);
bool is_radical(const MonomialIdeal& i);

// Each minimal prime of a monomial ideal is a coordinate prime; returned as
// sorted coordinate lists. Zero ideal gives the empty list once, unit ideal none.
std::vector<std::vector<int>> minimal_primes(const MonomialIdeal& i);

// Germs at a point where the coordinates flagged in `unit_coords` do not vanish.
MonomialIdeal localize(const MonomialIdeal& i, const std::vector<bool>& unit_coords);

// Drops or keeps coordinates: result lives in the coordinates listed in `keep`.
MonomialIdeal restrict_to(const MonomialIdeal& i, const std::vector<int>& keep);

struct LinearConstraint {
  std::vector<int> row;  // non-negative
  long bound = 0;
};

// Minimal points of {a >= 0 : row·a >= bound for every constraint}.
MonomialIdeal staircase_minimal_points(int dim, const std::vector<LinearConstraint>& constraints);

// Squarefree products of `size` coordinates drawn from `coords`.
MonomialIdeal squarefree_products(int dim, const std::vector<int>& coords, int size);

std::string to_string(const Exponent& a);
// "⟨z1^2, z2⟩" style; variable names supplied by the caller when non-empty.
std::string render_ideal(const MonomialIdeal& i, const std::vector<std::string>& names = {});
std::string render_monomial(const Exponent& a, const std::vector<std::string>& names = {});

}  // namespace adjideal
