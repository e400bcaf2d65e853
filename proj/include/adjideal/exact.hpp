#pragma once

#include "adjideal/rational.hpp"

#include <string>
#include <vector>

namespace adjideal {

// coeff · π^pi_power · e^e_power · base^base_power, with base a positive rational.
struct ExactTerm {
  Rational coeff = 0;
  int pi_power = 0;
  Rational e_power = 0;
  Rational base = 1;
  Rational base_power = 0;
};

// Finite sum of exact terms, or +∞.
class ExactValue {
 public:
  static ExactValue zero() { return ExactValue(); }
  static ExactValue infinite() {
    ExactValue v;
    v.infinite_ = true;
    return v;
  }
  static ExactValue term(const ExactTerm& t);

  bool is_infinite() const { return infinite_; }
  bool is_zero() const { return !infinite_ && terms_.empty(); }
  const std::vector<ExactTerm>& terms() const { return terms_; }

  ExactValue operator+(const ExactValue& other) const;
  bool operator==(const ExactValue& other) const;
  bool operator!=(const ExactValue& other) const { return !(*this == other); }

  double value() const;
  std::string render() const;     // compact: "pi^2*e", "(3/4)*pi"
  std::string serialize() const;  // file form: "pi^2*e^1*(3/4)", exponents explicit, coefficient last

 private:
  void normalize();
  bool infinite_ = false;
  std::vector<ExactTerm> terms_;
};

}  // namespace adjideal
