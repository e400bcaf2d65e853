#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace adjideal {

// Canonical GMP rational with the few conveniences the engine needs.
class Rational : public mpq_class {
 public:
  Rational() = default;
  Rational(long n) : mpq_class(n) {}  // NOLINT: implicit by design
  Rational(int n) : mpq_class(static_cast<long>(n)) {}
  Rational(long long n) : mpq_class(static_cast<long>(n)) {}
  Rational(long n, long d) : mpq_class(n, d) { canonicalize(); }
  Rational(const mpq_class& q) : mpq_class(q) {}
  template <class T, class U>
  Rational(const __gmp_expr<T, U>& e) : mpq_class(e) {}

  std::int64_t numerator() const;
  std::int64_t denominator() const;
};

using RationalVector = std::vector<Rational>;

std::int64_t floor_of(const Rational& q);
std::int64_t ceil_of(const Rational& q);
bool is_integer(const Rational& q);
double to_double(const Rational& q);

// "p/q", "p" or "-p/q"; throws input_error on malformed text or zero denominator.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

}  // namespace adjideal
