#include "adjideal/rational.hpp"

#include "adjideal/errors.hpp"

#include <cctype>
#include <charconv>

namespace adjideal {

namespace {

std::int64_t fit(const mpz_class& z) {
  if (!z.fits_slong_p()) throw assertion_failure("overflow", "integer does not fit in 64 bits");
  return z.get_si();
}

}  // namespace

std::int64_t Rational::numerator() const { return fit(get_num()); }
std::int64_t Rational::denominator() const { return fit(get_den()); }

std::int64_t floor_of(const Rational& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return fit(f);
}

std::int64_t ceil_of(const Rational& q) {
  mpz_class f;
  mpz_cdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return fit(f);
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

double to_double(const Rational& q) { return q.get_d(); }

namespace {

long parse_int(const std::string& text, const std::string& whole) {
  if (text.empty()) throw input_error("bad-rational", "empty integer in \"" + whole + "\"");
  long value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) throw input_error("bad-rational", "cannot parse \"" + whole + "\"");
  return value;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_int(s, text));
  long num = parse_int(s.substr(0, slash), text);
  long den = parse_int(s.substr(slash + 1), text);
  if (den == 0) throw input_error("bad-rational", "zero denominator in \"" + text + "\"");
  return Rational(num, den);
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace adjideal
