#include "adjideal/exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <tuple>

namespace adjideal {

namespace {

auto key(const ExactTerm& t) { return std::make_tuple(t.pi_power, t.e_power, t.base, t.base_power); }

bool same_shape(const ExactTerm& a, const ExactTerm& b) {
  return a.pi_power == b.pi_power && a.e_power == b.e_power && a.base == b.base && a.base_power == b.base_power;
}

}  // namespace

ExactValue ExactValue::term(const ExactTerm& t) {
  ExactValue v;
  v.terms_.push_back(t);
  v.normalize();
  return v;
}

void ExactValue::normalize() {
  for (auto& t : terms_)
    if (t.base == 1 || t.base_power == 0) {
      t.base = 1;
      t.base_power = 0;
    }
  std::sort(terms_.begin(), terms_.end(), [](const ExactTerm& a, const ExactTerm& b) { return key(a) < key(b); });
  std::vector<ExactTerm> merged;
  for (const auto& t : terms_) {
    if (!merged.empty() && same_shape(merged.back(), t))
      merged.back().coeff += t.coeff;
    else
      merged.push_back(t);
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(), [](const ExactTerm& t) { return t.coeff == 0; }),
               merged.end());
  terms_ = std::move(merged);
}

ExactValue ExactValue::operator+(const ExactValue& other) const {
  if (infinite_ || other.infinite_) return infinite();
  ExactValue v = *this;
  v.terms_.insert(v.terms_.end(), other.terms_.begin(), other.terms_.end());
  v.normalize();
  return v;
}

bool ExactValue::operator==(const ExactValue& other) const {
  if (infinite_ || other.infinite_) return infinite_ == other.infinite_;
  if (terms_.size() != other.terms_.size()) return false;
  for (std::size_t k = 0; k < terms_.size(); ++k)
    if (!same_shape(terms_[k], other.terms_[k]) || terms_[k].coeff != other.terms_[k].coeff) return false;
  return true;
}

double ExactValue::value() const {
  if (infinite_) return std::numeric_limits<double>::infinity();
  double total = 0;
  for (const auto& t : terms_)
    total += to_double(t.coeff) * std::pow(std::numbers::pi, t.pi_power) * std::exp(to_double(t.e_power)) *
             std::pow(to_double(t.base), to_double(t.base_power));
  return total;
}

std::string ExactValue::render() const {
  if (infinite_) return "inf";
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& t : terms_) {
    if (!s.empty()) s += " + ";
    std::string part;
    auto append = [&](const std::string& x) { part += part.empty() ? x : "*" + x; };
    if (t.coeff != 1) append(is_integer(t.coeff) ? to_string(t.coeff) : "(" + to_string(t.coeff) + ")");
    if (t.pi_power != 0) append(t.pi_power == 1 ? "pi" : "pi^" + std::to_string(t.pi_power));
    if (t.e_power == 1) append("e");
    else if (t.e_power != 0) append("e^" + (is_integer(t.e_power) ? to_string(t.e_power) : "(" + to_string(t.e_power) + ")"));
    if (t.base_power != 0) append("(" + to_string(t.base) + ")^(" + to_string(t.base_power) + ")");
    if (part.empty()) part = "1";
    s += part;
  }
  return s;
}

std::string ExactValue::serialize() const {
  if (infinite_) return "inf";
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& t : terms_) {
    if (!s.empty()) s += " + ";
    std::vector<std::string> factors;
    if (t.pi_power != 0) factors.push_back("pi^" + std::to_string(t.pi_power));
    if (t.e_power != 0) factors.push_back("e^" + (is_integer(t.e_power) ? to_string(t.e_power) : "(" + to_string(t.e_power) + ")"));
    if (t.base_power != 0) factors.push_back("(" + to_string(t.base) + ")^(" + to_string(t.base_power) + ")");
    if (t.coeff != 1 || factors.empty()) factors.push_back("(" + to_string(t.coeff) + ")");
    for (std::size_t k = 0; k < factors.size(); ++k) s += (k ? "*" : "") + factors[k];
  }
  return s;
}

}  // namespace adjideal
