#include "adjideal/monomial.hpp"

#include "adjideal/errors.hpp"

#include <algorithm>
#include <numeric>

namespace adjideal {

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

int total_degree(const Exponent& a) { return std::accumulate(a.begin(), a.end(), 0); }

MonomialIdeal MonomialIdeal::unit(int dim) { return minimalize(dim, {Exponent(dim, 0)}); }

MonomialIdeal MonomialIdeal::principal(const Exponent& a) {
  return minimalize(static_cast<int>(a.size()), {a});
}

MonomialIdeal MonomialIdeal::coordinate_prime(int dim, const std::vector<int>& coords) {
  std::vector<Exponent> gens;
  for (int c : coords) {
    Exponent e(dim, 0);
    e.at(c) = 1;
    gens.push_back(e);
  }
  return minimalize(dim, gens);
}

bool MonomialIdeal::is_unit() const {
  return gens_.size() == 1 && std::all_of(gens_[0].begin(), gens_[0].end(), [](int x) { return x == 0; });
}

bool MonomialIdeal::contains(const Exponent& a) const {
  if (static_cast<int>(a.size()) != dim_)
    throw input_error("dimension-mismatch", "exponent " + to_string(a) + " in dimension " + std::to_string(dim_));
  for (const auto& g : gens_)
    if (divides(g, a)) return true;
  return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  if (other.dim_ != dim_) throw input_error("dimension-mismatch", "ideal containment");
  for (const auto& g : other.gens_)
    if (!contains(g)) return false;
  return true;
}

int MonomialIdeal::max_entry() const {
  int m = 0;
  for (const auto& g : gens_)
    for (int x : g) m = std::max(m, x);
  return m;
}

MonomialIdeal minimalize(int dim, std::vector<Exponent> gens) {
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != dim)
      throw input_error("dimension-mismatch", "generator " + to_string(g) + " in dimension " + std::to_string(dim));
    for (int x : g)
      if (x < 0) throw input_error("negative-exponent", to_string(g));
  }
  // Sorting by total degree first lets each generator be tested only against earlier survivors.
  std::sort(gens.begin(), gens.end(), [](const Exponent& a, const Exponent& b) {
    int da = total_degree(a), db = total_degree(b);
    return da != db ? da < db : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  MonomialIdeal out(dim);
  for (auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out.gens_)
      if (divides(h, g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.gens_.push_back(std::move(g));
  }
  std::sort(out.gens_.begin(), out.gens_.end());
  return out;
}

namespace {

void check_dims(const MonomialIdeal& i, const MonomialIdeal& j) {
  if (i.dim() != j.dim())
    throw input_error("dimension-mismatch",
                      "ideals of dimension " + std::to_string(i.dim()) + " and " + std::to_string(j.dim()));
}

MonomialIdeal colon_by_monomial(const MonomialIdeal& i, const Exponent& g) {
  std::vector<Exponent> gens;
  for (const auto& a : i.generators()) {
    Exponent q(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) q[k] = std::max(a[k] - g[k], 0);
    gens.push_back(q);
  }
  return minimalize(i.dim(), gens);
}

}  // namespace

MonomialIdeal combine(const MonomialIdeal& i, const MonomialIdeal& j, Combine kind) {
  check_dims(i, j);
  const int n = i.dim();
  switch (kind) {
    case Combine::sum: {
      std::vector<Exponent> gens = i.generators();
      gens.insert(gens.end(), j.generators().begin(), j.generators().end());
      return minimalize(n, gens);
    }
    case Combine::product:
    case Combine::intersection: {
      std::vector<Exponent> gens;
      for (const auto& a : i.generators())
        for (const auto& b : j.generators()) {
          Exponent c(n);
          for (int k = 0; k < n; ++k) c[k] = kind == Combine::product ? a[k] + b[k] : std::max(a[k], b[k]);
          gens.push_back(c);
        }
      return minimalize(n, gens);
    }
    case Combine::colon: {
      MonomialIdeal acc = MonomialIdeal::unit(n);
      for (const auto& g : j.generators()) acc = combine(acc, colon_by_monomial(i, g), Combine::intersection);
      return acc;
    }
  }
  return MonomialIdeal(n);
}

MonomialIdeal annihilator_quotient(const MonomialIdeal& i, const MonomialIdeal& j) {
  check_dims(i, j);
  if (!i.contains(j)) throw hypothesis_error("not-a-subideal", "annihilator_quotient needs J ⊆ I");
  MonomialIdeal acc = MonomialIdeal::unit(i.dim());
  for (const auto& f : i.generators()) acc = combine(acc, colon_by_monomial(j, f), Combine::intersection);
  return acc;
}

MonomialIdeal radical(const MonomialIdeal& i) {
  std::vector<Exponent> gens;
  for (const auto& a : i.generators()) {
    Exponent s(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) s[k] = a[k] > 0 ? 1 : 0;
    gens.push_back(s);
  }
  return minimalize(i.dim(), gens);
}

bool is_radical(const MonomialIdeal& i) { return radical(i) == i; }

Exponent gcd_generators(const MonomialIdeal& i) {
  if (i.is_zero()) throw input_error("undefined-input", "gcd of the zero ideal");
  Exponent g = i.generators().front();
  for (const auto& a : i.generators())
    for (std::size_t k = 0; k < g.size(); ++k) g[k] = std::min(g[k], a[k]);
  return g;
}

bool is_principal(const MonomialIdeal& i) { return i.generators().size() == 1; }

std::vector<std::vector<int>> minimal_primes(const MonomialIdeal& i) {
  const int n = i.dim();
  if (i.is_unit()) return {};
  // Minimal transversals of the generator supports, enumerated by increasing size.
  std::vector<unsigned> supports;
  for (const auto& a : i.generators()) {
    unsigned s = 0;
    for (int k = 0; k < n; ++k)
      if (a[k] > 0) s |= 1u << k;
    supports.push_back(s);
  }
  std::vector<unsigned> masks(1u << n);
  std::iota(masks.begin(), masks.end(), 0u);
  std::stable_sort(masks.begin(), masks.end(),
                   [](unsigned a, unsigned b) { return __builtin_popcount(a) < __builtin_popcount(b); });
  std::vector<unsigned> found;
  for (unsigned m : masks) {
    bool hits = std::all_of(supports.begin(), supports.end(), [m](unsigned s) { return (s & m) != 0; });
    if (!hits) continue;
    bool minimal = std::none_of(found.begin(), found.end(), [m](unsigned f) { return (f & m) == f; });
    if (minimal) found.push_back(m);
  }
  std::vector<std::vector<int>> out;
  for (unsigned m : found) {
    std::vector<int> coords;
    for (int k = 0; k < n; ++k)
      if (m & (1u << k)) coords.push_back(k);
    out.push_back(coords);
  }
  std::sort(out.begin(), out.end());
  return out;
}

MonomialIdeal localize(const MonomialIdeal& i, const std::vector<bool>& unit_coords) {
  std::vector<Exponent> gens = i.generators();
  for (auto& a : gens)
    for (int k = 0; k < i.dim(); ++k)
      if (unit_coords.at(k)) a[k] = 0;
  return minimalize(i.dim(), gens);
}

MonomialIdeal restrict_to(const MonomialIdeal& i, const std::vector<int>& keep) {
  std::vector<Exponent> gens;
  for (const auto& a : i.generators()) {
    Exponent r;
    for (int k : keep) r.push_back(a.at(k));
    gens.push_back(r);
  }
  return minimalize(static_cast<int>(keep.size()), gens);
}

MonomialIdeal staircase_minimal_points(int dim, const std::vector<LinearConstraint>& constraints) {
  long limit = 0;
  std::vector<bool> present(dim, false);
  for (const auto& c : constraints) {
    if (static_cast<int>(c.row.size()) != dim) throw input_error("dimension-mismatch", "staircase row length");
    for (int k = 0; k < dim; ++k) {
      if (c.row[k] < 0) throw input_error("negative-row", "staircase rows must be non-negative");
      if (c.row[k] > 0 && c.bound > 0) present[k] = true;
    }
    limit = std::max(limit, c.bound);
  }
  std::vector<const LinearConstraint*> active;
  for (const auto& c : constraints)
    if (c.bound > 0) active.push_back(&c);
  auto feasible = [&](const Exponent& a) {
    for (const auto* c : active) {
      long v = 0;
      for (int k = 0; k < dim; ++k) v += static_cast<long>(c->row[k]) * a[k];
      if (v < c->bound) return false;
    }
    return true;
  };
  // Odometer over the box [0, limit] on coordinates that touch an active constraint.
  std::vector<int> free_coords;
  for (int k = 0; k < dim; ++k)
    if (present[k]) free_coords.push_back(k);
  std::vector<Exponent> points;
  Exponent a(dim, 0);
  while (true) {
    if (feasible(a)) {
      bool minimal = true;
      for (int k : free_coords) {
        if (a[k] == 0) continue;
        --a[k];
        bool f = feasible(a);
        ++a[k];
        if (f) {
          minimal = false;
          break;
        }
      }
      if (minimal) points.push_back(a);
    }
    std::size_t p = 0;
    while (p < free_coords.size()) {
      int k = free_coords[p];
      if (a[k] < limit) {
        ++a[k];
        break;
      }
      a[k] = 0;
      ++p;
    }
    if (p == free_coords.size()) break;
  }
  return minimalize(dim, points);
}

MonomialIdeal squarefree_products(int dim, const std::vector<int>& coords, int size) {
  if (size <= 0) return MonomialIdeal::unit(dim);
  const int m = static_cast<int>(coords.size());
  if (size > m) return MonomialIdeal::zero(dim);
  std::vector<Exponent> gens;
  std::vector<int> pick(m, 0);
  std::fill(pick.begin(), pick.begin() + size, 1);
  std::sort(pick.begin(), pick.end());
  do {
    Exponent e(dim, 0);
    for (int k = 0; k < m; ++k)
      if (pick[k]) e.at(coords[k]) = 1;
    gens.push_back(e);
  } while (std::next_permutation(pick.begin(), pick.end()));
  return minimalize(dim, gens);
}

std::string to_string(const Exponent& a) {
  std::string s = "(";
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(a[k]);
  }
  return s + ")";
}

std::string render_monomial(const Exponent& a, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] == 0) continue;
    if (!s.empty()) s += "*";
    s += k < names.size() ? names[k] : "z" + std::to_string(k + 1);
    if (a[k] > 1) s += "^" + std::to_string(a[k]);
  }
  return s.empty() ? "1" : s;
}

std::string render_ideal(const MonomialIdeal& i, const std::vector<std::string>& names) {
  if (i.is_zero()) return "0";
  std::string s = "⟨";
  bool first = true;
  // Higher-degree-in-z1 first reads like the usual hand-written order.
  std::vector<Exponent> gens = i.generators();
  std::sort(gens.begin(), gens.end(), std::greater<>());
  for (const auto& a : gens) {
    if (!first) s += ", ";
    first = false;
    s += render_monomial(a, names);
  }
  return s + "⟩";
}

}  // namespace adjideal
