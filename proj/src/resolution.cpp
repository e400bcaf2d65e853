#include "adjideal/resolution.hpp"

#include "adjideal/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace adjideal {

const DivisorId* ResolutionCertificate::divisor(const std::string& name) const {
  for (const auto& d : registry)
    if (d.name == name) return &d;
  return nullptr;
}

const Chart* ResolutionCertificate::chart(const std::string& id) const {
  for (const auto& c : charts)
    if (c.id == id) return &c;
  return nullptr;
}

bool ResolutionCertificate::has_named() const {
  return std::any_of(registry.begin(), registry.end(), [](const DivisorId& d) { return d.kind == DivisorKind::named; });
}

std::vector<std::string> ResolutionCertificate::names() const {
  std::vector<std::string> out;
  for (const auto& d : registry) out.push_back(d.name);
  return out;
}

ResolutionCertificate identity_certificate(int dim, const std::vector<std::string>& names) {
  ResolutionCertificate cert;
  cert.dim = dim;
  std::vector<std::string> labels = names;
  for (int i = static_cast<int>(labels.size()); i < dim; ++i) labels.push_back("D" + std::to_string(i + 1));
  for (int i = 0; i < dim; ++i) cert.registry.push_back({labels[i], DivisorKind::coordinate, i, ""});
  cert.charts.push_back(identity_chart(dim, labels));
  return cert;
}

namespace {

Exponent column(const Chart& c, int j) {
  Exponent v(c.dim());
  for (int i = 0; i < c.dim(); ++i) v[i] = c.pullbacks[i][j];
  return v;
}

std::string atom_key(const std::string& role, std::size_t k) { return role + "_atom_" + std::to_string(k); }

}  // namespace

QDivisor toric_k_rel(const ResolutionCertificate& cert) {
  QDivisor k;
  for (const auto& ch : cert.charts) {
    if (!ch.toric()) continue;
    for (const auto& [name, j] : ch.slots) {
      const DivisorId* d = cert.divisor(name);
      if (!d || d->kind != DivisorKind::exceptional) continue;
      Exponent v = column(ch, j);
      k[name] = Rational(total_degree(v) - 1);
    }
  }
  for (auto it = k.begin(); it != k.end();) it = it->second == 0 ? k.erase(it) : std::next(it);
  return k;
}

void validate_certificate(const ResolutionCertificate& cert, const Scene& scene) {
  const int n = cert.dim;
  if (n != scene.dim) throw input_error("dimension-mismatch", "certificate and scene dimensions differ");
  if (cert.charts.empty()) throw input_error("bad-certificate", "no charts");
  std::set<std::string> names;
  for (const auto& d : cert.registry) {
    if (!names.insert(d.name).second) throw input_error("bad-certificate", "duplicate divisor " + d.name);
    if (d.kind == DivisorKind::named && !scene.section(d.section))
      throw input_error("bad-certificate", "divisor " + d.name + " names unknown section " + d.section);
  }
  std::set<std::string> ids;
  std::set<std::string> seen;
  const bool trusted = cert.has_named();
  for (const auto& ch : cert.charts) {
    if (!ids.insert(ch.id).second) throw input_error("bad-certificate", "duplicate chart id " + ch.id);
    if (ch.dim() != n) throw input_error("bad-certificate", "chart " + ch.id + " has wrong size");
    for (const auto& row : ch.pullbacks) {
      if (static_cast<int>(row.size()) != n) throw input_error("bad-certificate", "chart " + ch.id + " row length");
      for (int x : row)
        if (x < 0) throw input_error("bad-certificate", "negative pullback exponent in chart " + ch.id);
    }
    std::set<int> used;
    for (const auto& [name, j] : ch.slots) {
      if (!cert.divisor(name)) throw input_error("bad-certificate", "chart " + ch.id + " slots unknown divisor " + name);
      if (j < 0 || j >= n) throw input_error("bad-certificate", "slot index out of range in chart " + ch.id);
      if (!used.insert(j).second) throw input_error("bad-certificate", "two divisors on one coordinate in " + ch.id);
      seen.insert(name);
    }
    if (ch.toric()) {
      if (static_cast<int>(ch.slots.size()) != n)
        throw input_error("bad-certificate", "toric chart " + ch.id + " must slot every coordinate");
      for (const auto& [name, j] : ch.slots) {
        const DivisorId* d = cert.divisor(name);
        Exponent v = column(ch, j);
        if (d->kind == DivisorKind::coordinate) {
          Exponent unit(n, 0);
          unit.at(d->index) = 1;
          if (v != unit)
            throw input_error("bad-certificate", "strict transform " + name + " has a non-unit ray in " + ch.id);
        }
        if (d->kind == DivisorKind::named)
          throw input_error("bad-certificate", "named divisor " + name + " cannot sit in toric chart " + ch.id);
      }
    } else if (!trusted) {
      throw input_error("non-unimodular", "chart " + ch.id + " has determinant " + std::to_string(ch.determinant()));
    }
  }
  for (const auto& d : cert.registry)
    if (!seen.count(d.name)) throw input_error("bad-certificate", "divisor " + d.name + " appears in no chart");
  // ord_D(z_i) must not depend on the chart used to read it.
  for (const auto& d : cert.registry) {
    std::optional<Exponent> ref;
    for (const auto& ch : cert.charts) {
      auto j = ch.coord_of(d.name);
      if (!j) continue;
      Exponent v = column(ch, *j);
      if (ref && *ref != v)
        throw assertion_failure("inconsistent-chart", "orders along " + d.name + " differ between charts");
      ref = v;
    }
  }
  for (const auto& [name, coeff] : cert.k_rel) {
    const DivisorId* d = cert.divisor(name);
    if (!d) throw input_error("bad-certificate", "K_rel mentions unknown divisor " + name);
    if (d->kind != DivisorKind::exceptional) throw input_error("bad-certificate", "K_rel supported off exceptional");
    if (!is_integer(coeff) || coeff < 0) throw input_error("bad-certificate", "K_rel must be a non-negative integer");
  }
  if (!trusted && toric_k_rel(cert) != cert.k_rel)
    throw assertion_failure("k-rel-mismatch", "certificate K_rel " + to_string(cert.k_rel) + " but charts give " +
                                                  to_string(toric_k_rel(cert)));
  // Monomial atom tables are recomputed and must match when present.
  auto check_role = [&](const Potential& p, const std::string& role) {
    for (std::size_t k = 0; k < p.atoms.size(); ++k) {
      const auto& atom = p.atoms[k];
      if (atom.is_named()) {
        if (!cert.tables.count(atom.section))
          throw input_error("unresolved-atom", "no pullback table for section " + atom.section);
        continue;
      }
      auto it = cert.tables.find(atom_key(role, k));
      if (it == cert.tables.end()) continue;
      Potential single;
      single.atoms.push_back({1, atom.ideal, ""});
      QDivisor recomputed = pullback_divisor(cert, single);
      if (recomputed != it->second)
        throw assertion_failure("table-mismatch", "table " + it->first + " disagrees with chart matrices");
    }
  };
  check_role(scene.phi_L, "phi");
  check_role(scene.psi, "psi");
}

ResolutionCertificate blowup(const ResolutionCertificate& cert, const std::string& chart_id,
                             const std::vector<int>& centre, const std::string& new_name) {
  const Chart* base = cert.chart(chart_id);
  if (!base) throw input_error("invalid-centre", "no chart " + chart_id);
  std::set<int> uniq(centre.begin(), centre.end());
  if (uniq.size() < 2 || uniq.size() != centre.size())
    throw input_error("invalid-centre", "centre needs at least two distinct coordinates");
  if (!base->toric()) throw input_error("invalid-centre", "blow-ups are supported in toric charts only");
  std::vector<std::string> face;
  for (int j : centre) {
    if (j < 0 || j >= base->dim()) throw input_error("invalid-centre", "coordinate out of range");
    auto name = base->divisor_at(j);
    if (!name) throw input_error("invalid-centre", "unslotted coordinate in centre");
    face.push_back(*name);
  }
  std::string name = new_name;
  if (name.empty()) {
    int k = 1;
    do name = "E" + std::to_string(k++);
    while (cert.divisor(name));
  }
  if (cert.divisor(name)) throw input_error("invalid-centre", "divisor name " + name + " already used");

  ResolutionCertificate out = cert;
  out.charts.clear();
  out.registry.push_back({name, DivisorKind::exceptional, -1, ""});
  for (const auto& ch : cert.charts) {
    std::vector<int> coords;
    for (const auto& f : face)
      if (auto j = ch.coord_of(f)) coords.push_back(*j);
    if (coords.size() != face.size()) {
      out.charts.push_back(ch);
      continue;
    }
    if (!ch.toric()) throw input_error("invalid-centre", "face lies in non-toric chart " + ch.id);
    Exponent ray(ch.dim(), 0);
    for (int j : coords)
      for (int i = 0; i < ch.dim(); ++i) ray[i] += ch.pullbacks[i][j];
    int piece = 0;
    for (int j : coords) {
      Chart nc = ch;
      nc.id = ch.id + "." + std::to_string(++piece);
      for (int i = 0; i < ch.dim(); ++i) nc.pullbacks[i][j] = ray[i];
      nc.slots.erase(*ch.divisor_at(j));
      nc.slots[name] = j;
      out.charts.push_back(nc);
    }
  }
  // K of the new divisor: codimension − 1 plus the K coefficients along the face.
  Rational k = static_cast<long>(face.size()) - 1;
  for (const auto& f : face) k += coefficient(cert.k_rel, f);
  if (k != 0) out.k_rel[name] = k;
  for (auto& [key, table] : out.tables) {
    Rational v = 0;
    for (const auto& f : face) v += coefficient(table, f);
    if (v != 0) table[name] = v;
  }
  return out;
}

QDivisor pullback_divisor(const ResolutionCertificate& cert, const Potential& p) {
  QDivisor out;
  for (const auto& d : cert.registry) {
    const Chart* host = nullptr;
    for (const auto& ch : cert.charts)
      if (ch.coord_of(d.name)) {
        host = &ch;
        break;
      }
    if (!host) throw input_error("unresolved-divisor", "divisor " + d.name + " appears in no chart");
    Rational v = lelong(p, d.name, *host, cert.tables);
    if (v != 0) out[d.name] = v;
  }
  return out;
}

ERSplit e_r_decomposition(const ResolutionCertificate& cert, const Scene& scene) {
  QDivisor lphi = pullback_divisor(cert, scene.phi_L);
  QDivisor lpsi = pullback_divisor(cert, scene.psi);
  ERSplit s;
  for (const auto& [name, kd] : cert.k_rel) {
    Rational l = coefficient(lphi, name) + coefficient(lpsi, name);
    std::int64_t r = std::min(floor_of(kd), floor_of(l));
    if (r < 0)
      throw hypothesis_error("negative-r", "Lelong number " + to_string(l) + " along " + name + " is negative");
    if (r > 0) s.R[name] = Rational(r);
    Rational e = kd - Rational(r);
    if (e != 0) s.E[name] = e;
  }
  // Invariants of the split.
  if (add(s.E, s.R) != cert.k_rel) throw assertion_failure("e-r-split", "E + R != K_rel");
  for (const auto& d : cert.registry) {
    Rational resid = coefficient(lphi, d.name) + coefficient(lpsi, d.name) - coefficient(s.R, d.name);
    if (resid < 0) throw hypothesis_error("not-quasi-psh", "negative coefficient along " + d.name);
    if (coefficient(s.E, d.name) > 0 && resid >= 1 && coefficient(s.R, d.name) < coefficient(cert.k_rel, d.name))
      throw assertion_failure("e-r-split", "residual Lelong >= 1 on an E-component " + d.name);
  }
  return s;
}

SncData chart_snc_data(const Scene& scene, const ResolutionCertificate& cert, const ERSplit& er, const Chart& chart) {
  SncWeights wphi = snc_weights(scene.phi_L, chart, cert.tables);
  SncWeights wpsi = snc_weights(scene.psi, chart, cert.tables);
  SncData d;
  d.b = wphi.weights;
  d.nu = wpsi.weights;
  for (int j = 0; j < chart.dim(); ++j)
    if (auto name = chart.divisor_at(j)) d.b[j] -= coefficient(er.R, *name);
  d.offset_phi = wphi.offset;
  d.offset_psi = wpsi.offset;
  d.check();
  return d;
}

SncData divisor_snc_data(const Scene& scene, const ResolutionCertificate& cert, const ERSplit& er) {
  QDivisor lphi = pullback_divisor(cert, scene.phi_L);
  QDivisor lpsi = pullback_divisor(cert, scene.psi);
  SncData d;
  for (const auto& div : cert.registry) {
    d.b.push_back(coefficient(lphi, div.name) - coefficient(er.R, div.name));
    d.nu.push_back(coefficient(lpsi, div.name));
  }
  d.offset_phi = scene.phi_L.offset;
  d.offset_psi = scene.psi.offset;
  d.check();
  return d;
}

std::vector<NamedSection> active_sections(const Scene& scene, const ResolutionCertificate& cert) {
  std::vector<NamedSection> out;
  for (const auto& s : scene.sections)
    if (cert.tables.count(s.name)) out.push_back(s);
  return out;
}

TwistedIdeal pushforward_sheaf(const Scene& scene, const ResolutionCertificate& cert,
                               const std::vector<ChartRequirement>& requirement) {
  if (requirement.size() != cert.charts.size()) throw input_error("bad-requirement", "one requirement per chart");
  const int n = cert.dim;
  std::vector<NamedSection> sections = active_sections(scene, cert);
  const int total = n + static_cast<int>(sections.size());
  for (const auto& r : requirement)
    for (const auto& [name, v] : r.offset) {
      if (!cert.divisor(name)) throw input_error("unresolved-divisor", "requirement on unknown divisor " + name);
      if (!is_integer(v)) throw input_error("non-integral", "requirement coefficient along " + name);
    }
  MonomialIdeal acc = MonomialIdeal::unit(total);
  for (std::size_t c = 0; c < cert.charts.size(); ++c) {
    const Chart& ch = cert.charts[c];
    const auto& req = requirement[c];
    if (req.ideal.dim() != n) throw input_error("dimension-mismatch", "requirement ideal in chart " + ch.id);
    std::vector<std::vector<int>> rows(n);
    std::vector<long> shift(n, 0);
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) rows[j].push_back(ch.pullbacks[i][j]);
      auto name = ch.divisor_at(j);
      for (const auto& s : sections) {
        Rational v = name ? coefficient(cert.tables.at(s.name), *name) : Rational(0);
        if (!is_integer(v) || v < 0) throw input_error("bad-table", "table " + s.name + " must be integral");
        rows[j].push_back(static_cast<int>(v.numerator()));
      }
      if (name) shift[j] = static_cast<long>(coefficient(req.offset, *name).numerator());
    }
    MonomialIdeal chart_ideal = MonomialIdeal::zero(total);
    for (const auto& g : req.ideal.generators()) {
      std::vector<LinearConstraint> cons;
      for (int j = 0; j < n; ++j) cons.push_back({rows[j], g[j] - shift[j]});
      chart_ideal = combine(chart_ideal, staircase_minimal_points(total, cons), Combine::sum);
    }
    acc = combine(acc, chart_ideal, Combine::intersection);
  }
  return reduce_twisted(sections, n, acc);
}

TwistedIdeal pushforward_divisor(const Scene& scene, const ResolutionCertificate& cert, const QDivisor& d) {
  std::vector<ChartRequirement> req;
  for (std::size_t c = 0; c < cert.charts.size(); ++c) req.push_back({d, MonomialIdeal::unit(cert.dim)});
  return pushforward_sheaf(scene, cert, req);
}

GlobalSetup global_setup(const Scene& scene, const ResolutionCertificate& cert) {
  GlobalSetup g;
  g.er = e_r_decomposition(cert, scene);
  for (const auto& ch : cert.charts) g.charts.push_back(chart_snc_data(scene, cert, g.er, ch));
  g.divisors = divisor_snc_data(scene, cert, g.er);
  g.spectrum = jumping_spectrum(g.divisors);
  for (int k : g.divisors.lc_set()) g.lc_divisors.push_back(cert.registry[k].name);
  return g;
}

TwistedIdeal multiplier_ideal_global(const Scene& scene, const ResolutionCertificate& cert, const Rational& m) {
  GlobalSetup g = global_setup(scene, cert);
  std::vector<ChartRequirement> req;
  for (const auto& d : g.charts) req.push_back({g.er.E, multiplier_ideal_snc(combined_weights(d, m))});
  return pushforward_sheaf(scene, cert, req);
}

TwistedIdeal adjoint_ideal_global(const Scene& scene, const ResolutionCertificate& cert, int sigma) {
  if (sigma < 0) throw input_error("bad-sigma", "sigma must be non-negative");
  GlobalSetup g = global_setup(scene, cert);
  if (!g.spectrum.jumps_at_one) throw hypothesis_error("no-jump", "m = 1 is not a jumping number upstairs");
  std::vector<ChartRequirement> req;
  for (const auto& d : g.charts) {
    MonomialIdeal local = d.lc_set().empty() ? multiplier_ideal_snc(combined_weights(d, 1)) : adjoint_ideal_snc(d, sigma);
    req.push_back({g.er.E, local});
  }
  return pushforward_sheaf(scene, cert, req);
}

int sigma_mlc_global(const Scene& scene, const ResolutionCertificate& cert) {
  GlobalSetup g = global_setup(scene, cert);
  int top = 0;
  for (const auto& d : g.charts) top = std::max(top, static_cast<int>(d.lc_set().size()));
  return top;
}

std::vector<Rational> base_jumps(const Scene& scene, const ResolutionCertificate& cert) {
  GlobalSetup g = global_setup(scene, cert);
  std::vector<Rational> out;
  TwistedIdeal prev = multiplier_ideal_global(scene, cert, 0);
  for (const auto& m : g.spectrum.jumps) {
    TwistedIdeal at = multiplier_ideal_global(scene, cert, m);
    if (at != prev) out.push_back(m);
    prev = at;
  }
  return out;
}

// --- algebraic adjoints ------------------------------------------------------

namespace {

std::vector<std::string> boundary_components(const ResolutionCertificate& cert, const QDivisor& pull_s) {
  std::vector<std::string> out;
  for (const auto& d : cert.registry)
    if (d.kind != DivisorKind::exceptional && coefficient(pull_s, d.name) > 0) out.push_back(d.name);
  return out;
}

bool share_chart(const ResolutionCertificate& cert, const std::string& a, const std::string& b) {
  for (const auto& ch : cert.charts)
    if (ch.coord_of(a) && ch.coord_of(b)) return true;
  return false;
}

Potential without_offset(const Potential& p) {
  Potential q = p;
  q.offset = 0;
  return q;
}

}  // namespace

AlgebraicAdjoints el_hm_adjoint(const Scene& scene, const ResolutionCertificate& cert) {
  for (const auto& atom : scene.psi.atoms) {
    if (atom.coeff != 1) throw hypothesis_error("non-reduced-s", "boundary atoms must have coefficient 1");
    if (!atom.is_named()) {
      if (!is_principal(atom.ideal) || !is_radical(atom.ideal))
        throw hypothesis_error("non-reduced-s", "boundary atom must be a reduced monomial");
    }
  }
  AlgebraicAdjoints out;
  QDivisor pull_s = pullback_divisor(cert, without_offset(scene.psi));
  QDivisor cf = pullback_divisor(cert, without_offset(scene.phi_L));
  out.floor_cf = floor_of(cf);
  for (const auto& d : cert.registry) {
    if (d.kind != DivisorKind::exceptional) continue;
    Rational a = coefficient(cert.k_rel, d.name) - coefficient(pull_s, d.name);
    if (a != 0) out.discrepancy[d.name] = a;
    if (a == -1) out.gamma_exc[d.name] = 1;
    Rational e0 = a == -1 ? Rational(0) : a;
    if (e0 != 0) out.e0[d.name] = e0;
  }
  QDivisor hm_div = add(out.e0, out.floor_cf, -1);
  out.hm = pushforward_divisor(scene, cert, hm_div);
  std::vector<std::string> comps = boundary_components(cert, pull_s);
  for (std::size_t x = 0; x < comps.size() && out.el_blocker.empty(); ++x)
    for (std::size_t y = x + 1; y < comps.size(); ++y)
      if (share_chart(cert, comps[x], comps[y])) {
        out.el_blocker = "strict transforms " + comps[x] + " and " + comps[y] + " meet; needs a finer certificate";
        break;
      }
  if (out.el_blocker.empty()) out.el = pushforward_divisor(scene, cert, add(hm_div, out.gamma_exc, -1));
  return out;
}

// --- centres ------------------------------------------------------------------

namespace {

bool section_in_coordinate_ideal(const NamedSection& s, const std::vector<int>& coords) {
  for (const auto& t : s.terms) {
    bool hit = false;
    for (int i : coords)
      if (t.second.at(i) > 0) hit = true;
    if (!hit) return false;
  }
  return true;
}

const NamedSection& find_section(const Scene& scene, const std::string& name) {
  const NamedSection* s = scene.section(name);
  if (!s) throw input_error("unknown-section", name);
  return *s;
}

BaseCentre image_of(const Scene& scene, const ResolutionCertificate& cert, const Chart& ch,
                    const std::vector<int>& chart_coords) {
  BaseCentre b;
  for (int i = 0; i < ch.dim(); ++i) {
    bool vanish = false;
    for (int j : chart_coords)
      if (ch.pullbacks[i][j] > 0) vanish = true;
    if (vanish) b.coords.push_back(i);
  }
  for (int j : chart_coords) {
    auto name = ch.divisor_at(j);
    if (!name) continue;
    const DivisorId* d = cert.divisor(*name);
    if (d && d->kind == DivisorKind::named) b.sections.push_back(d->section);
  }
  return normalize_centre(scene, b);
}

std::vector<BaseCentre> maximal_only(const Scene& scene, std::vector<BaseCentre> list) {
  std::sort(list.begin(), list.end());
  list.erase(std::unique(list.begin(), list.end()), list.end());
  std::vector<BaseCentre> out;
  for (std::size_t a = 0; a < list.size(); ++a) {
    bool dominated = false;
    for (std::size_t b = 0; b < list.size(); ++b)
      if (a != b && centre_contained(scene, list[a], list[b])) dominated = true;
    if (!dominated) out.push_back(list[a]);
  }
  return out;
}

}  // namespace

BaseCentre normalize_centre(const Scene& scene, BaseCentre b) {
  std::sort(b.coords.begin(), b.coords.end());
  b.coords.erase(std::unique(b.coords.begin(), b.coords.end()), b.coords.end());
  std::sort(b.sections.begin(), b.sections.end());
  b.sections.erase(std::unique(b.sections.begin(), b.sections.end()), b.sections.end());
  std::vector<std::string> keep;
  for (const auto& s : b.sections)
    if (static_cast<int>(b.coords.size()) < scene.dim && !section_in_coordinate_ideal(find_section(scene, s), b.coords))
      keep.push_back(s);
  b.sections = keep;
  return b;
}

bool centre_contained(const Scene& scene, const BaseCentre& inner, const BaseCentre& outer) {
  for (int i : outer.coords)
    if (!std::binary_search(inner.coords.begin(), inner.coords.end(), i)) return false;
  for (const auto& s : outer.sections) {
    if (std::find(inner.sections.begin(), inner.sections.end(), s) != inner.sections.end()) continue;
    if (!section_in_coordinate_ideal(find_section(scene, s), inner.coords)) return false;
  }
  return true;
}

std::string render_centre(const Scene& scene, const BaseCentre& b) {
  if (static_cast<int>(b.coords.size()) == scene.dim) return "{origin}";
  std::vector<std::string> eqs;
  std::string coords;
  for (int i : b.coords) coords += (coords.empty() ? "" : "=") + std::string("z") + std::to_string(i + 1);
  if (!coords.empty()) eqs.push_back(coords + "=0");
  for (const auto& s : b.sections) eqs.push_back(find_section(scene, s).render() + "=0");
  if (eqs.empty()) return "{everything}";
  std::string out = "{";
  for (std::size_t k = 0; k < eqs.size(); ++k) out += (k ? ", " : "") + eqs[k];
  return out + "}";
}

std::string render_centres(const Scene& scene, const std::vector<BaseCentre>& list) {
  if (list.empty()) return "∅";
  std::string out;
  for (const auto& b : list) out += (out.empty() ? "" : " ∪ ") + render_centre(scene, b);
  return out;
}

CentreReport sigma_lc_centres_global(const Scene& scene, const ResolutionCertificate& cert, int sigma) {
  if (sigma < 1) throw input_error("bad-sigma", "lc centres are indexed by sigma >= 1");
  GlobalSetup g = global_setup(scene, cert);
  CentreReport rep;
  std::vector<BaseCentre> images;
  for (std::size_t c = 0; c < cert.charts.size(); ++c) {
    const auto& d = g.charts[c];
    if (d.lc_set().empty()) continue;
    for (const auto& p : lc_centres(d, sigma)) images.push_back(image_of(scene, cert, cert.charts[c], p));
  }
  rep.images = maximal_only(scene, images);
  TwistedIdeal upper = adjoint_ideal_global(scene, cert, sigma);
  TwistedIdeal lower = adjoint_ideal_global(scene, cert, sigma - 1);
  MonomialIdeal ann = annihilator_quotient(upper.formal, lower.formal);
  rep.annihilator = reduce_twisted(upper.sections, upper.dim, ann);
  rep.radical = is_radical(ann);
  std::vector<BaseCentre> primes;
  for (const auto& prime : minimal_primes(ann)) {
    BaseCentre b;
    for (int v : prime) {
      if (v < scene.dim)
        b.coords.push_back(v);
      else
        b.sections.push_back(upper.sections[v - scene.dim].name);
    }
    primes.push_back(normalize_centre(scene, b));
  }
  rep.from_annihilator = maximal_only(scene, primes);
  rep.agree = rep.radical && rep.from_annihilator == rep.images;
  return rep;
}

// --- comparison ----------------------------------------------------------

namespace {

// Zero locus of the φ_L atoms as a union of base centres.
std::vector<BaseCentre> zero_locus(const Scene& scene) {
  std::vector<BaseCentre> out;
  for (const auto& atom : scene.phi_L.atoms) {
    if (atom.coeff == 0) continue;
    if (atom.is_named()) {
      out.push_back(normalize_centre(scene, BaseCentre{{}, {atom.section}}));
      continue;
    }
    for (const auto& p : minimal_primes(atom.ideal)) out.push_back(normalize_centre(scene, BaseCentre{p, {}}));
  }
  return out;
}

bool inside_union(const Scene& scene, const BaseCentre& b, const std::vector<BaseCentre>& locus) {
  return std::any_of(locus.begin(), locus.end(), [&](const BaseCentre& z) { return centre_contained(scene, b, z); });
}

Scene boundary_only(const Scene& scene) {
  Scene s = scene;
  s.phi_L = Potential::zero();
  return s;
}

}  // namespace

std::string CompareReport::summary() const {
  auto rel = [](bool inc, bool eq, const std::string& a, const std::string& b) {
    if (!inc) return a + " ⊄ " + b;
    return eq ? a + " = " + b : a + " ⊊ " + b;
  };
  std::string s = rel(el_in_j1, el_equal, "EL", "J_1") + "; " +
                  rel(hm_in_jtop, hm_equal, "HM", "J_" + std::to_string(sigma_top));
  if (!el_in_j1 || !hm_in_jtop)
    s += "; inclusion fails";
  else if (el_equal && hm_equal)
    s += "; equalities";
  else if (!el_equal && !hm_equal)
    s += "; strict inclusions";
  else
    s += "; strict inclusion for " + std::string(el_equal ? "HM" : "EL");
  return s;
}

CompareReport compare_adjoints(const Scene& scene, const ResolutionCertificate& cert) {
  CompareReport rep;
  rep.c = scene.c.value_or(Rational(0));
  Scene bdry = boundary_only(scene);
  if (classify_by_discrepancy(bdry, cert) == PairClass::not_lc) rep.hypothesis_violations.push_back("(X,S) is not lc");
  std::vector<BaseCentre> za = zero_locus(scene);
  // lc centres of (X,S): images of strata of the divisors with discrepancy −1.
  {
    QDivisor k = cert.k_rel;
    QDivisor pull_s = pullback_divisor(cert, without_offset(bdry.psi));
    for (const auto& ch : cert.charts) {
      std::vector<int> gamma;
      for (const auto& [name, j] : ch.slots)
        if (coefficient(k, name) - coefficient(pull_s, name) == -1) gamma.push_back(j);
      for (unsigned mask = 1; mask < (1u << gamma.size()); ++mask) {
        std::vector<int> sub;
        for (std::size_t t = 0; t < gamma.size(); ++t)
          if (mask & (1u << t)) sub.push_back(gamma[t]);
        BaseCentre img = image_of(bdry, cert, ch, sub);
        if (inside_union(scene, img, za)) {
          rep.hypothesis_violations.push_back("zero locus of a contains the lc centre " + render_centre(scene, img) +
                                              " of (X,S)");
          mask = (1u << gamma.size());
          break;
        }
      }
    }
  }
  AlgebraicAdjoints alg = el_hm_adjoint(scene, cert);
  if (!alg.el) throw hypothesis_error("el-undefined", alg.el_blocker);
  rep.el = *alg.el;
  rep.hm = alg.hm;
  rep.j1 = adjoint_ideal_global(scene, cert, 1);
  rep.sigma_top = sigma_mlc_global(scene, cert);
  rep.jtop = adjoint_ideal_global(scene, cert, rep.sigma_top);
  rep.el_in_j1 = rep.j1.contains(rep.el);
  rep.hm_in_jtop = rep.jtop.contains(rep.hm);
  rep.el_equal = rep.el_in_j1 && rep.el.contains(rep.j1);
  rep.hm_equal = rep.hm_in_jtop && rep.hm.contains(rep.jtop);
  for (int sigma = 1; sigma <= scene.dim && !rep.zero_locus_meets_centres; ++sigma)
    for (const auto& b : sigma_lc_centres_global(scene, cert, sigma).images)
      if (inside_union(scene, b, za)) rep.zero_locus_meets_centres = true;
  return rep;
}

// --- classification -------------------------------------------------------

std::string to_string(PairClass c) {
  switch (c) {
    case PairClass::klt: return "klt";
    case PairClass::plt: return "plt";
    case PairClass::lc: return "lc";
    case PairClass::not_lc: return "not-lc";
  }
  return "?";
}

Classification classify_pair(const Scene& boundary, const ResolutionCertificate& cert) {
  Scene s = boundary_only(boundary);
  GlobalSetup g = global_setup(s, cert);
  Classification out;
  const int n = s.dim;
  if (!g.spectrum.jumps_at_one) {
    TwistedIdeal i = multiplier_ideal_global(s, cert, 1);
    out.filtration.assign(n + 1, i);
  } else {
    for (int sigma = 0; sigma <= n; ++sigma) out.filtration.push_back(adjoint_ideal_global(s, cert, sigma));
  }
  for (int sigma = 0; sigma <= n; ++sigma)
    if (out.filtration[sigma].is_unit()) {
      out.witness_sigma = sigma;
      break;
    }
  if (out.witness_sigma == 0)
    out.verdict = PairClass::klt;
  else if (out.witness_sigma == 1)
    out.verdict = PairClass::plt;
  else if (out.witness_sigma > 1)
    out.verdict = PairClass::lc;
  else {
    out.verdict = PairClass::not_lc;
    const auto& top = out.filtration.back();
    if (!top.ideal.is_zero()) out.obstruction = top.ideal.generators().front();
  }
  return out;
}

PairClass classify_by_discrepancy(const Scene& boundary, const ResolutionCertificate& cert) {
  QDivisor pull = pullback_divisor(cert, without_offset(boundary.psi));
  bool all_ge = true, all_gt = true, exc_gt = true;
  std::vector<std::string> critical;
  for (const auto& d : cert.registry) {
    Rational a = coefficient(cert.k_rel, d.name) - coefficient(pull, d.name);
    if (a < -1) all_ge = false;
    if (a <= -1) all_gt = false;
    if (d.kind == DivisorKind::exceptional && a <= -1) exc_gt = false;
    if (a == -1) critical.push_back(d.name);
  }
  if (!all_ge) return PairClass::not_lc;
  if (all_gt) return PairClass::klt;
  bool disjoint = true;
  for (std::size_t x = 0; x < critical.size(); ++x)
    for (std::size_t y = x + 1; y < critical.size(); ++y)
      if (share_chart(cert, critical[x], critical[y])) disjoint = false;
  return exc_gt && disjoint ? PairClass::plt : PairClass::lc;
}

InversionReport inversion_check(const Scene& boundary, const ResolutionCertificate& cert) {
  InversionReport rep;
  Scene s = boundary_only(boundary);
  QDivisor pull = pullback_divisor(cert, without_offset(s.psi));
  std::vector<std::string> reduced;
  for (const auto& d : cert.registry) {
    Rational coeff = coefficient(pull, d.name);
    if (d.kind == DivisorKind::exceptional) continue;
    if (coeff > 1) throw hypothesis_error("not-reduced", "boundary coefficient above 1 on " + d.name);
    if (coeff == 1) reduced.push_back(d.name);
  }
  if (reduced.empty()) throw hypothesis_error("empty-s", "the boundary has no reduced part");
  rep.diff_klt = true;
  for (const auto& comp : reduced) {
    QDivisor diff;
    for (const auto& d : cert.registry) {
      if (d.name == comp || !share_chart(cert, comp, d.name)) continue;
      Rational log_coeff = coefficient(pull, d.name) - coefficient(cert.k_rel, d.name);
      if (log_coeff != 0) diff[d.name] = log_coeff;
      if (log_coeff >= 1) rep.diff_klt = false;
    }
    rep.diff_lines.push_back("Diff on " + comp + ": " + to_string(diff));
  }
  rep.pair_class = classify_pair(s, cert).verdict;
  rep.plt = rep.pair_class == PairClass::klt || rep.pair_class == PairClass::plt;
  rep.consistent = rep.plt == rep.diff_klt;
  return rep;
}

ConnectednessReport connectedness_check(const Scene& scene, const ResolutionCertificate& cert) {
  ConnectednessReport rep;
  GlobalSetup g = global_setup(scene, cert);
  std::map<std::string, BaseCentre> images;
  for (const auto& name : g.lc_divisors)
    for (const auto& ch : cert.charts)
      if (auto j = ch.coord_of(name)) {
        images[name] = image_of(scene, cert, ch, {*j});
        break;
      }
  for (const auto& centre : sigma_lc_centres_global(scene, cert, 1).images) {
    ConnectednessReport::Entry e;
    e.centre = centre;
    for (const auto& [name, img] : images)
      if (centre_contained(scene, img, centre)) e.components.push_back(name);
    std::set<std::string> reached;
    std::function<void(const std::string&)> visit = [&](const std::string& v) {
      if (!reached.insert(v).second) return;
      for (const auto& w : e.components)
        if (share_chart(cert, v, w)) visit(w);
    };
    if (!e.components.empty()) visit(e.components.front());
    e.connected = reached.size() == e.components.size();
    rep.all_connected = rep.all_connected && e.connected;
    rep.entries.push_back(e);
  }
  return rep;
}

IsometryReport residue_isometry_check(const Scene& scene, const ResolutionCertificate& up, const Exponent& f,
                                      int sigma) {
  IsometryReport rep;
  ResolutionCertificate base = identity_certificate(scene.dim);
  for (int i = 0; i < scene.dim; ++i) {
    // Reuse the coordinate names of the upstairs registry.
    for (const auto& d : up.registry)
      if (d.kind == DivisorKind::coordinate && d.index == i) {
        base.registry[i].name = d.name;
        base.charts[0].slots.clear();
      }
  }
  base.charts[0] = identity_chart(scene.dim, base.names());
  ERSplit er0 = e_r_decomposition(base, scene);
  SncData down = chart_snc_data(scene, base, er0, base.charts[0]);
  rep.downstairs = residue_norm_closed_form(down, f, sigma, scene.polyradius);
  ERSplit er = e_r_decomposition(up, scene);
  rep.upstairs = ExactValue::zero();
  for (const auto& ch : up.charts) {
    SncData d = chart_snc_data(scene, up, er, ch);
    Exponent fu = ch.pull(f);
    for (int j = 0; j < ch.dim(); ++j)
      if (auto name = ch.divisor_at(j)) fu[j] += static_cast<int>(coefficient(er.E, *name).numerator());
    ExactValue v;
    if (d.lc_set().empty())
      v = multiplier_ideal_snc(combined_weights(d, 1)).contains(fu) ? ExactValue::zero() : ExactValue::infinite();
    else
      v = residue_norm_closed_form(d, fu, sigma, scene.polyradius);
    rep.per_chart.emplace_back(ch.id, v);
    rep.upstairs = rep.upstairs + v;
  }
  rep.equal = rep.downstairs == rep.upstairs;
  return rep;
}

}  // namespace adjideal
