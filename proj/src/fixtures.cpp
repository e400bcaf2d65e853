#include "adjideal/fixtures.hpp"

#include "adjideal/errors.hpp"

namespace adjideal {

namespace {

PotentialAtom monomial_atom(const Rational& coeff, std::vector<Exponent> gens, int dim) {
  return {coeff, minimalize(dim, std::move(gens)), ""};
}

PotentialAtom named_atom(const Rational& coeff, const std::string& section) {
  return {coeff, MonomialIdeal(), section};
}

Fixture cross2d() {
  Fixture f;
  f.name = "cross2d";
  f.scene.dim = 2;
  f.scene.psi.atoms.push_back(monomial_atom(1, {{1, 1}}, 2));
  f.scene.psi.offset = -1;
  ResolutionCertificate id = identity_certificate(2, {"S1", "S2"});
  f.cert = blowup(id, "id", {0, 1}, "E");
  return f;
}

Fixture delta3(const Rational& c) {
  Fixture f;
  f.name = "delta3";
  f.scene.dim = 3;
  f.scene.c = c;
  if (c != 0) f.scene.phi_L.atoms.push_back(monomial_atom(c, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3));
  f.scene.psi.atoms.push_back(monomial_atom(1, {{1, 1, 0}}, 3));
  f.scene.psi.offset = -1;
  ResolutionCertificate id = identity_certificate(3, {"S1", "S2", "Z3"});
  ResolutionCertificate first = blowup(id, "id", {0, 1}, "E1");
  // Second centre: E1 ∩ Z3, a face of both first-step charts.
  const Chart& ch = first.charts.front();
  f.cert = blowup(first, ch.id, {*ch.coord_of("E1"), *ch.coord_of("Z3")}, "E2");
  return f;
}

Fixture cusp() {
  Fixture f;
  f.name = "cusp";
  f.scene.dim = 2;
  f.scene.sections.push_back({"cusp", {{1, {3, 0}}, {-1, {0, 2}}}});
  f.scene.psi.atoms.push_back(named_atom(1, "cusp"));
  f.scene.psi.offset = -1;
  ResolutionCertificate c = identity_certificate(2, {"D1", "D2"});
  c.tables["cusp"] = QDivisor{};
  c = blowup(c, "id", {0, 1}, "E1");
  const Chart* a = nullptr;
  for (const auto& ch : c.charts)
    if (ch.coord_of("E1") && ch.coord_of("D2")) a = &ch;
  c = blowup(c, a->id, {*a->coord_of("E1"), *a->coord_of("D2")}, "E2");
  const Chart* b = nullptr;
  for (const auto& ch : c.charts)
    if (ch.coord_of("E1") && ch.coord_of("E2")) b = &ch;
  c = blowup(c, b->id, {*b->coord_of("E1"), *b->coord_of("E2")}, "E3");
  // Trusted data: the strict transform meets E3 transversally at one
  // non-torus-fixed point, covered by a crossing chart.
  c.registry.push_back({"S", DivisorKind::named, -1, "cusp"});
  Chart cross;
  cross.id = "p0";
  cross.pullbacks = {{0, 2}, {0, 3}};
  cross.slots = {{"S", 0}, {"E3", 1}};
  c.charts.push_back(cross);
  c.tables["cusp"] = QDivisor{{"S", 1}, {"E1", 2}, {"E2", 3}, {"E3", 6}};
  c.k_rel = QDivisor{{"E1", 1}, {"E2", 2}, {"E3", 3}};
  f.cert = c;
  return f;
}

Fixture node() {
  Fixture f;
  f.name = "node";
  f.scene.dim = 2;
  f.scene.sections.push_back({"node", {{1, {0, 2}}, {-1, {3, 0}}, {-1, {2, 0}}}});
  f.scene.psi.atoms.push_back(named_atom(1, "node"));
  f.scene.psi.offset = -1;
  ResolutionCertificate c = identity_certificate(2, {"D1", "D2"});
  c.tables["node"] = QDivisor{};
  c = blowup(c, "id", {0, 1}, "E");
  c.registry.push_back({"S", DivisorKind::named, -1, "node"});
  for (const char* id : {"q1", "q2"}) {
    Chart cross;
    cross.id = id;
    cross.pullbacks = {{0, 1}, {0, 1}};
    cross.slots = {{"S", 0}, {"E", 1}};
    c.charts.push_back(cross);
  }
  c.tables["node"] = QDivisor{{"S", 1}, {"E", 2}};
  f.cert = c;
  return f;
}

Fixture disc1d() {
  Fixture f;
  f.name = "disc1d";
  f.scene.dim = 1;
  f.scene.psi.atoms.push_back(monomial_atom(1, {{1}}, 1));
  f.scene.psi.offset = -1;
  f.cert = identity_certificate(1, {"S1"});
  return f;
}

}  // namespace

Fixture make_fixture(const std::string& name, std::optional<Rational> c) {
  Fixture f;
  if (name == "cross2d")
    f = cross2d();
  else if (name == "delta3")
    f = delta3(c.value_or(Rational(1, 2)));
  else if (name == "cusp")
    f = cusp();
  else if (name == "node")
    f = node();
  else if (name == "disc1d")
    f = disc1d();
  else
    throw input_error("unknown-fixture", "no built-in fixture '" + name + "'");
  if (c && name != "delta3") f.scene.c = c;
  validate_certificate(f.cert, f.scene);
  return f;
}

std::vector<std::string> fixture_names() { return {"cross2d", "delta3", "cusp", "node", "disc1d"}; }

SncData disc_snc_data() { return SncData{{0}, {1}, -1, 0}; }
SncData cross_snc_data() { return SncData{{0, 0}, {1, 1}, -1, 0}; }

}  // namespace adjideal
