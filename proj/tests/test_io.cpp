#include "adjideal/errors.hpp"
#include "adjideal/fixtures.hpp"
#include "adjideal/io.hpp"

#include <doctest.h>

using namespace adjideal;
using io::json;

TEST_CASE("rationals") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-2") == -2);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
  CHECK(io::rational_from_json(json("5/3")) == Rational(5, 3));
  CHECK(io::rational_from_json(json(4)) == 4);
  CHECK(io::to_json(Rational(-7, 2)) == json("-7/2"));
}

TEST_CASE("schema errors carry json pointers") {
  json scene = json::parse(R"({"dim": 2, "psi": {"atoms": [{"coeff": "1/0", "ideal": [[1,0]]}], "offset": -1}})");
  try {
    io::scene_from_json(scene);
    FAIL("expected a schema error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::input);
    CHECK(std::string(e.what()).find("/psi/atoms/0/coeff") != std::string::npos);
  }
  CHECK_THROWS_AS(io::parse_text("{", "inline"), Error);
  CHECK_THROWS_AS(io::read_file("/nonexistent/scene.json"), Error);
}

TEST_CASE("scene and certificate round trip") {
  for (const auto& name : fixture_names()) {
    Fixture f = make_fixture(name);
    json s = io::to_json(f.scene);
    CHECK(io::to_json(io::scene_from_json(s)) == s);
    json c = io::to_json(f.cert);
    ResolutionCertificate back = io::certificate_from_json(c);
    CHECK(io::to_json(back) == c);
    CHECK(io::certificate_hash(back) == io::certificate_hash(f.cert));
  }
}

TEST_CASE("the documented certificate format parses") {
  json c = json::parse(R"({"charts":[{"id":"c1","pullbacks":[[1,0],[1,1]],"slots":{"E":0,"S2":1}}],
    "registry":["S1","S2","E"], "tables":{"psi_atom_0":{"S1":1,"S2":1,"E":2}}, "K_rel":{"E":1}})");
  ResolutionCertificate cert = io::certificate_from_json(c);
  CHECK(cert.dim == 2);
  CHECK(cert.registry.size() == 3);
  CHECK(coefficient(cert.k_rel, "E") == 1);
  CHECK(cert.divisor("E")->kind == DivisorKind::exceptional);
}

TEST_CASE("snc data and residue inputs") {
  json d = json::parse(R"({"b": ["0", "1/2"], "nu": [1, 0], "offset_psi": -1, "offset_phi": 0})");
  SncData s = io::snc_from_json(d);
  CHECK(s.b[1] == Rational(1, 2));
  CHECK(io::to_json(io::snc_from_json(io::to_json(s))) == io::to_json(s));
  CHECK_THROWS_AS(io::snc_from_json(json::parse(R"({"b": [0], "nu": [1], "offset_psi": 0})")), Error);
  auto in = io::residue_inputs_from_json(json::parse(R"([{"centre": [0, 1], "g": [0, 0]}, {"centre": [0], "g": null}])"));
  REQUIRE(in.size() == 2);
  CHECK(in[0].germ == Exponent{0, 0});
  CHECK_FALSE(in[1].germ.has_value());
}
