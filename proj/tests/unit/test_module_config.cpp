#include <doctest.h>

#include "courant/anchored_module.hpp"
#include "courant/config.hpp"
#include "courant/errors.hpp"

using namespace courant;

namespace {

AnchoredModule twoGenModule() {
  std::vector<std::string> vars{"x"};
  return AnchoredModule(
      vars, {"e1", "e2"},
      {{Poly::constant(1, Rat(1))}, {Poly::variable(1, 0)}});
}

} // namespace

TEST_SUITE("anchored_module") {

TEST_CASE("anchor of a combination is coefficient-linear") {
  AnchoredModule m = twoGenModule();
  Poly f = parsePoly("x^2", m.vars());
  Poly g = parsePoly("x + 1", m.vars());
  ModuleElement u = ModuleElement::generator(m, 0, f) +
                    ModuleElement::generator(m, 1, g);
  Derivation expected =
      m.anchorOf(0).scaled(f) + m.anchorOf(1).scaled(g);
  CHECK(m.anchorOf(u) == expected);
  CHECK(toString(m.anchorOf(u), m.vars()) == "(2*x^2 + x) d/dx");
}

TEST_CASE("element printing and generator lookup") {
  AnchoredModule m = twoGenModule();
  ModuleElement u =
      ModuleElement::generator(m, 0, Poly::constant(1, Rat(1))) -
      ModuleElement::generator(m, 1, parsePoly("2*x", m.vars()));
  CHECK(m.printElement(u) == "e1 - 2*x*e2");
  CHECK(m.generatorIndex("e2") == 1);
  CHECK(m.generatorIndex("nope") == -1);
}

TEST_CASE("mismatched anchor shape is rejected") {
  std::vector<std::string> vars{"x", "y"};
  CHECK_THROWS_AS(
      AnchoredModule(vars, {"e"}, {{Poly::constant(2, Rat(1))}}),
      DimensionMismatch);
}

} // TEST_SUITE

TEST_SUITE("config") {

TEST_CASE("module block round-trips into an anchored module") {
  Config c = parseConfig(R"({
    "vars": ["x"],
    "generators": ["e1", "e2"],
    "anchor": [["1"], ["x"]],
    "bounds": {"wmax": 3, "pmax": 3, "delta_max": 8},
    "seed": 7
  })");
  CHECK(c.kind == "module");
  CHECK(c.bounds.wmax == 3);
  CHECK(c.bounds.pmax == 3);
  CHECK(c.seed == 7);
  AnchoredModule m = c.makeModule();
  CHECK(m.rank() == 2);
  CHECK(m.anchorOf(0) == Derivation::coordinate(1, 0));
  CHECK(m.anchorOf(1) ==
        Derivation(std::vector<Poly>{Poly::variable(1, 0)}));
}

TEST_CASE("instance blocks select dorfman and structure constants") {
  Config d = parseConfig(R"({"type": "dorfman", "vars": ["x", "y"]})");
  CHECK(d.kind == "dorfman");
  CHECK(d.makeDorfman().nvars() == 2);

  Config s = parseConfig(
      R"({"type": "sc", "dim": 2,
          "table": [[[0,0],[0,0]],[[0,0],["1",0]]]})");
  CHECK(s.kind == "sc");
  StructureConstantAlgebra a = s.makeStructureConstants();
  CHECK(a.bracket(a.basisVector(1), a.basisVector(1)) == a.basisVector(0));
}

TEST_CASE("malformed input is reported as a parse error") {
  CHECK_THROWS_AS(parseConfig("{ not json"), ParseError);
  CHECK_THROWS_AS(parseConfig(R"({"vars": ["x"]})"), ParseError);
  CHECK_THROWS_AS(
      parseConfig(R"({"type": "sc", "dim": 2, "table": [[[0,0]]]})"),
      ParseError);
  CHECK_THROWS_AS(parseConfig(R"({"type": "mystery"})"), ParseError);
}

} // TEST_SUITE
