#include <doctest.h>

#include "courant/axiom_checks.hpp"
#include "courant/errors.hpp"
#include "courant/free_leibniz.hpp"
#include "courant/instance.hpp"

#include <memory>

using namespace courant;

namespace {

/// Three undecorated generators with zero anchor; pure word combinatorics.
FreeLeibniz plainAlgebra(int wmax) {
  AnchoredModule m({"x"}, {"e1", "e2", "e3"},
                   {{Poly(1)}, {Poly(1)}, {Poly(1)}});
  return FreeLeibniz(m, Bounds{wmax, 0});
}

/// d = 1, g = 2, anchors d/dx and x d/dx.
FreeLeibniz anchoredAlgebra(Bounds bounds) {
  AnchoredModule m({"x"}, {"e1", "e2"},
                   {{Poly::constant(1, Rat(1))}, {Poly::variable(1, 0)}});
  return FreeLeibniz(m, bounds);
}

} // namespace

TEST_SUITE("free_leibniz") {

TEST_CASE("generator brackets expand to nested tensor words") {
  FreeLeibniz alg = plainAlgebra(3);
  auto expand = [&](const char* expr) {
    return alg.printElement(alg.evaluateExpression(expr));
  };
  CHECK(expand("[ (e1) , (e2) ]") == "(e1)⊗(e2)");
  CHECK(expand("[ (e1) , [ (e2) , (e3) ] ]") ==
        "(e1)⊗(e2)⊗(e3)");
  CHECK(expand("[ [ (e1) , (e2) ] , (e3) ]") ==
        "(e1)⊗(e2)⊗(e3) - (e2)⊗(e1)⊗(e3)");
}

TEST_CASE("decorated weight-1 bracket concatenates the factors") {
  FreeLeibniz alg = anchoredAlgebra(Bounds{3, 3});
  FreeElement u = alg.evaluateExpression("[ (e1) , (x*e1) ]");
  CHECK(alg.printElement(u) == "(e1)⊗(x*e1)");
}

TEST_CASE("coefficient action shifts right with an anchor correction") {
  AnchoredModule m({"x"}, {"e"}, {{Poly::constant(1, Rat(1))}});
  FreeLeibniz alg(m, Bounds{3, 3});
  FreeElement square = alg.evaluateExpression("[ (e) , (e) ]");
  FreeElement acted = alg.scalarMult(Poly::variable(1, 0), square);
  // x (e ox e) = e ox (x e) - (a(e) x) e = e ox (x e) - e.
  FreeElement expected = alg.parse("(e) ox (x*e) - (e)");
  CHECK((acted - expected).isZero());
}

TEST_CASE("built-in left Leibniz rule links bracket and anchor") {
  FreeLeibniz alg = anchoredAlgebra(Bounds{3, 3});
  FreeElement x = alg.parse("(e1) ox (e2)");
  FreeElement y = alg.parse("(e2)");
  Poly f = parsePoly("x^2", alg.vars());
  FreeElement lhs = alg.bracket(x, alg.scalarMult(f, y));
  FreeElement rhs = alg.scalarMult(f, alg.bracket(x, y)) +
                    alg.scalarMult(alg.anchor(x).apply(f), y);
  CHECK((lhs - rhs).isZero());
}

TEST_CASE("anchor of a two-factor word is the commutator") {
  FreeLeibniz alg = anchoredAlgebra(Bounds{3, 3});
  FreeElement w = alg.parse("(e1) ox (e2)");
  Derivation a1 = Derivation::coordinate(1, 0);
  Derivation a2 = Derivation(std::vector<Poly>{Poly::variable(1, 0)});
  CHECK(alg.anchor(w) == commutator(a1, a2));
}

TEST_CASE("brackets and decorations beyond the bounds overflow") {
  FreeLeibniz alg = anchoredAlgebra(Bounds{2, 1});
  FreeElement e1 = alg.parse("(e1)");
  FreeElement w2 = alg.bracket(e1, e1);
  CHECK_THROWS_AS((void)alg.bracket(e1, w2), TruncationOverflow);
  CHECK_THROWS_AS((void)alg.scalarMult(parsePoly("x^2", alg.vars()), e1),
                  TruncationOverflow);
}

TEST_CASE("element grammar round-trips through parse") {
  FreeLeibniz alg = anchoredAlgebra(Bounds{3, 3});
  const char* text = "(e1)⊗(x*e2) - 2/3 (e1)";
  FreeElement u = alg.parse(text);
  CHECK(alg.printElement(u) == text);
  FreeElement v = alg.parse("(e1) ox (x*e2) - 2/3 (e1)");
  CHECK((u - v).isZero());
}

TEST_CASE("identity suite passes exhaustively on the anchored instance") {
  FreeLeibniz alg = anchoredAlgebra(Bounds{3, 2});
  auto samples = basisElements(alg);
  auto coeffs = coefficientMonomials(alg.nvars(), 2);
  // The widest grid is the Jacobi triple grid over the full basis; raise
  // the tuple cap so every report runs in exhaustive mode.
  SampleConfig config;
  config.tupleCap = samples.size() * samples.size() * samples.size();
  auto reports = checkLeibnizSuite(alg, samples, coeffs, config);
  REQUIRE(!reports.empty());
  for (const CheckReport& r : reports) {
    CAPTURE(r.id);
    CHECK(r.pass());
    CHECK(r.mode == "exhaustive");
    CHECK(r.samples > 0);
  }
}

TEST_CASE("include is coefficient-linear") {
  FreeLeibniz alg = anchoredAlgebra(Bounds{3, 3});
  const AnchoredModule& m = alg.module();
  Poly f = parsePoly("x^2 + 1", alg.vars());
  ModuleElement a = ModuleElement::generator(m, 0, f);
  ModuleElement b = ModuleElement::generator(m, 1, Poly::variable(1, 0));
  FreeElement lhs = alg.include(a + b);
  FreeElement rhs = alg.include(a) + alg.include(b);
  CHECK((lhs - rhs).isZero());
  CHECK((alg.include(a) - alg.scalarMult(f, alg.generator(0))).isZero());
}

} // TEST_SUITE
