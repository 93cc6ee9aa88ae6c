#include <doctest.h>

#include "courant/derivation.hpp"
#include "courant/poly.hpp"
#include "courant/rational.hpp"

using namespace courant;

TEST_SUITE("coeff_algebra") {

TEST_CASE("rational arithmetic is exact") {
  Rat a(1, 3), b(1, 6);
  CHECK(a + b == Rat(1, 2));
  CHECK(toString(Rat(-3, 9)) == "-1/3");
  CHECK(ratFromString("7/-14") == Rat(-1, 2));
  CHECK(isZero(Rat(0)));
  CHECK_FALSE(isZero(Rat(1, 1000000)));
}

TEST_CASE("polynomial parse, print and arithmetic") {
  std::vector<std::string> vars{"x", "y"};
  Poly p = parsePoly("3/2*x^2*y - x + 1", vars);
  CHECK(toString(p, vars) == "3/2*x^2*y - x + 1");

  Poly x = Poly::variable(2, 0);
  Poly one = Poly::constant(2, Rat(1));
  Poly square = (x + one) * (x + one);
  CHECK(toString(square, vars) == "x^2 + 2*x + 1");
  CHECK((square - x * x - x.scaled(Rat(2)) - one).isZero());
}

TEST_CASE("polynomial derivative and evaluation") {
  std::vector<std::string> vars{"x", "y"};
  Poly p = parsePoly("x^3*y + 2*y", vars);
  CHECK(toString(p.derivative(0), vars) == "3*x^2*y");
  CHECK(toString(p.derivative(1), vars) == "x^3 + 2");
  std::vector<Rat> point{Rat(2), Rat(1, 2)};
  CHECK(p.evaluate(point) == Rat(5));
}

TEST_CASE("monomial enumeration is graded and complete") {
  CHECK(monomialsOfDegree(2, 3).size() == 4);  // x^3, x^2 y, x y^2, y^3
  CHECK(monomialsUpToDegree(2, 3).size() == 10);
  CHECK(monomialsOfDegree(0, 0).size() == 1);
  CHECK(monomialsOfDegree(0, 2).empty());
  CHECK(monomialsUpToDegree(0, 5).size() == 1);
}

TEST_CASE("derivation commutator of d/dx and x d/dx") {
  Derivation ddx = Derivation::coordinate(1, 0);
  Derivation xddx(std::vector<Poly>{Poly::variable(1, 0)});
  CHECK(commutator(ddx, xddx) == ddx);
  CHECK(commutator(xddx, ddx) == -ddx);
  CHECK(commutator(ddx, ddx).isZero());
}

TEST_CASE("derivation application satisfies the product rule") {
  std::vector<std::string> vars{"x"};
  Derivation d = Derivation::coordinate(1, 0);
  Poly f = parsePoly("x^2", vars);
  Poly g = parsePoly("x + 1", vars);
  CHECK((d.apply(f * g) - d.apply(f) * g - f * d.apply(g)).isZero());
  CHECK(toString(d.scaled(f).apply(g), vars) == "x^2");
}

} // TEST_SUITE
