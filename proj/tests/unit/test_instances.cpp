#include <doctest.h>

#include "courant/axiom_checks.hpp"
#include "courant/dorfman.hpp"
#include "courant/instance.hpp"
#include "courant/structure_constants.hpp"

using namespace courant;

namespace {

/// n = 2 with [e2,e2] = e1 and all other products zero.
StructureConstantAlgebra heisenbergLike() {
  std::vector<std::vector<QVec>> table(2, std::vector<QVec>(2, QVec(2)));
  table[1][1] = QVec::unit(2, 0);
  return StructureConstantAlgebra(2, table);
}

/// n = 1 with [e1,e1] = e1; deliberately violates the left Jacobi identity.
StructureConstantAlgebra idempotentTable() {
  return StructureConstantAlgebra(
      1, {{QVec(std::vector<Rat>{Rat(1)})}});
}

/// Adjoint/anti-adjoint actions of an algebra on itself.
struct AdjointPack {
  using Algebra = StructureConstantAlgebra;
  using ValueType = QVec;

  const StructureConstantAlgebra* m_instance;

  const StructureConstantAlgebra& algebra() const { return *m_instance; }
  ValueType left(const QVec& x, const ValueType& w) const {
    return m_instance->bracket(x, w);
  }
  ValueType right(const QVec& x, const ValueType& w) const {
    return -m_instance->bracket(x, w);
  }
  ValueType multiply(const Poly& f, const ValueType& w) const {
    return m_instance->scalarMult(f, w);
  }
  std::string print(const ValueType& w) const {
    return m_instance->printElement(w);
  }
  std::vector<ValueType> sampleValues() const {
    return m_instance->sampleElements(0);
  }
};

} // namespace

TEST_SUITE("structure_constants") {

TEST_CASE("bracket follows the table bilinearly") {
  StructureConstantAlgebra a = heisenbergLike();
  QVec u = a.basisVector(1).scaled(Rat(3));
  QVec v = a.basisVector(1) + a.basisVector(0);
  CHECK(a.bracket(u, v) == a.basisVector(0).scaled(Rat(3)));
  CHECK(a.bracket(a.basisVector(0), v).isZero());
  // [3 e2, 3 e2] = 9 [e2, e2] = 9 e1 by bilinearity.
  CHECK(a.printElement(a.bracket(u, u)) == "9*e1");
}

TEST_CASE("identity suite passes on the nilpotent table") {
  StructureConstantAlgebra a = heisenbergLike();
  auto samples = basisElements(a);
  auto coeffs = coefficientMonomials(0, 2);
  auto reports = checkLeibnizSuite(a, samples, coeffs, SampleConfig{});
  for (const CheckReport& r : reports) {
    CAPTURE(r.id);
    CHECK(r.pass());
  }
}

TEST_CASE("the idempotent table fails the Jacobi identity with a witness") {
  StructureConstantAlgebra a = idempotentTable();
  auto samples = basisElements(a);
  auto coeffs = coefficientMonomials(0, 0);
  auto reports = checkLeibnizSuite(a, samples, coeffs, SampleConfig{});
  bool sawJacobiFailure = false;
  for (const CheckReport& r : reports) {
    if (r.id != "jacobi") continue;
    sawJacobiFailure = !r.pass();
    REQUIRE(!r.failures.empty());
    CHECK(r.failures.front().witness.find("e1") != std::string::npos);
  }
  CHECK(sawJacobiFailure);
}

TEST_CASE("adjoint and anti-adjoint actions form a module") {
  StructureConstantAlgebra a = heisenbergLike();
  AdjointPack pack{&a};
  auto reports = checkModuleSuite(pack, basisElements(a),
                                  coefficientMonomials(0, 0), SampleConfig{});
  REQUIRE(reports.size() == 4);
  for (const CheckReport& r : reports) {
    CAPTURE(r.id);
    CHECK(r.pass());
  }
}

TEST_CASE("adjoint actions over a non-Leibniz table violate the axioms") {
  StructureConstantAlgebra a = idempotentTable();
  AdjointPack pack{&a};
  auto reports = checkModuleSuite(pack, basisElements(a),
                                  coefficientMonomials(0, 0), SampleConfig{});
  CHECK_FALSE(allPass(reports));
}

TEST_CASE("element grammar round-trips") {
  StructureConstantAlgebra a = heisenbergLike();
  QVec u = a.parse("e1 - 1/2*e2");
  CHECK(u[0] == Rat(1));
  CHECK(u[1] == Rat(-1, 2));
  CHECK(a.printElement(u) == "e1 - 1/2*e2");
  CHECK(a.parse(a.printElement(u)) == u);
  CHECK_THROWS_AS((void)a.parse("e3"), ParseError);
}

} // TEST_SUITE

TEST_SUITE("dorfman") {

TEST_CASE("vector-field bracket matches the commutator") {
  DorfmanAlgebra d({"x"});
  auto u = d.vectorField(0, Poly::constant(1, Rat(1)));
  auto v = d.vectorField(0, Poly::variable(1, 0));
  CHECK(d.printElement(d.bracket(u, v)) == "d_x");
  CHECK(d.printElement(d.bracket(v, u)) == "-d_x");
  CHECK(d.anchor(u).apply(Poly::variable(1, 0)) ==
        Poly::constant(1, Rat(1)));
}

TEST_CASE("form part transforms by the Lie derivative") {
  DorfmanAlgebra d({"x"});
  auto u = d.vectorField(0, Poly::constant(1, Rat(1)));
  auto xi = d.oneForm(0, Poly::variable(1, 0));
  CHECK(d.bracket(u, xi) == d.oneForm(0, Poly::constant(1, Rat(1))));
}

TEST_CASE("differential and pairing are mutually calibrated") {
  DorfmanAlgebra d({"x"});
  Poly x = Poly::variable(1, 0);
  CHECK(d.differential(x) == d.oneForm(0, Poly::constant(1, Rat(2))));
  auto u = d.vectorField(0, Poly::constant(1, Rat(1)));
  auto xi = d.oneForm(0, Poly::constant(1, Rat(1)));
  CHECK(d.pairing(u, xi) == Poly::constant(1, Rat(1, 2)));
  // (D f | u) = a(u)(f) on a decorated sample.
  auto w = d.vectorField(0, parsePoly("x^2", d.vars()));
  CHECK(d.pairing(d.differential(x), w) == d.anchor(w).apply(x));
}

TEST_CASE("element grammar round-trips") {
  DorfmanAlgebra d({"x"});
  auto u = d.parse("d_x + x*dx");
  CHECK(u == d.vectorField(0, Poly::constant(1, Rat(1))) +
                 d.oneForm(0, Poly::variable(1, 0)));
  CHECK(d.printElement(u) == "d_x + x*dx");
}

TEST_CASE("scalar-product suites pass exhaustively in one variable") {
  DorfmanAlgebra d({"x"});
  auto samples = d.sampleElements(2);
  auto coeffs = coefficientMonomials(1, 2);
  SampleConfig config;
  config.tupleCap = 4000;
  config.seed = 3;

  auto classical = checkClassicalCourantSuite(d, samples, coeffs, config);
  REQUIRE(classical.size() == 11);
  for (const CheckReport& r : classical) {
    CAPTURE(r.id);
    CHECK(r.pass());
  }

  auto pre = checkPreCourantSuite(d, samples, coeffs, config);
  for (const CheckReport& r : pre) {
    CAPTURE(r.id);
    CHECK(r.pass());
  }

  auto rightAnchor = [&](const Poly& f, const DorfmanAlgebra::Element& u,
                         const DorfmanAlgebra::Element& v) {
    return d.rightAnchor(f, u, v);
  };
  auto loday = checkLodaySuite(d, samples, coeffs, rightAnchor, config);
  for (const CheckReport& r : loday) {
    CAPTURE(r.id);
    CHECK(r.pass());
  }

  auto symmetric = checkSymmetricSuite(d, samples, coeffs, config);
  for (const CheckReport& r : symmetric) {
    CAPTURE(r.id);
    CHECK(r.pass());
  }

  ValueModulePack<DorfmanAlgebra> pack{&d, coefficientMonomials(1, 2)};
  auto module = checkModuleSuite(pack, samples, coeffs, config);
  for (const CheckReport& r : module) {
    CAPTURE(r.id);
    CHECK(r.pass());
  }
}

TEST_CASE("two variables: a non-coordinate spot identity") {
  DorfmanAlgebra d({"x", "y"});
  // [x d/dy + dy, y d/dx] has vector part [x d/dy, y d/dx]
  // = x d/dx - y d/dy, and form part L_{x d/dy}(0) - i_{y d/dx} d(dy) = 0.
  auto u = d.vectorField(1, Poly::variable(2, 0)) +
           d.oneForm(1, Poly::constant(2, Rat(1)));
  auto v = d.vectorField(0, Poly::variable(2, 1));
  auto expected = d.vectorField(0, Poly::variable(2, 0)) -
                  d.vectorField(1, Poly::variable(2, 1));
  auto bracket = d.bracket(u, v);
  CHECK(bracket.vec == expected.vec);
}

TEST_CASE("pairing rescaling breaks the twist rule with a witness") {
  DorfmanAlgebra::Options options;
  options.pairingScale = Rat(1);
  DorfmanAlgebra mutant({"x"}, options);
  auto samples = mutant.sampleElements(1);
  auto coeffs = coefficientMonomials(1, 1);
  auto reports = checkClassicalCourantSuite(mutant, samples, coeffs,
                                            SampleConfig{});
  bool sawTwistFailure = false;
  for (const CheckReport& r : reports) {
    if (r.id == "left_twist_rule") {
      sawTwistFailure = !r.pass();
      REQUIRE(!r.failures.empty());
      CHECK(!r.failures.front().witness.empty());
    }
  }
  CHECK(sawTwistFailure);
}

TEST_CASE("adding the vector dot term breaks pairing invariance") {
  DorfmanAlgebra::Options options;
  options.addVectorDot = true;
  DorfmanAlgebra mutant({"x"}, options);
  auto samples = mutant.sampleElements(1);
  auto coeffs = coefficientMonomials(1, 1);
  auto reports = checkClassicalCourantSuite(mutant, samples, coeffs,
                                            SampleConfig{});
  CHECK_FALSE(allPass(reports));
}

} // TEST_SUITE
