#include <doctest.h>

#include "courant/axiom_checks.hpp"
#include "courant/courant_algebra.hpp"
#include "courant/errors.hpp"
#include "courant/free_leibniz.hpp"
#include "courant/instance.hpp"
#include "courant/structure_constants.hpp"
#include "courant/sym_leibniz.hpp"

#include <memory>

using namespace courant;

namespace {

std::shared_ptr<const StructureConstantAlgebra> scAlgebra() {
  std::vector<std::vector<QVec>> table(2, std::vector<QVec>(2, QVec(2)));
  table[1][1] = QVec::unit(2, 0);
  return std::make_shared<const StructureConstantAlgebra>(2, table);
}

std::shared_ptr<const SymLeibnizQuotient> rankOneQuotient() {
  static std::shared_ptr<const SymLeibnizQuotient> cached = [] {
    AnchoredModule m({"x"}, {"e"}, {{Poly::constant(1, Rat(1))}});
    return std::make_shared<const SymLeibnizQuotient>(
        FreeLeibniz(m, Bounds{3, 3}));
  }();
  return cached;
}

const AssociatedCourant<SymLeibnizQuotient>& rankOneCourant() {
  static AssociatedCourant<SymLeibnizQuotient> cached = [] {
    // Cut the pair piece at the weight bound of the base: invariance
    // relations for a pair need the symmetrized product of its slots, so
    // pairs beyond the base weight bound cannot be related and identity
    // checks on them would only probe the truncation boundary.
    CourantOptions options;
    options.maxCombinedWeight = rankOneQuotient()->bounds().wmax;
    return buildAssociatedCourant(rankOneQuotient(), options);
  }();
  return cached;
}

} // namespace

TEST_SUITE("courant_algebra") {

TEST_CASE("the invariance span of the nilpotent table is one line") {
  auto base = scAlgebra();
  AssociatedCourant<StructureConstantAlgebra> courant(
      SymSquare<StructureConstantAlgebra>(base), SaturationConfig{});
  CHECK(courant.valueDim() == 2);
  // (e1|e1) is the class of the single invariance generator span.
  CHECK(courant.pairing(base->basisVector(0), base->basisVector(0))
            .isZero());
  CHECK_FALSE(courant.pairing(base->basisVector(0), base->basisVector(1))
                  .isZero());
  CHECK_FALSE(courant.pairing(base->basisVector(1), base->basisVector(1))
                  .isZero());
  bool sawNonzeroGenerator = false;
  for (const InvRecord& record : courant.invGenerators()) {
    CAPTURE(record.witness);
    CHECK(courant.project(record.element).isZero());
    if (!record.element.isZero()) sawNonzeroGenerator = true;
  }
  CHECK(sawNonzeroGenerator);
}

TEST_CASE("value actions satisfy the bimodule axioms on the table") {
  auto base = scAlgebra();
  AssociatedCourant<StructureConstantAlgebra> courant(
      SymSquare<StructureConstantAlgebra>(base), SaturationConfig{});
  std::vector<QVec> values;
  for (std::size_t k = 0; k < courant.valueDim(); ++k)
    values.push_back(courant.valueCobasisVector(k));
  ValueModulePack<AssociatedCourant<StructureConstantAlgebra>> pack{
      &courant, values};
  auto reports = checkModuleSuite(pack, basisElements(*base),
                                  coefficientMonomials(0, 0), SampleConfig{});
  REQUIRE(reports.size() == 4);
  for (const CheckReport& r : reports) {
    CAPTURE(r.id);
    CHECK(r.pass());
    CHECK(r.mode == "exhaustive");
  }
}

TEST_CASE("ambient lemma identities hold exactly on the table") {
  auto base = scAlgebra();
  SymSquare<StructureConstantAlgebra> square(base);
  CHECK(checkRightAdjointKillsSymmetrized(*base, SampleConfig{}).pass());
  CHECK(checkInvCovariance(square, SampleConfig{}).pass());
  CHECK(checkRightKillsInv(square, 0, SampleConfig{}).pass());
}

TEST_CASE("ambient lemma identities hold exactly on the quotient") {
  auto q = rankOneQuotient();
  SymSquare<SymLeibnizQuotient> square(q);
  SampleConfig config;
  config.seed = 5;
  config.tupleCap = 2000;
  CheckReport killsSym = checkRightAdjointKillsSymmetrized(*q, config);
  CAPTURE(renderReports(std::span<const CheckReport>(&killsSym, 1)));
  CHECK(killsSym.pass());
  CheckReport covariance = checkInvCovariance(square, config);
  CAPTURE(renderReports(std::span<const CheckReport>(&covariance, 1)));
  CHECK(covariance.pass());
  CheckReport kills = checkRightKillsInv(square, 1, config);
  CAPTURE(renderReports(std::span<const CheckReport>(&kills, 1)));
  CHECK(kills.pass());
}

TEST_CASE("the associated pairing satisfies the action identities") {
  const auto& courant = rankOneCourant();
  auto q = rankOneQuotient();
  auto samples = basisElements(*q);
  auto coeffs = coefficientMonomials(1, 1);
  // Exhaustive over the basis grid; tuples that leave the pair piece or
  // the base bounds count as overflows, the rest must project to zero.
  SampleConfig config;
  config.seed = 7;
  config.tupleCap = samples.size() * samples.size() * samples.size();
  auto reports = checkPreCourantSuite(courant, samples, coeffs, config);
  REQUIRE(reports.size() == 5);
  for (const CheckReport& r : reports) {
    CAPTURE(r.id);
    CAPTURE(renderReports(std::span<const CheckReport>(&r, 1)));
    CHECK(r.pass());
    CHECK(r.samples > 0);
  }
}

TEST_CASE("pairing projections identify balance-related values") {
  const auto& courant = rankOneCourant();
  auto q = rankOneQuotient();
  FreeElement e = q->parse("(e)");
  FreeElement xe = q->parse("(x*e)");
  // (x X | Y) = (X | x Y) in the value module.
  QVec left = courant.pairing(q->scalarMult(Poly::variable(1, 0), e), e);
  QVec right = courant.pairing(e, xe);
  CHECK(left == right);
  // Values are canonical representatives: projecting is a no-op.
  CHECK(courant.project(left) == left);
}

TEST_CASE("a base that is not balanced is rejected") {
  AnchoredModule m({"x"}, {"e"}, {{Poly::constant(1, Rat(1))}});
  auto free = std::make_shared<const FreeLeibniz>(m, Bounds{3, 2});
  CHECK_THROWS_AS(
      (void)buildAssociatedCourant(free, CourantOptions{}),
      SymmetryViolation);
}

TEST_CASE("saturation of the invariance span was recorded") {
  const auto& courant = rankOneCourant();
  const SaturationOutcome& outcome = courant.saturation();
  REQUIRE(outcome.rankHistory.size() >= 2);
  CHECK(outcome.rankHistory.back() ==
        courant.valueQuotient().relations().rank());
}

} // TEST_SUITE
