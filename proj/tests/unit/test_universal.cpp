#include <doctest.h>

#include "courant/courant_algebra.hpp"
#include "courant/dorfman.hpp"
#include "courant/errors.hpp"
#include "courant/free_leibniz.hpp"
#include "courant/sym_leibniz.hpp"
#include "courant/universal_maps.hpp"

#include <memory>

using namespace courant;

namespace {

std::shared_ptr<const SymLeibnizQuotient> rankOneQuotient() {
  static std::shared_ptr<const SymLeibnizQuotient> cached = [] {
    AnchoredModule m({"x"}, {"e"}, {{Poly::constant(1, Rat(1))}});
    return std::make_shared<const SymLeibnizQuotient>(
        FreeLeibniz(m, Bounds{3, 3}));
  }();
  return cached;
}

DorfmanAlgebra::Element phiImage(const DorfmanAlgebra& target) {
  return target.parse("d_x + x*dx");
}

} // namespace

TEST_SUITE("universal_maps") {

TEST_CASE("generator images must reproduce the anchors") {
  auto q = rankOneQuotient();
  const FreeLeibniz& free = q->freeAlgebra();
  DorfmanAlgebra target({"x"});
  CHECK_THROWS_AS(
      (FreeMorphism<DorfmanAlgebra>(
          &free, &target, {target.parse("x*d_x")})),
      AnchorIncompatibility);
  CHECK_THROWS_AS(
      (FreeMorphism<DorfmanAlgebra>(&free, &target, {})),
      DimensionMismatch);
  CHECK_NOTHROW((FreeMorphism<DorfmanAlgebra>(&free, &target,
                                              {phiImage(target)})));
}

TEST_CASE("the extension restricts to the assignment and is structural") {
  auto q = rankOneQuotient();
  const FreeLeibniz& free = q->freeAlgebra();
  DorfmanAlgebra target({"x"});
  FreeMorphism<DorfmanAlgebra> lift(&free, &target, {phiImage(target)});

  CHECK(lift.checkGeneratorRestriction().pass());
  SampleConfig config;
  config.seed = 11;
  CHECK(lift.checkBracketCompatibility(config).pass());
  CHECK(lift.checkCoefficientCompatibility(2, config).pass());
  CHECK(lift.checkAnchorCompatibility(config).pass());

  // Frozen spot value: the image of (e) ox (e) is the bracket of the
  // image with itself, [d/dx + x dx, d/dx + x dx] = dx.
  FreeElement square = free.evaluateExpression("[ (e) , (e) ]");
  CHECK(target.printElement(lift.apply(square)) == "dx");
}

TEST_CASE("descent to the balanced quotient requires vanishing") {
  auto q = rankOneQuotient();
  const FreeLeibniz& free = q->freeAlgebra();

  // Into the quotient itself: the canonical assignment descends.
  FreeMorphism<SymLeibnizQuotient> toQuotient(&free, q.get(),
                                              {q->parse("(e)")});
  SymmetricMorphism<SymLeibnizQuotient> unit =
      descendToSymmetric(*q, toQuotient);
  SampleConfig config;
  config.seed = 13;
  CHECK(unit.checkRouteAgreement(config).pass());
  CHECK(unit.checkBracketCompatibility(config).pass());
  CHECK(unit.checkCoefficientCompatibility(2, config).pass());
  // The descended canonical map is the identity on classes.
  for (std::size_t i = 0; i < q->basisSize(); ++i)
    CHECK((unit.cobasisImage(i) - q->basisElement(i)).isZero());

  // Into the free algebra itself: relations do not vanish, no descent.
  FreeMorphism<FreeLeibniz> toFree(&free, &free, {free.parse("(e)")});
  CHECK_THROWS_AS((void)descendToSymmetric(*q, toFree),
                  NonVanishingOnIdeal);
}

TEST_CASE("descent of the induced pairing map to the value quotient") {
  auto q = rankOneQuotient();
  const FreeLeibniz& free = q->freeAlgebra();
  DorfmanAlgebra target({"x"});
  FreeMorphism<DorfmanAlgebra> lift(&free, &target, {phiImage(target)});
  SymmetricMorphism<DorfmanAlgebra> phi1 = descendToSymmetric(*q, lift);

  AssociatedCourant<SymLeibnizQuotient> courant =
      buildAssociatedCourant(q, CourantOptions{});
  PairedMorphism<DorfmanAlgebra> phi2 = descendToPaired(courant, phi1);

  SampleConfig config;
  config.seed = 17;
  config.tupleCap = 2000;
  CHECK(phi2.checkPairingCompatibility(config).pass());
  CHECK(phi2.checkLeftActionCompatibility(config).pass());
  CHECK(phi2.checkRightActionCompatibility(config).pass());
  CHECK(phi2.checkRightActionDiagram(config).pass());

  // Frozen spot value: phi2 of ((e)|(e)) is (phi e | phi e) = x.
  QVec source = courant.pairing(q->parse("(e)"), q->parse("(e)"));
  CHECK(toString(phi2.apply(source), target.vars()) == "x");
}

TEST_CASE("a pairing-incompatible target is refused at descent") {
  auto q = rankOneQuotient();
  const FreeLeibniz& free = q->freeAlgebra();
  DorfmanAlgebra::Options options;
  options.addVectorDot = true;
  DorfmanAlgebra mutant({"x"}, options);
  FreeMorphism<DorfmanAlgebra> lift(&free, &mutant, {phiImage(mutant)});
  SymmetricMorphism<DorfmanAlgebra> phi1 = descendToSymmetric(*q, lift);
  AssociatedCourant<SymLeibnizQuotient> courant =
      buildAssociatedCourant(q, CourantOptions{});
  CHECK_THROWS_AS((void)descendToPaired(courant, phi1),
                  NonVanishingOnInv);
}

} // TEST_SUITE
