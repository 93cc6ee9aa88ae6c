#include <doctest.h>

#include "courant/errors.hpp"
#include "courant/instance.hpp"
#include "courant/structure_constants.hpp"
#include "courant/sym_leibniz.hpp"
#include "courant/sym_square.hpp"

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

} // namespace

TEST_SUITE("sym_square") {

TEST_CASE("unordered pairs enumerate the square of the basis") {
  SymSquare<StructureConstantAlgebra> square(scAlgebra());
  REQUIRE(square.pairCount() == 3);
  CHECK(square.pairLabel(0) == "(e1) (.) (e1)");
  CHECK(square.pairLabel(1) == "(e1) (.) (e2)");
  CHECK(square.pairLabel(2) == "(e2) (.) (e2)");
}

TEST_CASE("pure tensors are symmetric and bilinear") {
  auto base = scAlgebra();
  SymSquare<StructureConstantAlgebra> square(base);
  QVec e1 = base->basisVector(0);
  QVec e2 = base->basisVector(1);
  CHECK(square.pureTensor(e1, e2) == square.pureTensor(e2, e1));
  QVec u = e1.scaled(Rat(2)) + e2;
  CHECK(square.pureTensor(u, e2) ==
        square.pureTensor(e1, e2).scaled(Rat(2)) +
            square.pureTensor(e2, e2));
  CHECK(square.printElement(square.pureTensor(u, e2)) ==
        "2 (e1) (.) (e2) + (e2) (.) (e2)");
}

TEST_CASE("invariance generators match hand-expanded values") {
  auto base = scAlgebra();
  SymSquare<StructureConstantAlgebra> square(base);
  QVec e1 = base->basisVector(0);
  QVec e2 = base->basisVector(1);
  QVec p11 = square.pureTensor(e1, e1);
  QVec p12 = square.pureTensor(e1, e2);

  CHECK(square.invGenerator(e2, e2, e1) == p11);
  CHECK(square.invGenerator(e2, e1, e2) == p11);
  CHECK(square.invGenerator(e1, e2, e2) == p11.scaled(Rat(-2)));
  CHECK(square.invGenerator(e2, e2, e2).isZero());

  CHECK(square.muRight(e2, square.pureTensor(e2, e2)) ==
        p12.scaled(Rat(-2)));
  CHECK(square.muLeft(e2, square.pureTensor(e2, e2)) == p12.scaled(Rat(2)));
}

TEST_CASE("constant coefficients produce no balance relations") {
  SymSquare<StructureConstantAlgebra> square(scAlgebra());
  CHECK(square.balancedQuotient().relations().rank() == 0);
  CHECK(square.checkScalarSlotAgreement().pass());
}

TEST_CASE("decorated slots balance across the tensor sign") {
  auto q = rankOneQuotient();
  SymSquare<SymLeibnizQuotient> square(q);
  FreeElement e = q->basisElement(
      [&] {
        for (std::size_t i = 0; i < q->basisSize(); ++i)
          if (q->basisLabel(i) == "(e)") return i;
        return std::size_t{0};
      }());
  Poly x = Poly::variable(1, 0);
  FreeElement xe = q->scalarMult(x, e);
  // Slide the coefficient across the tensor sign: (x.e) o (x.e) and
  // e o (x^2.e) are distinct ambient pairs that the balance relations glue.
  QVec left = square.pureTensor(xe, xe);
  QVec right = square.pureTensor(e, q->scalarMult(x, xe));
  CHECK(left != right); // distinct ambient vectors
  CHECK(square.sameClass(left, right));
  CHECK(square.balancedQuotient().relations().rank() > 0);
  CHECK(square.checkScalarSlotAgreement().pass());
}

TEST_CASE("slot actions respect the weight truncation") {
  auto q = rankOneQuotient();
  typename SymSquare<SymLeibnizQuotient>::Options options;
  options.maxCombinedWeight = 3;
  SymSquare<SymLeibnizQuotient> square(q, options);
  for (std::size_t p = 0; p < square.pairCount(); ++p)
    CHECK(square.pairAt(p).combinedWeight <= 3);
  // A pair whose slots exist but whose combination leaves the piece
  // overflows; pairs inside the cap still work.
  FreeElement w2 = q->evaluateExpression("[ (e) , (e) ]");
  FreeElement e = q->parse("(e)");
  CHECK_THROWS_AS((void)square.pureTensor(w2, w2), TruncationOverflow);
  CHECK_NOTHROW((void)square.pureTensor(e, w2));
}

} // TEST_SUITE
