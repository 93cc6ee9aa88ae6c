#ifndef COURANT_SYM_LEIBNIZ_HPP
#define COURANT_SYM_LEIBNIZ_HPP

#include "courant/check_report.hpp"
#include "courant/free_leibniz.hpp"
#include "courant/linquot.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace courant {

/// One relation instance fed into the quotient: the element itself and a
/// human-readable description of the arguments that produced it.
struct RelationGenerator {
  FreeElement element;
  std::string witness;
};

/// Options for relation generation. Both families are on by default; the
/// flags exist so tests can study each family in isolation.
struct RelationConfig {
  bool includeSymmetrizedLinearity = true; // X∘(fY) − (fX)∘Y
  bool includeBracketLinearity = true;     // [fX,Y∘Z] − [X,Y]∘(fZ) − (fY)∘[X,Z]
  SaturationConfig saturation;
};

/// Per-weight dimension data of the quotient, derived from the pivot
/// weights of the relation span (relations mix weights; pivots sit on each
/// relation's top-weight word, so these are the associated-graded counts).
struct WeightDims {
  int weight = 0;
  std::size_t dimFree = 0;
  std::size_t dimRelations = 0;
  std::size_t dimQuotient = 0;
};

/// The quotient of the free algebra by the two coefficient-linearity
/// relation families of the symmetrized product, computed inside one
/// filtered piece.
///
/// Relations are generated from basis words and exact-degree coefficient
/// monomials, then closed under bracketing with weight-1 words and under
/// the variable actions; the saturation loop raises the coefficient degree
/// until the span's rank survives two consecutive rounds. Parameter
/// combinations whose evaluation cannot complete inside the piece are
/// skipped and counted as overflows.
///
/// Elements of the quotient are represented by their canonical reduced
/// representatives; every operation evaluates on representatives upstairs
/// and re-projects.
class SymLeibnizQuotient {
public:
  using Element = FreeElement;

  explicit SymLeibnizQuotient(FreeLeibniz free, RelationConfig config = {});

  const FreeLeibniz& freeAlgebra() const { return m_free; }
  const AnchoredModule& module() const { return m_free.module(); }
  Bounds bounds() const { return m_free.bounds(); }
  int nvars() const { return m_free.nvars(); }
  const std::vector<std::string>& vars() const { return m_free.vars(); }

  Element zero() const { return m_free.zero(); }

  /// Canonical representative of the class of u.
  Element project(const FreeElement& u) const;

  /// Class of the weight-1 image of a module element.
  Element include(const ModuleElement& element) const;

  /// Class of the undecorated weight-1 generator word.
  Element generator(int index) const;

  Element bracket(const Element& u, const Element& v) const;
  Element symmetrized(const Element& u, const Element& v) const;
  Element scalarMult(const Poly& f, const Element& u) const;

  /// Induced anchor, evaluated on the representative. Well defined because
  /// the relation span sits inside the kernel of the upstairs anchor.
  Derivation anchor(const Element& u) const;

  /// Quotient basis: the cobasis words of the relation span.
  std::size_t basisSize() const { return m_quotient.dim(); }
  Element basisElement(std::size_t index) const;
  int basisWeight(std::size_t index) const;
  std::string basisLabel(std::size_t index) const;

  /// Exact coordinates over the cobasis words.
  QVec coordinates(const Element& u) const;
  Element fromCoordinates(const QVec& v) const;

  std::string printElement(const Element& u) const {
    return m_free.printElement(u);
  }
  Element parse(std::string_view text) const {
    return project(m_free.parse(text));
  }
  Element evaluateExpression(std::string_view text) const {
    return project(m_free.evaluateExpression(text));
  }

  const QuotientSpace& quotientSpace() const { return m_quotient; }
  const SaturationOutcome& saturation() const { return m_saturation; }
  const std::vector<RelationGenerator>& relationGenerators() const {
    return m_generators;
  }

  std::vector<WeightDims> dimsByWeight() const;

  /// Re-verifies, independently of construction, that the relation span is
  /// closed under brackets with every basis word on either side and under
  /// every variable action.
  CheckReport checkIdealClosure() const;

  /// Verifies that the upstairs anchor vanishes on every row of the
  /// relation span.
  CheckReport checkAnchorKillsRelations() const;

private:
  FreeLeibniz m_free;
  RelationConfig m_config;
  std::vector<RelationGenerator> m_generators;
  QuotientSpace m_quotient;
  SaturationOutcome m_saturation;
};

/// X∘(fY) − (fX)∘Y evaluated in the free algebra.
FreeElement symmetrizedLinearityDefect(const FreeLeibniz& free, const Poly& f,
                                       const FreeElement& x,
                                       const FreeElement& y);

/// [fX, Y∘Z] − [X,Y]∘(fZ) − (fY)∘[X,Z] evaluated in the free algebra.
FreeElement bracketLinearityDefect(const FreeLeibniz& free, const Poly& f,
                                   const FreeElement& x, const FreeElement& y,
                                   const FreeElement& z);

} // namespace courant

#endif
