#ifndef COURANT_STRUCTURE_CONSTANTS_HPP
#define COURANT_STRUCTURE_CONSTANTS_HPP

#include "courant/derivation.hpp"
#include "courant/poly.hpp"
#include "courant/qvec.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace courant {

/// Finite-dimensional algebra over Q given by an explicit bracket table:
/// bracket(e_i, e_j) = sum_k table[i][j][k] e_k. The coefficient algebra is
/// the zero-variable polynomial ring (plain rationals) and the anchor is
/// zero. No identity is assumed; the checkers decide what the table
/// satisfies.
class StructureConstantAlgebra {
public:
  using Element = QVec;

  StructureConstantAlgebra(int dim, std::vector<std::vector<QVec>> table);

  int dim() const { return m_dim; }
  int nvars() const { return 0; }
  std::vector<std::string> vars() const { return {}; }

  Element zero() const { return QVec(static_cast<std::size_t>(m_dim)); }
  Element basisVector(int index) const;

  Element bracket(const Element& u, const Element& v) const;

  /// Scalar action of a constant polynomial.
  Element scalarMult(const Poly& f, const Element& u) const;

  /// Zero derivation over zero variables.
  Derivation anchor(const Element&) const { return Derivation(0); }

  std::string printElement(const Element& u) const;

  /// Parses sums of `rat? '*'? e<k>` terms, e.g. "e1 - 1/2*e2".
  Element parse(std::string_view text) const;

  std::size_t basisSize() const { return static_cast<std::size_t>(m_dim); }
  Element basisElement(std::size_t index) const {
    return basisVector(static_cast<int>(index));
  }
  int basisWeight(std::size_t) const { return 1; }
  std::string basisLabel(std::size_t index) const {
    return "e" + std::to_string(index + 1);
  }
  QVec coordinates(const Element& u) const;

  std::vector<Element> sampleElements(int degreeCap) const;

private:
  int m_dim;
  std::vector<std::vector<QVec>> m_table;
};

} // namespace courant

#endif
