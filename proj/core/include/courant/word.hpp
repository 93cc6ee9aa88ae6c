#ifndef COURANT_WORD_HPP
#define COURANT_WORD_HPP

#include "courant/poly.hpp"

#include <compare>
#include <vector>

namespace courant {

/// One tensor factor: a monomial decoration x^mono applied to generator
/// `gen`.
struct WordFactor {
  Exponents mono;
  int gen = 0;

  bool operator==(const WordFactor&) const = default;
};

/// Basis word of the free construction: a nonempty tensor product of
/// decorated generators.
struct Word {
  std::vector<WordFactor> factors;

  /// Number of tensor factors.
  int weight() const { return static_cast<int>(factors.size()); }

  /// Total degree of all decorations.
  int pdeg() const;

  bool operator==(const Word&) const = default;
};

/// Canonical word order, leading word first: higher weight precedes lower
/// weight; within a weight, factor sequences compare ascending (graded-lex
/// on the decoration, then generator index, left to right). Echelon pivots
/// therefore land on the top-weight word of each relation.
bool wordLess(const Word& a, const Word& b);

struct WordOrder {
  bool operator()(const Word& a, const Word& b) const { return wordLess(a, b); }
};

/// a followed by b.
Word concatenate(const Word& a, const Word& b);

} // namespace courant

#endif
