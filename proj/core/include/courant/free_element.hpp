#ifndef COURANT_FREE_ELEMENT_HPP
#define COURANT_FREE_ELEMENT_HPP

#include "courant/anchored_module.hpp"
#include "courant/rational.hpp"
#include "courant/word.hpp"

#include <map>
#include <string>
#include <string_view>

namespace courant {

/// Truncation bounds of a filtered piece: words of weight <= wmax whose
/// decorations have total degree <= pmax.
struct Bounds {
  int wmax = 0;
  int pmax = 0;

  bool operator==(const Bounds&) const = default;
  bool admits(const Word& w) const {
    return w.weight() <= wmax && w.pdeg() <= pmax;
  }
};

/// Finite Q-linear combination of basis words inside one filtered piece.
/// Terms are canonical (no zero coefficients) and iterate in the canonical
/// word order. Elements created under different bounds never mix.
class FreeElement {
public:
  using TermMap = std::map<Word, Rat, WordOrder>;

  FreeElement() = default;
  explicit FreeElement(Bounds bounds) : m_bounds(bounds) {}

  /// Single word with coefficient c. Throws TruncationOverflow if the word
  /// does not fit the bounds.
  static FreeElement term(const Word& w, const Rat& c, Bounds bounds);

  const TermMap& terms() const { return m_terms; }
  Bounds bounds() const { return m_bounds; }
  bool isZero() const { return m_terms.empty(); }

  /// Coefficient of a word (zero if absent).
  Rat coefficient(const Word& w) const;

  /// Adds c * w in place, enforcing bounds and canonicality.
  void addTerm(const Word& w, const Rat& c);

  FreeElement operator+(const FreeElement& other) const;
  FreeElement operator-(const FreeElement& other) const;
  FreeElement operator-() const;
  FreeElement scaled(const Rat& c) const;

  bool operator==(const FreeElement& other) const;

private:
  void requireSameBounds(const FreeElement& other) const;

  Bounds m_bounds;
  TermMap m_terms;
};

/// Prints in the element grammar, canonical order, e.g.
/// "(e1)⊗(x*e2) - 2/3 (e1)"; "0" when zero.
std::string toString(const FreeElement& u, const AnchoredModule& module);

/// Parses the element grammar
///   element ::= term (('+'|'-') term)*
///   term    ::= rat? word
///   word    ::= factor ('⊗' factor)*
///   factor  ::= '(' [mono '*'] gen ')'
/// against the module's variable and generator names. The ASCII spelling
/// " ox " is accepted for '⊗'. Whitespace is insignificant.
FreeElement parseElement(std::string_view text, const AnchoredModule& module,
                         Bounds bounds);

} // namespace courant

#endif
