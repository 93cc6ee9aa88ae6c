#ifndef COURANT_FREE_LEIBNIZ_HPP
#define COURANT_FREE_LEIBNIZ_HPP

#include "courant/anchored_module.hpp"
#include "courant/free_element.hpp"
#include "courant/qvec.hpp"
#include "courant/word.hpp"

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace courant {

/// The free Leibniz algebra generated by an anchored module, truncated to a
/// filtered piece (weight <= wmax, decoration degree <= pmax).
///
/// Basis words of weight k are k-fold tensor products of decorated
/// generators. The bracket is the unique bracket for which weight-1
/// brackets concatenate,
///   [m, v] = m ⊗ v,
/// extended to longer left arguments by
///   [m ⊗ w, v] = [m, [w, v]] - [w, [m, v]],
/// and the scalar action of a coefficient f unfolds recursively as
///   f (m ⊗ w) = m ⊗ (f w) - (a(m)(f)) w
/// with plain decoration multiplication on weight-1 words.
///
/// Immutable after construction; all operations are const and the context
/// can be shared freely across threads.
class FreeLeibniz {
public:
  using Element = FreeElement;

  FreeLeibniz(std::shared_ptr<const AnchoredModule> module, Bounds bounds);
  FreeLeibniz(AnchoredModule module, Bounds bounds);

  const AnchoredModule& module() const { return *m_module; }
  std::shared_ptr<const AnchoredModule> moduleHandle() const {
    return m_module;
  }
  Bounds bounds() const { return m_bounds; }
  int nvars() const { return m_module->nvars(); }
  const std::vector<std::string>& vars() const { return m_module->vars(); }

  FreeElement zero() const { return FreeElement(m_bounds); }

  /// Single basis word with coefficient 1.
  FreeElement word(const Word& w) const;

  /// Weight-1 image of a module element.
  FreeElement include(const ModuleElement& element) const;

  /// Undecorated weight-1 generator word.
  FreeElement generator(int index) const;

  /// Scalar action of a coefficient polynomial. Throws TruncationOverflow
  /// when a decoration leaves the filtered piece.
  FreeElement scalarMult(const Poly& f, const FreeElement& u) const;

  /// The universal bracket. Throws TruncationOverflow when the combined
  /// weight or decoration degree leaves the filtered piece.
  FreeElement bracket(const FreeElement& u, const FreeElement& v) const;

  /// [u,v] + [v,u].
  FreeElement symmetrized(const FreeElement& u, const FreeElement& v) const;

  /// Induced anchor: on a word, the nested commutator of the decorated
  /// anchor images of its factors; extended Q-linearly.
  Derivation anchor(const FreeElement& u) const;

  /// All basis words of the filtered piece in canonical order.
  const std::vector<Word>& basisWords() const { return m_basis; }

  std::size_t basisSize() const { return m_basis.size(); }
  const Word& basisWord(std::size_t index) const { return m_basis[index]; }
  std::size_t basisIndex(const Word& w) const;
  int basisWeight(std::size_t index) const {
    return m_basis[index].weight();
  }
  FreeElement basisElement(std::size_t index) const {
    return word(m_basis[index]);
  }

  /// Exact coordinates over the basis words.
  QVec coordinates(const FreeElement& u) const;
  FreeElement fromCoordinates(const QVec& v) const;

  std::string printElement(const FreeElement& u) const {
    return toString(u, *m_module);
  }
  std::string basisLabel(std::size_t index) const {
    return printElement(basisElement(index));
  }
  FreeElement parse(std::string_view text) const {
    return parseElement(text, *m_module, m_bounds);
  }

  /// Evaluates a bracket expression:
  ///   expr ::= '[' expr ',' expr ']' | '{' expr ',' expr '}' | element
  /// where '{u,v}' is the symmetrized product [u,v] + [v,u].
  FreeElement evaluateExpression(std::string_view text) const;

private:
  FreeElement bracketWords(const Word& a, const Word& b) const;
  FreeElement scalarMultWord(const Poly& f, const Word& w) const;

  std::shared_ptr<const AnchoredModule> m_module;
  Bounds m_bounds;
  std::vector<Word> m_basis;
  std::map<Word, std::size_t, WordOrder> m_basisIndex;
};

} // namespace courant

#endif
