#include "courant/free_leibniz.hpp"

#include "courant/errors.hpp"
#include "element_parse.hpp"

#include <algorithm>

namespace courant {

namespace {

std::vector<Word> enumerateBasis(const AnchoredModule& module, Bounds bounds) {
  std::vector<Word> result;
  const int nvars = module.nvars();
  const int rank = module.rank();
  Word current;
  auto rec = [&](auto&& self, int remainingFactors, int remainingDeg) -> void {
    if (remainingFactors == 0) {
      result.push_back(current);
      return;
    }
    for (int d = 0; d <= remainingDeg; ++d) {
      for (const Exponents& mono : monomialsOfDegree(nvars, d)) {
        for (int g = 0; g < rank; ++g) {
          current.factors.push_back(WordFactor{mono, g});
          self(self, remainingFactors - 1, remainingDeg - d);
          current.factors.pop_back();
        }
      }
    }
  };
  for (int k = 1; k <= bounds.wmax; ++k) rec(rec, k, bounds.pmax);
  std::sort(result.begin(), result.end(), wordLess);
  return result;
}

} // namespace

FreeLeibniz::FreeLeibniz(std::shared_ptr<const AnchoredModule> module,
                         Bounds bounds)
    : m_module(std::move(module)), m_bounds(bounds) {
  if (!m_module) throw DimensionMismatch("null module");
  if (m_bounds.wmax < 1 || m_bounds.pmax < 0)
    throw DimensionMismatch("bounds must allow weight-1 words");
  m_basis = enumerateBasis(*m_module, m_bounds);
  for (std::size_t i = 0; i < m_basis.size(); ++i)
    m_basisIndex.emplace(m_basis[i], i);
}

FreeLeibniz::FreeLeibniz(AnchoredModule module, Bounds bounds)
    : FreeLeibniz(std::make_shared<const AnchoredModule>(std::move(module)),
                  bounds) {}

FreeElement FreeLeibniz::word(const Word& w) const {
  for (const WordFactor& f : w.factors) {
    if (f.gen < 0 || f.gen >= m_module->rank())
      throw DimensionMismatch("word references unknown generator");
    if (static_cast<int>(f.mono.size()) != nvars())
      throw DimensionMismatch("word decoration over wrong variable count");
  }
  return FreeElement::term(w, 1, m_bounds);
}

FreeElement FreeLeibniz::include(const ModuleElement& element) const {
  if (static_cast<int>(element.size()) != m_module->rank())
    throw DimensionMismatch("element rank does not match module");
  FreeElement result(m_bounds);
  for (int i = 0; i < m_module->rank(); ++i)
    for (const auto& [mono, c] : element.coord(i).terms())
      result.addTerm(Word{{WordFactor{mono, i}}}, c);
  return result;
}

FreeElement FreeLeibniz::generator(int index) const {
  if (index < 0 || index >= m_module->rank())
    throw DimensionMismatch("generator index out of range");
  return word(Word{{WordFactor{Exponents(nvars(), 0), index}}});
}

FreeElement FreeLeibniz::scalarMultWord(const Poly& f, const Word& w) const {
  if (w.weight() == 1) {
    const WordFactor& factor = w.factors[0];
    Poly decorated = f * Poly::monomial(factor.mono, 1);
    FreeElement result(m_bounds);
    for (const auto& [mono, c] : decorated.terms())
      result.addTerm(Word{{WordFactor{mono, factor.gen}}}, c);
    return result;
  }

  const WordFactor& head = w.factors[0];
  Word rest{std::vector<WordFactor>(w.factors.begin() + 1, w.factors.end())};

  FreeElement deeper = scalarMultWord(f, rest);
  FreeElement first(m_bounds);
  for (const auto& [sub, c] : deeper.terms()) {
    Word prefixed;
    prefixed.factors.reserve(sub.factors.size() + 1);
    prefixed.factors.push_back(head);
    prefixed.factors.insert(prefixed.factors.end(), sub.factors.begin(),
                            sub.factors.end());
    first.addTerm(prefixed, c);
  }

  Poly derived = m_module->anchorOf(head.gen).apply(f) *
                 Poly::monomial(head.mono, 1);
  if (derived.isZero()) return first;
  return first - scalarMultWord(derived, rest);
}

FreeElement FreeLeibniz::scalarMult(const Poly& f, const FreeElement& u) const {
  if (f.nvars() != nvars())
    throw DimensionMismatch("coefficient over wrong variable count");
  if (!(u.bounds() == m_bounds))
    throw BoundsMismatch("element bounds do not match context");
  FreeElement result(m_bounds);
  if (f.isZero()) return result;
  for (const auto& [w, c] : u.terms())
    result = result + scalarMultWord(f, w).scaled(c);
  return result;
}

FreeElement FreeLeibniz::bracketWords(const Word& a, const Word& b) const {
  int weight = a.weight() + b.weight();
  int pdeg = a.pdeg() + b.pdeg();
  if (weight > m_bounds.wmax)
    throw TruncationOverflow(TruncationOverflow::Kind::Weight, weight,
                             m_bounds.wmax);
  if (pdeg > m_bounds.pmax)
    throw TruncationOverflow(TruncationOverflow::Kind::Degree, pdeg,
                             m_bounds.pmax);

  if (a.weight() == 1) return word(concatenate(a, b));

  Word head{{a.factors[0]}};
  Word rest{std::vector<WordFactor>(a.factors.begin() + 1, a.factors.end())};

  FreeElement inner = bracketWords(rest, b); // [w, v]
  FreeElement left(m_bounds);                // [m, [w, v]]
  for (const auto& [wv, c] : inner.terms())
    left = left + bracketWords(head, wv).scaled(c);

  FreeElement swapped = bracketWords(head, b); // [m, v]
  FreeElement right(m_bounds);                 // [w, [m, v]]
  for (const auto& [mv, c] : swapped.terms())
    right = right + bracketWords(rest, mv).scaled(c);

  return left - right;
}

FreeElement FreeLeibniz::bracket(const FreeElement& u,
                                 const FreeElement& v) const {
  if (!(u.bounds() == m_bounds) || !(v.bounds() == m_bounds))
    throw BoundsMismatch("element bounds do not match context");
  FreeElement result(m_bounds);
  for (const auto& [wu, cu] : u.terms())
    for (const auto& [wv, cv] : v.terms())
      result = result + bracketWords(wu, wv).scaled(cu * cv);
  return result;
}

FreeElement FreeLeibniz::symmetrized(const FreeElement& u,
                                     const FreeElement& v) const {
  return bracket(u, v) + bracket(v, u);
}

Derivation FreeLeibniz::anchor(const FreeElement& u) const {
  if (!(u.bounds() == m_bounds))
    throw BoundsMismatch("element bounds do not match context");
  Derivation result(nvars());
  for (const auto& [w, c] : u.terms()) {
    // Nested commutator [a(v1), [a(v2), ... a(vk)]] of the decorated
    // anchor images.
    auto factorDerivation = [&](const WordFactor& f) {
      return m_module->anchorOf(f.gen).scaled(Poly::monomial(f.mono, 1));
    };
    Derivation nested = factorDerivation(w.factors.back());
    for (int k = w.weight() - 2; k >= 0; --k)
      nested = commutator(factorDerivation(w.factors[k]), nested);
    result = result + nested.scaled(Rat(c));
  }
  return result;
}

std::size_t FreeLeibniz::basisIndex(const Word& w) const {
  auto it = m_basisIndex.find(w);
  if (it == m_basisIndex.end())
    throw DimensionMismatch("word outside the filtered piece basis");
  return it->second;
}

QVec FreeLeibniz::coordinates(const FreeElement& u) const {
  if (!(u.bounds() == m_bounds))
    throw BoundsMismatch("element bounds do not match context");
  QVec v(m_basis.size());
  for (const auto& [w, c] : u.terms()) v[basisIndex(w)] = c;
  return v;
}

FreeElement FreeLeibniz::fromCoordinates(const QVec& v) const {
  if (v.size() != m_basis.size())
    throw DimensionMismatch("coordinate vector does not match basis");
  FreeElement u(m_bounds);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) u.addTerm(m_basis[i], v[i]);
  return u;
}

namespace {

FreeElement parseExpression(detail::Scanner& s, const FreeLeibniz& algebra) {
  if (s.consume('[')) {
    FreeElement left = parseExpression(s, algebra);
    if (!s.consume(','))
      throw ParseError("expected ',' in bracket expression", s.pos);
    FreeElement right = parseExpression(s, algebra);
    if (!s.consume(']'))
      throw ParseError("expected ']' closing bracket expression", s.pos);
    return algebra.bracket(left, right);
  }
  if (s.consume('{')) {
    FreeElement left = parseExpression(s, algebra);
    if (!s.consume(','))
      throw ParseError("expected ',' in symmetrized expression", s.pos);
    FreeElement right = parseExpression(s, algebra);
    if (!s.consume('}'))
      throw ParseError("expected '}' closing symmetrized expression", s.pos);
    return algebra.symmetrized(left, right);
  }
  return detail::parseElementUntil(s, algebra.module(), algebra.bounds());
}

} // namespace

FreeElement FreeLeibniz::evaluateExpression(std::string_view text) const {
  detail::Scanner s{text};
  FreeElement result = parseExpression(s, *this);
  if (!s.atEnd())
    throw ParseError("trailing input after expression", s.pos);
  return result;
}

} // namespace courant
