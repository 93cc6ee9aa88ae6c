#include "courant/free_element.hpp"

#include "courant/errors.hpp"
#include "text_scan.hpp"

namespace courant {

FreeElement FreeElement::term(const Word& w, const Rat& c, Bounds bounds) {
  FreeElement u(bounds);
  u.addTerm(w, c);
  return u;
}

Rat FreeElement::coefficient(const Word& w) const {
  auto it = m_terms.find(w);
  return it == m_terms.end() ? Rat(0) : it->second;
}

void FreeElement::addTerm(const Word& w, const Rat& c) {
  if (w.weight() == 0)
    throw DimensionMismatch("empty word");
  if (w.weight() > m_bounds.wmax)
    throw TruncationOverflow(TruncationOverflow::Kind::Weight, w.weight(),
                             m_bounds.wmax);
  if (w.pdeg() > m_bounds.pmax)
    throw TruncationOverflow(TruncationOverflow::Kind::Degree, w.pdeg(),
                             m_bounds.pmax);
  if (courant::isZero(c)) return;
  auto [it, inserted] = m_terms.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (courant::isZero(it->second)) m_terms.erase(it);
  }
}

void FreeElement::requireSameBounds(const FreeElement& other) const {
  if (!(m_bounds == other.m_bounds))
    throw BoundsMismatch("mixing elements with bounds (" +
                         std::to_string(m_bounds.wmax) + "," +
                         std::to_string(m_bounds.pmax) + ") and (" +
                         std::to_string(other.m_bounds.wmax) + "," +
                         std::to_string(other.m_bounds.pmax) + ")");
}

FreeElement FreeElement::operator+(const FreeElement& other) const {
  requireSameBounds(other);
  FreeElement result = *this;
  for (const auto& [w, c] : other.m_terms) result.addTerm(w, c);
  return result;
}

FreeElement FreeElement::operator-(const FreeElement& other) const {
  requireSameBounds(other);
  FreeElement result = *this;
  for (const auto& [w, c] : other.m_terms) result.addTerm(w, -c);
  return result;
}

FreeElement FreeElement::operator-() const {
  FreeElement result(m_bounds);
  for (const auto& [w, c] : m_terms) result.m_terms.emplace(w, -c);
  return result;
}

FreeElement FreeElement::scaled(const Rat& c) const {
  FreeElement result(m_bounds);
  if (courant::isZero(c)) return result;
  for (const auto& [w, coeff] : m_terms) result.m_terms.emplace(w, coeff * c);
  return result;
}

bool FreeElement::operator==(const FreeElement& other) const {
  requireSameBounds(other);
  return m_terms == other.m_terms;
}

namespace {

constexpr const char* kTensorSign = "\xE2\x8A\x97"; // ⊗

std::string factorString(const WordFactor& f, const AnchoredModule& module) {
  std::string mono = monomialString(f.mono, module.vars());
  std::string out = "(";
  if (!mono.empty()) out += mono + "*";
  out += module.generators().at(f.gen) + ")";
  return out;
}

} // namespace

std::string toString(const FreeElement& u, const AnchoredModule& module) {
  if (u.isZero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : u.terms()) {
    std::string wordstr;
    for (const WordFactor& f : w.factors) {
      if (!wordstr.empty()) wordstr += kTensorSign;
      wordstr += factorString(f, module);
    }
    Rat mag = abs(c);
    std::string body = wordstr;
    if (mag != 1) body = toString(mag) + " " + wordstr;
    if (first) {
      out += (sgn(c) < 0 ? "-" : "") + body;
      first = false;
    } else {
      out += (sgn(c) < 0 ? " - " : " + ") + body;
    }
  }
  return out;
}

namespace {

/// '(' [mono '*'] gen ')'. Identifiers are classified against the module's
/// variable and generator names; the generator closes the factor.
WordFactor parseFactor(detail::Scanner& s, const AnchoredModule& module) {
  if (!s.consume('('))
    throw ParseError("expected '(' opening a word factor", s.pos);
  Exponents mono(module.nvars(), 0);
  while (true) {
    std::size_t at = s.pos;
    std::string name = detail::parseIdentifier(s);
    bool isVar = false;
    for (int i = 0; i < module.nvars(); ++i) {
      if (module.vars()[i] == name) {
        int k = 1;
        if (s.consume('^')) k = detail::parseSmallInt(s);
        mono[i] += k;
        isVar = true;
        break;
      }
    }
    if (isVar) {
      s.consume('*');
      continue;
    }
    int gen = module.generatorIndex(name);
    if (gen < 0)
      throw ParseError("unknown name '" + name + "' in word factor", at);
    if (!s.consume(')'))
      throw ParseError("expected ')' after generator", s.pos);
    return WordFactor{std::move(mono), gen};
  }
}

bool consumeTensorSign(detail::Scanner& s) {
  if (s.consumeWord(kTensorSign)) return true;
  detail::Scanner probe = s;
  probe.skipSpace();
  if (probe.pos + 2 <= probe.text.size() &&
      probe.text.substr(probe.pos, 2) == "ox" &&
      (probe.pos + 2 == probe.text.size() ||
       !detail::isIdentChar(probe.text[probe.pos + 2]))) {
    s.pos = probe.pos + 2;
    return true;
  }
  return false;
}

} // namespace

namespace detail {

/// One element term starting at the scanner position; shared with the
/// expression parser in the free-algebra context.
void parseElementTerm(Scanner& s, const AnchoredModule& module,
                      FreeElement& into, int sign) {
  Rat coeff = 1;
  if (ratAhead(s)) {
    coeff = parseRatToken(s);
    s.consume('*');
  }
  Word w;
  w.factors.push_back(parseFactor(s, module));
  while (consumeTensorSign(s)) w.factors.push_back(parseFactor(s, module));
  into.addTerm(w, sign > 0 ? coeff : Rat(-coeff));
}

FreeElement parseElementUntil(Scanner& s, const AnchoredModule& module,
                              Bounds bounds) {
  FreeElement result(bounds);
  bool first = true;
  while (true) {
    if (s.atEnd()) {
      if (first) throw ParseError("empty element", s.pos);
      break;
    }
    char c = s.peek();
    if (!first && c != '+' && c != '-') break;
    int sign = 1;
    if (s.consume('-')) sign = -1;
    else s.consume('+');
    parseElementTerm(s, module, result, sign);
    first = false;
  }
  return result;
}

} // namespace detail

FreeElement parseElement(std::string_view text, const AnchoredModule& module,
                         Bounds bounds) {
  detail::Scanner s{text};
  FreeElement result = detail::parseElementUntil(s, module, bounds);
  if (!s.atEnd())
    throw ParseError("trailing input after element", s.pos);
  return result;
}

} // namespace courant
