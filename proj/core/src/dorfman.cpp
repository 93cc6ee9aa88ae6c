#include "courant/dorfman.hpp"

#include "courant/errors.hpp"
#include "text_scan.hpp"

#include <utility>

namespace courant {

bool DorfmanAlgebra::Element::isZero() const {
  for (const Poly& f : vec)
    if (!f.isZero()) return false;
  for (const Poly& f : form)
    if (!f.isZero()) return false;
  return true;
}

DorfmanAlgebra::Element
DorfmanAlgebra::Element::operator+(const Element& other) const {
  if (vec.size() != other.vec.size() || form.size() != other.form.size())
    throw DimensionMismatch("added elements live over different coordinates");
  Element out = *this;
  for (std::size_t j = 0; j < vec.size(); ++j) out.vec[j] = vec[j] + other.vec[j];
  for (std::size_t j = 0; j < form.size(); ++j)
    out.form[j] = form[j] + other.form[j];
  return out;
}

DorfmanAlgebra::Element
DorfmanAlgebra::Element::operator-(const Element& other) const {
  return *this + (-other);
}

DorfmanAlgebra::Element DorfmanAlgebra::Element::operator-() const {
  Element out = *this;
  for (Poly& f : out.vec) f = -f;
  for (Poly& f : out.form) f = -f;
  return out;
}

DorfmanAlgebra::Element DorfmanAlgebra::Element::scaled(const Rat& c) const {
  Element out = *this;
  for (Poly& f : out.vec) f = f.scaled(c);
  for (Poly& f : out.form) f = f.scaled(c);
  return out;
}

DorfmanAlgebra::DorfmanAlgebra(std::vector<std::string> vars)
    : DorfmanAlgebra(std::move(vars), Options{}) {}

DorfmanAlgebra::DorfmanAlgebra(std::vector<std::string> vars, Options options)
    : m_vars(std::move(vars)), m_options(std::move(options)) {
  if (m_vars.empty())
    throw DimensionMismatch("double of the coordinate space needs at least "
                            "one variable");
}

DorfmanAlgebra::Element DorfmanAlgebra::zero() const {
  Element out;
  out.vec.assign(m_vars.size(), Poly(nvars()));
  out.form.assign(m_vars.size(), Poly(nvars()));
  return out;
}

DorfmanAlgebra::Element DorfmanAlgebra::vectorField(int index,
                                                    const Poly& f) const {
  if (index < 0 || index >= nvars())
    throw DimensionMismatch("vector field index out of range");
  Element out = zero();
  out.vec[static_cast<std::size_t>(index)] = f;
  return out;
}

DorfmanAlgebra::Element DorfmanAlgebra::oneForm(int index,
                                                const Poly& f) const {
  if (index < 0 || index >= nvars())
    throw DimensionMismatch("one-form index out of range");
  Element out = zero();
  out.form[static_cast<std::size_t>(index)] = f;
  return out;
}

void DorfmanAlgebra::requireShape(const Element& u) const {
  if (static_cast<int>(u.vec.size()) != nvars() ||
      static_cast<int>(u.form.size()) != nvars())
    throw DimensionMismatch("element shape does not match the coordinate "
                            "space");
}

DorfmanAlgebra::Element DorfmanAlgebra::bracket(const Element& u,
                                                const Element& v) const {
  requireShape(u);
  requireShape(v);
  const int n = nvars();
  Element out = zero();
  for (int k = 0; k < n; ++k) {
    Poly vecPart(n);
    Poly formPart(n);
    for (int j = 0; j < n; ++j) {
      const auto ju = static_cast<std::size_t>(j);
      // Vector-field commutator [X, Y].
      vecPart = vecPart + u.vec[ju] * v.vec[static_cast<std::size_t>(k)].derivative(j) -
                v.vec[ju] * u.vec[static_cast<std::size_t>(k)].derivative(j);
      // Lie derivative of the form part along X ...
      formPart = formPart +
                 u.vec[ju] * v.form[static_cast<std::size_t>(k)].derivative(j) +
                 v.form[ju] * u.vec[ju].derivative(k);
      // ... minus the contraction of d xi with Y.
      formPart = formPart -
                 v.vec[ju] * u.form[static_cast<std::size_t>(k)].derivative(j) +
                 v.vec[ju] * u.form[ju].derivative(k);
    }
    out.vec[static_cast<std::size_t>(k)] = vecPart;
    out.form[static_cast<std::size_t>(k)] = formPart;
  }
  return out;
}

DorfmanAlgebra::Element DorfmanAlgebra::scalarMult(const Poly& f,
                                                   const Element& u) const {
  requireShape(u);
  Element out = u;
  for (Poly& g : out.vec) g = f * g;
  for (Poly& g : out.form) g = f * g;
  return out;
}

Derivation DorfmanAlgebra::anchor(const Element& u) const {
  requireShape(u);
  return Derivation(u.vec);
}

DorfmanAlgebra::Value DorfmanAlgebra::pairing(const Element& u,
                                              const Element& v) const {
  requireShape(u);
  requireShape(v);
  Poly sum(nvars());
  for (std::size_t j = 0; j < u.vec.size(); ++j)
    sum = sum + u.vec[j] * v.form[j] + u.form[j] * v.vec[j];
  sum = sum.scaled(m_options.pairingScale);
  if (m_options.addVectorDot)
    for (std::size_t j = 0; j < u.vec.size(); ++j)
      sum = sum + u.vec[j] * v.vec[j];
  return sum;
}

DorfmanAlgebra::Value DorfmanAlgebra::actLeft(const Element& x,
                                              const Value& f) const {
  return anchor(x).apply(f);
}

DorfmanAlgebra::Value DorfmanAlgebra::actRight(const Element& x,
                                               const Value& f) const {
  return -actLeft(x, f);
}

DorfmanAlgebra::Element DorfmanAlgebra::differential(const Poly& f) const {
  Element out = zero();
  for (int j = 0; j < nvars(); ++j)
    out.form[static_cast<std::size_t>(j)] = f.derivative(j).scaled(Rat(2));
  return out;
}

DorfmanAlgebra::Element DorfmanAlgebra::rightAnchor(const Poly& f,
                                                    const Element& u,
                                                    const Element& v) const {
  return scalarMult(pairing(u, v), differential(f));
}

std::string DorfmanAlgebra::printElement(const Element& u) const {
  requireShape(u);
  std::string out;
  auto appendPiece = [&](const Poly& f, const std::string& sym) {
    // One parseable `rat? mono? sym` term per monomial of the coefficient.
    for (const auto& [mono, c] : f.terms()) {
      Rat mag = abs(c);
      std::string monoText = monomialString(mono, m_vars);
      std::string body;
      if (mag != 1) body = toString(mag) + "*";
      if (!monoText.empty()) body += monoText + "*";
      body += sym;
      if (out.empty())
        out = (sgn(c) < 0 ? "-" : "") + body;
      else
        out += (sgn(c) < 0 ? " - " : " + ") + body;
    }
  };
  for (int j = 0; j < nvars(); ++j)
    appendPiece(u.vec[static_cast<std::size_t>(j)],
                "d_" + m_vars[static_cast<std::size_t>(j)]);
  for (int j = 0; j < nvars(); ++j)
    appendPiece(u.form[static_cast<std::size_t>(j)],
                "d" + m_vars[static_cast<std::size_t>(j)]);
  return out.empty() ? "0" : out;
}

namespace {

int varIndexOf(const std::vector<std::string>& vars, const std::string& name) {
  for (std::size_t j = 0; j < vars.size(); ++j)
    if (vars[j] == name) return static_cast<int>(j);
  return -1;
}

} // namespace

DorfmanAlgebra::Element DorfmanAlgebra::parse(std::string_view text) const {
  detail::Scanner scan{text};
  Element out = zero();
  bool first = true;
  for (;;) {
    scan.skipSpace();
    if (scan.atEnd()) {
      if (first) throw ParseError("empty element", scan.pos);
      break;
    }
    Rat coeff(1);
    if (scan.peek() == '+' || scan.peek() == '-') {
      if (scan.peek() == '-') coeff = Rat(-1);
      scan.skipSpace();
      ++scan.pos;
    } else if (!first) {
      throw ParseError("expected '+' or '-' between terms", scan.pos);
    }
    first = false;
    if (detail::ratAhead(scan)) {
      Rat value = detail::parseRatToken(scan);
      Rat c = coeff * value;
      c.canonicalize();
      coeff = c;
      if (!scan.consume('*') && !detail::identifierAhead(scan))
        throw ParseError("expected symbol after coefficient", scan.pos);
    }
    Exponents mono(m_vars.size(), 0);
    for (;;) {
      scan.skipSpace();
      std::size_t identStart = scan.pos;
      std::string name = detail::parseIdentifier(scan);
      if (name.size() > 2 && name.compare(0, 2, "d_") == 0) {
        int j = varIndexOf(m_vars, name.substr(2));
        if (j < 0)
          throw ParseError("unknown coordinate in vector symbol", identStart);
        out.vec[static_cast<std::size_t>(j)].addTerm(mono, coeff);
        break;
      }
      if (name.size() > 1 && name[0] == 'd' &&
          varIndexOf(m_vars, name.substr(1)) >= 0 &&
          varIndexOf(m_vars, name) < 0) {
        int j = varIndexOf(m_vars, name.substr(1));
        out.form[static_cast<std::size_t>(j)].addTerm(mono, coeff);
        break;
      }
      int v = varIndexOf(m_vars, name);
      if (v < 0) throw ParseError("unknown symbol", identStart);
      int exponent = 1;
      if (scan.consume('^')) exponent = detail::parseSmallInt(scan);
      if (exponent < 0) throw ParseError("negative exponent", scan.pos);
      mono[static_cast<std::size_t>(v)] += exponent;
      if (!scan.consume('*') && !detail::identifierAhead(scan))
        throw ParseError("term is missing its d_<var> or d<var> symbol",
                         scan.pos);
    }
  }
  return out;
}

std::vector<DorfmanAlgebra::Element>
DorfmanAlgebra::sampleElements(int degreeCap) const {
  std::vector<Element> out;
  for (const Exponents& e : monomialsUpToDegree(nvars(), degreeCap)) {
    Poly m = Poly::monomial(e, Rat(1));
    for (int j = 0; j < nvars(); ++j) {
      out.push_back(vectorField(j, m));
      out.push_back(oneForm(j, m));
    }
  }
  return out;
}

} // namespace courant
