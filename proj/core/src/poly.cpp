#include "courant/poly.hpp"

#include "courant/errors.hpp"
#include "text_scan.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>

namespace courant {

int degreeOf(const Exponents& e) {
  int d = 0;
  for (int k : e) d += k;
  return d;
}

bool gradedLexLess(const Exponents& a, const Exponents& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  int da = degreeOf(a), db = degreeOf(b);
  if (da != db) return da < db;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

Poly::Poly(int nvars) : m_nvars(nvars) {}

Poly Poly::constant(int nvars, const Rat& c) {
  Poly p(nvars);
  p.addTerm(Exponents(nvars, 0), c);
  return p;
}

Poly Poly::variable(int nvars, int index) {
  if (index < 0 || index >= nvars)
    throw DimensionMismatch("variable index " + std::to_string(index) +
                            " out of range for " + std::to_string(nvars) +
                            " variables");
  Exponents e(nvars, 0);
  e[index] = 1;
  return monomial(e, 1);
}

Poly Poly::monomial(const Exponents& exponents, const Rat& c) {
  Poly p(static_cast<int>(exponents.size()));
  p.addTerm(exponents, c);
  return p;
}

int Poly::totalDegree() const {
  if (m_terms.empty()) return -1;
  return degreeOf(m_terms.begin()->first);
}

Rat Poly::coefficient(const Exponents& exponents) const {
  auto it = m_terms.find(exponents);
  return it == m_terms.end() ? Rat(0) : it->second;
}

Rat Poly::constantValue() const {
  if (m_terms.empty()) return 0;
  if (totalDegree() > 0)
    throw DimensionMismatch("nonconstant polynomial has no constant value");
  return m_terms.begin()->second;
}

void Poly::addTerm(const Exponents& exponents, const Rat& c) {
  if (static_cast<int>(exponents.size()) != m_nvars)
    throw DimensionMismatch("exponent vector length " +
                            std::to_string(exponents.size()) +
                            " does not match " + std::to_string(m_nvars) +
                            " variables");
  for (int k : exponents)
    if (k < 0) throw DimensionMismatch("negative exponent");
  if (courant::isZero(c)) return;
  auto [it, inserted] = m_terms.emplace(exponents, c);
  if (!inserted) {
    it->second += c;
    if (courant::isZero(it->second)) m_terms.erase(it);
  }
}

void Poly::requireSameVars(const Poly& other) const {
  if (m_nvars != other.m_nvars)
    throw DimensionMismatch("polynomials over different variable counts (" +
                            std::to_string(m_nvars) + " vs " +
                            std::to_string(other.m_nvars) + ")");
}

Poly Poly::operator+(const Poly& other) const {
  requireSameVars(other);
  Poly result = *this;
  for (const auto& [e, c] : other.m_terms) result.addTerm(e, c);
  return result;
}

Poly Poly::operator-(const Poly& other) const {
  requireSameVars(other);
  Poly result = *this;
  for (const auto& [e, c] : other.m_terms) result.addTerm(e, -c);
  return result;
}

Poly Poly::operator-() const {
  Poly result(m_nvars);
  for (const auto& [e, c] : m_terms) result.m_terms.emplace(e, -c);
  return result;
}

Poly Poly::operator*(const Poly& other) const {
  requireSameVars(other);
  Poly result(m_nvars);
  for (const auto& [ea, ca] : m_terms) {
    for (const auto& [eb, cb] : other.m_terms) {
      Exponents e(m_nvars);
      for (int i = 0; i < m_nvars; ++i) e[i] = ea[i] + eb[i];
      result.addTerm(e, ca * cb);
    }
  }
  return result;
}

Poly Poly::scaled(const Rat& c) const {
  Poly result(m_nvars);
  if (courant::isZero(c)) return result;
  for (const auto& [e, coeff] : m_terms) result.m_terms.emplace(e, coeff * c);
  return result;
}

Poly Poly::derivative(int index) const {
  if (index < 0 || index >= m_nvars)
    throw DimensionMismatch("derivative index out of range");
  Poly result(m_nvars);
  for (const auto& [e, c] : m_terms) {
    if (e[index] == 0) continue;
    Exponents d = e;
    d[index] -= 1;
    result.addTerm(d, c * e[index]);
  }
  return result;
}

Rat Poly::evaluate(std::span<const Rat> point) const {
  if (static_cast<int>(point.size()) != m_nvars)
    throw DimensionMismatch("evaluation point length does not match variables");
  Rat total = 0;
  for (const auto& [e, c] : m_terms) {
    Rat term = c;
    for (int i = 0; i < m_nvars; ++i)
      for (int k = 0; k < e[i]; ++k) term *= point[i];
    total += term;
  }
  return total;
}

namespace {

int varIndex(const std::string& name, std::span<const std::string> vars,
             std::size_t at) {
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == name) return static_cast<int>(i);
  throw ParseError("unknown variable '" + name + "'", at);
}

/// varpow ('*' varpow)*, all identifiers variables. A '*' is consumed only
/// when another identifier follows, so "2*x" and "x^2*y" both terminate
/// cleanly at end of input or before an operator.
Exponents parseMonomialVars(detail::Scanner& s,
                            std::span<const std::string> vars) {
  Exponents e(vars.size(), 0);
  while (true) {
    std::size_t at = s.pos;
    std::string name = detail::parseIdentifier(s);
    int idx = varIndex(name, vars, at);
    int k = 1;
    if (s.consume('^')) k = detail::parseSmallInt(s);
    e[idx] += k;
    detail::Scanner probe = s;
    if (!probe.consume('*') || !detail::identifierAhead(probe)) break;
    s = probe;
  }
  return e;
}

} // namespace

Poly parsePoly(std::string_view text, std::span<const std::string> vars) {
  detail::Scanner s{text};
  Poly result(static_cast<int>(vars.size()));
  bool first = true;
  while (true) {
    if (s.atEnd()) {
      if (first) throw ParseError("empty polynomial", s.pos);
      break;
    }
    int sign = 1;
    if (s.consume('-')) sign = -1;
    else if (s.consume('+')) sign = 1;
    else if (!first)
      throw ParseError("expected '+' or '-' between terms", s.pos);
    first = false;

    if (s.atEnd()) throw ParseError("dangling sign", s.pos);

    Rat coeff = 1;
    Exponents e(vars.size(), 0);
    char c = s.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      coeff = detail::parseRatToken(s);
      detail::Scanner probe = s;
      if (probe.consume('*') && detail::identifierAhead(probe)) {
        s = probe;
        e = parseMonomialVars(s, vars);
      }
    } else if (detail::isIdentStart(c)) {
      e = parseMonomialVars(s, vars);
    } else {
      throw ParseError("expected term", s.pos);
    }
    result.addTerm(e, sign > 0 ? coeff : Rat(-coeff));
  }
  return result;
}

std::string monomialString(const Exponents& e,
                           std::span<const std::string> vars) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars[i];
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

std::string toString(const Poly& p, std::span<const std::string> vars) {
  if (static_cast<int>(vars.size()) != p.nvars())
    throw DimensionMismatch("variable name list does not match polynomial");
  if (p.isZero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Rat mag = abs(c);
    std::string mono = monomialString(e, vars);
    std::string body;
    if (mono.empty()) body = toString(mag);
    else if (mag == 1) body = mono;
    else body = toString(mag) + "*" + mono;

    if (first) {
      out += (sgn(c) < 0 ? "-" : "") + body;
      first = false;
    } else {
      out += (sgn(c) < 0 ? " - " : " + ") + body;
    }
  }
  return out;
}

std::vector<Exponents> monomialsOfDegree(int nvars, int degree) {
  std::vector<Exponents> result;
  if (degree < 0) return result;
  if (nvars == 0) {
    if (degree == 0) result.push_back({});
    return result;
  }
  Exponents current(nvars, 0);
  auto fill = [&](auto&& self, int index, int remaining) -> void {
    if (index == nvars - 1) {
      current[index] = remaining;
      result.push_back(current);
      current[index] = 0;
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      current[index] = k;
      self(self, index + 1, remaining - k);
    }
    current[index] = 0;
  };
  fill(fill, 0, degree);
  std::sort(result.begin(), result.end(), gradedLexLess);
  return result;
}

std::vector<Exponents> monomialsUpToDegree(int nvars, int maxDegree) {
  std::vector<Exponents> result;
  for (int d = 0; d <= maxDegree; ++d) {
    auto layer = monomialsOfDegree(nvars, d);
    result.insert(result.end(), layer.begin(), layer.end());
  }
  return result;
}

} // namespace courant
