#include "courant/derivation.hpp"

#include "courant/errors.hpp"

namespace courant {

Derivation::Derivation(int nvars)
    : m_nvars(nvars), m_coefficients(nvars, Poly(nvars)) {}

Derivation::Derivation(std::vector<Poly> coefficients)
    : m_nvars(static_cast<int>(coefficients.size())),
      m_coefficients(std::move(coefficients)) {
  for (const Poly& c : m_coefficients)
    if (c.nvars() != m_nvars)
      throw DimensionMismatch(
          "derivation coefficient over wrong variable count");
}

Derivation Derivation::coordinate(int nvars, int index) {
  if (index < 0 || index >= nvars)
    throw DimensionMismatch("coordinate index out of range");
  Derivation d(nvars);
  d.m_coefficients[index] = Poly::constant(nvars, 1);
  return d;
}

const Poly& Derivation::coefficient(int index) const {
  if (index < 0 || index >= m_nvars)
    throw DimensionMismatch("coefficient index out of range");
  return m_coefficients[index];
}

bool Derivation::isZero() const {
  for (const Poly& c : m_coefficients)
    if (!c.isZero()) return false;
  return true;
}

Poly Derivation::apply(const Poly& f) const {
  if (f.nvars() != m_nvars)
    throw DimensionMismatch("derivation applied across variable counts");
  Poly result(m_nvars);
  for (int j = 0; j < m_nvars; ++j) {
    if (m_coefficients[j].isZero()) continue;
    result = result + m_coefficients[j] * f.derivative(j);
  }
  return result;
}

void Derivation::requireSameVars(const Derivation& other) const {
  if (m_nvars != other.m_nvars)
    throw DimensionMismatch("derivations over different variable counts");
}

Derivation Derivation::operator+(const Derivation& other) const {
  requireSameVars(other);
  std::vector<Poly> coeffs;
  coeffs.reserve(m_nvars);
  for (int j = 0; j < m_nvars; ++j)
    coeffs.push_back(m_coefficients[j] + other.m_coefficients[j]);
  return Derivation(std::move(coeffs));
}

Derivation Derivation::operator-(const Derivation& other) const {
  requireSameVars(other);
  std::vector<Poly> coeffs;
  coeffs.reserve(m_nvars);
  for (int j = 0; j < m_nvars; ++j)
    coeffs.push_back(m_coefficients[j] - other.m_coefficients[j]);
  return Derivation(std::move(coeffs));
}

Derivation Derivation::operator-() const {
  std::vector<Poly> coeffs;
  coeffs.reserve(m_nvars);
  for (const Poly& c : m_coefficients) coeffs.push_back(-c);
  return Derivation(std::move(coeffs));
}

Derivation Derivation::scaled(const Rat& c) const {
  std::vector<Poly> coeffs;
  coeffs.reserve(m_nvars);
  for (const Poly& p : m_coefficients) coeffs.push_back(p.scaled(c));
  return Derivation(std::move(coeffs));
}

Derivation Derivation::scaled(const Poly& f) const {
  if (f.nvars() != m_nvars)
    throw DimensionMismatch("scaling polynomial over wrong variable count");
  std::vector<Poly> coeffs;
  coeffs.reserve(m_nvars);
  for (const Poly& p : m_coefficients) coeffs.push_back(f * p);
  return Derivation(std::move(coeffs));
}

Derivation commutator(const Derivation& a, const Derivation& b) {
  if (a.nvars() != b.nvars())
    throw DimensionMismatch("commutator across variable counts");
  std::vector<Poly> coeffs;
  coeffs.reserve(a.nvars());
  for (int k = 0; k < a.nvars(); ++k)
    coeffs.push_back(a.apply(b.coefficient(k)) - b.apply(a.coefficient(k)));
  return Derivation(std::move(coeffs));
}

std::string toString(const Derivation& d, std::span<const std::string> vars) {
  if (static_cast<int>(vars.size()) != d.nvars())
    throw DimensionMismatch("variable name list does not match derivation");
  std::string out;
  for (int j = 0; j < d.nvars(); ++j) {
    const Poly& c = d.coefficient(j);
    if (c.isZero()) continue;
    if (!out.empty()) out += " + ";
    std::string cs = toString(c, vars);
    if (cs == "1") out += "d/d" + vars[j];
    else out += "(" + cs + ") d/d" + vars[j];
  }
  return out.empty() ? "0" : out;
}

} // namespace courant
