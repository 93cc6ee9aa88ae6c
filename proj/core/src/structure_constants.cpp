#include "courant/structure_constants.hpp"

#include "courant/errors.hpp"
#include "text_scan.hpp"

namespace courant {

StructureConstantAlgebra::StructureConstantAlgebra(
    int dim, std::vector<std::vector<QVec>> table)
    : m_dim(dim), m_table(std::move(table)) {
  if (dim < 1) throw DimensionMismatch("algebra dimension must be positive");
  if (m_table.size() != static_cast<std::size_t>(dim))
    throw DimensionMismatch("bracket table has wrong row count");
  for (const auto& row : m_table) {
    if (row.size() != static_cast<std::size_t>(dim))
      throw DimensionMismatch("bracket table has wrong column count");
    for (const QVec& entry : row)
      if (entry.size() != static_cast<std::size_t>(dim))
        throw DimensionMismatch("bracket table entry has wrong length");
  }
}

StructureConstantAlgebra::Element StructureConstantAlgebra::basisVector(
    int index) const {
  if (index < 0 || index >= m_dim)
    throw DimensionMismatch("basis index out of range");
  return QVec::unit(static_cast<std::size_t>(m_dim),
                    static_cast<std::size_t>(index));
}

StructureConstantAlgebra::Element StructureConstantAlgebra::bracket(
    const Element& u, const Element& v) const {
  if (u.size() != basisSize() || v.size() != basisSize())
    throw DimensionMismatch("element length does not match algebra");
  Element result = zero();
  for (int i = 0; i < m_dim; ++i) {
    if (sgn(u[i]) == 0) continue;
    for (int j = 0; j < m_dim; ++j) {
      if (sgn(v[j]) == 0) continue;
      result.addScaled(m_table[i][j], u[i] * v[j]);
    }
  }
  return result;
}

StructureConstantAlgebra::Element StructureConstantAlgebra::scalarMult(
    const Poly& f, const Element& u) const {
  if (f.nvars() != 0)
    throw DimensionMismatch("structure-constant scalars are rationals");
  return u.scaled(f.constantValue());
}

std::string StructureConstantAlgebra::printElement(const Element& u) const {
  if (u.size() != basisSize())
    throw DimensionMismatch("element length does not match algebra");
  std::string out;
  bool first = true;
  for (int i = 0; i < m_dim; ++i) {
    if (sgn(u[i]) == 0) continue;
    Rat mag = abs(u[i]);
    std::string body = "e" + std::to_string(i + 1);
    if (mag != 1) body = toString(mag) + "*" + body;
    if (first) {
      out += (sgn(u[i]) < 0 ? "-" : "") + body;
      first = false;
    } else {
      out += (sgn(u[i]) < 0 ? " - " : " + ") + body;
    }
  }
  return out.empty() ? "0" : out;
}

QVec StructureConstantAlgebra::coordinates(const Element& u) const {
  if (u.size() != basisSize())
    throw DimensionMismatch("element length does not match algebra");
  return u;
}

StructureConstantAlgebra::Element StructureConstantAlgebra::parse(
    std::string_view text) const {
  detail::Scanner s{text};
  Element out = zero();
  bool first = true;
  while (!s.atEnd()) {
    Rat sign(1);
    if (s.consume('-')) {
      sign = -1;
    } else if (s.consume('+')) {
      if (first) throw ParseError("leading '+'", s.pos);
    } else if (!first) {
      throw ParseError("expected '+' or '-' between terms", s.pos);
    }
    first = false;
    Rat coeff(1);
    if (detail::ratAhead(s)) {
      coeff = detail::parseRatToken(s);
      s.consume('*');
    }
    std::string name = detail::parseIdentifier(s);
    if (name.size() < 2 || name[0] != 'e')
      throw ParseError("expected basis symbol e<k>", s.pos);
    int index = 0;
    for (std::size_t k = 1; k < name.size(); ++k) {
      if (!std::isdigit(static_cast<unsigned char>(name[k])))
        throw ParseError("expected basis symbol e<k>", s.pos);
      index = index * 10 + (name[k] - '0');
    }
    if (index < 1 || index > m_dim)
      throw ParseError("basis index out of range", s.pos);
    out[static_cast<std::size_t>(index - 1)] += sign * coeff;
  }
  if (first) throw ParseError("empty element", 0);
  return out;
}

std::vector<StructureConstantAlgebra::Element>
StructureConstantAlgebra::sampleElements(int) const {
  std::vector<Element> samples;
  samples.reserve(basisSize());
  for (int i = 0; i < m_dim; ++i) samples.push_back(basisVector(i));
  return samples;
}

} // namespace courant
