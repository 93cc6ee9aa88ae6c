#include "courant/anchored_module.hpp"

#include "courant/errors.hpp"

namespace courant {

ModuleElement ModuleElement::zero(const AnchoredModule& module) {
  return ModuleElement(
      std::vector<Poly>(module.rank(), Poly(module.nvars())));
}

ModuleElement ModuleElement::generator(const AnchoredModule& module, int index,
                                       const Poly& f) {
  if (index < 0 || index >= module.rank())
    throw DimensionMismatch("generator index out of range");
  if (f.nvars() != module.nvars())
    throw DimensionMismatch("coefficient over wrong variable count");
  std::vector<Poly> coords(module.rank(), Poly(module.nvars()));
  coords[index] = f;
  return ModuleElement(std::move(coords));
}

bool ModuleElement::isZero() const {
  for (const Poly& c : m_coords)
    if (!c.isZero()) return false;
  return true;
}

namespace {

void requireSameShape(const ModuleElement& a, const ModuleElement& b) {
  if (a.size() != b.size())
    throw DimensionMismatch("module elements of different rank");
}

} // namespace

ModuleElement ModuleElement::operator+(const ModuleElement& other) const {
  requireSameShape(*this, other);
  std::vector<Poly> coords;
  coords.reserve(m_coords.size());
  for (std::size_t i = 0; i < m_coords.size(); ++i)
    coords.push_back(m_coords[i] + other.m_coords[i]);
  return ModuleElement(std::move(coords));
}

ModuleElement ModuleElement::operator-(const ModuleElement& other) const {
  requireSameShape(*this, other);
  std::vector<Poly> coords;
  coords.reserve(m_coords.size());
  for (std::size_t i = 0; i < m_coords.size(); ++i)
    coords.push_back(m_coords[i] - other.m_coords[i]);
  return ModuleElement(std::move(coords));
}

ModuleElement ModuleElement::operator-() const {
  std::vector<Poly> coords;
  coords.reserve(m_coords.size());
  for (const Poly& c : m_coords) coords.push_back(-c);
  return ModuleElement(std::move(coords));
}

ModuleElement ModuleElement::scaled(const Rat& c) const {
  std::vector<Poly> coords;
  coords.reserve(m_coords.size());
  for (const Poly& p : m_coords) coords.push_back(p.scaled(c));
  return ModuleElement(std::move(coords));
}

ModuleElement ModuleElement::scaled(const Poly& f) const {
  std::vector<Poly> coords;
  coords.reserve(m_coords.size());
  for (const Poly& p : m_coords) coords.push_back(f * p);
  return ModuleElement(std::move(coords));
}

AnchoredModule::AnchoredModule(std::vector<std::string> vars,
                               std::vector<std::string> generators,
                               std::vector<std::vector<Poly>> anchorRows)
    : m_vars(std::move(vars)), m_generators(std::move(generators)) {
  if (anchorRows.size() != m_generators.size())
    throw DimensionMismatch("anchor row count " +
                            std::to_string(anchorRows.size()) +
                            " does not match " +
                            std::to_string(m_generators.size()) +
                            " generators");
  m_anchor.reserve(anchorRows.size());
  for (auto& row : anchorRows) {
    if (row.size() != m_vars.size())
      throw DimensionMismatch("anchor row length does not match variables");
    m_anchor.emplace_back(std::move(row));
  }
}

int AnchoredModule::generatorIndex(const std::string& name) const {
  for (std::size_t i = 0; i < m_generators.size(); ++i)
    if (m_generators[i] == name) return static_cast<int>(i);
  return -1;
}

const Derivation& AnchoredModule::anchorOf(int index) const {
  if (index < 0 || index >= rank())
    throw DimensionMismatch("generator index out of range");
  return m_anchor[index];
}

Derivation AnchoredModule::anchorOf(const ModuleElement& element) const {
  if (static_cast<int>(element.size()) != rank())
    throw DimensionMismatch("element rank does not match module");
  Derivation result(nvars());
  for (int i = 0; i < rank(); ++i) {
    if (element.coord(i).isZero()) continue;
    result = result + m_anchor[i].scaled(element.coord(i));
  }
  return result;
}

std::string AnchoredModule::printElement(const ModuleElement& element) const {
  if (static_cast<int>(element.size()) != rank())
    throw DimensionMismatch("element rank does not match module");
  std::string out;
  bool first = true;
  for (int i = 0; i < rank(); ++i) {
    for (const auto& [e, c] : element.coord(i).terms()) {
      Rat mag = abs(c);
      std::string mono = monomialString(e, m_vars);
      std::string body;
      if (!mono.empty()) body = mono + "*";
      body += m_generators[i];
      if (mag != 1) body = toString(mag) + "*" + body;
      if (first) {
        out += (sgn(c) < 0 ? "-" : "") + body;
        first = false;
      } else {
        out += (sgn(c) < 0 ? " - " : " + ") + body;
      }
    }
  }
  return out.empty() ? "0" : out;
}

} // namespace courant
