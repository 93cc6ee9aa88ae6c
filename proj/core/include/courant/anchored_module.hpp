#ifndef COURANT_ANCHORED_MODULE_HPP
#define COURANT_ANCHORED_MODULE_HPP

#include "courant/derivation.hpp"
#include "courant/poly.hpp"

#include <string>
#include <vector>

namespace courant {

class AnchoredModule;

/// Element of a free module over the coefficient algebra: one polynomial
/// coordinate per generator.
class ModuleElement {
public:
  ModuleElement() = default;
  explicit ModuleElement(std::vector<Poly> coords)
      : m_coords(std::move(coords)) {}

  /// Zero element shaped for the given module.
  static ModuleElement zero(const AnchoredModule& module);

  /// f * e_index.
  static ModuleElement generator(const AnchoredModule& module, int index,
                                 const Poly& f);

  const std::vector<Poly>& coords() const { return m_coords; }
  const Poly& coord(int index) const { return m_coords.at(index); }
  std::size_t size() const { return m_coords.size(); }
  bool isZero() const;

  ModuleElement operator+(const ModuleElement& other) const;
  ModuleElement operator-(const ModuleElement& other) const;
  ModuleElement operator-() const;
  ModuleElement scaled(const Rat& c) const;
  ModuleElement scaled(const Poly& f) const;

  bool operator==(const ModuleElement& other) const = default;

private:
  std::vector<Poly> m_coords;
};

/// Finitely generated free module over Q[x_1..x_d] together with an anchor:
/// an A-linear map into the derivations, given by one derivation per
/// generator.
class AnchoredModule {
public:
  /// `anchorRows[i][j]` is the coefficient of d/dx_j in the anchor image of
  /// generator i. Row count must equal `generators`, row length `vars`.
  AnchoredModule(std::vector<std::string> vars,
                 std::vector<std::string> generators,
                 std::vector<std::vector<Poly>> anchorRows);

  int nvars() const { return static_cast<int>(m_vars.size()); }
  int rank() const { return static_cast<int>(m_generators.size()); }
  const std::vector<std::string>& vars() const { return m_vars; }
  const std::vector<std::string>& generators() const { return m_generators; }

  /// Index of a generator name; -1 if absent.
  int generatorIndex(const std::string& name) const;

  /// Anchor image of generator `index`.
  const Derivation& anchorOf(int index) const;

  /// Anchor image of an arbitrary element, sum_i f_i * anchor(e_i).
  Derivation anchorOf(const ModuleElement& element) const;

  /// Prints an element as a sum of rational * monomial * generator terms.
  std::string printElement(const ModuleElement& element) const;

private:
  std::vector<std::string> m_vars;
  std::vector<std::string> m_generators;
  std::vector<Derivation> m_anchor;
};

} // namespace courant

#endif
