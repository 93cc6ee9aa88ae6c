#ifndef COURANT_CONFIG_HPP
#define COURANT_CONFIG_HPP

#include "courant/anchored_module.hpp"
#include "courant/dorfman.hpp"
#include "courant/free_element.hpp"
#include "courant/linquot.hpp"
#include "courant/structure_constants.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace courant {

/// Parsed experiment configuration. Two shapes are accepted:
///
/// a module block,
///   {"vars":["x"], "generators":["e1","e2"], "anchor":[["1"],["x"]],
///    "bounds":{"wmax":3,"pmax":3,"delta_max":8}, "seed":0}
/// where anchor row i lists the d/dx_j coefficients (polynomial strings or
/// numbers) of the anchor image of generator i;
///
/// or an instance block selected by a top-level "type",
///   {"type":"dorfman","vars":["x","y"]}
///   {"type":"sc","dim":2,"table":[[[0,1],[0,0]],[[0,0],[0,0]]]}
/// with table[i][j] the coordinate vector of the bracket of the i-th and
/// j-th basis vectors (rational numbers or strings like "1/2").
struct Config {
  std::string kind; // "module", "dorfman" or "sc"

  std::vector<std::string> vars;
  std::vector<std::string> generators;
  std::vector<std::vector<Poly>> anchorRows;

  int dim = 0;
  std::vector<std::vector<std::vector<Rat>>> table;

  Bounds bounds{3, 3};
  SaturationConfig saturation;
  std::uint64_t seed = 0;

  AnchoredModule makeModule() const;
  DorfmanAlgebra makeDorfman() const;
  StructureConstantAlgebra makeStructureConstants() const;
};

/// Parses a configuration document. Malformed JSON reports line/column;
/// schema violations report the offending key.
Config parseConfig(const std::string& text);

/// Reads and parses a configuration file.
Config loadConfig(const std::string& path);

} // namespace courant

#endif
