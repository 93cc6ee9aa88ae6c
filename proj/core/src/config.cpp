#include "courant/config.hpp"

#include "courant/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace courant {

namespace {

using nlohmann::json;

[[noreturn]] void schemaError(const std::string& what) {
  throw ParseError("config: " + what, 0);
}

std::vector<std::string> stringList(const json& j, const std::string& key) {
  if (!j.is_array()) schemaError("'" + key + "' must be an array of strings");
  std::vector<std::string> out;
  for (const json& item : j) {
    if (!item.is_string())
      schemaError("'" + key + "' must contain only strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

Poly polyEntry(const json& j, const std::vector<std::string>& vars,
               const std::string& key) {
  int n = static_cast<int>(vars.size());
  if (j.is_number_integer())
    return Poly::constant(n, Rat(j.get<long>()));
  if (j.is_string()) {
    std::string text = j.get<std::string>();
    if (text == "0") return Poly(n);
    return parsePoly(text, vars);
  }
  schemaError("'" + key + "' entries must be polynomial strings or integers");
}

Rat ratEntry(const json& j, const std::string& key) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) return ratFromString(j.get<std::string>());
  schemaError("'" + key + "' entries must be rationals or integers");
}

int intField(const json& j, const std::string& key, int fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number_integer())
    schemaError("'" + key + "' must be an integer");
  return j.at(key).get<int>();
}

} // namespace

AnchoredModule Config::makeModule() const {
  if (kind != "module")
    throw MissingCapability("configuration does not describe a module");
  return AnchoredModule(vars, generators, anchorRows);
}

DorfmanAlgebra Config::makeDorfman() const {
  if (kind != "dorfman")
    throw MissingCapability(
        "configuration does not describe the coordinate-space double");
  return DorfmanAlgebra(vars);
}

StructureConstantAlgebra Config::makeStructureConstants() const {
  if (kind != "sc")
    throw MissingCapability(
        "configuration does not describe a structure-constant algebra");
  std::vector<std::vector<QVec>> rows;
  rows.reserve(table.size());
  for (const auto& row : table) {
    std::vector<QVec> qrow;
    qrow.reserve(row.size());
    for (const auto& entry : row) qrow.emplace_back(entry);
    rows.push_back(std::move(qrow));
  }
  return StructureConstantAlgebra(dim, rows);
}

Config parseConfig(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    throw ParseError(std::string("config: ") + err.what(), err.byte);
  }
  if (!doc.is_object()) schemaError("top level must be an object");

  Config config;

  if (doc.contains("bounds")) {
    const json& b = doc.at("bounds");
    if (!b.is_object()) schemaError("'bounds' must be an object");
    config.bounds.wmax = intField(b, "wmax", config.bounds.wmax);
    config.bounds.pmax = intField(b, "pmax", config.bounds.pmax);
    config.saturation.deltaMax =
        intField(b, "delta_max", config.saturation.deltaMax);
    if (config.bounds.wmax <= 0 || config.bounds.pmax < 0)
      schemaError("bounds must be positive");
  }
  if (doc.contains("seed")) {
    if (!doc.at("seed").is_number_unsigned() &&
        !doc.at("seed").is_number_integer())
      schemaError("'seed' must be an integer");
    config.seed = doc.at("seed").get<std::uint64_t>();
  }

  if (doc.contains("type")) {
    std::string type = doc.at("type").is_string()
                           ? doc.at("type").get<std::string>()
                           : std::string();
    if (type == "dorfman") {
      config.kind = "dorfman";
      if (!doc.contains("vars")) schemaError("dorfman block needs 'vars'");
      config.vars = stringList(doc.at("vars"), "vars");
      return config;
    }
    if (type == "sc") {
      config.kind = "sc";
      config.dim = intField(doc, "dim", 0);
      if (config.dim <= 0) schemaError("'dim' must be positive");
      if (!doc.contains("table") || !doc.at("table").is_array())
        schemaError("sc block needs a 'table' array");
      const json& table = doc.at("table");
      auto n = static_cast<std::size_t>(config.dim);
      if (table.size() != n) schemaError("'table' must have dim rows");
      for (const json& row : table) {
        if (!row.is_array() || row.size() != n)
          schemaError("'table' rows must have dim entries");
        std::vector<std::vector<Rat>> outRow;
        for (const json& entry : row) {
          if (!entry.is_array() || entry.size() != n)
            schemaError("'table' entries must be coordinate vectors of "
                        "length dim");
          std::vector<Rat> coords;
          for (const json& c : entry) coords.push_back(ratEntry(c, "table"));
          outRow.push_back(std::move(coords));
        }
        config.table.push_back(std::move(outRow));
      }
      return config;
    }
    schemaError("unknown instance type '" + type + "'");
  }

  config.kind = "module";
  if (!doc.contains("vars")) schemaError("module block needs 'vars'");
  if (!doc.contains("generators"))
    schemaError("module block needs 'generators'");
  if (!doc.contains("anchor")) schemaError("module block needs 'anchor'");
  config.vars = stringList(doc.at("vars"), "vars");
  config.generators = stringList(doc.at("generators"), "generators");
  const json& anchor = doc.at("anchor");
  if (!anchor.is_array() || anchor.size() != config.generators.size())
    schemaError("'anchor' must have one row per generator");
  for (const json& row : anchor) {
    if (!row.is_array() || row.size() != config.vars.size())
      schemaError("'anchor' rows must have one entry per variable");
    std::vector<Poly> polyRow;
    for (const json& entry : row)
      polyRow.push_back(polyEntry(entry, config.vars, "anchor"));
    config.anchorRows.push_back(std::move(polyRow));
  }
  return config;
}

Config loadConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parseConfig(buffer.str());
}

} // namespace courant
