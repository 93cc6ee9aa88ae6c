#include "courant/axiom_checks.hpp"
#include "courant/config.hpp"
#include "courant/courant_algebra.hpp"
#include "courant/dorfman.hpp"
#include "courant/errors.hpp"
#include "courant/free_leibniz.hpp"
#include "courant/instance.hpp"
#include "courant/structure_constants.hpp"
#include "courant/sym_leibniz.hpp"
#include "courant/universal_maps.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace {

using namespace courant;
using Json = nlohmann::ordered_json;

/// Coefficient monomial degree used by every sampled identity grid.
constexpr int kCoeffDegreeCap = 2;

/// Flags shared by every subcommand: config selection, overrides and the
/// machine-readable report mirror.
struct CommonFlags {
  std::string configPath;
  std::string reportPath;
  std::optional<std::uint64_t> seed;
  std::optional<int> wmax;
  std::optional<int> pmax;
  std::optional<std::size_t> tupleCap;
};

void addCommonFlags(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--config", flags.configPath,
                  "configuration file (JSON; see README for the schema)")
      ->required();
  cmd->add_option("--report", flags.reportPath,
                  "write a machine-readable JSON mirror of the output");
  cmd->add_option("--seed", flags.seed, "sampling seed override");
  cmd->add_option("--wmax", flags.wmax, "weight bound override");
  cmd->add_option("--pmax", flags.pmax, "degree bound override");
  cmd->add_option("--tuple-cap", flags.tupleCap,
                  "sample-grid size above which grids are subsampled");
}

Config loadEffectiveConfig(const CommonFlags& flags) {
  Config config = loadConfig(flags.configPath);
  if (flags.seed) config.seed = *flags.seed;
  if (flags.wmax) config.bounds.wmax = *flags.wmax;
  if (flags.pmax) config.bounds.pmax = *flags.pmax;
  return config;
}

SampleConfig sampleConfigOf(const Config& config, const CommonFlags& flags) {
  SampleConfig sample;
  sample.seed = config.seed;
  if (flags.tupleCap) sample.tupleCap = *flags.tupleCap;
  return sample;
}

RelationConfig relationConfigOf(const Config& config) {
  RelationConfig relations;
  relations.saturation = config.saturation;
  return relations;
}

void requireKind(const Config& config, const std::string& kind,
                 const std::string& command) {
  if (config.kind != kind)
    throw Error("command '" + command + "' needs a '" + kind +
                "' configuration, got '" + config.kind + "'");
}

// --- report plumbing -------------------------------------------------------

Json reportToJson(const CheckReport& report) {
  Json failures = Json::array();
  for (const CheckFailure& f : report.failures)
    failures.push_back(Json{{"witness", f.witness}, {"residual", f.residual}});
  Json out{{"id", report.id},
           {"samples", report.samples},
           {"overflows", report.overflows},
           {"mode", report.mode},
           {"failure_count", report.failureCount},
           {"failures", std::move(failures)}};
  if (!report.note.empty()) out["note"] = report.note;
  out["verdict"] = report.pass() ? "PASS" : "FAIL";
  return out;
}

Json reportsToJson(const std::vector<CheckReport>& reports) {
  Json out = Json::array();
  for (const CheckReport& r : reports) out.push_back(reportToJson(r));
  return out;
}

Json documentHead(const std::string& command, const CommonFlags& flags,
                  const Config& config) {
  return Json{{"command", command},
              {"config", flags.configPath},
              {"kind", config.kind},
              {"seed", config.seed},
              {"bounds",
               Json{{"wmax", config.bounds.wmax},
                    {"pmax", config.bounds.pmax},
                    {"delta_max", config.saturation.deltaMax}}}};
}

void emitReportFile(const std::string& path, const Json& document) {
  if (path.empty()) return;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open report file '" + path + "'");
  out << document.dump(2) << '\n';
}

std::size_t totalFailures(const std::vector<CheckReport>& reports) {
  std::size_t total = 0;
  for (const CheckReport& r : reports) total += r.failureCount;
  return total;
}

/// Prints the fixed-order table plus one summary line and returns the
/// conjunction exit code.
int concludeChecks(const std::vector<CheckReport>& reports,
                   const std::string& reportPath, Json document) {
  std::cout << renderReports(reports);
  bool pass = allPass(reports);
  std::cout << "verdict: " << (pass ? "PASS" : "FAIL")
            << " checks=" << reports.size()
            << " failures=" << totalFailures(reports) << '\n';
  document["reports"] = reportsToJson(reports);
  document["verdict"] = pass ? "PASS" : "FAIL";
  emitReportFile(reportPath, document);
  return pass ? 0 : 1;
}

// --- expand ----------------------------------------------------------------

int runExpand(const CommonFlags& flags, const std::string& expression) {
  Config config = loadEffectiveConfig(flags);
  requireKind(config, "module", "expand");
  FreeLeibniz algebra(config.makeModule(), config.bounds);
  std::string printed = algebra.printElement(
      algebra.evaluateExpression(expression));
  std::cout << printed << '\n';
  Json document = documentHead("expand", flags, config);
  document["input"] = expression;
  document["result"] = printed;
  emitReportFile(flags.reportPath, document);
  return 0;
}

// --- dims / quotient -------------------------------------------------------

Json weightsToJson(const std::vector<WeightDims>& dims) {
  Json out = Json::array();
  for (const WeightDims& d : dims)
    out.push_back(Json{{"weight", d.weight},
                       {"dim_free", d.dimFree},
                       {"dim_relations", d.dimRelations},
                       {"dim_quotient", d.dimQuotient}});
  return out;
}

void printWeightLines(const std::vector<WeightDims>& dims, int deltaFinal) {
  for (const WeightDims& d : dims)
    std::cout << "weight=" << d.weight << " dim_free=" << d.dimFree
              << " dim_relations=" << d.dimRelations
              << " dim_quotient=" << d.dimQuotient
              << " saturation_delta=" << deltaFinal << '\n';
}

int runDims(const CommonFlags& flags) {
  Config config = loadEffectiveConfig(flags);
  requireKind(config, "module", "dims");
  SymLeibnizQuotient quotient(FreeLeibniz(config.makeModule(), config.bounds),
                              relationConfigOf(config));
  std::vector<WeightDims> dims = quotient.dimsByWeight();
  printWeightLines(dims, quotient.saturation().deltaFinal);
  Json document = documentHead("dims", flags, config);
  document["weights"] = weightsToJson(dims);
  document["saturation_delta"] = quotient.saturation().deltaFinal;
  emitReportFile(flags.reportPath, document);
  return 0;
}

int runQuotient(const CommonFlags& flags) {
  Config config = loadEffectiveConfig(flags);
  requireKind(config, "module", "quotient");
  SymLeibnizQuotient quotient(FreeLeibniz(config.makeModule(), config.bounds),
                              relationConfigOf(config));
  std::vector<WeightDims> dims = quotient.dimsByWeight();
  const SaturationOutcome& saturation = quotient.saturation();
  printWeightLines(dims, saturation.deltaFinal);

  std::size_t freeTotal = 0, relTotal = 0, quotTotal = 0;
  for (const WeightDims& d : dims) {
    freeTotal += d.dimFree;
    relTotal += d.dimRelations;
    quotTotal += d.dimQuotient;
  }
  std::cout << "total dim_free=" << freeTotal << " dim_relations=" << relTotal
            << " dim_quotient=" << quotTotal << '\n';

  std::ostringstream history;
  for (std::size_t k = 0; k < saturation.rankHistory.size(); ++k) {
    if (k > 0) history << ',';
    history << saturation.rankHistory[k];
  }
  std::cout << "saturation_history=" << history.str() << '\n'
            << "saturation_delta=" << saturation.deltaFinal
            << " saturation_overflows=" << saturation.overflowCount << '\n'
            << "relation_generators=" << quotient.relationGenerators().size()
            << '\n';

  Json document = documentHead("quotient", flags, config);
  document["weights"] = weightsToJson(dims);
  document["total"] = Json{{"dim_free", freeTotal},
                           {"dim_relations", relTotal},
                           {"dim_quotient", quotTotal}};
  document["saturation"] =
      Json{{"history", saturation.rankHistory},
           {"delta_final", saturation.deltaFinal},
           {"overflows", saturation.overflowCount}};
  document["relation_generators"] = quotient.relationGenerators().size();
  emitReportFile(flags.reportPath, document);
  return 0;
}

// --- check -----------------------------------------------------------------

void appendReports(std::vector<CheckReport>& into,
                   std::vector<CheckReport> batch) {
  for (CheckReport& r : batch) into.push_back(std::move(r));
}

std::vector<CheckReport> checkDorfman(const Config& config,
                                      const std::string& suite,
                                      const SampleConfig& sample) {
  DorfmanAlgebra algebra(config.vars);
  auto samples = algebra.sampleElements(kCoeffDegreeCap);
  auto coeffs = coefficientMonomials(algebra.nvars(), kCoeffDegreeCap);
  auto want = [&](const char* name) {
    return suite == name || suite == "all";
  };
  std::vector<CheckReport> reports;
  if (want("leibniz"))
    appendReports(reports, checkLeibnizSuite(algebra, samples, coeffs, sample));
  if (want("symmetric"))
    appendReports(reports,
                  checkSymmetricSuite(algebra, samples, coeffs, sample));
  if (want("loday")) {
    auto rightAnchor = [&](const Poly& f, const DorfmanAlgebra::Element& u,
                           const DorfmanAlgebra::Element& v) {
      return algebra.rightAnchor(f, u, v);
    };
    appendReports(reports,
                  checkLodaySuite(algebra, samples, coeffs, rightAnchor,
                                  sample));
  }
  if (want("module")) {
    ValueModulePack<DorfmanAlgebra> pack{
        &algebra, coefficientMonomials(algebra.nvars(), kCoeffDegreeCap)};
    appendReports(reports, checkModuleSuite(pack, samples, coeffs, sample));
  }
  if (want("courant")) {
    appendReports(reports,
                  checkClassicalCourantSuite(algebra, samples, coeffs, sample));
    appendReports(reports,
                  checkPreCourantSuite(algebra, samples, coeffs, sample));
  }
  return reports;
}

std::vector<CheckReport> checkStructureConstants(const Config& config,
                                                 const std::string& suite,
                                                 const SampleConfig& sample) {
  if (suite == "loday" || suite == "module" || suite == "courant")
    throw Error("suite '" + suite +
                "' is not available for structure-constant tables (no right "
                "anchor or value module; use the `courant` command for the "
                "associated pairing)");
  StructureConstantAlgebra algebra = config.makeStructureConstants();
  auto samples = basisElements(algebra);
  auto coeffs = coefficientMonomials(0, 0);
  auto want = [&](const char* name) {
    return suite == name || suite == "all";
  };
  std::vector<CheckReport> reports;
  if (want("leibniz"))
    appendReports(reports, checkLeibnizSuite(algebra, samples, coeffs, sample));
  if (want("symmetric"))
    appendReports(reports,
                  checkSymmetricSuite(algebra, samples, coeffs, sample));
  return reports;
}

std::vector<CheckReport> checkModuleConfig(const Config& config,
                                           const std::string& suite,
                                           const SampleConfig& sample) {
  if (suite == "loday")
    throw Error("suite 'loday' needs a right-anchor form; it is available "
                "for the dorfman instance only");
  auto coeffs = coefficientMonomials(
      static_cast<int>(config.vars.size()), kCoeffDegreeCap);
  auto want = [&](const char* name) {
    return suite == name || suite == "all";
  };
  std::vector<CheckReport> reports;
  if (want("leibniz")) {
    FreeLeibniz free(config.makeModule(), config.bounds);
    appendReports(reports,
                  checkLeibnizSuite(free, basisElements(free), coeffs, sample));
  }
  std::shared_ptr<const SymLeibnizQuotient> quotient;
  auto quotientOf = [&]() {
    if (!quotient)
      quotient = std::make_shared<const SymLeibnizQuotient>(
          FreeLeibniz(config.makeModule(), config.bounds),
          relationConfigOf(config));
    return quotient;
  };
  if (want("symmetric")) {
    auto q = quotientOf();
    appendReports(reports,
                  checkSymmetricSuite(*q, basisElements(*q), coeffs, sample));
    reports.push_back(q->checkIdealClosure());
    reports.push_back(q->checkAnchorKillsRelations());
  }
  if (want("module") || want("courant")) {
    auto q = quotientOf();
    CourantOptions options;
    options.maxCombinedWeight = config.bounds.wmax;
    options.saturation = config.saturation;
    AssociatedCourant<SymLeibnizQuotient> courant =
        buildAssociatedCourant(q, options);
    if (want("module")) {
      std::vector<QVec> values;
      for (std::size_t k = 0; k < courant.valueDim(); ++k)
        values.push_back(courant.valueCobasisVector(k));
      ValueModulePack<AssociatedCourant<SymLeibnizQuotient>> pack{&courant,
                                                                  values};
      appendReports(reports,
                    checkModuleSuite(pack, basisElements(*q), coeffs, sample));
    }
    if (want("courant"))
      appendReports(reports, checkPreCourantSuite(courant, basisElements(*q),
                                                  coeffs, sample));
  }
  return reports;
}

int runCheck(const CommonFlags& flags, const std::string& suite) {
  Config config = loadEffectiveConfig(flags);
  SampleConfig sample = sampleConfigOf(config, flags);
  std::vector<CheckReport> reports;
  if (config.kind == "dorfman")
    reports = checkDorfman(config, suite, sample);
  else if (config.kind == "sc")
    reports = checkStructureConstants(config, suite, sample);
  else
    reports = checkModuleConfig(config, suite, sample);
  if (reports.empty())
    throw Error("suite '" + suite + "' selected no checks for kind '" +
                config.kind + "'");
  Json document = documentHead("check", flags, config);
  document["suite"] = suite;
  return concludeChecks(reports, flags.reportPath, std::move(document));
}

// --- courant ---------------------------------------------------------------

template <FiniteBasisInstance B>
int reportAssociated(const AssociatedCourant<B>& courant,
                     const std::vector<typename B::Element>& samples,
                     const std::vector<Poly>& coeffs,
                     const SampleConfig& sample, const CommonFlags& flags,
                     Json document) {
  std::vector<CheckReport> reports =
      checkPreCourantSuite(courant, samples, coeffs, sample);
  std::cout << "value_ambient_pairs=" << courant.square().pairCount()
            << " value_relation_rank="
            << courant.valueQuotient().relations().rank()
            << " value_dim=" << courant.valueDim() << '\n'
            << "inv_generators=" << courant.invGenerators().size()
            << " saturation_delta=" << courant.saturation().deltaFinal << '\n';
  document["value_module"] =
      Json{{"ambient_pairs", courant.square().pairCount()},
           {"relation_rank", courant.valueQuotient().relations().rank()},
           {"dim", courant.valueDim()},
           {"inv_generators", courant.invGenerators().size()},
           {"saturation_delta", courant.saturation().deltaFinal}};
  return concludeChecks(reports, flags.reportPath, std::move(document));
}

int runCourant(const CommonFlags& flags) {
  Config config = loadEffectiveConfig(flags);
  SampleConfig sample = sampleConfigOf(config, flags);
  Json document = documentHead("courant", flags, config);
  if (config.kind == "dorfman")
    throw Error("the associated construction needs a finite basis; run "
                "`check --suite courant` for the dorfman instance");
  if (config.kind == "sc") {
    auto base = std::make_shared<const StructureConstantAlgebra>(
        config.makeStructureConstants());
    AssociatedCourant<StructureConstantAlgebra> courant =
        buildAssociatedCourant(base, CourantOptions{});
    return reportAssociated(courant, basisElements(*base),
                            coefficientMonomials(0, 0), sample, flags,
                            std::move(document));
  }
  auto quotient = std::make_shared<const SymLeibnizQuotient>(
      FreeLeibniz(config.makeModule(), config.bounds),
      relationConfigOf(config));
  CourantOptions options;
  options.maxCombinedWeight = config.bounds.wmax;
  options.saturation = config.saturation;
  AssociatedCourant<SymLeibnizQuotient> courant =
      buildAssociatedCourant(quotient, options);
  return reportAssociated(
      courant, basisElements(*quotient),
      coefficientMonomials(static_cast<int>(config.vars.size()),
                           kCoeffDegreeCap),
      sample, flags, std::move(document));
}

// --- universal -------------------------------------------------------------

/// Reads `generator = expression` lines; '#' starts a comment, blank lines
/// are skipped.
std::map<std::string, std::string> readMapFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open map file '" + path + "'");
  std::map<std::string, std::string> assignments;
  std::string line;
  auto trim = [](std::string s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    std::size_t e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  std::size_t lineNumber = 0;
  while (std::getline(in, line)) {
    ++lineNumber;
    if (std::size_t hash = line.find('#'); hash != std::string::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw Error("map file line " + std::to_string(lineNumber) +
                  " has no '=': '" + line + "'");
    std::string name = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (name.empty() || value.empty())
      throw Error("map file line " + std::to_string(lineNumber) +
                  " is incomplete");
    if (!assignments.emplace(name, value).second)
      throw Error("map file assigns generator '" + name + "' twice");
    assignments[name] = value;
  }
  return assignments;
}

/// Runs the full extension/descent pipeline against one target and collects
/// every diagram report. Parsing of generator images is target-specific.
template <class Target, class ParseImage>
int runUniversalPipeline(const Target& target, ParseImage parseImage,
                         const Config& config,
                         std::shared_ptr<const SymLeibnizQuotient> quotient,
                         const AssociatedCourant<SymLeibnizQuotient>& values,
                         const std::map<std::string, std::string>& assignments,
                         const SampleConfig& sample, const CommonFlags& flags,
                         Json document) {
  const AnchoredModule& module = quotient->freeAlgebra().module();
  for (const auto& [name, value] : assignments) {
    bool known = false;
    for (const std::string& gen : module.generators())
      if (gen == name) known = true;
    if (!known)
      throw Error("map file names unknown generator '" + name + "'");
  }
  std::vector<typename Target::Element> images;
  Json imageJson = Json::object();
  for (const std::string& gen : module.generators()) {
    auto it = assignments.find(gen);
    if (it == assignments.end())
      throw Error("map file is missing an image for generator '" + gen + "'");
    images.push_back(parseImage(it->second));
    imageJson[gen] = it->second;
  }
  document["images"] = std::move(imageJson);

  std::vector<CheckReport> reports;
  try {
    FreeMorphism<Target> lift(&quotient->freeAlgebra(), &target,
                              std::move(images));
    reports.push_back(lift.checkGeneratorRestriction());
    reports.push_back(lift.checkBracketCompatibility(sample));
    reports.push_back(lift.checkCoefficientCompatibility(kCoeffDegreeCap,
                                                         sample));
    reports.push_back(lift.checkAnchorCompatibility(sample));
    SymmetricMorphism<Target> phi1 = descendToSymmetric(*quotient, lift);
    reports.push_back(phi1.checkRouteAgreement(sample));
    reports.push_back(phi1.checkBracketCompatibility(sample));
    reports.push_back(phi1.checkCoefficientCompatibility(kCoeffDegreeCap,
                                                         sample));
    PairedMorphism<Target> phi2 = descendToPaired(values, phi1);
    reports.push_back(phi2.checkPairingCompatibility(sample));
    reports.push_back(phi2.checkLeftActionCompatibility(sample));
    reports.push_back(phi2.checkRightActionCompatibility(sample));
    reports.push_back(phi2.checkRightActionDiagram(sample));
  } catch (const NonVanishingOnIdeal& error) {
    std::cout << renderReports(reports);
    std::cout << "descent to the balanced quotient failed: " << error.what()
              << '\n'
              << "verdict: FAIL checks=" << reports.size() << " failures=1\n";
    document["reports"] = reportsToJson(reports);
    document["descent_error"] = error.what();
    document["verdict"] = "FAIL";
    emitReportFile(flags.reportPath, document);
    return 1;
  } catch (const NonVanishingOnInv& error) {
    std::cout << renderReports(reports);
    std::cout << "descent to the value quotient failed: " << error.what()
              << '\n'
              << "verdict: FAIL checks=" << reports.size() << " failures=1\n";
    document["reports"] = reportsToJson(reports);
    document["descent_error"] = error.what();
    document["verdict"] = "FAIL";
    emitReportFile(flags.reportPath, document);
    return 1;
  }
  return concludeChecks(reports, flags.reportPath, std::move(document));
}

int runUniversal(const CommonFlags& flags, const std::string& targetSpec,
                 const std::string& mapPath) {
  Config config = loadEffectiveConfig(flags);
  requireKind(config, "module", "universal");
  auto quotient = std::make_shared<const SymLeibnizQuotient>(
      FreeLeibniz(config.makeModule(), config.bounds),
      relationConfigOf(config));
  CourantOptions options;
  options.maxCombinedWeight = config.bounds.wmax;
  options.saturation = config.saturation;
  AssociatedCourant<SymLeibnizQuotient> values =
      buildAssociatedCourant(quotient, options);
  SampleConfig sample = sampleConfigOf(config, flags);

  Json document = documentHead("universal", flags, config);
  document["target"] = targetSpec;

  std::map<std::string, std::string> assignments;
  if (!mapPath.empty()) assignments = readMapFile(mapPath);

  if (targetSpec == "self") {
    // Default to the generator inclusion: the unit of the construction.
    if (assignments.empty())
      for (const std::string& gen :
           quotient->freeAlgebra().module().generators())
        assignments[gen] = "(" + gen + ")";
    auto parseImage = [&](const std::string& text) {
      return quotient->parse(text);
    };
    return runUniversalPipeline(values, parseImage, config, quotient, values,
                                assignments, sample, flags,
                                std::move(document));
  }
  if (mapPath.empty())
    throw Error("--map is required for target '" + targetSpec + "'");
  if (targetSpec == "dorfman") {
    DorfmanAlgebra target(config.vars);
    auto parseImage = [&](const std::string& text) {
      return target.parse(text);
    };
    return runUniversalPipeline(target, parseImage, config, quotient, values,
                                assignments, sample, flags,
                                std::move(document));
  }
  if (targetSpec.rfind("sc:", 0) == 0) {
    if (!config.vars.empty())
      throw Error("structure-constant targets carry no coefficient "
                  "variables; the module must have zero variables");
    Config targetConfig = loadConfig(targetSpec.substr(3));
    requireKind(targetConfig, "sc", "universal --target sc:<file>");
    auto base = std::make_shared<const StructureConstantAlgebra>(
        targetConfig.makeStructureConstants());
    AssociatedCourant<StructureConstantAlgebra> target =
        buildAssociatedCourant(base, CourantOptions{});
    auto parseImage = [&](const std::string& text) {
      return base->parse(text);
    };
    return runUniversalPipeline(target, parseImage, config, quotient, values,
                                assignments, sample, flags,
                                std::move(document));
  }
  throw Error("unknown target '" + targetSpec +
              "'; expected dorfman, sc:<file> or self");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact engine for free symmetric Leibniz algebras and their "
               "associated Courant pairings"};
  app.require_subcommand(1);

  CommonFlags expandFlags;
  std::string expression;
  CLI::App* expand = app.add_subcommand(
      "expand", "normal-form an element expression in the free algebra");
  addCommonFlags(expand, expandFlags);
  expand->add_option("expression", expression,
                     "element expression, e.g. \"[ (e1) , (x*e1) ]\"")
      ->required();

  CommonFlags dimsFlags;
  CLI::App* dims = app.add_subcommand(
      "dims", "per-weight dimensions of the balanced quotient");
  addCommonFlags(dims, dimsFlags);

  CommonFlags quotientFlags;
  CLI::App* quotient = app.add_subcommand(
      "quotient", "relation ranks, quotient dimensions and saturation data");
  addCommonFlags(quotient, quotientFlags);

  CommonFlags checkFlags;
  std::string suite = "all";
  CLI::App* check =
      app.add_subcommand("check", "run identity suites on an instance");
  addCommonFlags(check, checkFlags);
  check
      ->add_option("--suite", suite,
                   "leibniz, symmetric, loday, module, courant or all")
      ->check(CLI::IsMember(
          {"leibniz", "symmetric", "loday", "module", "courant", "all"}));

  CommonFlags courantFlags;
  CLI::App* courantCmd = app.add_subcommand(
      "courant", "build the associated pairing and verify its identities");
  addCommonFlags(courantCmd, courantFlags);

  CommonFlags universalFlags;
  std::string target;
  std::string mapPath;
  CLI::App* universal = app.add_subcommand(
      "universal", "extend a generator assignment and verify the diagrams");
  addCommonFlags(universal, universalFlags);
  universal->add_option("--target", target, "dorfman, sc:<file> or self")
      ->required();
  universal->add_option("--map", mapPath,
                        "file of `generator = image` lines in the target "
                        "grammar");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (expand->parsed()) return runExpand(expandFlags, expression);
    if (dims->parsed()) return runDims(dimsFlags);
    if (quotient->parsed()) return runQuotient(quotientFlags);
    if (check->parsed()) return runCheck(checkFlags, suite);
    if (courantCmd->parsed()) return runCourant(courantFlags);
    if (universal->parsed())
      return runUniversal(universalFlags, target, mapPath);
  } catch (const Error& error) {
    std::cerr << "error: " << error.what() << '\n';
    return 2;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << '\n';
    return 2;
  }
  return 2;
}
