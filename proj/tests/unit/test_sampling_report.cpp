#include <doctest.h>

#include "courant/check_report.hpp"
#include "courant/errors.hpp"
#include "courant/sampling.hpp"

#include <set>
#include <vector>

using namespace courant;

namespace {

using Tuple = std::vector<std::size_t>;

std::vector<Tuple> collectTuples(const std::vector<std::size_t>& sizes,
                                 const SampleConfig& config,
                                 CheckReport* reportOut = nullptr) {
  CheckReport report;
  std::vector<Tuple> seen;
  detail::forEachTuple(sizes, config, report,
                       [&](const Tuple& idx) { seen.push_back(idx); });
  if (reportOut) *reportOut = report;
  return seen;
}

} // namespace

TEST_SUITE("sampling") {

TEST_CASE("the generator is a fixed stream per seed") {
  std::uint64_t a = 42, b = 42, c = 43;
  for (int i = 0; i < 16; ++i)
    CHECK(detail::splitmixNext(a) == detail::splitmixNext(b));
  a = 42;
  bool differs = false;
  for (int i = 0; i < 16; ++i)
    if (detail::splitmixNext(a) != detail::splitmixNext(c)) differs = true;
  CHECK(differs);
}

TEST_CASE("small grids are swept exhaustively, each tuple once") {
  SampleConfig config;
  config.tupleCap = 10;
  CheckReport report;
  auto seen = collectTuples({2, 3}, config, &report);
  CHECK(report.mode == "exhaustive");
  CHECK(report.samples == 6);
  CHECK(report.overflows == 0);
  std::set<Tuple> unique(seen.begin(), seen.end());
  CHECK(unique.size() == 6);
  CHECK(unique.count({1, 2}) == 1);
}

TEST_CASE("large grids subsample exactly the cap, reproducibly") {
  SampleConfig config;
  config.seed = 7;
  config.tupleCap = 50;
  CheckReport report;
  auto first = collectTuples({100, 100}, config, &report);
  CHECK(report.mode == "subsample(seed=7)");
  CHECK(report.samples == 50);
  CHECK(first.size() == 50);
  for (const Tuple& t : first) {
    CHECK(t[0] < 100);
    CHECK(t[1] < 100);
  }

  auto repeat = collectTuples({100, 100}, config);
  CHECK(first == repeat);

  SampleConfig other = config;
  other.seed = 8;
  CHECK(collectTuples({100, 100}, other) != first);
}

TEST_CASE("an empty axis short-circuits with a note") {
  SampleConfig config;
  CheckReport report;
  auto seen = collectTuples({3, 0}, config, &report);
  CHECK(seen.empty());
  CHECK(report.samples == 0);
  CHECK(report.note == "empty sample axis");
}

TEST_CASE("truncation overflows are tallied, not failures") {
  SampleConfig config;
  CheckReport report;
  detail::forEachTuple({4}, config, report, [&](const Tuple& idx) {
    if (idx[0] % 2 == 0)
      throw TruncationOverflow(TruncationOverflow::Kind::Weight, 5, 3);
  });
  CHECK(report.samples == 2);
  CHECK(report.overflows == 2);
  CHECK(report.pass());
}

} // TEST_SUITE

TEST_SUITE("check_report") {

TEST_CASE("stored failures are capped while the count keeps going") {
  CheckReport report;
  report.id = "demo";
  for (int i = 0; i < 12; ++i)
    report.addFailure("w" + std::to_string(i), "r" + std::to_string(i));
  CHECK(report.failureCount == 12);
  CHECK(report.failures.size() == CheckReport::kStoredFailureCap);
  CHECK(report.failures.size() == 8);
  CHECK_FALSE(report.pass());
  CHECK(report.failures.front().witness == "w0");
  CHECK(report.failures.back().residual == "r7");
}

TEST_CASE("allPass requires every report to pass") {
  CheckReport good;
  good.id = "good";
  CheckReport bad;
  bad.id = "bad";
  bad.addFailure("w", "r");
  std::vector<CheckReport> both{good, bad};
  std::vector<CheckReport> onlyGood{good, good};
  CHECK(allPass(onlyGood));
  CHECK_FALSE(allPass(both));
}

TEST_CASE("the rendered table is a frozen, deterministic format") {
  CheckReport good;
  good.id = "bracket_rule";
  good.samples = 6;
  good.mode = "exhaustive";

  CheckReport bad;
  bad.id = "jacobi";
  bad.samples = 50;
  bad.overflows = 3;
  bad.mode = "subsample(seed=7)";
  bad.note = "demo";
  bad.addFailure("(e1, e1, e1)", "(e1)");

  std::vector<CheckReport> reports{good, bad};
  std::string expected =
      "id=bracket_rule samples=6 overflows=0 mode=exhaustive verdict=PASS\n"
      "id=jacobi samples=50 overflows=3 mode=subsample(seed=7) verdict=FAIL"
      " failures=1 note=demo\n"
      "  witness: (e1, e1, e1)\n"
      "  residual: (e1)\n";
  CHECK(renderReports(reports) == expected);
  CHECK(renderReports(reports) == renderReports(reports));
}

} // TEST_SUITE
