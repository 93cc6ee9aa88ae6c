#ifndef COURANT_CHECK_REPORT_HPP
#define COURANT_CHECK_REPORT_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace courant {

/// One failing sample of an identity check.
struct CheckFailure {
  std::string witness;
  std::string residual;
};

/// Outcome of one identity checked over a sample grid. `mode` records how
/// the grid was produced ("exhaustive" or "subsample(seed=...)"), so a
/// report is meaningful on its own.
struct CheckReport {
  std::string id;
  std::size_t samples = 0;
  std::size_t overflows = 0;
  std::string mode = "exhaustive";
  std::size_t failureCount = 0;
  std::vector<CheckFailure> failures; // first few, capped
  std::string note;

  static constexpr std::size_t kStoredFailureCap = 8;

  bool pass() const { return failureCount == 0; }

  void addFailure(std::string witness, std::string residual) {
    ++failureCount;
    if (failures.size() < kStoredFailureCap)
      failures.push_back({std::move(witness), std::move(residual)});
  }
};

/// True when every report passes.
bool allPass(std::span<const CheckReport> reports);

/// Fixed-order text table, one line per report plus indented failure
/// details. Deterministic for identical inputs.
std::string renderReports(std::span<const CheckReport> reports);

} // namespace courant

#endif
