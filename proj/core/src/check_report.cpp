#include "courant/check_report.hpp"

namespace courant {

bool allPass(std::span<const CheckReport> reports) {
  for (const CheckReport& r : reports)
    if (!r.pass()) return false;
  return true;
}

std::string renderReports(std::span<const CheckReport> reports) {
  std::string out;
  for (const CheckReport& r : reports) {
    out += "id=" + r.id + " samples=" + std::to_string(r.samples) +
           " overflows=" + std::to_string(r.overflows) + " mode=" + r.mode +
           " verdict=" + (r.pass() ? "PASS" : "FAIL");
    if (!r.pass()) out += " failures=" + std::to_string(r.failureCount);
    if (!r.note.empty()) out += " note=" + r.note;
    out += "\n";
    for (const CheckFailure& f : r.failures) {
      out += "  witness: " + f.witness + "\n";
      out += "  residual: " + f.residual + "\n";
    }
  }
  return out;
}

} // namespace courant
