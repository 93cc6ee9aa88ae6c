#ifndef COURANT_SAMPLING_HPP
#define COURANT_SAMPLING_HPP

#include "courant/check_report.hpp"
#include "courant/errors.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace courant {

/// Deterministic sampling policy for identity checks: grids at or below
/// `tupleCap` tuples are swept exhaustively, larger grids fall back to a
/// seeded uniform subsample of exactly `tupleCap` draws.
struct SampleConfig {
  std::uint64_t seed = 0;
  std::size_t tupleCap = 10000;
};

namespace detail {

/// Deterministic 64-bit generator; one fixed stream per seed.
inline std::uint64_t splitmixNext(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Visits index tuples over the grid with the given axis sizes, exhaustively
/// when the grid fits under the cap and by seeded subsample otherwise. The
/// callback evaluates one tuple: it records failures on the report itself;
/// completed evaluations and out-of-piece evaluations are tallied here.
template <class Fn>
void forEachTuple(const std::vector<std::size_t>& sizes,
                  const SampleConfig& config, CheckReport& report, Fn&& fn) {
  for (std::size_t s : sizes) {
    if (s == 0) {
      report.note = "empty sample axis";
      return;
    }
  }
  std::size_t total = 1;
  bool exhaustive = true;
  for (std::size_t s : sizes) {
    if (total > config.tupleCap / s) {
      exhaustive = false;
      break;
    }
    total *= s;
  }
  std::vector<std::size_t> idx(sizes.size(), 0);
  auto attempt = [&]() {
    try {
      fn(idx);
      ++report.samples;
    } catch (const TruncationOverflow&) {
      ++report.overflows;
    }
  };
  if (exhaustive) {
    report.mode = "exhaustive";
    bool done = sizes.empty();
    if (sizes.empty()) return;
    while (!done) {
      attempt();
      std::size_t k = 0;
      while (k < sizes.size()) {
        if (++idx[k] < sizes[k]) break;
        idx[k] = 0;
        ++k;
      }
      done = (k == sizes.size());
    }
  } else {
    report.mode = "subsample(seed=" + std::to_string(config.seed) + ")";
    std::uint64_t state = config.seed;
    for (std::size_t draw = 0; draw < config.tupleCap; ++draw) {
      for (std::size_t k = 0; k < sizes.size(); ++k)
        idx[k] = static_cast<std::size_t>(splitmixNext(state) % sizes[k]);
      attempt();
    }
  }
}

} // namespace detail

} // namespace courant

#endif
