#include "courant/linquot.hpp"

#include <algorithm>

namespace courant {

std::vector<std::size_t> Subspace::cobasis() const {
  std::vector<std::size_t> result;
  result.reserve(m_dim - m_pivots.size());
  std::size_t next = 0;
  for (std::size_t col = 0; col < m_dim; ++col) {
    if (next < m_pivots.size() && m_pivots[next] == col) {
      ++next;
      continue;
    }
    result.push_back(col);
  }
  return result;
}

QVec Subspace::reduce(QVec v) const {
  if (v.size() != m_dim)
    throw DimensionMismatch("vector length does not match subspace dimension");
  for (std::size_t r = 0; r < m_rows.size(); ++r) {
    const Rat& c = v[m_pivots[r]];
    if (sgn(c) != 0) v.addScaled(m_rows[r], -c);
  }
  return v;
}

bool Subspace::insert(QVec v) {
  v = reduce(std::move(v));
  std::size_t pivot = m_dim;
  for (std::size_t i = 0; i < m_dim; ++i) {
    if (sgn(v[i]) != 0) {
      pivot = i;
      break;
    }
  }
  if (pivot == m_dim) return false;

  Rat lead = v[pivot];
  v = v.scaled(1 / lead);

  // Keep the form reduced: clear the new pivot column from existing rows.
  for (std::size_t r = 0; r < m_rows.size(); ++r) {
    const Rat& c = m_rows[r][pivot];
    if (sgn(c) != 0) m_rows[r].addScaled(v, -c);
  }

  auto at = std::lower_bound(m_pivots.begin(), m_pivots.end(), pivot);
  std::size_t slot = static_cast<std::size_t>(at - m_pivots.begin());
  m_pivots.insert(at, pivot);
  m_rows.insert(m_rows.begin() + static_cast<std::ptrdiff_t>(slot),
                std::move(v));
  return true;
}

Subspace echelonize(const std::vector<QVec>& vectors, std::size_t dim) {
  Subspace span(dim);
  for (const QVec& v : vectors) span.insert(v);
  return span;
}

SaturationOutcome saturate(
    Subspace& span,
    const std::function<std::vector<QVec>(int delta, std::size_t& overflow)>&
        producer,
    const SaturationConfig& config) {
  SaturationOutcome outcome;
  int stableRounds = 0;
  for (int delta = 0;; ++delta) {
    if (delta > config.deltaMax) {
      std::vector<std::size_t> history = outcome.rankHistory;
      throw SaturationFailure(std::move(history));
    }
    std::size_t before = span.rank();
    for (QVec& v : producer(delta, outcome.overflowCount))
      span.insert(std::move(v));
    outcome.rankHistory.push_back(span.rank());
    outcome.deltaFinal = delta;
    if (span.rank() == before && delta > 0) {
      if (++stableRounds >= 2) break;
    } else {
      stableRounds = 0;
    }
  }
  return outcome;
}

} // namespace courant
