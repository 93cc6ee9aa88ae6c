#include <doctest.h>

#include "courant/errors.hpp"
#include "courant/linquot.hpp"

using namespace courant;

namespace {

QVec vec(std::vector<long> entries) {
  QVec v(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) v[i] = Rat(entries[i]);
  return v;
}

} // namespace

TEST_SUITE("linquot") {

TEST_CASE("insertion tracks rank and membership exactly") {
  Subspace s(3);
  CHECK(s.insert(vec({1, 2, 0})));
  CHECK_FALSE(s.insert(vec({2, 4, 0})));
  CHECK(s.insert(vec({0, 0, 3})));
  CHECK(s.rank() == 2);
  CHECK(s.contains(vec({3, 6, -5})));
  CHECK_FALSE(s.contains(vec({0, 1, 0})));
}

TEST_CASE("reduce is linear, idempotent and kills the span") {
  Subspace s(3);
  s.insert(vec({1, 1, 0}));
  QVec u = vec({2, 0, 5});
  QVec r = s.reduce(u);
  CHECK(s.reduce(r) == r);
  CHECK(s.contains(u - r));
  QVec v = vec({0, 3, 1});
  CHECK(s.reduce(u + v) == s.reduce(u) + s.reduce(v));
  CHECK(s.reduce(vec({7, 7, 0})).isZero());
}

TEST_CASE("cobasis complements the pivots") {
  Subspace s(4);
  s.insert(vec({1, 0, 2, 0}));
  s.insert(vec({0, 1, 1, 0}));
  auto free = s.cobasis();
  CHECK(free == std::vector<std::size_t>{2, 3});
}

TEST_CASE("quotient projection is well defined on classes") {
  Subspace s(3);
  s.insert(vec({1, -1, 0}));
  QuotientSpace q(std::move(s));
  CHECK(q.dim() == 2);
  CHECK(q.project(vec({1, -1, 0})).isZero());
  CHECK(q.project(vec({5, 0, 1})) == q.project(vec({0, 5, 1})));
}

TEST_CASE("saturation stabilizes once producers stop adding rank") {
  Subspace s(4);
  auto producer = [](int delta, std::size_t& overflow) {
    std::vector<QVec> out;
    if (delta == 0) out.push_back(QVec::unit(4, 0));
    if (delta == 1) out.push_back(QVec::unit(4, 1));
    if (delta >= 2) overflow += 1; // nothing new past delta 1
    return out;
  };
  SaturationOutcome outcome = saturate(s, producer, SaturationConfig{});
  CHECK(s.rank() == 2);
  CHECK(outcome.rankHistory.size() >= 3);
  CHECK(outcome.rankHistory.back() == 2);
  CHECK(outcome.deltaFinal >= 2);
}

TEST_CASE("a producer that never stabilizes is reported") {
  Subspace s(64);
  auto producer = [](int delta, std::size_t&) {
    return std::vector<QVec>{
        QVec::unit(64, static_cast<std::size_t>(delta))};
  };
  SaturationConfig config;
  config.deltaMax = 5;
  CHECK_THROWS_AS((void)saturate(s, producer, config), SaturationFailure);
}

TEST_CASE("length mismatches are rejected") {
  Subspace s(3);
  CHECK_THROWS_AS((void)s.insert(QVec(2)), DimensionMismatch);
  CHECK_THROWS_AS((void)s.reduce(QVec(4)), DimensionMismatch);
}

} // TEST_SUITE
