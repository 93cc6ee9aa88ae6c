#ifndef COURANT_QVEC_HPP
#define COURANT_QVEC_HPP

#include "courant/errors.hpp"
#include "courant/rational.hpp"

#include <cstddef>
#include <vector>

namespace courant {

/// Dense exact rational vector; the coordinate type of every echelon form,
/// quotient projection and symmetrized-square value in the library.
class QVec {
public:
  QVec() = default;
  explicit QVec(std::size_t n) : m_v(n, Rat(0)) {}
  explicit QVec(std::vector<Rat> v) : m_v(std::move(v)) {}

  static QVec unit(std::size_t n, std::size_t index) {
    QVec u(n);
    u[index] = 1;
    return u;
  }

  std::size_t size() const { return m_v.size(); }
  Rat& operator[](std::size_t i) { return m_v[i]; }
  const Rat& operator[](std::size_t i) const { return m_v[i]; }

  bool isZero() const {
    for (const Rat& c : m_v)
      if (sgn(c) != 0) return false;
    return true;
  }

  QVec operator+(const QVec& other) const {
    requireSameSize(other);
    QVec r = *this;
    for (std::size_t i = 0; i < m_v.size(); ++i) r.m_v[i] += other.m_v[i];
    return r;
  }
  QVec operator-(const QVec& other) const {
    requireSameSize(other);
    QVec r = *this;
    for (std::size_t i = 0; i < m_v.size(); ++i) r.m_v[i] -= other.m_v[i];
    return r;
  }
  QVec operator-() const {
    QVec r = *this;
    for (Rat& c : r.m_v) c = -c;
    return r;
  }
  QVec scaled(const Rat& c) const {
    QVec r = *this;
    for (Rat& x : r.m_v) x *= c;
    return r;
  }

  /// In-place r += c * other, the inner loop of every elimination.
  void addScaled(const QVec& other, const Rat& c) {
    requireSameSize(other);
    for (std::size_t i = 0; i < m_v.size(); ++i) m_v[i] += c * other.m_v[i];
  }

  bool operator==(const QVec& other) const = default;

private:
  void requireSameSize(const QVec& other) const {
    if (m_v.size() != other.m_v.size())
      throw DimensionMismatch("vectors of different length");
  }

  std::vector<Rat> m_v;
};

} // namespace courant

#endif
