#ifndef COURANT_DERIVATION_HPP
#define COURANT_DERIVATION_HPP

#include "courant/poly.hpp"

#include <span>
#include <string>
#include <vector>

namespace courant {

/// Derivation of Q[x_1..x_d]: a polynomial vector field
/// sum_j c_j(x) d/dx_j with exact coefficients.
class Derivation {
public:
  /// Zero derivation in `nvars` variables.
  explicit Derivation(int nvars = 0);

  /// One coefficient polynomial per variable.
  explicit Derivation(std::vector<Poly> coefficients);

  /// d/dx_index.
  static Derivation coordinate(int nvars, int index);

  int nvars() const { return m_nvars; }
  const Poly& coefficient(int index) const;
  const std::vector<Poly>& coefficients() const { return m_coefficients; }
  bool isZero() const;

  /// Applies the derivation to a polynomial: sum_j c_j * df/dx_j.
  Poly apply(const Poly& f) const;

  Derivation operator+(const Derivation& other) const;
  Derivation operator-(const Derivation& other) const;
  Derivation operator-() const;
  Derivation scaled(const Rat& c) const;

  /// Multiplication by a polynomial (f * D is again a derivation).
  Derivation scaled(const Poly& f) const;

  bool operator==(const Derivation& other) const = default;

private:
  void requireSameVars(const Derivation& other) const;

  int m_nvars;
  std::vector<Poly> m_coefficients;
};

/// Commutator [D1, D2] = D1 D2 - D2 D1, again a derivation; the k-th
/// coefficient is D1(c2_k) - D2(c1_k).
Derivation commutator(const Derivation& a, const Derivation& b);

/// Prints as a sum of (polynomial) d/d<var> pieces, e.g.
/// "d/dx + (x^2) d/dy"; "0" when zero.
std::string toString(const Derivation& d, std::span<const std::string> vars);

} // namespace courant

#endif
