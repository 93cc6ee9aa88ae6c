#ifndef COURANT_POLY_HPP
#define COURANT_POLY_HPP

#include "courant/rational.hpp"

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace courant {

/// Dense exponent vector of a monomial; one entry per variable.
using Exponents = std::vector<int>;

/// Total degree of a monomial.
int degreeOf(const Exponents& e);

/// Graded lexicographic comparison: lower total degree first, ties broken
/// lexicographically from the first variable.
bool gradedLexLess(const Exponents& a, const Exponents& b);

/// Map comparator that iterates the leading (highest) monomial first.
struct GradedLexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const {
    return gradedLexLess(b, a);
  }
};

/// Multivariate polynomial over Q with a fixed number of variables.
/// Terms are kept canonical: no zero coefficients, graded-lex ordering.
class Poly {
public:
  using TermMap = std::map<Exponents, Rat, GradedLexGreater>;

  /// Zero polynomial in `nvars` variables.
  explicit Poly(int nvars = 0);

  static Poly constant(int nvars, const Rat& c);
  static Poly variable(int nvars, int index);
  static Poly monomial(const Exponents& exponents, const Rat& c);

  int nvars() const { return m_nvars; }
  bool isZero() const { return m_terms.empty(); }
  const TermMap& terms() const { return m_terms; }

  /// Total degree of the leading term; -1 for the zero polynomial.
  int totalDegree() const;

  /// Coefficient of a monomial (zero if absent).
  Rat coefficient(const Exponents& exponents) const;

  /// The value of a constant polynomial; throws if nonconstant.
  Rat constantValue() const;

  /// Adds c * x^exponents, dropping the term if it cancels.
  void addTerm(const Exponents& exponents, const Rat& c);

  Poly operator+(const Poly& other) const;
  Poly operator-(const Poly& other) const;
  Poly operator-() const;
  Poly operator*(const Poly& other) const;
  Poly scaled(const Rat& c) const;

  /// Partial derivative with respect to variable `index`.
  Poly derivative(int index) const;

  /// Exact evaluation at a rational point (one value per variable).
  Rat evaluate(std::span<const Rat> point) const;

  bool operator==(const Poly& other) const = default;

private:
  void requireSameVars(const Poly& other) const;

  int m_nvars;
  TermMap m_terms;
};

/// Parses the polynomial grammar
///   poly   ::= term (('+'|'-') term)*
///   term   ::= rat ['*' varpow ('*' varpow)*] | varpow ('*' varpow)*
///   varpow ::= var ['^' int]
///   rat    ::= int ['/' int]
/// against the given variable names; whitespace is insignificant.
Poly parsePoly(std::string_view text, std::span<const std::string> vars);

/// Prints in the same grammar, leading term first, e.g. "3/2*x^2*y - x + 1".
std::string toString(const Poly& p, std::span<const std::string> vars);

/// Coefficient-free monomial text, e.g. "x^2*y"; empty for the unit monomial.
std::string monomialString(const Exponents& e, std::span<const std::string> vars);

/// All exponent vectors of the given total degree, in graded-lex order.
std::vector<Exponents> monomialsOfDegree(int nvars, int degree);

/// All exponent vectors of total degree <= maxDegree, in graded-lex order.
std::vector<Exponents> monomialsUpToDegree(int nvars, int maxDegree);

} // namespace courant

#endif
