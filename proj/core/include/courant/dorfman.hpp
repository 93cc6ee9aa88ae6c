#ifndef COURANT_DORFMAN_HPP
#define COURANT_DORFMAN_HPP

#include "courant/derivation.hpp"
#include "courant/poly.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace courant {

/// Sections of the double of the polynomial coordinate space: an element is
/// a polynomial vector field plus a polynomial one-form,
///   u = sum_j X^j d/dx_j + sum_j xi_j dx_j,
/// with the Dorfman bracket
///   [X + xi, Y + eta] = [X, Y] + L_X eta - i_Y d xi,
/// the vector-field anchor, and the pairing
///   (X + xi | Y + eta) = 1/2 (eta(X) + xi(Y)).
///
/// The induced differential is calibrated to that pairing: D f = (0, 2 df),
/// which makes (D f | u) = a(u)(f) an identity.
///
/// `Options` exists for controlled mutants used by negative tests: scaling
/// the pairing or adding the (noninvariant) vector-vector dot term. The
/// bracket and D are never mutated.
class DorfmanAlgebra {
public:
  struct Element {
    std::vector<Poly> vec;
    std::vector<Poly> form;

    bool isZero() const;
    Element operator+(const Element& other) const;
    Element operator-(const Element& other) const;
    Element operator-() const;
    Element scaled(const Rat& c) const;
    bool operator==(const Element& other) const = default;
  };

  using Value = Poly;

  struct Options {
    Rat pairingScale = Rat(1, 2);
    bool addVectorDot = false;
  };

  explicit DorfmanAlgebra(std::vector<std::string> vars);
  DorfmanAlgebra(std::vector<std::string> vars, Options options);

  int nvars() const { return static_cast<int>(m_vars.size()); }
  const std::vector<std::string>& vars() const { return m_vars; }

  Element zero() const;

  /// f * d/dx_index.
  Element vectorField(int index, const Poly& f) const;

  /// f * dx_index.
  Element oneForm(int index, const Poly& f) const;

  Element bracket(const Element& u, const Element& v) const;
  Element scalarMult(const Poly& f, const Element& u) const;
  Derivation anchor(const Element& u) const;

  Value pairing(const Element& u, const Element& v) const;

  /// Left action of the algebra on coefficients: a(x) applied to f.
  Value actLeft(const Element& x, const Value& f) const;

  /// Right action, the negative of the left one.
  Value actRight(const Element& x, const Value& f) const;

  Value valueScalarMult(const Poly& f, const Value& w) const { return f * w; }
  Value valueZero() const { return Poly(nvars()); }

  /// D f = (0, 2 df).
  Element differential(const Poly& f) const;

  /// Right-anchor evaluator (D f)(u, v) = (u|v) D f.
  Element rightAnchor(const Poly& f, const Element& u,
                      const Element& v) const;

  std::string printElement(const Element& u) const;
  std::string printValue(const Value& w) const {
    return toString(w, m_vars);
  }

  /// Parses sums of `rat? mono? sym` terms where sym is `d_<var>` for a
  /// vector field or `d<var>` for a one-form, e.g. "d_x + x*dx".
  Element parse(std::string_view text) const;

  /// Monomial-decorated coordinate fields and forms up to the given
  /// decoration degree, a spanning family for identity grids.
  std::vector<Element> sampleElements(int degreeCap) const;

private:
  void requireShape(const Element& u) const;

  std::vector<std::string> m_vars;
  Options m_options;
};

} // namespace courant

#endif
