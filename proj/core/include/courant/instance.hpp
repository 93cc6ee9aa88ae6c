#ifndef COURANT_INSTANCE_HPP
#define COURANT_INSTANCE_HPP

#include "courant/derivation.hpp"
#include "courant/poly.hpp"
#include "courant/qvec.hpp"

#include <concepts>
#include <string>
#include <vector>

namespace courant {

/// Interface contracts for algebra instances. Checkers and morphism
/// machinery are written against these concepts, so every concrete family
/// (free algebra, quotient, double of the coordinate space, structure
/// constants) is exercised by the same code.

/// Element domain with exact linear arithmetic.
template <class E>
concept LinearElement = requires(const E& u, const Rat& c) {
  { u + u } -> std::same_as<E>;
  { u - u } -> std::same_as<E>;
  { -u } -> std::same_as<E>;
  { u.scaled(c) } -> std::same_as<E>;
  { u.isZero() } -> std::convertible_to<bool>;
};

/// A bracket algebra over the polynomial coefficients: bracket, scalar
/// action by coefficients, and an anchor into the derivations.
template <class T>
concept LeibnizInstance =
    LinearElement<typename T::Element> &&
    requires(const T& t, const typename T::Element& u, const Poly& f) {
      { t.zero() } -> std::same_as<typename T::Element>;
      { t.bracket(u, u) } -> std::same_as<typename T::Element>;
      { t.scalarMult(f, u) } -> std::same_as<typename T::Element>;
      { t.anchor(u) } -> std::same_as<Derivation>;
      { t.printElement(u) } -> std::convertible_to<std::string>;
      { t.nvars() } -> std::convertible_to<int>;
    };

/// Instance whose filtered piece carries an explicit ordered basis.
template <class T>
concept FiniteBasisInstance =
    LeibnizInstance<T> &&
    requires(const T& t, std::size_t i, const typename T::Element& u) {
      { t.basisSize() } -> std::convertible_to<std::size_t>;
      { t.basisElement(i) } -> std::same_as<typename T::Element>;
      { t.basisWeight(i) } -> std::convertible_to<int>;
      { t.basisLabel(i) } -> std::convertible_to<std::string>;
      { t.coordinates(u) } -> std::same_as<QVec>;
    };

/// Instance with a value module, a symmetric pairing into it, and left and
/// right actions on values.
template <class T>
concept PairedInstance =
    LeibnizInstance<T> && LinearElement<typename T::Value> &&
    requires(const T& t, const typename T::Element& u,
             const typename T::Value& w, const Poly& f) {
      { t.pairing(u, u) } -> std::same_as<typename T::Value>;
      { t.actLeft(u, w) } -> std::same_as<typename T::Value>;
      { t.actRight(u, w) } -> std::same_as<typename T::Value>;
      { t.valueScalarMult(f, w) } -> std::same_as<typename T::Value>;
      { t.valueZero() } -> std::same_as<typename T::Value>;
      { t.printValue(w) } -> std::convertible_to<std::string>;
    };

/// [u,v] + [v,u].
template <LeibnizInstance T>
typename T::Element symmetrizedProduct(const T& t,
                                       const typename T::Element& u,
                                       const typename T::Element& v) {
  return t.bracket(u, v) + t.bracket(v, u);
}

/// All basis elements of a finite piece, in basis order.
template <FiniteBasisInstance T>
std::vector<typename T::Element> basisElements(const T& t) {
  std::vector<typename T::Element> out;
  out.reserve(t.basisSize());
  for (std::size_t i = 0; i < t.basisSize(); ++i)
    out.push_back(t.basisElement(i));
  return out;
}

/// A value module with explicit left/right actions of an instance,
/// packaged for the module-axiom checks. `sampleValues` spans the tested
/// piece of the value space.
template <class P>
concept ModulePack =
    requires(const P& p, const typename P::Algebra& t,
             const typename P::Algebra::Element& x,
             const typename P::ValueType& w, const Poly& f) {
      { p.algebra() } -> std::convertible_to<const typename P::Algebra&>;
      { p.left(x, w) } -> std::same_as<typename P::ValueType>;
      { p.right(x, w) } -> std::same_as<typename P::ValueType>;
      { p.multiply(f, w) } -> std::same_as<typename P::ValueType>;
      { p.print(w) } -> std::convertible_to<std::string>;
      { p.sampleValues() } -> std::same_as<std::vector<typename P::ValueType>>;
    };

/// The coefficient algebra as a module over a paired instance, with
/// actions (actLeft, actRight).
template <PairedInstance T>
struct ValueModulePack {
  using Algebra = T;
  using ValueType = typename T::Value;

  const T* m_instance;
  std::vector<ValueType> m_samples;

  const T& algebra() const { return *m_instance; }
  ValueType left(const typename T::Element& x, const ValueType& w) const {
    return m_instance->actLeft(x, w);
  }
  ValueType right(const typename T::Element& x, const ValueType& w) const {
    return m_instance->actRight(x, w);
  }
  ValueType multiply(const Poly& f, const ValueType& w) const {
    return m_instance->valueScalarMult(f, w);
  }
  std::string print(const ValueType& w) const {
    return m_instance->printValue(w);
  }
  std::vector<ValueType> sampleValues() const { return m_samples; }
};

} // namespace courant

#endif
