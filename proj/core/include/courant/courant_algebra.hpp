#ifndef COURANT_COURANT_ALGEBRA_HPP
#define COURANT_COURANT_ALGEBRA_HPP

#include "courant/check_report.hpp"
#include "courant/errors.hpp"
#include "courant/instance.hpp"
#include "courant/linquot.hpp"
#include "courant/poly.hpp"
#include "courant/qvec.hpp"
#include "courant/sampling.hpp"
#include "courant/sym_square.hpp"

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace courant {

/// One invariance defect inserted into the value-module quotient, kept with
/// a description of the triple that produced it.
struct InvRecord {
  QVec element;
  std::string witness;
};

/// Construction options for the value module of the associated pairing.
struct CourantOptions {
  /// Combined-weight cut for the pair piece; 0 keeps all pairs.
  int maxCombinedWeight = 0;
  SaturationConfig saturation;
  /// Verify the coefficient-balance identities of the base before
  /// building; violations throw SymmetryViolation.
  bool verifySymmetry = true;
};

/// A base algebra together with the universal symmetric pairing into the
/// quotient of its symmetric square by the coefficient-span of the
/// invariance defects.
///
/// The element operations delegate to the base; the value module is the
/// ambient pair space modulo (coefficient balance + invariance span), with
/// canonical reduced representatives. pairing(u, v) is the class of u ⊙ v,
/// the left action differentiates both slots by the bracket, and the right
/// action pairs the symmetrized product against the acting element.
template <FiniteBasisInstance B>
class AssociatedCourant {
public:
  using Base = B;
  using Element = typename B::Element;
  using Value = QVec;

  AssociatedCourant(SymSquare<B> square, SaturationConfig saturation)
      : m_square(std::move(square)), m_quotient(Subspace(0)) {
    buildRelations(saturation);
  }

  const B& base() const { return m_square.base(); }
  const SymSquare<B>& square() const { return m_square; }

  // --- bracket algebra surface (delegated) ---
  Element zero() const { return base().zero(); }
  Element bracket(const Element& u, const Element& v) const {
    return base().bracket(u, v);
  }
  Element scalarMult(const Poly& f, const Element& u) const {
    return base().scalarMult(f, u);
  }
  Derivation anchor(const Element& u) const { return base().anchor(u); }
  std::string printElement(const Element& u) const {
    return base().printElement(u);
  }
  int nvars() const { return base().nvars(); }
  std::vector<std::string> vars() const { return base().vars(); }

  // --- value module surface ---
  Value valueZero() const { return m_square.zero(); }

  /// Class of u ⊙ v, as a canonical representative.
  Value pairing(const Element& u, const Element& v) const {
    return project(m_square.pureTensor(u, v));
  }
  Value actLeft(const Element& x, const Value& w) const {
    return project(m_square.muLeft(x, w));
  }
  Value actRight(const Element& x, const Value& w) const {
    return project(m_square.muRight(x, w));
  }
  Value valueScalarMult(const Poly& f, const Value& w) const {
    return project(m_square.scalarMult(f, w));
  }
  std::string printValue(const Value& w) const {
    return m_square.printElement(w);
  }

  /// Canonical representative modulo balance + invariance.
  Value project(const Value& w) const { return m_quotient.project(w); }

  std::size_t valueDim() const { return m_quotient.dim(); }

  /// Canonical representative of the k-th value cobasis class.
  Value valueCobasisVector(std::size_t k) const {
    return QVec::unit(m_quotient.ambientDim(), m_quotient.cobasis().at(k));
  }

  /// Exact coordinates of a value over the cobasis classes.
  QVec valueCoordinates(const Value& w) const {
    QVec reduced = project(w);
    QVec out(m_quotient.dim());
    for (std::size_t k = 0; k < m_quotient.dim(); ++k)
      out[k] = reduced[m_quotient.cobasis()[k]];
    return out;
  }

  const QuotientSpace& valueQuotient() const { return m_quotient; }
  const SaturationOutcome& saturation() const { return m_saturation; }
  const std::vector<InvRecord>& invGenerators() const { return m_generators; }

private:
  void buildRelations(const SaturationConfig& saturation) {
    const B& b = base();
    std::size_t n = b.basisSize();
    int wmaxPair = m_square.maxCombinedWeight();
    Subspace span = m_square.balancedQuotient().relations();
    auto producer = [&](int delta, std::size_t& overflow) {
      std::vector<QVec> out;
      if (delta == 0) {
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
              if (wmaxPair > 0 && b.basisWeight(i) + b.basisWeight(j) +
                                          b.basisWeight(k) >
                                      wmaxPair) {
                ++overflow;
                continue;
              }
              try {
                QVec defect = m_square.invGenerator(
                    b.basisElement(i), b.basisElement(j), b.basisElement(k));
                std::string witness = "inv(X=" + b.basisLabel(i) +
                                      ", Y=" + b.basisLabel(j) +
                                      ", Z=" + b.basisLabel(k) + ")";
                m_generators.push_back({defect, witness});
                if (!defect.isZero()) out.push_back(std::move(defect));
              } catch (const TruncationOverflow&) {
                ++overflow;
              }
            }
          }
        }
        return out;
      }
      for (const Exponents& e : monomialsOfDegree(b.nvars(), delta)) {
        Poly f = Poly::monomial(e, Rat(1));
        for (const InvRecord& record : m_generators) {
          if (record.element.isZero()) continue;
          try {
            out.push_back(m_square.scalarMult(f, record.element));
          } catch (const TruncationOverflow&) {
            ++overflow;
          }
        }
      }
      if (b.nvars() > 0) {
        for (const QVec& row : span.rows()) {
          for (int v = 0; v < b.nvars(); ++v) {
            try {
              out.push_back(
                  m_square.scalarMult(Poly::variable(b.nvars(), v), row));
            } catch (const TruncationOverflow&) {
              ++overflow;
            }
          }
        }
      }
      return out;
    };
    m_saturation = saturate(span, producer, saturation);
    m_quotient = QuotientSpace(std::move(span));
  }

  SymSquare<B> m_square;
  QuotientSpace m_quotient;
  SaturationOutcome m_saturation;
  std::vector<InvRecord> m_generators;
};

/// Verifies the coefficient-balance identities of the symmetrized product
/// on the base (first-degree coefficients over the basis grid) and throws
/// SymmetryViolation on the first nonzero defect.
template <FiniteBasisInstance B>
void requireSymmetricBase(const B& b) {
  std::size_t n = b.basisSize();
  for (int v = 0; v < b.nvars(); ++v) {
    Poly f = Poly::variable(b.nvars(), v);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        try {
          typename B::Element defect =
              symmetrizedProduct(b, b.basisElement(i),
                                 b.scalarMult(f, b.basisElement(j))) -
              symmetrizedProduct(b, b.scalarMult(f, b.basisElement(i)),
                                 b.basisElement(j));
          if (!defect.isZero())
            throw SymmetryViolation(
                "coefficient balance fails on (X=" + b.basisLabel(i) +
                ", Y=" + b.basisLabel(j) + ") with defect " +
                b.printElement(defect));
        } catch (const TruncationOverflow&) {
          continue;
        }
      }
    }
  }
}

/// Builds the value module of the universal pairing over a base instance.
template <FiniteBasisInstance B>
AssociatedCourant<B> buildAssociatedCourant(std::shared_ptr<const B> base,
                                            CourantOptions options = {}) {
  if (options.verifySymmetry) requireSymmetricBase(*base);
  SymSquare<B> square(std::move(base),
                      typename SymSquare<B>::Options{
                          options.maxCombinedWeight, options.saturation});
  return AssociatedCourant<B>(std::move(square), options.saturation);
}

/// The right adjoint action kills symmetrized products:
/// [U∘V, X] = 0 in the base algebra.
template <FiniteBasisInstance B>
CheckReport checkRightAdjointKillsSymmetrized(const B& b,
                                              const SampleConfig& config = {}) {
  CheckReport report{.id = "right_adjoint_kills_symmetrized"};
  std::size_t n = b.basisSize();
  detail::forEachTuple(
      {n, n, n}, config, report, [&](const std::vector<std::size_t>& idx) {
        typename B::Element u = b.basisElement(idx[0]);
        typename B::Element v = b.basisElement(idx[1]);
        typename B::Element x = b.basisElement(idx[2]);
        typename B::Element defect = b.bracket(symmetrizedProduct(b, u, v), x);
        if (!defect.isZero())
          report.addFailure("(U=" + b.basisLabel(idx[0]) +
                                ", V=" + b.basisLabel(idx[1]) +
                                ", X=" + b.basisLabel(idx[2]) + ")",
                            b.printElement(defect));
      });
  return report;
}

/// Left-action covariance of the invariance defect, exact in the ambient
/// pair space: muLeft(W) I(X,Y,Z) = I([W,X],Y,Z) + I(X,[W,Y],Z) +
/// I(X,Y,[W,Z]).
template <FiniteBasisInstance B>
CheckReport checkInvCovariance(const SymSquare<B>& square,
                               const SampleConfig& config = {}) {
  CheckReport report{.id = "left_action_covariance"};
  const B& b = square.base();
  std::size_t n = b.basisSize();
  detail::forEachTuple(
      {n, n, n, n}, config, report, [&](const std::vector<std::size_t>& idx) {
        typename B::Element w = b.basisElement(idx[0]);
        typename B::Element x = b.basisElement(idx[1]);
        typename B::Element y = b.basisElement(idx[2]);
        typename B::Element z = b.basisElement(idx[3]);
        QVec lhs = square.muLeft(w, square.invGenerator(x, y, z));
        QVec rhs = square.invGenerator(b.bracket(w, x), y, z) +
                   square.invGenerator(x, b.bracket(w, y), z) +
                   square.invGenerator(x, y, b.bracket(w, z));
        QVec defect = lhs - rhs;
        if (!defect.isZero())
          report.addFailure("(W=" + b.basisLabel(idx[0]) +
                                ", X=" + b.basisLabel(idx[1]) +
                                ", Y=" + b.basisLabel(idx[2]) +
                                ", Z=" + b.basisLabel(idx[3]) + ")",
                            square.printElement(defect));
      });
  return report;
}

/// The right action annihilates every coefficient multiple of an
/// invariance defect, exact in the ambient pair space:
/// muRight(W)(f · I(X,Y,Z)) = 0.
template <FiniteBasisInstance B>
CheckReport checkRightKillsInv(const SymSquare<B>& square, int coeffDegreeCap,
                               const SampleConfig& config = {}) {
  CheckReport report{.id = "right_action_kills_invariance"};
  const B& b = square.base();
  std::size_t n = b.basisSize();
  std::vector<Poly> coeffs;
  for (const Exponents& e : monomialsUpToDegree(b.nvars(), coeffDegreeCap))
    coeffs.push_back(Poly::monomial(e, Rat(1)));
  std::vector<std::string> names = b.vars();
  detail::forEachTuple(
      {n, coeffs.size(), n, n, n}, config, report,
      [&](const std::vector<std::size_t>& idx) {
        typename B::Element w = b.basisElement(idx[0]);
        const Poly& f = coeffs[idx[1]];
        QVec inv = square.invGenerator(b.basisElement(idx[2]),
                                       b.basisElement(idx[3]),
                                       b.basisElement(idx[4]));
        QVec defect = square.muRight(w, square.scalarMult(f, inv));
        if (!defect.isZero())
          report.addFailure("(W=" + b.basisLabel(idx[0]) + ", f=" +
                                toString(f, names) + ", X=" +
                                b.basisLabel(idx[2]) + ", Y=" +
                                b.basisLabel(idx[3]) + ", Z=" +
                                b.basisLabel(idx[4]) + ")",
                            square.printElement(defect));
      });
  return report;
}

} // namespace courant

#endif
