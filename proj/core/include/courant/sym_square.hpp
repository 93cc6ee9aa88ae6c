#ifndef COURANT_SYM_SQUARE_HPP
#define COURANT_SYM_SQUARE_HPP

#include "courant/check_report.hpp"
#include "courant/errors.hpp"
#include "courant/instance.hpp"
#include "courant/linquot.hpp"
#include "courant/poly.hpp"
#include "courant/qvec.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace courant {

/// The symmetric square of a finite basis piece over the coefficient
/// algebra.
///
/// Ambient coordinates are indexed by unordered pairs (i ≤ j) of base
/// basis indices, so the swap symmetry holds by construction; moving a
/// coefficient from one slot to the other is imposed as a saturated
/// relation family, (f·b_i) ⊙ b_j − b_i ⊙ (f·b_j). Elements are plain
/// coordinate vectors over the pair basis, and `project` reduces them to
/// canonical representatives modulo the coefficient-balance span.
///
/// The coefficient action and both actions of the base algebra are
/// computed pairwise through `pureTensor`; results live in the ambient
/// space and are exact whenever every intermediate product stays inside
/// the piece, otherwise the operation throws TruncationOverflow.
template <FiniteBasisInstance B>
class SymSquare {
public:
  using Base = B;
  using BaseElement = typename B::Element;
  using Element = QVec;

  /// One unordered pair of base basis indices with its combined weight.
  struct PairKey {
    std::size_t first = 0;
    std::size_t second = 0;
    int combinedWeight = 0;
  };

  struct Options {
    /// Pairs with combined weight above this are outside the piece;
    /// 0 keeps every pair of base basis elements.
    int maxCombinedWeight = 0;
    SaturationConfig saturation;
  };

  explicit SymSquare(std::shared_ptr<const B> base)
      : SymSquare(std::move(base), Options{}) {}

  SymSquare(std::shared_ptr<const B> base, Options options)
      : m_base(std::move(base)), m_options(options),
        m_quotient(Subspace(0)) {
    if (!m_base) throw Error("symmetric square requires a base instance");
    enumeratePairs();
    buildBalance();
  }

  const B& base() const { return *m_base; }
  std::shared_ptr<const B> baseHandle() const { return m_base; }
  int maxCombinedWeight() const { return m_options.maxCombinedWeight; }

  std::size_t pairCount() const { return m_pairs.size(); }
  const PairKey& pairAt(std::size_t index) const { return m_pairs.at(index); }

  /// Label of one pair coordinate, built from the base labels.
  std::string pairLabel(std::size_t index) const {
    const PairKey& p = m_pairs.at(index);
    return "(" + m_base->basisLabel(p.first) + ") (.) (" +
           m_base->basisLabel(p.second) + ")";
  }

  Element zero() const { return QVec(m_pairs.size()); }

  /// u ⊙ v as an ambient vector (bilinear, folded onto i ≤ j pairs).
  Element pureTensor(const BaseElement& u, const BaseElement& v) const {
    QVec cu = m_base->coordinates(u);
    QVec cv = m_base->coordinates(v);
    QVec out(m_pairs.size());
    for (std::size_t i = 0; i < cu.size(); ++i) {
      if (cu[i] == 0) continue;
      for (std::size_t j = 0; j < cv.size(); ++j) {
        if (cv[j] == 0) continue;
        Rat c = cu[i] * cv[j];
        out[pairIndex(std::min(i, j), std::max(i, j))] += c;
      }
    }
    return out;
  }

  /// Coefficient action, applied in the first slot of every pair.
  Element scalarMult(const Poly& f, const Element& w) const {
    requireAmbient(w);
    QVec out(m_pairs.size());
    for (std::size_t p = 0; p < m_pairs.size(); ++p) {
      if (w[p] == 0) continue;
      const PairKey& key = m_pairs[p];
      BaseElement fb = m_base->scalarMult(f, m_base->basisElement(key.first));
      out.addScaled(pureTensor(fb, m_base->basisElement(key.second)), w[p]);
    }
    return out;
  }

  /// Left action of the base algebra: x acts as a bracket derivation of
  /// both slots.
  Element muLeft(const BaseElement& x, const Element& w) const {
    requireAmbient(w);
    QVec out(m_pairs.size());
    for (std::size_t p = 0; p < m_pairs.size(); ++p) {
      if (w[p] == 0) continue;
      const PairKey& key = m_pairs[p];
      BaseElement bi = m_base->basisElement(key.first);
      BaseElement bj = m_base->basisElement(key.second);
      out.addScaled(pureTensor(m_base->bracket(x, bi), bj), w[p]);
      out.addScaled(pureTensor(bi, m_base->bracket(x, bj)), w[p]);
    }
    return out;
  }

  /// Right action of the base algebra: minus the pairing of the
  /// symmetrized product of the two slots with x.
  Element muRight(const BaseElement& x, const Element& w) const {
    requireAmbient(w);
    QVec out(m_pairs.size());
    for (std::size_t p = 0; p < m_pairs.size(); ++p) {
      if (w[p] == 0) continue;
      const PairKey& key = m_pairs[p];
      BaseElement s = symmetrizedProduct(*m_base, m_base->basisElement(key.first),
                                         m_base->basisElement(key.second));
      out.addScaled(pureTensor(s, x), -w[p]);
    }
    return out;
  }

  /// The invariance defect [X,Y] ⊙ Z + Y ⊙ [X,Z] − X ⊙ ([Y,Z]+[Z,Y]); its
  /// coefficient-span is quotiented away to make the pairing of the
  /// associated value module invariant.
  Element invGenerator(const BaseElement& x, const BaseElement& y,
                       const BaseElement& z) const {
    Element out = pureTensor(m_base->bracket(x, y), z);
    out.addScaled(pureTensor(y, m_base->bracket(x, z)), Rat(1));
    out.addScaled(pureTensor(x, symmetrizedProduct(*m_base, y, z)), Rat(-1));
    return out;
  }

  const QuotientSpace& balancedQuotient() const { return m_quotient; }
  const SaturationOutcome& saturation() const { return m_saturation; }

  /// Canonical representative modulo the coefficient-balance span.
  QVec project(const Element& w) const {
    requireAmbient(w);
    return m_quotient.project(w);
  }

  bool sameClass(const Element& u, const Element& v) const {
    return project(u - v).isZero();
  }

  std::string printElement(const Element& w) const {
    requireAmbient(w);
    std::ostringstream out;
    bool first = true;
    for (std::size_t p = 0; p < m_pairs.size(); ++p) {
      if (w[p] == 0) continue;
      Rat c = w[p];
      if (first) {
        if (c < 0) out << "-";
      } else {
        out << (c < 0 ? " - " : " + ");
      }
      Rat a = abs(c);
      if (a != 1) out << a.get_str() << " ";
      out << pairLabel(p);
      first = false;
    }
    if (first) return "0";
    return out.str();
  }

  /// Dual route for the coefficient action: applying f in the second slot
  /// must agree with the first slot route after projection.
  CheckReport checkScalarSlotAgreement() const {
    CheckReport report{.id = "coefficient_slot_agreement"};
    std::vector<Exponents> monos = monomialsUpToDegree(m_base->nvars(), 1);
    for (const Exponents& e : monos) {
      if (degreeOf(e) == 0) continue;
      Poly f = Poly::monomial(e, Rat(1));
      for (std::size_t p = 0; p < m_pairs.size(); ++p) {
        const PairKey& key = m_pairs[p];
        try {
          BaseElement bi = m_base->basisElement(key.first);
          BaseElement bj = m_base->basisElement(key.second);
          QVec lhs = project(pureTensor(m_base->scalarMult(f, bi), bj));
          QVec rhs = project(pureTensor(bi, m_base->scalarMult(f, bj)));
          ++report.samples;
          if (!(lhs - rhs).isZero())
            report.addFailure(pairLabel(p), printElement(lhs - rhs));
        } catch (const TruncationOverflow&) {
          ++report.overflows;
        }
      }
    }
    return report;
  }

private:
  void enumeratePairs() {
    std::size_t n = m_base->basisSize();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        int cw = m_base->basisWeight(i) + m_base->basisWeight(j);
        if (m_options.maxCombinedWeight > 0 &&
            cw > m_options.maxCombinedWeight)
          continue;
        m_pairs.push_back({i, j, cw});
      }
    }
    std::sort(m_pairs.begin(), m_pairs.end(),
              [](const PairKey& a, const PairKey& b) {
                if (a.combinedWeight != b.combinedWeight)
                  return a.combinedWeight > b.combinedWeight;
                if (a.first != b.first) return a.first < b.first;
                return a.second < b.second;
              });
    for (std::size_t p = 0; p < m_pairs.size(); ++p)
      m_index.emplace(std::make_pair(m_pairs[p].first, m_pairs[p].second), p);
  }

  std::size_t pairIndex(std::size_t i, std::size_t j) const {
    auto it = m_index.find(std::make_pair(i, j));
    if (it == m_index.end())
      throw TruncationOverflow(TruncationOverflow::Kind::Weight,
                               m_base->basisWeight(i) + m_base->basisWeight(j),
                               m_options.maxCombinedWeight);
    return it->second;
  }

  void buildBalance() {
    Subspace span(m_pairs.size());
    auto producer = [&](int delta, std::size_t& overflow) {
      std::vector<QVec> out;
      if (delta == 0) return out;
      for (const Exponents& e : monomialsOfDegree(m_base->nvars(), delta)) {
        Poly f = Poly::monomial(e, Rat(1));
        for (const PairKey& key : m_pairs) {
          try {
            BaseElement bi = m_base->basisElement(key.first);
            BaseElement bj = m_base->basisElement(key.second);
            QVec lhs = pureTensor(m_base->scalarMult(f, bi), bj);
            QVec rhs = pureTensor(bi, m_base->scalarMult(f, bj));
            QVec defect = lhs - rhs;
            if (!defect.isZero()) out.push_back(std::move(defect));
          } catch (const TruncationOverflow&) {
            ++overflow;
          }
        }
      }
      return out;
    };
    m_saturation = saturate(span, producer, m_options.saturation);
    m_quotient = QuotientSpace(std::move(span));
  }

  void requireAmbient(const QVec& w) const {
    if (w.size() != m_pairs.size())
      throw DimensionMismatch("pair vector length " +
                              std::to_string(w.size()) + " does not match " +
                              std::to_string(m_pairs.size()) + " pairs");
  }

  std::shared_ptr<const B> m_base;
  Options m_options;
  std::vector<PairKey> m_pairs;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> m_index;
  QuotientSpace m_quotient;
  SaturationOutcome m_saturation;
};

} // namespace courant

#endif
