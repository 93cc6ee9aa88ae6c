#ifndef COURANT_UNIVERSAL_MAPS_HPP
#define COURANT_UNIVERSAL_MAPS_HPP

#include "courant/anchored_module.hpp"
#include "courant/check_report.hpp"
#include "courant/courant_algebra.hpp"
#include "courant/errors.hpp"
#include "courant/free_leibniz.hpp"
#include "courant/instance.hpp"
#include "courant/sampling.hpp"
#include "courant/sym_leibniz.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace courant {

/// The unique bracket-algebra extension of an anchored generator
/// assignment: each generator of the module is sent to a target element
/// with the same anchor, module elements extend coefficient-linearly, and
/// a basis word maps to the right-nested target bracket of its decorated
/// factor images.
///
/// Holds non-owning pointers; the source algebra and the target instance
/// must outlive the morphism.
template <LeibnizInstance Target>
class FreeMorphism {
public:
  using TargetElement = typename Target::Element;

  FreeMorphism(const FreeLeibniz* source, const Target* target,
               std::vector<TargetElement> generatorImages)
      : m_source(source), m_target(target),
        m_images(std::move(generatorImages)) {
    const AnchoredModule& module = m_source->module();
    if (m_images.size() != static_cast<std::size_t>(module.rank()))
      throw DimensionMismatch(
          "generator image count " + std::to_string(m_images.size()) +
          " does not match module rank " + std::to_string(module.rank()));
    if (m_target->nvars() != module.nvars())
      throw AnchorIncompatibility(
          "target coefficient algebra has " +
          std::to_string(m_target->nvars()) + " variables, module has " +
          std::to_string(module.nvars()));
    for (int g = 0; g < module.rank(); ++g) {
      Derivation defect = m_target->anchor(m_images[g]) - module.anchorOf(g);
      if (!defect.isZero())
        throw AnchorIncompatibility(
            "anchor mismatch on generator " + module.generators()[g] +
            ": defect " + toString(defect, module.vars()));
    }
  }

  const FreeLeibniz& source() const { return *m_source; }
  const Target& target() const { return *m_target; }
  const std::vector<TargetElement>& generatorImages() const {
    return m_images;
  }

  /// Coefficient-linear extension to module elements.
  TargetElement applyModule(const ModuleElement& m) const {
    TargetElement out = m_target->zero();
    for (std::size_t g = 0; g < m.size(); ++g) {
      const Poly& c = m.coord(g);
      if (c.isZero()) continue;
      out = out + m_target->scalarMult(c, m_images[g]);
    }
    return out;
  }

  /// Right-nested target bracket of the decorated factor images.
  TargetElement applyWord(const Word& w) const {
    if (w.factors.empty()) throw Error("cannot map an empty word");
    auto factorImage = [&](const WordFactor& factor) {
      return m_target->scalarMult(Poly::monomial(factor.mono, Rat(1)),
                                  m_images[factor.gen]);
    };
    TargetElement acc = factorImage(w.factors.back());
    for (std::size_t k = w.factors.size() - 1; k-- > 0;)
      acc = m_target->bracket(factorImage(w.factors[k]), acc);
    return acc;
  }

  TargetElement apply(const FreeElement& u) const {
    TargetElement out = m_target->zero();
    for (const auto& [w, c] : u.terms()) out = out + applyWord(w).scaled(c);
    return out;
  }

  /// The extension restricts to the generator assignment on decorated
  /// weight-1 inclusions.
  CheckReport checkGeneratorRestriction() const {
    CheckReport report{.id = "generator_restriction"};
    const AnchoredModule& module = m_source->module();
    for (int g = 0; g < module.rank(); ++g) {
      for (const Exponents& e :
           monomialsUpToDegree(module.nvars(), m_source->bounds().pmax)) {
        ModuleElement m =
            ModuleElement::generator(module, g, Poly::monomial(e, Rat(1)));
        try {
          TargetElement defect =
              apply(m_source->include(m)) - applyModule(m);
          ++report.samples;
          if (!defect.isZero())
            report.addFailure("(m=" + module.printElement(m) + ")",
                              m_target->printElement(defect));
        } catch (const TruncationOverflow&) {
          ++report.overflows;
        }
      }
    }
    return report;
  }

  /// Bracket compatibility over the basis-word grid, evaluated through both
  /// routes.
  CheckReport checkBracketCompatibility(const SampleConfig& config = {}) const {
    CheckReport report{.id = "bracket_compatibility"};
    std::size_t n = m_source->basisSize();
    detail::forEachTuple(
        {n, n}, config, report, [&](const std::vector<std::size_t>& idx) {
          FreeElement u = m_source->basisElement(idx[0]);
          FreeElement v = m_source->basisElement(idx[1]);
          TargetElement defect = apply(m_source->bracket(u, v)) -
                                 m_target->bracket(apply(u), apply(v));
          if (!defect.isZero())
            report.addFailure("(U=" + m_source->basisLabel(idx[0]) + ", V=" +
                                  m_source->basisLabel(idx[1]) + ")",
                              m_target->printElement(defect));
        });
    return report;
  }

  /// Coefficient-linearity over the basis-word grid.
  CheckReport checkCoefficientCompatibility(
      int coeffDegreeCap, const SampleConfig& config = {}) const {
    CheckReport report{.id = "coefficient_compatibility"};
    std::vector<Poly> coeffs =
        coefficientMonomialsFor(m_source->nvars(), coeffDegreeCap);
    std::size_t n = m_source->basisSize();
    const std::vector<std::string>& names = m_source->vars();
    detail::forEachTuple(
        {n, coeffs.size()}, config, report,
        [&](const std::vector<std::size_t>& idx) {
          FreeElement u = m_source->basisElement(idx[0]);
          const Poly& f = coeffs[idx[1]];
          TargetElement defect = apply(m_source->scalarMult(f, u)) -
                                 m_target->scalarMult(f, apply(u));
          if (!defect.isZero())
            report.addFailure("(U=" + m_source->basisLabel(idx[0]) + ", f=" +
                                  toString(f, names) + ")",
                              m_target->printElement(defect));
        });
    return report;
  }

  /// The target anchor of an image matches the source anchor.
  CheckReport checkAnchorCompatibility(const SampleConfig& config = {}) const {
    CheckReport report{.id = "anchor_compatibility"};
    std::size_t n = m_source->basisSize();
    const std::vector<std::string>& names = m_source->vars();
    detail::forEachTuple(
        {n}, config, report, [&](const std::vector<std::size_t>& idx) {
          FreeElement u = m_source->basisElement(idx[0]);
          Derivation defect =
              m_target->anchor(apply(u)) - m_source->anchor(u);
          if (!defect.isZero())
            report.addFailure("(U=" + m_source->basisLabel(idx[0]) + ")",
                              toString(defect, names));
        });
    return report;
  }

private:
  static std::vector<Poly> coefficientMonomialsFor(int nvars, int cap) {
    std::vector<Poly> out;
    for (const Exponents& e : monomialsUpToDegree(nvars, cap))
      out.push_back(Poly::monomial(e, Rat(1)));
    return out;
  }

  const FreeLeibniz* m_source;
  const Target* m_target;
  std::vector<TargetElement> m_images;
};

/// The descent of a free extension to the balanced quotient, well defined
/// because the extension has been verified to vanish on the whole relation
/// span. Built through `descendToSymmetric`.
template <LeibnizInstance Target>
class SymmetricMorphism {
public:
  using TargetElement = typename Target::Element;

  SymmetricMorphism(const SymLeibnizQuotient* source,
                    FreeMorphism<Target> lift)
      : m_source(source), m_lift(std::move(lift)) {
    for (std::size_t i = 0; i < m_source->basisSize(); ++i)
      m_cobasisImages.push_back(m_lift.apply(m_source->basisElement(i)));
  }

  const SymLeibnizQuotient& source() const { return *m_source; }
  const FreeMorphism<Target>& lift() const { return m_lift; }
  const Target& target() const { return m_lift.target(); }

  /// Image of a class, evaluated on any representative.
  TargetElement apply(const FreeElement& representative) const {
    return m_lift.apply(representative);
  }

  /// Image of the k-th cobasis class (matrix column).
  const TargetElement& cobasisImage(std::size_t k) const {
    return m_cobasisImages.at(k);
  }

  /// Matrix route: expand in quotient coordinates and combine the stored
  /// cobasis images.
  TargetElement applyByMatrix(const FreeElement& representative) const {
    QVec c = m_source->coordinates(representative);
    TargetElement out = target().zero();
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] == 0) continue;
      out = out + m_cobasisImages[k].scaled(c[k]);
    }
    return out;
  }

  /// The two evaluation routes (recursion on a representative, matrix on
  /// coordinates) agree on the cobasis grid under every variable multiple;
  /// this is the well-definedness statement made executable.
  CheckReport checkRouteAgreement(const SampleConfig& config = {}) const {
    CheckReport report{.id = "route_agreement"};
    std::size_t n = m_source->basisSize();
    std::size_t m = static_cast<std::size_t>(m_source->nvars()) + 1;
    detail::forEachTuple(
        {n, m}, config, report, [&](const std::vector<std::size_t>& idx) {
          FreeElement u = m_source->basisElement(idx[0]);
          if (idx[1] > 0)
            u = m_source->scalarMult(
                Poly::variable(m_source->nvars(),
                               static_cast<int>(idx[1] - 1)),
                u);
          TargetElement defect = apply(u) - applyByMatrix(u);
          if (!defect.isZero())
            report.addFailure("(U=" + m_source->printElement(u) + ")",
                              target().printElement(defect));
        });
    return report;
  }

  /// Bracket compatibility on quotient classes via both routes.
  CheckReport checkBracketCompatibility(const SampleConfig& config = {}) const {
    CheckReport report{.id = "bracket_compatibility"};
    std::size_t n = m_source->basisSize();
    detail::forEachTuple(
        {n, n}, config, report, [&](const std::vector<std::size_t>& idx) {
          FreeElement u = m_source->basisElement(idx[0]);
          FreeElement v = m_source->basisElement(idx[1]);
          TargetElement defect =
              apply(m_source->bracket(u, v)) -
              target().bracket(apply(u), apply(v));
          if (!defect.isZero())
            report.addFailure("(U=" + m_source->basisLabel(idx[0]) + ", V=" +
                                  m_source->basisLabel(idx[1]) + ")",
                              target().printElement(defect));
        });
    return report;
  }

  /// Coefficient-linearity on quotient classes.
  CheckReport checkCoefficientCompatibility(
      int coeffDegreeCap, const SampleConfig& config = {}) const {
    CheckReport report{.id = "coefficient_compatibility"};
    std::vector<Poly> coeffs;
    for (const Exponents& e :
         monomialsUpToDegree(m_source->nvars(), coeffDegreeCap))
      coeffs.push_back(Poly::monomial(e, Rat(1)));
    std::size_t n = m_source->basisSize();
    const std::vector<std::string>& names = m_source->vars();
    detail::forEachTuple(
        {n, coeffs.size()}, config, report,
        [&](const std::vector<std::size_t>& idx) {
          FreeElement u = m_source->basisElement(idx[0]);
          const Poly& f = coeffs[idx[1]];
          TargetElement defect = apply(m_source->scalarMult(f, u)) -
                                 target().scalarMult(f, apply(u));
          if (!defect.isZero())
            report.addFailure("(U=" + m_source->basisLabel(idx[0]) + ", f=" +
                                  toString(f, names) + ")",
                              target().printElement(defect));
        });
    return report;
  }

  /// The descended map restricts to the generator assignment.
  CheckReport checkGeneratorRestriction() const {
    CheckReport report{.id = "generator_restriction"};
    const AnchoredModule& module = m_source->module();
    for (int g = 0; g < module.rank(); ++g) {
      for (const Exponents& e :
           monomialsUpToDegree(module.nvars(), m_source->bounds().pmax)) {
        ModuleElement m =
            ModuleElement::generator(module, g, Poly::monomial(e, Rat(1)));
        try {
          TargetElement defect =
              apply(m_source->include(m)) - m_lift.applyModule(m);
          ++report.samples;
          if (!defect.isZero())
            report.addFailure("(m=" + module.printElement(m) + ")",
                              target().printElement(defect));
        } catch (const TruncationOverflow&) {
          ++report.overflows;
        }
      }
    }
    return report;
  }

private:
  const SymLeibnizQuotient* m_source;
  FreeMorphism<Target> m_lift;
  std::vector<TargetElement> m_cobasisImages;
};

/// Verifies that a free extension annihilates the full relation span of the
/// balanced quotient and wraps it as a map on classes. Throws
/// NonVanishingOnIdeal naming a generating witness (or the offending span
/// row) when the target is not balanced within bounds.
template <LeibnizInstance Target>
SymmetricMorphism<Target> descendToSymmetric(const SymLeibnizQuotient& source,
                                             FreeMorphism<Target> lift) {
  const Target& target = lift.target();
  for (const RelationGenerator& generator : source.relationGenerators()) {
    typename Target::Element image = lift.apply(generator.element);
    if (!image.isZero())
      throw NonVanishingOnIdeal(
          "free extension does not vanish on a relation generator",
          generator.witness + " -> " + target.printElement(image));
  }
  const Subspace& relations = source.quotientSpace().relations();
  const FreeLeibniz& free = source.freeAlgebra();
  for (std::size_t r = 0; r < relations.rows().size(); ++r) {
    FreeElement element = free.fromCoordinates(relations.rows()[r]);
    typename Target::Element image = lift.apply(element);
    if (!image.isZero())
      throw NonVanishingOnIdeal(
          "free extension does not vanish on the relation span",
          "row " + std::to_string(r) + ": " + free.printElement(element) +
              " -> " + target.printElement(image));
  }
  return SymmetricMorphism<Target>(&source, std::move(lift));
}

/// The induced map on the value module of the universal pairing: a pair
/// class maps to the target pairing of the slot images. Built through
/// `descendToPaired`, which verifies vanishing on the relation span of the
/// value quotient.
template <PairedInstance Target>
class PairedMorphism {
public:
  using SourceCourant = AssociatedCourant<SymLeibnizQuotient>;
  using TargetValue = typename Target::Value;

  PairedMorphism(const SourceCourant* source,
                 const SymmetricMorphism<Target>* phi1)
      : m_source(source), m_phi1(phi1), m_target(&phi1->target()) {
    const SymLeibnizQuotient& base = m_source->base();
    for (std::size_t i = 0; i < base.basisSize(); ++i)
      m_baseImages.push_back(m_phi1->cobasisImage(i));
    const SymSquare<SymLeibnizQuotient>& square = m_source->square();
    for (std::size_t p = 0; p < square.pairCount(); ++p) {
      const auto& key = square.pairAt(p);
      m_pairImages.push_back(
          m_target->pairing(m_baseImages[key.first], m_baseImages[key.second]));
    }
  }

  const SourceCourant& source() const { return *m_source; }
  const Target& target() const { return *m_target; }

  /// Image of a value-class representative (linear over the pair
  /// coordinates).
  TargetValue apply(const QVec& value) const {
    TargetValue out = m_target->valueZero();
    for (std::size_t p = 0; p < value.size(); ++p) {
      if (value[p] == 0) continue;
      out = out + m_pairImages[p].scaled(value[p]);
    }
    return out;
  }

  /// The pairing square commutes: the image of a source pairing is the
  /// target pairing of the images.
  CheckReport checkPairingCompatibility(const SampleConfig& config = {}) const {
    CheckReport report{.id = "pairing_compatibility"};
    const SymLeibnizQuotient& base = m_source->base();
    std::size_t n = base.basisSize();
    detail::forEachTuple(
        {n, n}, config, report, [&](const std::vector<std::size_t>& idx) {
          FreeElement u = base.basisElement(idx[0]);
          FreeElement v = base.basisElement(idx[1]);
          TargetValue defect =
              apply(m_source->pairing(u, v)) -
              m_target->pairing(m_baseImages[idx[0]], m_baseImages[idx[1]]);
          if (!defect.isZero())
            report.addFailure("(U=" + base.basisLabel(idx[0]) + ", V=" +
                                  base.basisLabel(idx[1]) + ")",
                              m_target->printValue(defect));
        });
    return report;
  }

  /// The left-action square commutes.
  CheckReport checkLeftActionCompatibility(
      const SampleConfig& config = {}) const {
    return checkActionCompatibility(true, config);
  }

  /// The right-action square commutes.
  CheckReport checkRightActionCompatibility(
      const SampleConfig& config = {}) const {
    return checkActionCompatibility(false, config);
  }

  /// The right action evaluated on a pure pair maps to minus the target
  /// pairing of the symmetrized slot images against the acting element.
  CheckReport checkRightActionDiagram(const SampleConfig& config = {}) const {
    CheckReport report{.id = "right_action_diagram"};
    const SymLeibnizQuotient& base = m_source->base();
    std::size_t n = base.basisSize();
    detail::forEachTuple(
        {n, n, n}, config, report, [&](const std::vector<std::size_t>& idx) {
          FreeElement mu = base.basisElement(idx[0]);
          FreeElement nu = base.basisElement(idx[1]);
          FreeElement tau = base.basisElement(idx[2]);
          TargetValue lhs =
              apply(m_source->actRight(mu, m_source->pairing(nu, tau)));
          TargetValue rhs = -m_target->pairing(
              symmetrizedProduct(*m_target, m_baseImages[idx[1]],
                                 m_baseImages[idx[2]]),
              m_baseImages[idx[0]]);
          TargetValue defect = lhs - rhs;
          if (!defect.isZero())
            report.addFailure("(M=" + base.basisLabel(idx[0]) + ", N=" +
                                  base.basisLabel(idx[1]) + ", T=" +
                                  base.basisLabel(idx[2]) + ")",
                              m_target->printValue(defect));
        });
    return report;
  }

private:
  CheckReport checkActionCompatibility(bool left,
                                       const SampleConfig& config) const {
    CheckReport report{
        .id = left ? "left_action_compatibility"
                   : "right_action_compatibility"};
    const SymLeibnizQuotient& base = m_source->base();
    std::size_t n = base.basisSize();
    std::size_t v = m_source->valueDim();
    detail::forEachTuple(
        {n, v}, config, report, [&](const std::vector<std::size_t>& idx) {
          FreeElement x = base.basisElement(idx[0]);
          QVec w = m_source->valueCobasisVector(idx[1]);
          QVec acted = left ? m_source->actLeft(x, w)
                            : m_source->actRight(x, w);
          TargetValue lhs = apply(acted);
          TargetValue rhs =
              left ? m_target->actLeft(m_baseImages[idx[0]], apply(w))
                   : m_target->actRight(m_baseImages[idx[0]], apply(w));
          TargetValue defect = lhs - rhs;
          if (!defect.isZero())
            report.addFailure("(X=" + base.basisLabel(idx[0]) + ", w=" +
                                  m_source->printValue(w) + ")",
                              m_target->printValue(defect));
        });
    return report;
  }

  const SourceCourant* m_source;
  const SymmetricMorphism<Target>* m_phi1;
  const Target* m_target;
  std::vector<typename Target::Element> m_baseImages;
  std::vector<TargetValue> m_pairImages;
};

/// Verifies that the pairing of slot images annihilates the relation span
/// of the value quotient and wraps the induced map. Throws
/// NonVanishingOnInv naming a generating witness (or the offending row)
/// when the target pairing is not invariant within bounds.
template <PairedInstance Target>
PairedMorphism<Target> descendToPaired(
    const AssociatedCourant<SymLeibnizQuotient>& source,
    const SymmetricMorphism<Target>& phi1) {
  PairedMorphism<Target> morphism(&source, &phi1);
  const Target& target = phi1.target();
  for (const InvRecord& record : source.invGenerators()) {
    typename Target::Value image = morphism.apply(record.element);
    if (!image.isZero())
      throw NonVanishingOnInv(
          "induced value map does not vanish on an invariance generator",
          record.witness + " -> " + target.printValue(image));
  }
  const Subspace& relations = source.valueQuotient().relations();
  for (std::size_t r = 0; r < relations.rows().size(); ++r) {
    typename Target::Value image = morphism.apply(relations.rows()[r]);
    if (!image.isZero())
      throw NonVanishingOnInv(
          "induced value map does not vanish on the value relation span",
          "row " + std::to_string(r) + ": " +
              source.printValue(relations.rows()[r]) + " -> " +
              target.printValue(image));
  }
  return morphism;
}

} // namespace courant

#endif
