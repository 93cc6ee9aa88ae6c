#ifndef COURANT_AXIOM_CHECKS_HPP
#define COURANT_AXIOM_CHECKS_HPP

#include "courant/check_report.hpp"
#include "courant/derivation.hpp"
#include "courant/instance.hpp"
#include "courant/poly.hpp"
#include "courant/sampling.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace courant {

/// Unit monomial coefficients up to the given degree, in graded order.
inline std::vector<Poly> coefficientMonomials(int nvars, int degreeCap) {
  std::vector<Poly> out;
  for (const Exponents& e : monomialsUpToDegree(nvars, degreeCap))
    out.push_back(Poly::monomial(e, Rat(1)));
  return out;
}

namespace detail {

template <class T>
std::vector<std::string> instanceVars(const T& t) {
  const auto& names = t.vars();
  return std::vector<std::string>(names.begin(), names.end());
}

} // namespace detail

/// Bracket-algebra identities: the left Jacobi identity, the coefficient
/// rule of the bracket, anchor multiplicativity on brackets, and
/// coefficient-linearity of the anchor.
template <LeibnizInstance T>
std::vector<CheckReport> checkLeibnizSuite(
    const T& t, const std::vector<typename T::Element>& samples,
    const std::vector<Poly>& coeffs, const SampleConfig& config = {}) {
  std::vector<std::string> names = detail::instanceVars(t);
  std::size_t n = samples.size();
  std::size_t m = coeffs.size();
  std::vector<CheckReport> reports;

  {
    CheckReport report{.id = "jacobi"};
    detail::forEachTuple(
        {n, n, n}, config, report, [&](const std::vector<std::size_t>& idx) {
          const auto& x = samples[idx[0]];
          const auto& y = samples[idx[1]];
          const auto& z = samples[idx[2]];
          auto defect = t.bracket(x, t.bracket(y, z)) -
                        t.bracket(t.bracket(x, y), z) -
                        t.bracket(y, t.bracket(x, z));
          if (!defect.isZero())
            report.addFailure("(X=" + t.printElement(x) + ", Y=" +
                                  t.printElement(y) + ", Z=" +
                                  t.printElement(z) + ")",
                              t.printElement(defect));
        });
    reports.push_back(std::move(report));
  }
  {
    CheckReport report{.id = "leibniz_rule"};
    detail::forEachTuple(
        {n, n, m}, config, report, [&](const std::vector<std::size_t>& idx) {
          const auto& x = samples[idx[0]];
          const auto& y = samples[idx[1]];
          const Poly& f = coeffs[idx[2]];
          auto defect = t.bracket(x, t.scalarMult(f, y)) -
                        t.scalarMult(f, t.bracket(x, y)) -
                        t.scalarMult(t.anchor(x).apply(f), y);
          if (!defect.isZero())
            report.addFailure("(X=" + t.printElement(x) + ", Y=" +
                                  t.printElement(y) + ", f=" +
                                  toString(f, names) + ")",
                              t.printElement(defect));
        });
    reports.push_back(std::move(report));
  }
  {
    CheckReport report{.id = "anchor_morphism"};
    detail::forEachTuple(
        {n, n}, config, report, [&](const std::vector<std::size_t>& idx) {
          const auto& x = samples[idx[0]];
          const auto& y = samples[idx[1]];
          Derivation defect = t.anchor(t.bracket(x, y)) -
                              commutator(t.anchor(x), t.anchor(y));
          if (!defect.isZero())
            report.addFailure("(X=" + t.printElement(x) + ", Y=" +
                                  t.printElement(y) + ")",
                              toString(defect, names));
        });
    reports.push_back(std::move(report));
  }
  {
    CheckReport report{.id = "anchor_coefficient_linear"};
    detail::forEachTuple(
        {n, m}, config, report, [&](const std::vector<std::size_t>& idx) {
          const auto& x = samples[idx[0]];
          const Poly& f = coeffs[idx[1]];
          Derivation defect =
              t.anchor(t.scalarMult(f, x)) - t.anchor(x).scaled(f);
          if (!defect.isZero())
            report.addFailure("(X=" + t.printElement(x) + ", f=" +
                                  toString(f, names) + ")",
                              toString(defect, names));
        });
    reports.push_back(std::move(report));
  }
  return reports;
}

/// Coefficient-balance identities of the symmetrized product. The two
/// balance forms are evaluated through independent routes, the product
/// rule is checked in both published shapes, and the two shapes are
/// asserted to agree sample-by-sample whenever the balance identity holds.
template <LeibnizInstance T>
std::vector<CheckReport> checkSymmetricSuite(
    const T& t, const std::vector<typename T::Element>& samples,
    const std::vector<Poly>& coeffs, const SampleConfig& config = {}) {
  std::vector<std::string> names = detail::instanceVars(t);
  std::size_t n = samples.size();
  std::size_t m = coeffs.size();
  std::vector<CheckReport> reports;

  CheckReport balance{.id = "symmetrized_balance"};
  detail::forEachTuple(
      {n, n, m}, config, balance, [&](const std::vector<std::size_t>& idx) {
        const auto& x = samples[idx[0]];
        const auto& y = samples[idx[1]];
        const Poly& f = coeffs[idx[2]];
        auto defect = symmetrizedProduct(t, x, t.scalarMult(f, y)) -
                      symmetrizedProduct(t, t.scalarMult(f, x), y);
        if (!defect.isZero())
          balance.addFailure("(X=" + t.printElement(x) + ", Y=" +
                                 t.printElement(y) + ", f=" +
                                 toString(f, names) + ")",
                             t.printElement(defect));
      });
  bool balanceHolds = balance.pass();
  reports.push_back(std::move(balance));

  {
    CheckReport report{.id = "symmetrized_balance_expanded"};
    detail::forEachTuple(
        {n, n, m}, config, report, [&](const std::vector<std::size_t>& idx) {
          const auto& x = samples[idx[0]];
          const auto& y = samples[idx[1]];
          const Poly& f = coeffs[idx[2]];
          auto fx = t.scalarMult(f, x);
          auto fy = t.scalarMult(f, y);
          auto defect = t.bracket(x, fy) + t.bracket(fy, x) -
                        t.bracket(fx, y) - t.bracket(y, fx);
          if (!defect.isZero())
            report.addFailure("(X=" + t.printElement(x) + ", Y=" +
                                  t.printElement(y) + ", f=" +
                                  toString(f, names) + ")",
                              t.printElement(defect));
        });
    reports.push_back(std::move(report));
  }
  {
    CheckReport report{.id = "bracket_symmetrized_rule"};
    detail::forEachTuple(
        {n, n, n, m}, config, report,
        [&](const std::vector<std::size_t>& idx) {
          const auto& x = samples[idx[0]];
          const auto& y = samples[idx[1]];
          const auto& z = samples[idx[2]];
          const Poly& f = coeffs[idx[3]];
          auto defect =
              t.bracket(t.scalarMult(f, x), symmetrizedProduct(t, y, z)) -
              symmetrizedProduct(t, t.bracket(x, y), t.scalarMult(f, z)) -
              symmetrizedProduct(t, t.scalarMult(f, y), t.bracket(x, z));
          if (!defect.isZero())
            report.addFailure("(X=" + t.printElement(x) + ", Y=" +
                                  t.printElement(y) + ", Z=" +
                                  t.printElement(z) + ", f=" +
                                  toString(f, names) + ")",
                              t.printElement(defect));
        });
    reports.push_back(std::move(report));
  }
  {
    CheckReport report{.id = "twisted_bracket_balance"};
    detail::forEachTuple(
        {n, n, n, m}, config, report,
        [&](const std::vector<std::size_t>& idx) {
          const auto& x = samples[idx[0]];
          const auto& y = samples[idx[1]];
          const auto& z = samples[idx[2]];
          const Poly& f = coeffs[idx[3]];
          auto fx = t.scalarMult(f, x);
          auto twistY = t.bracket(fx, y) - t.scalarMult(f, t.bracket(x, y));
          auto twistZ = t.bracket(fx, z) - t.scalarMult(f, t.bracket(x, z));
          auto defect = symmetrizedProduct(t, twistY, z) +
                        symmetrizedProduct(t, y, twistZ);
          if (!defect.isZero())
            report.addFailure("(X=" + t.printElement(x) + ", Y=" +
                                  t.printElement(y) + ", Z=" +
                                  t.printElement(z) + ", f=" +
                                  toString(f, names) + ")",
                              t.printElement(defect));
        });
    reports.push_back(std::move(report));
  }
  {
    CheckReport report{.id = "rule_forms_agree"};
    if (!balanceHolds) {
      report.note = "skipped: the balance identity fails on this instance";
    } else {
      detail::forEachTuple(
          {n, n, n, m}, config, report,
          [&](const std::vector<std::size_t>& idx) {
            const auto& x = samples[idx[0]];
            const auto& y = samples[idx[1]];
            const auto& z = samples[idx[2]];
            const Poly& f = coeffs[idx[3]];
            auto fx = t.scalarMult(f, x);
            auto ruleA =
                t.bracket(fx, symmetrizedProduct(t, y, z)) -
                symmetrizedProduct(t, t.bracket(x, y), t.scalarMult(f, z)) -
                symmetrizedProduct(t, t.scalarMult(f, y), t.bracket(x, z));
            auto twistY = t.bracket(fx, y) - t.scalarMult(f, t.bracket(x, y));
            auto twistZ = t.bracket(fx, z) - t.scalarMult(f, t.bracket(x, z));
            auto ruleB = symmetrizedProduct(t, twistY, z) +
                         symmetrizedProduct(t, y, twistZ);
            auto defect = ruleA - ruleB;
            if (!defect.isZero())
              report.addFailure("(X=" + t.printElement(x) + ", Y=" +
                                    t.printElement(y) + ", Z=" +
                                    t.printElement(z) + ", f=" +
                                    toString(f, names) + ")",
                                t.printElement(defect));
          });
    }
    reports.push_back(std::move(report));
  }
  return reports;
}

/// Loday-type identities for a right-anchor form D(f, X, Y): the general
/// left twist rule, symmetry of D in its element arguments, and the
/// invariance of D under the bracket.
template <LeibnizInstance T, class RightAnchor>
std::vector<CheckReport> checkLodaySuite(
    const T& t, const std::vector<typename T::Element>& samples,
    const std::vector<Poly>& coeffs, const RightAnchor& rightAnchor,
    const SampleConfig& config = {}) {
  std::vector<std::string> names = detail::instanceVars(t);
  std::size_t n = samples.size();
  std::size_t m = coeffs.size();
  std::vector<CheckReport> reports;

  {
    CheckReport report{.id = "left_twist_general"};
    detail::forEachTuple(
        {n, n, m}, config, report, [&](const std::vector<std::size_t>& idx) {
          const auto& x = samples[idx[0]];
          const auto& y = samples[idx[1]];
          const Poly& f = coeffs[idx[2]];
          auto defect = t.bracket(t.scalarMult(f, x), y) -
                        t.scalarMult(f, t.bracket(x, y)) +
                        t.scalarMult(t.anchor(y).apply(f), x) -
                        rightAnchor(f, x, y);
          if (!defect.isZero())
            report.addFailure("(X=" + t.printElement(x) + ", Y=" +
                                  t.printElement(y) + ", f=" +
                                  toString(f, names) + ")",
                              t.printElement(defect));
        });
    reports.push_back(std::move(report));
  }
  {
    CheckReport report{.id = "twist_form_symmetric"};
    detail::forEachTuple(
        {n, n, m}, config, report, [&](const std::vector<std::size_t>& idx) {
          const auto& x = samples[idx[0]];
          const auto& y = samples[idx[1]];
          const Poly& f = coeffs[idx[2]];
          auto defect = rightAnchor(f, x, y) - rightAnchor(f, y, x);
          if (!defect.isZero())
            report.addFailure("(X=" + t.printElement(x) + ", Y=" +
                                  t.printElement(y) + ", f=" +
                                  toString(f, names) + ")",
                              t.printElement(defect));
        });
    reports.push_back(std::move(report));
  }
  {
    CheckReport report{.id = "twist_form_invariance"};
    detail::forEachTuple(
        {n, n, n, m}, config, report,
        [&](const std::vector<std::size_t>& idx) {
          const auto& x = samples[idx[0]];
          const auto& y = samples[idx[1]];
          const auto& z = samples[idx[2]];
          const Poly& f = coeffs[idx[3]];
          auto defect = rightAnchor(f, x, symmetrizedProduct(t, y, z)) -
                        rightAnchor(f, t.bracket(x, y), z) -
                        rightAnchor(f, y, t.bracket(x, z));
          if (!defect.isZero())
            report.addFailure("(X=" + t.printElement(x) + ", Y=" +
                                  t.printElement(y) + ", Z=" +
                                  t.printElement(z) + ", f=" +
                                  toString(f, names) + ")",
                              t.printElement(defect));
        });
    reports.push_back(std::move(report));
  }
  return reports;
}

/// Bimodule identities for a pair of actions of a bracket algebra on a
/// value module, plus the coefficient rule of the left action.
template <ModulePack P>
std::vector<CheckReport> checkModuleSuite(
    const P& pack, const std::vector<typename P::Algebra::Element>& samples,
    const std::vector<Poly>& coeffs, const SampleConfig& config = {}) {
  const auto& t = pack.algebra();
  std::vector<std::string> names = detail::instanceVars(t);
  std::vector<typename P::ValueType> values = pack.sampleValues();
  std::size_t n = samples.size();
  std::size_t m = coeffs.size();
  std::size_t v = values.size();
  std::vector<CheckReport> reports;

  auto witness2 = [&](std::size_t i, std::size_t j, std::size_t w) {
    return "(X=" + t.printElement(samples[i]) + ", Y=" +
           t.printElement(samples[j]) + ", w=" + pack.print(values[w]) + ")";
  };

  {
    CheckReport report{.id = "right_action_composite"};
    detail::forEachTuple(
        {n, n, v}, config, report, [&](const std::vector<std::size_t>& idx) {
          const auto& x = samples[idx[0]];
          const auto& y = samples[idx[1]];
          const auto& w = values[idx[2]];
          auto defect = pack.right(t.bracket(x, y), w) -
                        pack.right(y, pack.right(x, w)) -
                        pack.left(x, pack.right(y, w));
          if (!defect.isZero())
            report.addFailure(witness2(idx[0], idx[1], idx[2]),
                              pack.print(defect));
        });
    reports.push_back(std::move(report));
  }
  {
    CheckReport report{.id = "right_action_left_commutator"};
    detail::forEachTuple(
        {n, n, v}, config, report, [&](const std::vector<std::size_t>& idx) {
          const auto& x = samples[idx[0]];
          const auto& y = samples[idx[1]];
          const auto& w = values[idx[2]];
          auto defect = pack.right(t.bracket(x, y), w) -
                        pack.left(x, pack.right(y, w)) +
                        pack.right(y, pack.left(x, w));
          if (!defect.isZero())
            report.addFailure(witness2(idx[0], idx[1], idx[2]),
                              pack.print(defect));
        });
    reports.push_back(std::move(report));
  }
  {
    CheckReport report{.id = "left_action_commutator"};
    detail::forEachTuple(
        {n, n, v}, config, report, [&](const std::vector<std::size_t>& idx) {
          const auto& x = samples[idx[0]];
          const auto& y = samples[idx[1]];
          const auto& w = values[idx[2]];
          auto defect = pack.left(t.bracket(x, y), w) -
                        pack.left(x, pack.left(y, w)) +
                        pack.left(y, pack.left(x, w));
          if (!defect.isZero())
            report.addFailure(witness2(idx[0], idx[1], idx[2]),
                              pack.print(defect));
        });
    reports.push_back(std::move(report));
  }
  {
    CheckReport report{.id = "left_action_coefficient_rule"};
    detail::forEachTuple(
        {n, m, v}, config, report, [&](const std::vector<std::size_t>& idx) {
          const auto& x = samples[idx[0]];
          const Poly& f = coeffs[idx[1]];
          const auto& w = values[idx[2]];
          auto defect = pack.left(x, pack.multiply(f, w)) -
                        pack.multiply(f, pack.left(x, w)) -
                        pack.multiply(t.anchor(x).apply(f), w);
          if (!defect.isZero())
            report.addFailure("(X=" + t.printElement(samples[idx[0]]) +
                                  ", f=" + toString(f, names) + ", w=" +
                                  pack.print(values[idx[2]]) + ")",
                              pack.print(defect));
        });
    reports.push_back(std::move(report));
  }
  return reports;
}

/// The classical pairing identities for an instance whose pairing takes
/// values in the coefficient algebra and which carries a differential
/// calibrated to the pairing.
template <class T>
std::vector<CheckReport> checkClassicalCourantSuite(
    const T& t, const std::vector<typename T::Element>& samples,
    const std::vector<Poly>& coeffs, const SampleConfig& config = {}) {
  std::vector<std::string> names = detail::instanceVars(t);
  std::size_t n = samples.size();
  std::size_t m = coeffs.size();
  std::vector<CheckReport> reports;

  auto polyFailure = [&](CheckReport& report, const std::string& witness,
                         const Poly& defect) {
    if (!defect.isZero()) report.addFailure(witness, toString(defect, names));
  };

  {
    CheckReport report{.id = "bracket_pairing_self"};
    detail::forEachTuple(
        {n, n}, config, report, [&](const std::vector<std::size_t>& idx) {
          const auto& x = samples[idx[0]];
          const auto& y = samples[idx[1]];
          Poly defect =
              t.pairing(t.bracket(x, y), y) - t.pairing(x, t.bracket(y, y));
          polyFailure(report,
                      "(X=" + t.printElement(x) + ", Y=" + t.printElement(y) +
                          ")",
                      defect);
        });
    reports.push_back(std::move(report));
  }
  {
    CheckReport report{.id = "anchor_self_pairing"};
    detail::forEachTuple(
        {n, n}, config, report, [&](const std::vector<std::size_t>& idx) {
          const auto& x = samples[idx[0]];
          const auto& y = samples[idx[1]];
          Poly defect = t.anchor(x).apply(t.pairing(y, y)) -
                        t.pairing(x, t.bracket(y, y)).scaled(Rat(2));
          polyFailure(report,
                      "(X=" + t.printElement(x) + ", Y=" + t.printElement(y) +
                          ")",
                      defect);
        });
    reports.push_back(std::move(report));
  }
  {
    CheckReport report{.id = "anchor_self_pairing_adjoint"};
    detail::forEachTuple(
        {n, n}, config, report, [&](const std::vector<std::size_t>& idx) {
          const auto& x = samples[idx[0]];
          const auto& y = samples[idx[1]];
          Poly defect = t.anchor(x).apply(t.pairing(y, y)) -
                        t.pairing(t.bracket(x, y), y).scaled(Rat(2));
          polyFailure(report,
                      "(X=" + t.printElement(x) + ", Y=" + t.printElement(y) +
                          ")",
                      defect);
        });
    reports.push_back(std::move(report));
  }
  {
    CheckReport report{.id = "anchor_pairing_symmetrized"};
    detail::forEachTuple(
        {n, n, n}, config, report, [&](const std::vector<std::size_t>& idx) {
          const auto& x = samples[idx[0]];
          const auto& y = samples[idx[1]];
          const auto& z = samples[idx[2]];
          Poly defect = t.anchor(x).apply(t.pairing(y, z)) -
                        t.pairing(x, symmetrizedProduct(t, y, z));
          polyFailure(report,
                      "(X=" + t.printElement(x) + ", Y=" + t.printElement(y) +
                          ", Z=" + t.printElement(z) + ")",
                      defect);
        });
    reports.push_back(std::move(report));
  }
  {
    CheckReport report{.id = "pairing_invariance_adjoint"};
    detail::forEachTuple(
        {n, n, n}, config, report, [&](const std::vector<std::size_t>& idx) {
          const auto& x = samples[idx[0]];
          const auto& y = samples[idx[1]];
          const auto& z = samples[idx[2]];
          Poly defect = t.anchor(x).apply(t.pairing(y, z)) -
                        t.pairing(t.bracket(x, y), z) -
                        t.pairing(y, t.bracket(x, z));
          polyFailure(report,
                      "(X=" + t.printElement(x) + ", Y=" + t.printElement(y) +
                          ", Z=" + t.printElement(z) + ")",
                      defect);
        });
    reports.push_back(std::move(report));
  }
  {
    CheckReport report{.id = "pairing_invariance_symmetrized"};
    detail::forEachTuple(
        {n, n, n}, config, report, [&](const std::vector<std::size_t>& idx) {
          const auto& x = samples[idx[0]];
          const auto& y = samples[idx[1]];
          const auto& z = samples[idx[2]];
          Poly defect =
              t.anchor(x).apply(t.pairing(y, z)) -
              t.pairing(x, t.bracket(y, z) + t.bracket(z, y));
          polyFailure(report,
                      "(X=" + t.printElement(x) + ", Y=" + t.printElement(y) +
                          ", Z=" + t.printElement(z) + ")",
                      defect);
        });
    reports.push_back(std::move(report));
  }
  {
    CheckReport report{.id = "pairing_invariance_mixed"};
    detail::forEachTuple(
        {n, n, n}, config, report, [&](const std::vector<std::size_t>& idx) {
          const auto& x = samples[idx[0]];
          const auto& y = samples[idx[1]];
          const auto& z = samples[idx[2]];
          Poly defect = t.pairing(t.bracket(x, y), z) +
                        t.pairing(y, t.bracket(x, z)) -
                        t.pairing(x, t.bracket(y, z) + t.bracket(z, y));
          polyFailure(report,
                      "(X=" + t.printElement(x) + ", Y=" + t.printElement(y) +
                          ", Z=" + t.printElement(z) + ")",
                      defect);
        });
    reports.push_back(std::move(report));
  }
  {
    CheckReport report{.id = "leibniz_rule"};
    detail::forEachTuple(
        {n, n, m}, config, report, [&](const std::vector<std::size_t>& idx) {
          const auto& x = samples[idx[0]];
          const auto& y = samples[idx[1]];
          const Poly& f = coeffs[idx[2]];
          auto defect = t.bracket(x, t.scalarMult(f, y)) -
                        t.scalarMult(f, t.bracket(x, y)) -
                        t.scalarMult(t.anchor(x).apply(f), y);
          if (!defect.isZero())
            report.addFailure("(X=" + t.printElement(x) + ", Y=" +
                                  t.printElement(y) + ", f=" +
                                  toString(f, names) + ")",
                              t.printElement(defect));
        });
    reports.push_back(std::move(report));
  }
  {
    CheckReport report{.id = "differential_pairing"};
    detail::forEachTuple(
        {n, m}, config, report, [&](const std::vector<std::size_t>& idx) {
          const auto& x = samples[idx[0]];
          const Poly& f = coeffs[idx[1]];
          Poly defect =
              t.pairing(t.differential(f), x) - t.anchor(x).apply(f);
          polyFailure(report,
                      "(X=" + t.printElement(x) + ", f=" + toString(f, names) +
                          ")",
                      defect);
        });
    reports.push_back(std::move(report));
  }
  {
    CheckReport report{.id = "differential_of_pairing"};
    detail::forEachTuple(
        {n, n}, config, report, [&](const std::vector<std::size_t>& idx) {
          const auto& y = samples[idx[0]];
          const auto& z = samples[idx[1]];
          auto defect = t.differential(t.pairing(y, z)) -
                        symmetrizedProduct(t, y, z);
          if (!defect.isZero())
            report.addFailure("(Y=" + t.printElement(y) + ", Z=" +
                                  t.printElement(z) + ")",
                              t.printElement(defect));
        });
    reports.push_back(std::move(report));
  }
  {
    CheckReport report{.id = "left_twist_rule"};
    detail::forEachTuple(
        {n, n, m}, config, report, [&](const std::vector<std::size_t>& idx) {
          const auto& x = samples[idx[0]];
          const auto& y = samples[idx[1]];
          const Poly& f = coeffs[idx[2]];
          auto defect = t.bracket(t.scalarMult(f, x), y) -
                        t.scalarMult(f, t.bracket(x, y)) +
                        t.scalarMult(t.anchor(y).apply(f), x) -
                        t.scalarMult(t.pairing(x, y), t.differential(f));
          if (!defect.isZero())
            report.addFailure("(X=" + t.printElement(x) + ", Y=" +
                                  t.printElement(y) + ", f=" +
                                  toString(f, names) + ")",
                              t.printElement(defect));
        });
    reports.push_back(std::move(report));
  }
  return reports;
}

/// Pairing-versus-action identities of a paired instance: the left action
/// differentiates pairings by the bracket, the right action pairs the
/// symmetrized product against the acting element, the two routes agree,
/// and the pairing is symmetric and balanced over the coefficients.
template <PairedInstance T>
std::vector<CheckReport> checkPreCourantSuite(
    const T& t, const std::vector<typename T::Element>& samples,
    const std::vector<Poly>& coeffs, const SampleConfig& config = {}) {
  std::vector<std::string> names = detail::instanceVars(t);
  std::size_t n = samples.size();
  std::size_t m = coeffs.size();
  std::vector<CheckReport> reports;

  auto witness3 = [&](const typename T::Element& x,
                      const typename T::Element& y,
                      const typename T::Element& z) {
    return "(X=" + t.printElement(x) + ", Y=" + t.printElement(y) + ", Z=" +
           t.printElement(z) + ")";
  };

  {
    CheckReport report{.id = "pairing_left_action"};
    detail::forEachTuple(
        {n, n, n}, config, report, [&](const std::vector<std::size_t>& idx) {
          const auto& x = samples[idx[0]];
          const auto& y = samples[idx[1]];
          const auto& z = samples[idx[2]];
          auto defect = t.actLeft(x, t.pairing(y, z)) -
                        t.pairing(t.bracket(x, y), z) -
                        t.pairing(y, t.bracket(x, z));
          if (!defect.isZero())
            report.addFailure(witness3(x, y, z), t.printValue(defect));
        });
    reports.push_back(std::move(report));
  }
  {
    CheckReport report{.id = "pairing_right_action"};
    detail::forEachTuple(
        {n, n, n}, config, report, [&](const std::vector<std::size_t>& idx) {
          const auto& x = samples[idx[0]];
          const auto& y = samples[idx[1]];
          const auto& z = samples[idx[2]];
          auto defect = t.actRight(x, t.pairing(y, z)) +
                        t.pairing(symmetrizedProduct(t, y, z), x);
          if (!defect.isZero())
            report.addFailure(witness3(x, y, z), t.printValue(defect));
        });
    reports.push_back(std::move(report));
  }
  {
    CheckReport report{.id = "action_routes_agree"};
    detail::forEachTuple(
        {n, n, n}, config, report, [&](const std::vector<std::size_t>& idx) {
          const auto& x = samples[idx[0]];
          const auto& y = samples[idx[1]];
          const auto& z = samples[idx[2]];
          auto p = t.pairing(y, z);
          auto defect = t.actLeft(x, p) + t.actRight(x, p);
          if (!defect.isZero())
            report.addFailure(witness3(x, y, z), t.printValue(defect));
        });
    reports.push_back(std::move(report));
  }
  {
    CheckReport report{.id = "pairing_symmetric"};
    detail::forEachTuple(
        {n, n}, config, report, [&](const std::vector<std::size_t>& idx) {
          const auto& x = samples[idx[0]];
          const auto& y = samples[idx[1]];
          auto defect = t.pairing(x, y) - t.pairing(y, x);
          if (!defect.isZero())
            report.addFailure("(X=" + t.printElement(x) + ", Y=" +
                                  t.printElement(y) + ")",
                              t.printValue(defect));
        });
    reports.push_back(std::move(report));
  }
  {
    CheckReport report{.id = "pairing_coefficient_balance"};
    detail::forEachTuple(
        {n, n, m}, config, report, [&](const std::vector<std::size_t>& idx) {
          const auto& x = samples[idx[0]];
          const auto& y = samples[idx[1]];
          const Poly& f = coeffs[idx[2]];
          auto scaled = t.valueScalarMult(f, t.pairing(x, y));
          auto defectLeft = t.pairing(t.scalarMult(f, x), y) - scaled;
          auto defectRight = t.pairing(x, t.scalarMult(f, y)) - scaled;
          if (!defectLeft.isZero() || !defectRight.isZero()) {
            auto defect =
                defectLeft.isZero() ? defectRight : defectLeft;
            report.addFailure("(X=" + t.printElement(x) + ", Y=" +
                                  t.printElement(y) + ", f=" +
                                  toString(f, names) + ")",
                              t.printValue(defect));
          }
        });
    reports.push_back(std::move(report));
  }
  return reports;
}

} // namespace courant

#endif
