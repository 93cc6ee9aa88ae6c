#include "courant/sym_leibniz.hpp"

#include <utility>

namespace courant {

FreeElement symmetrizedLinearityDefect(const FreeLeibniz& free, const Poly& f,
                                       const FreeElement& x,
                                       const FreeElement& y) {
  return free.symmetrized(x, free.scalarMult(f, y)) -
         free.symmetrized(free.scalarMult(f, x), y);
}

FreeElement bracketLinearityDefect(const FreeLeibniz& free, const Poly& f,
                                   const FreeElement& x, const FreeElement& y,
                                   const FreeElement& z) {
  return free.bracket(free.scalarMult(f, x), free.symmetrized(y, z)) -
         free.symmetrized(free.bracket(x, y), free.scalarMult(f, z)) -
         free.symmetrized(free.scalarMult(f, y), free.bracket(x, z));
}

SymLeibnizQuotient::SymLeibnizQuotient(FreeLeibniz free, RelationConfig config)
    : m_free(std::move(free)), m_config(config),
      m_quotient(Subspace(m_free.basisSize())) {
  const Bounds bounds = m_free.bounds();
  const std::vector<Word>& basis = m_free.basisWords();
  const std::vector<std::string>& vars = module().vars();

  std::vector<FreeElement> weightOne;
  for (const Word& w : basis)
    if (w.weight() == 1) weightOne.push_back(m_free.word(w));

  Subspace span(m_free.basisSize());

  auto emit = [&](std::vector<QVec>& out, const FreeElement& element,
                  std::string witness) {
    if (element.isZero()) return;
    out.push_back(m_free.coordinates(element));
    m_generators.push_back({element, std::move(witness)});
  };

  auto producer = [&](int delta, std::size_t& overflow) {
    std::vector<QVec> out;
    // The unit coefficient yields identically zero instances of both
    // families, so fresh instances start at degree 1.
    if (delta > 0) {
      for (const Exponents& mono : monomialsOfDegree(m_free.nvars(), delta)) {
        Poly f = Poly::monomial(mono, Rat(1));
        std::string ftext = toString(f, vars);
        if (m_config.includeSymmetrizedLinearity) {
          for (const Word& wx : basis) {
            for (const Word& wy : basis) {
              if (wx.weight() + wy.weight() > bounds.wmax ||
                  wx.pdeg() + wy.pdeg() + delta > bounds.pmax) {
                ++overflow;
                continue;
              }
              try {
                emit(out,
                     symmetrizedLinearityDefect(m_free, f, m_free.word(wx),
                                                m_free.word(wy)),
                     "symlin(f=" + ftext + ", X=" + m_free.printElement(m_free.word(wx)) +
                         ", Y=" + m_free.printElement(m_free.word(wy)) + ")");
              } catch (const TruncationOverflow&) {
                ++overflow;
              }
            }
          }
        }
        if (m_config.includeBracketLinearity) {
          for (const Word& wx : basis) {
            for (const Word& wy : basis) {
              if (wx.weight() + wy.weight() + 1 > bounds.wmax) {
                overflow += basis.size();
                continue;
              }
              for (const Word& wz : basis) {
                if (wx.weight() + wy.weight() + wz.weight() > bounds.wmax ||
                    wx.pdeg() + wy.pdeg() + wz.pdeg() + delta > bounds.pmax) {
                  ++overflow;
                  continue;
                }
                try {
                  emit(out,
                       bracketLinearityDefect(m_free, f, m_free.word(wx),
                                              m_free.word(wy),
                                              m_free.word(wz)),
                       "bralin(f=" + ftext + ", X=" +
                           m_free.printElement(m_free.word(wx)) + ", Y=" +
                           m_free.printElement(m_free.word(wy)) + ", Z=" +
                           m_free.printElement(m_free.word(wz)) + ")");
                } catch (const TruncationOverflow&) {
                  ++overflow;
                }
              }
            }
          }
        }
      }
    }
    // Ideal closure of the current span: brackets against weight-1 words on
    // both sides reach every bracket by the recursion on word length, and
    // the variable actions reach every coefficient multiple.
    for (const QVec& row : span.rows()) {
      FreeElement r = m_free.fromCoordinates(row);
      for (const FreeElement& w : weightOne) {
        try {
          out.push_back(m_free.coordinates(m_free.bracket(w, r)));
        } catch (const TruncationOverflow&) {
          ++overflow;
        }
        try {
          out.push_back(m_free.coordinates(m_free.bracket(r, w)));
        } catch (const TruncationOverflow&) {
          ++overflow;
        }
      }
      for (int v = 0; v < m_free.nvars(); ++v) {
        try {
          out.push_back(m_free.coordinates(
              m_free.scalarMult(Poly::variable(m_free.nvars(), v), r)));
        } catch (const TruncationOverflow&) {
          ++overflow;
        }
      }
    }
    return out;
  };

  m_saturation = saturate(span, producer, m_config.saturation);
  m_quotient = QuotientSpace(std::move(span));
}

SymLeibnizQuotient::Element
SymLeibnizQuotient::project(const FreeElement& u) const {
  return m_free.fromCoordinates(m_quotient.project(m_free.coordinates(u)));
}

SymLeibnizQuotient::Element
SymLeibnizQuotient::include(const ModuleElement& element) const {
  return project(m_free.include(element));
}

SymLeibnizQuotient::Element SymLeibnizQuotient::generator(int index) const {
  return project(m_free.generator(index));
}

SymLeibnizQuotient::Element
SymLeibnizQuotient::bracket(const Element& u, const Element& v) const {
  return project(m_free.bracket(u, v));
}

SymLeibnizQuotient::Element
SymLeibnizQuotient::symmetrized(const Element& u, const Element& v) const {
  return project(m_free.symmetrized(u, v));
}

SymLeibnizQuotient::Element
SymLeibnizQuotient::scalarMult(const Poly& f, const Element& u) const {
  return project(m_free.scalarMult(f, u));
}

Derivation SymLeibnizQuotient::anchor(const Element& u) const {
  return m_free.anchor(project(u));
}

SymLeibnizQuotient::Element
SymLeibnizQuotient::basisElement(std::size_t index) const {
  return m_free.basisElement(m_quotient.cobasis().at(index));
}

int SymLeibnizQuotient::basisWeight(std::size_t index) const {
  return m_free.basisWeight(m_quotient.cobasis().at(index));
}

std::string SymLeibnizQuotient::basisLabel(std::size_t index) const {
  return m_free.basisLabel(m_quotient.cobasis().at(index));
}

QVec SymLeibnizQuotient::coordinates(const Element& u) const {
  QVec full = m_quotient.project(m_free.coordinates(u));
  const std::vector<std::size_t>& cobasis = m_quotient.cobasis();
  QVec out(cobasis.size());
  for (std::size_t i = 0; i < cobasis.size(); ++i) out[i] = full[cobasis[i]];
  return out;
}

SymLeibnizQuotient::Element
SymLeibnizQuotient::fromCoordinates(const QVec& v) const {
  const std::vector<std::size_t>& cobasis = m_quotient.cobasis();
  if (v.size() != cobasis.size())
    throw DimensionMismatch("coordinate length does not match the quotient "
                            "basis");
  QVec full(m_free.basisSize());
  for (std::size_t i = 0; i < cobasis.size(); ++i) full[cobasis[i]] = v[i];
  return m_free.fromCoordinates(full);
}

std::vector<WeightDims> SymLeibnizQuotient::dimsByWeight() const {
  std::vector<WeightDims> out;
  for (int k = 1; k <= bounds().wmax; ++k)
    out.push_back({k, 0, 0, 0});
  for (std::size_t i = 0; i < m_free.basisSize(); ++i) {
    int w = m_free.basisWeight(i);
    ++out[static_cast<std::size_t>(w - 1)].dimFree;
  }
  for (std::size_t pivot : m_quotient.relations().pivots()) {
    int w = m_free.basisWeight(pivot);
    ++out[static_cast<std::size_t>(w - 1)].dimRelations;
  }
  for (WeightDims& dims : out)
    dims.dimQuotient = dims.dimFree - dims.dimRelations;
  return out;
}

CheckReport SymLeibnizQuotient::checkIdealClosure() const {
  CheckReport report{.id = "ideal_closure"};
  const Subspace& span = m_quotient.relations();
  for (std::size_t r = 0; r < span.rows().size(); ++r) {
    FreeElement row = m_free.fromCoordinates(span.rows()[r]);
    std::string rowLabel = "row " + std::to_string(r);
    for (std::size_t b = 0; b < m_free.basisSize(); ++b) {
      FreeElement w = m_free.basisElement(b);
      ++report.samples;
      try {
        FreeElement left = m_free.bracket(w, row);
        if (!span.contains(m_free.coordinates(left)))
          report.addFailure("[" + m_free.basisLabel(b) + ", " + rowLabel + "]",
                            m_free.printElement(left));
      } catch (const TruncationOverflow&) {
        ++report.overflows;
      }
      try {
        FreeElement right = m_free.bracket(row, w);
        if (!span.contains(m_free.coordinates(right)))
          report.addFailure("[" + rowLabel + ", " + m_free.basisLabel(b) + "]",
                            m_free.printElement(right));
      } catch (const TruncationOverflow&) {
        ++report.overflows;
      }
    }
    for (int v = 0; v < m_free.nvars(); ++v) {
      ++report.samples;
      try {
        FreeElement scaled =
            m_free.scalarMult(Poly::variable(m_free.nvars(), v), row);
        if (!span.contains(m_free.coordinates(scaled)))
          report.addFailure(module().vars()[static_cast<std::size_t>(v)] +
                                " * " + rowLabel,
                            m_free.printElement(scaled));
      } catch (const TruncationOverflow&) {
        ++report.overflows;
      }
    }
  }
  return report;
}

CheckReport SymLeibnizQuotient::checkAnchorKillsRelations() const {
  CheckReport report{.id = "anchor_kills_relations"};
  const Subspace& span = m_quotient.relations();
  for (std::size_t r = 0; r < span.rows().size(); ++r) {
    FreeElement row = m_free.fromCoordinates(span.rows()[r]);
    ++report.samples;
    Derivation image = m_free.anchor(row);
    if (!image.isZero())
      report.addFailure("row " + std::to_string(r),
                        toString(image, module().vars()));
  }
  return report;
}

} // namespace courant
