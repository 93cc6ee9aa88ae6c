#include "courant/word.hpp"

namespace courant {

int Word::pdeg() const {
  int d = 0;
  for (const WordFactor& f : factors) d += degreeOf(f.mono);
  return d;
}

bool wordLess(const Word& a, const Word& b) {
  if (a.weight() != b.weight()) return a.weight() > b.weight();
  for (int i = 0; i < a.weight(); ++i) {
    const WordFactor& fa = a.factors[i];
    const WordFactor& fb = b.factors[i];
    if (fa.mono != fb.mono) return gradedLexLess(fa.mono, fb.mono);
    if (fa.gen != fb.gen) return fa.gen < fb.gen;
  }
  return false;
}

Word concatenate(const Word& a, const Word& b) {
  Word w = a;
  w.factors.insert(w.factors.end(), b.factors.begin(), b.factors.end());
  return w;
}

} // namespace courant
