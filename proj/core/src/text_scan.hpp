#ifndef COURANT_TEXT_SCAN_HPP
#define COURANT_TEXT_SCAN_HPP

// Internal lexing helpers shared by the polynomial and element parsers.
// Not installed.

#include "courant/errors.hpp"
#include "courant/rational.hpp"

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

namespace courant::detail {

struct Scanner {
  std::string_view text;
  std::size_t pos = 0;

  void skipSpace() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool atEnd() {
    skipSpace();
    return pos >= text.size();
  }
  char peek() {
    skipSpace();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool consume(char c) {
    skipSpace();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool consumeWord(std::string_view w) {
    skipSpace();
    if (text.substr(pos, w.size()) == w) {
      pos += w.size();
      return true;
    }
    return false;
  }
};

inline bool isIdentStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
inline bool isIdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

inline bool identifierAhead(Scanner s) {
  s.skipSpace();
  return s.pos < s.text.size() && isIdentStart(s.text[s.pos]);
}

inline std::string parseIdentifier(Scanner& s) {
  s.skipSpace();
  std::size_t start = s.pos;
  if (start >= s.text.size() || !isIdentStart(s.text[start]))
    throw ParseError("expected identifier", start);
  std::size_t end = start;
  while (end < s.text.size() && isIdentChar(s.text[end])) ++end;
  s.pos = end;
  return std::string(s.text.substr(start, end - start));
}

inline mpz_class parseInteger(Scanner& s) {
  s.skipSpace();
  std::size_t start = s.pos;
  std::size_t end = start;
  while (end < s.text.size() &&
         std::isdigit(static_cast<unsigned char>(s.text[end])))
    ++end;
  if (end == start) throw ParseError("expected integer", start);
  s.pos = end;
  return mpz_class(std::string(s.text.substr(start, end - start)), 10);
}

inline Rat parseRatToken(Scanner& s) {
  mpz_class num = parseInteger(s);
  mpz_class den = 1;
  std::size_t beforeSlash = s.pos;
  if (s.consume('/')) {
    den = parseInteger(s);
    if (sgn(den) == 0) throw ParseError("zero denominator", beforeSlash);
  }
  Rat value(num, den);
  value.canonicalize();
  return value;
}

inline int parseSmallInt(Scanner& s) {
  mpz_class v = parseInteger(s);
  if (v > 1000000) throw ParseError("exponent too large", s.pos);
  return static_cast<int>(v.get_si());
}

inline bool ratAhead(Scanner s) {
  s.skipSpace();
  return s.pos < s.text.size() &&
         std::isdigit(static_cast<unsigned char>(s.text[s.pos]));
}

} // namespace courant::detail

#endif
