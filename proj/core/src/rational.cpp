#include "courant/rational.hpp"

#include "courant/errors.hpp"

#include <cctype>
#include <cstddef>

namespace courant {

namespace {

bool allDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

/// Strips an optional leading sign and returns true when it was '-'.
bool takeSign(std::string_view& s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    bool negative = s.front() == '-';
    s.remove_prefix(1);
    return negative;
  }
  return false;
}

} // namespace

Rat ratFromString(std::string_view text) {
  std::string_view num = text;
  std::string_view den = "1";
  if (std::size_t slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  bool negative = takeSign(num);
  if (takeSign(den)) negative = !negative;
  if (!allDigits(num) || !allDigits(den))
    throw ParseError("malformed rational '" + std::string(text) + "'", 0);

  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (sgn(d) == 0)
    throw ParseError("zero denominator in '" + std::string(text) + "'", 0);

  Rat value(n, d);
  value.canonicalize();
  if (negative) value = -value;
  return value;
}

std::string toString(const Rat& value) {
  Rat canonical(value);
  canonical.canonicalize();
  return canonical.get_str();
}

} // namespace courant
