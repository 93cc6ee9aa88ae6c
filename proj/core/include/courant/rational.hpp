#ifndef COURANT_RATIONAL_HPP
#define COURANT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace courant {

/// Exact rational scalar. All coefficient arithmetic in the library is
/// carried out in canonicalized arbitrary-precision rationals; there is no
/// floating point anywhere.
using Rat = mpq_class;

/// Parses "p" or "p/q" with optional leading sign. Throws ParseError on
/// malformed input or zero denominator.
Rat ratFromString(std::string_view text);

/// Canonical form: "p" for integers, "p/q" otherwise, q > 0, gcd(p,q) = 1.
std::string toString(const Rat& value);

/// True for 0/1.
inline bool isZero(const Rat& value) { return sgn(value) == 0; }

} // namespace courant

#endif
