#ifndef COURANT_ERRORS_HPP
#define COURANT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace courant {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Mixing objects over different variable sets, generator counts or
/// coordinate lengths.
class DimensionMismatch : public Error {
public:
  using Error::Error;
};

/// Combining filtered elements that were created under different bounds.
class BoundsMismatch : public Error {
public:
  using Error::Error;
};

/// Text input that does not match the expected grammar. `position` is a
/// zero-based byte offset into the parsed string.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"),
        m_position(position) {}

  std::size_t position() const { return m_position; }

private:
  std::size_t m_position = 0;
};

/// An operation produced a term outside the filtered piece. Truncation is
/// never silent: callers either enlarge the bounds or catch and count.
class TruncationOverflow : public Error {
public:
  enum class Kind { Weight, Degree };

  TruncationOverflow(Kind kind, int value, int bound)
      : Error(std::string("truncation overflow: ") +
              (kind == Kind::Weight ? "weight " : "polynomial degree ") +
              std::to_string(value) + " exceeds bound " + std::to_string(bound)),
        m_kind(kind), m_value(value), m_bound(bound) {}

  Kind kind() const { return m_kind; }
  int value() const { return m_value; }
  int bound() const { return m_bound; }

private:
  Kind m_kind;
  int m_value;
  int m_bound;
};

/// The saturation loop ran out of multiplier degrees before the relation
/// rank stabilized. Carries the rank observed after each round.
class SaturationFailure : public Error {
public:
  explicit SaturationFailure(std::vector<std::size_t> rankHistory)
      : Error(describe(rankHistory)), m_rankHistory(std::move(rankHistory)) {}

  const std::vector<std::size_t>& rankHistory() const { return m_rankHistory; }

private:
  static std::string describe(const std::vector<std::size_t>& history) {
    std::string s = "saturation did not stabilize; rank history:";
    for (std::size_t r : history) s += " " + std::to_string(r);
    return s;
  }

  std::vector<std::size_t> m_rankHistory;
};

/// The base algebra of a symmetrized-square construction fails the
/// symmetry laws it is required to satisfy.
class SymmetryViolation : public Error {
public:
  using Error::Error;
};

/// A candidate morphism does not kill the symmetrization ideal.
class NonVanishingOnIdeal : public Error {
public:
  NonVanishingOnIdeal(const std::string& what, std::string witness)
      : Error(what + "; witness: " + witness), m_witness(std::move(witness)) {}

  const std::string& witness() const { return m_witness; }

private:
  std::string m_witness;
};

/// A candidate pair map does not kill the invariance relations.
class NonVanishingOnInv : public Error {
public:
  NonVanishingOnInv(const std::string& what, std::string witness)
      : Error(what + "; witness: " + witness), m_witness(std::move(witness)) {}

  const std::string& witness() const { return m_witness; }

private:
  std::string m_witness;
};

/// A map's generator images have the wrong anchor image.
class AnchorIncompatibility : public Error {
public:
  using Error::Error;
};

/// An operation was requested on an instance that does not support it.
class MissingCapability : public Error {
public:
  using Error::Error;
};

} // namespace courant

#endif
