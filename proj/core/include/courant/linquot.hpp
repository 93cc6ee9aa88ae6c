#ifndef COURANT_LINQUOT_HPP
#define COURANT_LINQUOT_HPP

#include "courant/errors.hpp"
#include "courant/qvec.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace courant {

/// Subspace of Q^n held in reduced row echelon form with unit pivots.
/// Pivot columns are deterministic: each inserted vector is reduced by the
/// existing rows and, if nonzero, pivots on its first nonzero column.
class Subspace {
public:
  explicit Subspace(std::size_t dim) : m_dim(dim) {}

  std::size_t dim() const { return m_dim; }
  std::size_t rank() const { return m_rows.size(); }
  const std::vector<QVec>& rows() const { return m_rows; }
  const std::vector<std::size_t>& pivots() const { return m_pivots; }

  /// Sorted list of non-pivot column indices.
  std::vector<std::size_t> cobasis() const;

  /// Residual of v after eliminating all pivot coordinates. The result is
  /// the canonical representative of v modulo this subspace: linear,
  /// idempotent, zero exactly on members.
  QVec reduce(QVec v) const;

  bool contains(const QVec& v) const { return reduce(v).isZero(); }

  /// Reduces and, when the residual is nonzero, inserts it as a new row
  /// (normalized, back-eliminated, placed in pivot order). Returns whether
  /// the rank grew.
  bool insert(QVec v);

private:
  std::size_t m_dim;
  std::vector<QVec> m_rows;      // in increasing pivot order
  std::vector<std::size_t> m_pivots;
};

/// Echelon span of a list of vectors, inserted in the given order.
Subspace echelonize(const std::vector<QVec>& vectors, std::size_t dim);

/// Quotient of a coordinate space by a relation subspace. Elements of the
/// quotient are represented by their canonical reduced vectors, supported
/// on the cobasis columns.
class QuotientSpace {
public:
  explicit QuotientSpace(Subspace relations)
      : m_relations(std::move(relations)),
        m_cobasis(m_relations.cobasis()) {}

  std::size_t ambientDim() const { return m_relations.dim(); }
  std::size_t dim() const { return m_cobasis.size(); }
  const Subspace& relations() const { return m_relations; }
  const std::vector<std::size_t>& cobasis() const { return m_cobasis; }

  QVec project(const QVec& v) const { return m_relations.reduce(v); }

private:
  Subspace m_relations;
  std::vector<std::size_t> m_cobasis;
};

/// Outcome of a saturation run: the rank after each round, the final
/// multiplier degree, and how many products fell outside the piece.
struct SaturationOutcome {
  std::vector<std::size_t> rankHistory;
  int deltaFinal = 0;
  std::size_t overflowCount = 0;
};

struct SaturationConfig {
  int deltaMax = 8;
};

/// Round-based closure: round delta inserts producer(delta) (producers
/// typically return generator elements multiplied by all monomials of that
/// exact degree, already converted to coordinates). The loop stops once the
/// rank survives two consecutive rounds unchanged, and throws
/// SaturationFailure past config.deltaMax. Products that leave the piece
/// are the producer's concern; it reports them via its second channel.
SaturationOutcome saturate(
    Subspace& span,
    const std::function<std::vector<QVec>(int delta, std::size_t& overflow)>&
        producer,
    const SaturationConfig& config = {});

/// Finite ordered label set of a filtered piece, mapping labels to
/// coordinate indices. Labels must be listed in the canonical order of
/// their type.
template <class Label, class Less>
class LabeledPiece {
public:
  LabeledPiece() = default;
  explicit LabeledPiece(std::vector<Label> labels)
      : m_labels(std::move(labels)) {
    for (std::size_t i = 0; i < m_labels.size(); ++i) {
      auto [it, inserted] = m_index.emplace(m_labels[i], i);
      if (!inserted) throw DimensionMismatch("duplicate piece label");
    }
  }

  std::size_t size() const { return m_labels.size(); }
  const std::vector<Label>& labels() const { return m_labels; }
  const Label& label(std::size_t index) const { return m_labels.at(index); }

  std::size_t indexOf(const Label& label) const {
    auto it = m_index.find(label);
    if (it == m_index.end())
      throw DimensionMismatch("label outside the piece");
    return it->second;
  }
  bool contains(const Label& label) const {
    return m_index.find(label) != m_index.end();
  }

private:
  std::vector<Label> m_labels;
  std::map<Label, std::size_t, Less> m_index;
};

} // namespace courant

#endif
