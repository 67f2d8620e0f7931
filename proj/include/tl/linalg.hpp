#pragma once

// Sparse matrices over Z[v, v^-1], their specializations, and exact rank.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "tl/coeff.hpp"

namespace tl {

/// Column-major sparse matrix over LaurentPoly. Each column holds
/// (row, value) pairs sorted by row with no zero values.
class PolyMatrix {
 public:
  using Column = std::vector<std::pair<std::size_t, LaurentPoly>>;

  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  Column const& column(std::size_t c) const { return columns_[c]; }
  /// Replaces column c; entries must be sorted by row and nonzero.
  void set_column(std::size_t c, Column col);
  LaurentPoly entry(std::size_t r, std::size_t c) const;
  std::size_t nonzeros() const;
  bool is_zero() const;

  static PolyMatrix identity(std::size_t k);

  friend bool operator==(PolyMatrix const&, PolyMatrix const&) = default;

 private:
  std::size_t rows_ = 0;
  std::vector<Column> columns_;
};

/// Symbolic product a * b.
PolyMatrix compose(PolyMatrix const& a, PolyMatrix const& b);

struct EntryDiff {
  std::size_t row;
  std::size_t col;
  LaurentPoly left;
  LaurentPoly right;
};

/// First differing entry in column-major order, or nullopt when equal.
/// Throws std::invalid_argument on a shape mismatch.
std::optional<EntryDiff> first_difference(PolyMatrix const& a, PolyMatrix const& b);

/// Dense matrix of rationals.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  Rational const& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> entries_;
};

/// Exact rank by fraction-free elimination over Z.
std::size_t rank(RationalMatrix const& m);

/// Rank of m specialized at v = x, computed exactly.
/// Throws std::domain_error("v must be a unit") when x = 0.
std::size_t rank_at(PolyMatrix const& m, Rational const& x);

/// Integer column vectors of m at v = x: each column scaled by a positive
/// rational so that it is a primitive integer vector.
std::vector<std::vector<std::pair<std::size_t, Integer>>> specialize_columns(PolyMatrix const& m,
                                                                             Rational const& x);

}  // namespace tl
