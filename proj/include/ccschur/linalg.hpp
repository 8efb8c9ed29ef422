#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ccschur/gf.hpp"

namespace ccschur {

using Vec = std::vector<Residue>;

/// Dense row-major matrix over F_q.
class MatrixFq {
 public:
  MatrixFq(FieldSpec field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  /// Every row must have length `cols`; entries are reduced mod q.
  MatrixFq(FieldSpec field, std::size_t cols, const std::vector<Vec>& rows);

  static MatrixFq identity(FieldSpec field, std::size_t size);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Residue operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  Residue& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }

  std::span<const Residue> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
  std::span<Residue> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
  std::vector<Vec> row_vectors() const;

  void append_row(std::span<const Residue> v);
  MatrixFq transposed() const;
  /// Rows [0, count).
  MatrixFq top_rows(std::size_t count) const;

  friend bool operator==(const MatrixFq&, const MatrixFq&) = default;

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Residue> data_;
};

struct RrefResult {
  MatrixFq reduced;  // same shape as the input; zero rows at the bottom
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

/// Reduced row-echelon form. Columns are scanned left to right and the
/// topmost unprocessed row with a nonzero entry becomes the pivot row.
RrefResult rref(const MatrixFq& m);

/// The rank nonzero rows of rref(m): the canonical basis of the row space.
MatrixFq row_basis(const MatrixFq& m);

std::size_t rank(const MatrixFq& m);

/// Throws DimensionMismatch when v.size() != m.cols().
bool in_row_space(const MatrixFq& m, std::span<const Residue> v);

/// Throws DimensionMismatch on differing column counts.
bool row_spaces_equal(const MatrixFq& m1, const MatrixFq& m2);

/// Basis (as rows) of {x : m x = 0}.
MatrixFq nullspace(const MatrixFq& m);

/// Row-echelon accumulator for building a span one vector at a time.
/// Reduction is against all stored rows so membership is a single pass.
class EchelonBasis {
 public:
  EchelonBasis(FieldSpec field, std::size_t cols) : field_(field), cols_(cols) {}

  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  bool full() const noexcept { return rows_.size() == cols_; }

  /// Returns true if v was independent of the rows stored so far.
  bool insert(std::span<const Residue> v);
  bool contains(std::span<const Residue> v) const;

  /// Canonical RREF of the accumulated span (rank rows).
  MatrixFq to_rref() const;

 private:
  /// Reduces v in place; returns the first nonzero column or cols_.
  std::size_t reduce(Vec& v) const;

  FieldSpec field_;
  std::size_t cols_;
  std::vector<Vec> rows_;           // each normalized to a leading 1
  std::vector<std::size_t> pivots_;  // pivots_[i] = leading column of rows_[i]
  std::vector<long> pivot_row_;      // column -> row index or -1
};

}  // namespace ccschur
