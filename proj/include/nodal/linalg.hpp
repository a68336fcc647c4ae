#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "nodal/prime_field.hpp"

namespace nodal {

/// Default bound on rows * cols for any dense matrix the library allocates.
inline constexpr std::size_t kDefaultEntryGuard = 5'000'000;

/// Dense row-major matrix over GF(p). Entries are always reduced.
class Matrix {
 public:
  Matrix(PrimeField field, std::size_t rows, std::size_t cols,
         std::size_t entry_guard = kDefaultEntryGuard);

  /// Builds a matrix from signed integer rows, reducing every entry mod p.
  static Matrix from_rows(PrimeField field,
                          const std::vector<std::vector<std::int64_t>>& rows);
  static Matrix identity(PrimeField field, std::size_t n);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar operator()(std::size_t r, std::size_t c) const noexcept {
    return data_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, Scalar v) noexcept {
    data_[r * cols_ + c] = field_.reduce(v);
  }
  std::span<const Scalar> row(std::size_t r) const noexcept {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<Scalar> row(std::size_t r) noexcept {
    return {data_.data() + r * cols_, cols_};
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.data_ == b.data_;
  }

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

/// A subspace of GF(p)^ambient held as its reduced row echelon basis.
///
/// Only the entries in non-pivot ("free") columns are stored: every basis row
/// is e_pivot + sum over free columns f of tail(i)[f] * e_f, and it vanishes
/// in every other pivot column. Pivots are strictly increasing.
class RowBasis {
 public:
  /// `tails` is rank x free_count, row-major, rows ordered by pivot.
  RowBasis(PrimeField field, std::size_t ambient, std::vector<std::size_t> pivots,
           std::vector<Scalar> tails);

  static RowBasis zero(PrimeField field, std::size_t ambient);
  static RowBasis full(PrimeField field, std::size_t ambient);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t rank() const noexcept { return pivots_.size(); }
  std::size_t codim() const noexcept { return free_.size(); }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  const std::vector<std::size_t>& free_columns() const noexcept { return free_; }

  std::span<const Scalar> tail(std::size_t i) const noexcept {
    return {tails_.data() + i * free_.size(), free_.size()};
  }
  /// Row index of the pivot in column `col`, or -1.
  std::ptrdiff_t pivot_row(std::size_t col) const noexcept {
    return slot_[col] >= 0 ? slot_[col] : -1;
  }
  /// Position of `col` among the free columns, or -1.
  std::ptrdiff_t free_index(std::size_t col) const noexcept {
    return slot_[col] < 0 ? -slot_[col] - 1 : -1;
  }

  /// Full-length basis row i.
  std::vector<Scalar> row(std::size_t i) const;
  Matrix to_matrix(std::size_t entry_guard = kDefaultEntryGuard) const;

  /// Coordinates, over the free columns, of v modulo the subspace.
  std::vector<Scalar> residual(std::span<const Scalar> v) const;
  bool contains(std::span<const Scalar> v) const;

  friend bool operator==(const RowBasis& a, const RowBasis& b) {
    return a.field_ == b.field_ && a.ambient_ == b.ambient_ &&
           a.pivots_ == b.pivots_ && a.tails_ == b.tails_;
  }

 private:
  PrimeField field_;
  std::size_t ambient_;
  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> free_;
  std::vector<Scalar> tails_;
  std::vector<std::int32_t> slot_;
};

/// Incremental Gauss-Jordan elimination. Rows are kept in reduced echelon
/// form after every insertion.
class EchelonBuilder {
 public:
  EchelonBuilder(PrimeField field, std::size_t cols,
                 std::size_t entry_guard = kDefaultEntryGuard);

  /// Adds v (length cols, reduced entries). Returns true if the rank grew.
  bool insert(std::span<const Scalar> v);
  void insert_basis(const RowBasis& basis);

  std::size_t rank() const noexcept { return pivots_.size(); }
  std::size_t cols() const noexcept { return cols_; }

  RowBasis finish() const;

 private:
  PrimeField field_;
  std::size_t cols_;
  std::size_t entry_guard_;
  std::vector<std::vector<Scalar>> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::uint64_t> acc_;
};

/// Unique reduced row echelon form (same shape, zero rows last) and rank.
std::pair<Matrix, std::size_t> rref(const Matrix& m);

RowBasis row_space(const Matrix& m);

/// Basis of { v : m * v = 0 }.
RowBasis kernel(const Matrix& m);

/// Exact membership of v in the row span of b.
bool member(std::span<const Scalar> v, const RowBasis& b);

RowBasis span_sum(const RowBasis& a, const RowBasis& b);

}  // namespace nodal
