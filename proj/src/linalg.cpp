#include "nodal/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "nodal/errors.hpp"

namespace nodal {

namespace {

void check_guard(std::size_t rows, std::size_t cols, std::size_t guard) {
  if (cols != 0 && rows > guard / cols)
    throw GuardExceeded("matrix of " + std::to_string(rows) + "x" +
                        std::to_string(cols) + " entries exceeds the guard of " +
                        std::to_string(guard));
}

}  // namespace

Matrix::Matrix(PrimeField field, std::size_t rows, std::size_t cols,
               std::size_t entry_guard)
    : field_(field), rows_(rows), cols_(cols) {
  check_guard(rows, cols, entry_guard);
  data_.assign(rows * cols, 0);
}

Matrix Matrix::from_rows(PrimeField field,
                         const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c)
      m.data_[r * cols + c] = field.from_int(rows[r][c]);
  }
  return m;
}

Matrix Matrix::identity(PrimeField field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

RowBasis::RowBasis(PrimeField field, std::size_t ambient,
                   std::vector<std::size_t> pivots, std::vector<Scalar> tails)
    : field_(field), ambient_(ambient), pivots_(std::move(pivots)),
      tails_(std::move(tails)) {
  slot_.assign(ambient_, 0);
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    if (pivots_[i] >= ambient_ || (i > 0 && pivots_[i] <= pivots_[i - 1]))
      throw DimensionMismatch("pivots must be increasing and in range");
    slot_[pivots_[i]] = static_cast<std::int32_t>(i) + 1;
  }
  free_.reserve(ambient_ - pivots_.size());
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (slot_[c] > 0) {
      slot_[c] -= 1;
    } else {
      slot_[c] = -static_cast<std::int32_t>(free_.size()) - 1;
      free_.push_back(c);
    }
  }
  if (tails_.size() != pivots_.size() * free_.size())
    throw DimensionMismatch("tail block has the wrong size");
}

RowBasis RowBasis::zero(PrimeField field, std::size_t ambient) {
  return RowBasis(field, ambient, {}, {});
}

RowBasis RowBasis::full(PrimeField field, std::size_t ambient) {
  std::vector<std::size_t> pivots(ambient);
  std::iota(pivots.begin(), pivots.end(), std::size_t{0});
  return RowBasis(field, ambient, std::move(pivots), {});
}

std::vector<Scalar> RowBasis::row(std::size_t i) const {
  std::vector<Scalar> out(ambient_, 0);
  out[pivots_[i]] = 1;
  auto t = tail(i);
  for (std::size_t f = 0; f < free_.size(); ++f) out[free_[f]] = t[f];
  return out;
}

Matrix RowBasis::to_matrix(std::size_t entry_guard) const {
  Matrix m(field_, rank(), ambient_, entry_guard);
  for (std::size_t i = 0; i < rank(); ++i) {
    auto r = row(i);
    std::copy(r.begin(), r.end(), m.row(i).begin());
  }
  return m;
}

std::vector<Scalar> RowBasis::residual(std::span<const Scalar> v) const {
  if (v.size() != ambient_)
    throw DimensionMismatch("vector of length " + std::to_string(v.size()) +
                            " against ambient dimension " +
                            std::to_string(ambient_));
  const std::size_t nf = free_.size();
  const Scalar p = field_.modulus();
  const std::uint64_t budget = field_.lazy_budget();
  std::vector<std::uint64_t> acc(nf);
  for (std::size_t f = 0; f < nf; ++f) acc[f] = v[free_[f]];
  std::uint64_t used = 0;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Scalar c = v[pivots_[i]];
    if (c == 0) continue;
    const std::uint64_t m = p - c;
    const Scalar* t = tails_.data() + i * nf;
    for (std::size_t f = 0; f < nf; ++f) acc[f] += m * t[f];
    if (++used == budget) {
      for (auto& a : acc) a %= p;
      used = 0;
    }
  }
  std::vector<Scalar> out(nf);
  for (std::size_t f = 0; f < nf; ++f) out[f] = field_.reduce(acc[f]);
  return out;
}

bool RowBasis::contains(std::span<const Scalar> v) const {
  auto r = residual(v);
  return std::all_of(r.begin(), r.end(), [](Scalar s) { return s == 0; });
}

EchelonBuilder::EchelonBuilder(PrimeField field, std::size_t cols,
                               std::size_t entry_guard)
    : field_(field), cols_(cols), entry_guard_(entry_guard), acc_(cols) {}

bool EchelonBuilder::insert(std::span<const Scalar> v) {
  if (v.size() != cols_)
    throw DimensionMismatch("row of length " + std::to_string(v.size()) +
                            " inserted into " + std::to_string(cols_) +
                            " columns");
  const Scalar p = field_.modulus();
  const std::uint64_t budget = field_.lazy_budget();
  std::copy(v.begin(), v.end(), acc_.begin());
  std::uint64_t used = 0;
  // Rows vanish in every pivot column but their own, so v[pivot] is the
  // exact multiplier even after earlier subtractions.
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t pc = pivots_[r];
    const Scalar c = v[pc];
    if (c == 0) continue;
    const std::uint64_t m = p - c;
    const Scalar* row = rows_[r].data();
    for (std::size_t j = pc; j < cols_; ++j) acc_[j] += m * row[j];
    if (++used == budget) {
      for (std::size_t j = 0; j < cols_; ++j) acc_[j] %= p;
      used = 0;
    }
  }
  std::size_t lead = cols_;
  std::vector<Scalar> w(cols_);
  for (std::size_t j = 0; j < cols_; ++j) {
    w[j] = field_.reduce(acc_[j]);
    if (w[j] != 0 && lead == cols_) lead = j;
  }
  if (lead == cols_) return false;
  check_guard(rows_.size() + 1, cols_, entry_guard_);

  const Scalar inv = field_.inv(w[lead]);
  for (std::size_t j = lead; j < cols_; ++j) w[j] = field_.mul(w[j], inv);
  for (auto& row : rows_) {
    const Scalar c = row[lead];
    if (c == 0) continue;
    const Scalar m = p - c;
    for (std::size_t j = lead; j < cols_; ++j)
      if (w[j] != 0) row[j] = field_.reduce(row[j] + std::uint64_t{m} * w[j]);
  }
  rows_.push_back(std::move(w));
  pivots_.push_back(lead);
  return true;
}

void EchelonBuilder::insert_basis(const RowBasis& basis) {
  for (std::size_t i = 0; i < basis.rank(); ++i) insert(basis.row(i));
}

RowBasis EchelonBuilder::finish() const {
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
  std::vector<std::size_t> pivots;
  pivots.reserve(order.size());
  for (auto i : order) pivots.push_back(pivots_[i]);
  std::vector<char> is_pivot(cols_, 0);
  for (auto c : pivots) is_pivot[c] = 1;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < cols_; ++c)
    if (!is_pivot[c]) free.push_back(c);
  std::vector<Scalar> tails;
  tails.reserve(order.size() * free.size());
  for (auto i : order)
    for (auto c : free) tails.push_back(rows_[i][c]);
  return RowBasis(field_, cols_, std::move(pivots), std::move(tails));
}

RowBasis row_space(const Matrix& m) {
  EchelonBuilder b(m.field(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) b.insert(m.row(r));
  return b.finish();
}

std::pair<Matrix, std::size_t> rref(const Matrix& m) {
  RowBasis basis = row_space(m);
  Matrix out(m.field(), m.rows(), m.cols());
  for (std::size_t i = 0; i < basis.rank(); ++i) {
    auto r = basis.row(i);
    std::copy(r.begin(), r.end(), out.row(i).begin());
  }
  return {std::move(out), basis.rank()};
}

RowBasis kernel(const Matrix& m) {
  const PrimeField& field = m.field();
  RowBasis rs = row_space(m);
  EchelonBuilder b(field, m.cols());
  const auto& free = rs.free_columns();
  std::vector<Scalar> v(m.cols());
  for (std::size_t f = 0; f < free.size(); ++f) {
    std::fill(v.begin(), v.end(), 0);
    v[free[f]] = 1;
    for (std::size_t i = 0; i < rs.rank(); ++i)
      v[rs.pivots()[i]] = field.neg(rs.tail(i)[f]);
    b.insert(v);
  }
  return b.finish();
}

bool member(std::span<const Scalar> v, const RowBasis& b) {
  return b.contains(v);
}

RowBasis span_sum(const RowBasis& a, const RowBasis& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionMismatch("span_sum of subspaces with ambient dimensions " +
                            std::to_string(a.ambient_dim()) + " and " +
                            std::to_string(b.ambient_dim()));
  if (!(a.field() == b.field())) throw RingMismatch("span_sum over different fields");
  EchelonBuilder builder(a.field(), a.ambient_dim());
  builder.insert_basis(a);
  builder.insert_basis(b);
  return builder.finish();
}

}  // namespace nodal
