#include <doctest.h>

#include <vector>

#include "nodal/combinatorics.hpp"
#include "nodal/errors.hpp"
#include "nodal/linalg.hpp"

using namespace nodal;

namespace {

Matrix random_matrix(const PrimeField& F, std::size_t r, std::size_t c, std::uint64_t seed,
                     std::size_t rank_cap) {
  // Product of r x rank_cap and rank_cap x c random matrices.
  SplitMix64 g(seed);
  Matrix A(F, r, rank_cap), B(F, rank_cap, c), M(F, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < rank_cap; ++j) A.set(i, j, static_cast<Scalar>(g.below(F.modulus())));
  for (std::size_t i = 0; i < rank_cap; ++i)
    for (std::size_t j = 0; j < c; ++j) B.set(i, j, static_cast<Scalar>(g.below(F.modulus())));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      Scalar s = 0;
      for (std::size_t t = 0; t < rank_cap; ++t) s = F.add(s, F.mul(A(i, t), B(t, j)));
      M.set(i, j, s);
    }
  return M;
}

std::vector<Scalar> apply(const Matrix& m, std::span<const Scalar> v) {
  const PrimeField& F = m.field();
  std::vector<Scalar> out(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] = F.add(out[i], F.mul(m(i, j), v[j]));
  return out;
}

}  // namespace

TEST_CASE("rref on 200 random matrices") {
  for (std::uint64_t p : {65521u, 7u}) {
    const PrimeField F(p);
    SplitMix64 g(p);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t r = 1 + g.below(9), c = 1 + g.below(9), cap = 1 + g.below(9);
      const Matrix M = random_matrix(F, r, c, g.next(), cap);
      const auto [E, rank] = rref(M);
      CHECK(rank <= std::min({r, c, cap}));
      CHECK(rref(E).first == E);  // idempotent
      CHECK(row_space(E) == row_space(M));
      const RowBasis K = kernel(M);
      CHECK(K.rank() + rank == c);  // rank-nullity
      for (std::size_t i = 0; i < K.rank(); ++i) {
        const auto v = K.row(i);
        for (Scalar x : apply(M, v)) CHECK(x == 0);
      }
      // Every pivot column of E is a unit vector.
      for (std::size_t i = 0; i < rank; ++i) {
        std::size_t lead = 0;
        while (E(i, lead) == 0) ++lead;
        CHECK(E(i, lead) == 1);
        for (std::size_t k = 0; k < r; ++k)
          if (k != i) CHECK(E(k, lead) == 0);
      }
    }
  }
}

TEST_CASE("membership and span sums") {
  const PrimeField F(32749);
  const Matrix A = random_matrix(F, 3, 8, 1, 3);
  const Matrix B = random_matrix(F, 2, 8, 2, 2);
  const RowBasis a = row_space(A), b = row_space(B);
  const RowBasis s = span_sum(a, b);
  CHECK(s.rank() == 5);
  for (std::size_t i = 0; i < A.rows(); ++i) CHECK(member(A.row(i), s));
  std::vector<Scalar> e(8, 0);
  e[7] = 1;
  CHECK(member(e, s) == s.contains(e));
  CHECK(s.residual(s.row(0)) == std::vector<Scalar>(s.codim(), 0));
}

TEST_CASE("echelon builder keeps reduced form") {
  const PrimeField F(101);
  EchelonBuilder b(F, 4);
  CHECK(b.insert(std::vector<Scalar>{0, 1, 2, 3}));
  CHECK(b.insert(std::vector<Scalar>{1, 1, 1, 1}));
  CHECK_FALSE(b.insert(std::vector<Scalar>{1, 2, 3, 4}));
  const RowBasis rb = b.finish();
  CHECK(rb.pivots() == std::vector<std::size_t>{0, 1});
  CHECK(rb.row(0) == std::vector<Scalar>{1, 0, F.from_int(-1), F.from_int(-2)});
  CHECK(rb.free_index(3) == 1);
  CHECK(rb.pivot_row(1) == 1);
}

TEST_CASE("zero and full subspaces") {
  const PrimeField F(13);
  CHECK(RowBasis::zero(F, 5).rank() == 0);
  CHECK(RowBasis::full(F, 5).codim() == 0);
  CHECK(row_space(Matrix::identity(F, 5)) == RowBasis::full(F, 5));
  CHECK(kernel(Matrix::identity(F, 5)).rank() == 0);
}

TEST_CASE("dense guard") {
  const PrimeField F(13);
  CHECK_THROWS_AS(Matrix(F, 1000, 1000, 1000), GuardExceeded);
  CHECK(Matrix::from_rows(F, {{-1, 14}})(0, 0) == 12);
}
