#include <doctest.h>

#include "nodal/combinatorics.hpp"
#include "nodal/errors.hpp"
#include "nodal/prime_field.hpp"

using namespace nodal;

TEST_CASE("construction rejects composites and large moduli") {
  CHECK_THROWS_AS(PrimeField(1), PreconditionError);
  CHECK_THROWS_AS(PrimeField(65520), PreconditionError);
  CHECK_THROWS_AS(PrimeField(std::uint64_t{1} << 31), PreconditionError);
  CHECK_NOTHROW(PrimeField(2147483647));
}

TEST_CASE("is_prime on small values") {
  int count = 0;
  for (std::uint64_t n = 0; n < 1000; ++n) count += is_prime(n);
  CHECK(count == 168);
  CHECK(is_prime(65521));
  CHECK(is_prime(32749));
  CHECK(is_prime(8191));
}

TEST_CASE("Fermat inverses") {
  for (std::uint64_t p : {65521u, 32749u, 8191u, 3u}) {
    const PrimeField F(p);
    SplitMix64 g(p);
    for (int i = 0; i < 1000; ++i) {
      const Scalar a = static_cast<Scalar>(1 + g.below(p - 1));
      CHECK(F.mul(a, F.inv(a)) == 1);
    }
    CHECK_THROWS_AS((void)F.inv(0), PreconditionError);
  }
}

TEST_CASE("field axioms on random triples") {
  const PrimeField F(32749);
  SplitMix64 g(1);
  for (int i = 0; i < 500; ++i) {
    const Scalar a = static_cast<Scalar>(g.below(32749));
    const Scalar b = static_cast<Scalar>(g.below(32749));
    const Scalar c = static_cast<Scalar>(g.below(32749));
    CHECK(F.add(a, b) == F.add(b, a));
    CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
    CHECK(F.add(a, F.neg(a)) == 0);
    CHECK(F.sub(a, b) == F.add(a, F.neg(b)));
    CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
  }
}

TEST_CASE("from_int reduces negative values") {
  const PrimeField F(8191);
  CHECK(F.from_int(-1) == 8190);
  CHECK(F.from_int(-8191) == 0);
  CHECK(F.from_int(8192) == 1);
  CHECK(F.pow(3, 8190) == 1);
}

TEST_CASE("lazy budget never overflows") {
  for (std::uint64_t p : {65521u, 2147483647u}) {
    const PrimeField F(p);
    const unsigned __int128 worst =
        static_cast<unsigned __int128>(F.lazy_budget()) * (p - 1) * (p - 1) + (p - 1);
    CHECK(worst <= static_cast<unsigned __int128>(~std::uint64_t{0}));
    CHECK(F.lazy_budget() >= 1);
  }
}
