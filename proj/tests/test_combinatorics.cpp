#include <doctest.h>

#include <set>

#include "nodal/combinatorics.hpp"

using namespace nodal;

TEST_CASE("binomials") {
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(60, 30) == 118264581564861424LL);
  for (int n = 1; n < 30; ++n)
    for (int k = 1; k < n; ++k)
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("binomial polynomial at negative arguments") {
  CHECK(binomial_poly(-1, 3) == -1);
  CHECK(binomial_poly(-2, 2) == 3);
  CHECK(binomial_poly(2, 3) == 0);
  // Pascal's rule holds for the polynomial as well.
  for (int x = -10; x < 10; ++x)
    for (int k = 1; k < 6; ++k)
      CHECK(binomial_poly(x, k) == binomial_poly(x - 1, k - 1) + binomial_poly(x - 1, k));
}

TEST_CASE("splitmix64 reference outputs") {
  SplitMix64 g(0);
  CHECK(g.next() == 0xE220A8397B1DCDAFULL);
  CHECK(g.next() == 0x6E789E6AA1B965F4ULL);
  CHECK(g.next() == 0x06C45D188009454FULL);
}

TEST_CASE("bounded draws stay in range and derived seeds differ") {
  SplitMix64 g(7);
  for (int i = 0; i < 1000; ++i) CHECK(g.below(13) < 13);
  std::set<std::uint64_t> seen;
  for (std::uint64_t label = 0; label < 100; ++label) seen.insert(derive_seed(5, label));
  CHECK(seen.size() == 100);
  CHECK(derive_seed(5, 1) == derive_seed(5, 1));
}

TEST_CASE("Macaulay bound") {
  CHECK(macaulay_upper_bound(4, 2) == 5);  // 4 = C(3,2) + C(1,1)
  CHECK(macaulay_upper_bound(3, 1) == 6);  // C(3,1) -> C(4,2)
  CHECK(macaulay_upper_bound(0, 4) == 0);
  CHECK(macaulay_upper_bound(10, 3) == 15);  // C(5,3) -> C(6,4)
  // Full polynomial ring in four variables grows maximally.
  for (int k = 1; k < 12; ++k)
    CHECK(macaulay_upper_bound(binomial(k + 3, 3), k) == binomial(k + 4, 3));
}
