#include "nodal/combinatorics.hpp"

namespace nodal {

__extension__ using Wide = __int128;

std::int64_t binomial(std::int64_t n, std::int64_t k) noexcept {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Wide r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<std::int64_t>(r);
}

std::int64_t binomial_poly(std::int64_t x, std::int64_t k) noexcept {
  if (k < 0) return 0;
  if (x >= 0) return binomial(x, k);
  // C(x, k) = (-1)^k C(k - x - 1, k) for negative x.
  const std::int64_t v = binomial(k - x - 1, k);
  return (k % 2 == 0) ? v : -v;
}

std::int64_t macaulay_upper_bound(std::int64_t h, int k) {
  std::int64_t result = 0;
  for (int i = k; i >= 1 && h > 0; --i) {
    std::int64_t a = i;
    while (binomial(a + 1, i) <= h) ++a;
    h -= binomial(a, i);
    result += binomial(a + 1, i + 1);
  }
  return result;
}

}  // namespace nodal
