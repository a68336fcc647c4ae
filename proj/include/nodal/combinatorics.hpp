#pragma once

#include <cstdint>

namespace nodal {

/// C(n, k) for 0 <= k; zero when k > n or n < 0.
std::int64_t binomial(std::int64_t n, std::int64_t k) noexcept;

/// x (x-1) ... (x-k+1) / k! for any integer x, including negative x.
std::int64_t binomial_poly(std::int64_t x, std::int64_t k) noexcept;

/// splitmix64: the deterministic generator behind every seeded object.
///
/// state += 0x9E3779B97F4A7C15; z = state;
/// z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9;
/// z = (z ^ (z >> 27)) * 0x94D049BB133111EB;
/// return z ^ (z >> 31);
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound) noexcept {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t z;
    do z = next(); while (z >= limit);
    return z % bound;
  }

 private:
  std::uint64_t state_;
};

/// Derives an independent stream seed from a base seed and a label.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t label) noexcept {
  SplitMix64 g(seed ^ (label * 0xD1B54A32D192ED03ULL));
  return g.next();
}

}  // namespace nodal

namespace nodal {

/// Macaulay's bound h^<k>: writing h = C(a_k, k) + C(a_{k-1}, k-1) + ... with
/// a_k > a_{k-1} > ... >= j >= 1, returns sum C(a_i + 1, i + 1). k >= 1.
std::int64_t macaulay_upper_bound(std::int64_t h, int k);

}  // namespace nodal
