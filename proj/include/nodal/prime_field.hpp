#pragma once

#include <array>
#include <cstdint>

namespace nodal {

/// Element of GF(p), always kept in [0, p).
using Scalar = std::uint32_t;

/// The prime field GF(p) with p < 2^31.
///
/// Elements are plain `Scalar` values; the field object carries the modulus
/// and performs the arithmetic. Products are formed in 64 bits, so no
/// intermediate value ever overflows.
class PrimeField {
 public:
  static constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 31;

  /// Throws PreconditionError unless `p` is a prime below 2^31.
  explicit PrimeField(std::uint64_t p);

  Scalar modulus() const noexcept { return p_; }

  Scalar add(Scalar a, Scalar b) const noexcept {
    Scalar s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Scalar sub(Scalar a, Scalar b) const noexcept {
    return a >= b ? a - b : a + (p_ - b);
  }
  Scalar neg(Scalar a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Scalar mul(Scalar a, Scalar b) const noexcept {
    return static_cast<Scalar>(std::uint64_t{a} * b % p_);
  }
  Scalar pow(Scalar base, std::uint64_t exp) const noexcept;
  /// Fermat inverse a^(p-2). `a` must be nonzero.
  Scalar inv(Scalar a) const;

  Scalar reduce(std::uint64_t v) const noexcept {
    return static_cast<Scalar>(v % p_);
  }
  Scalar from_int(std::int64_t v) const noexcept;

  /// Number of products (p-1)^2 that can be summed into a uint64 holding a
  /// reduced value without overflow.
  std::uint64_t lazy_budget() const noexcept { return lazy_budget_; }

  friend bool operator==(const PrimeField& a, const PrimeField& b) noexcept {
    return a.p_ == b.p_;
  }

 private:
  Scalar p_;
  std::uint64_t lazy_budget_;
};

bool is_prime(std::uint64_t n) noexcept;

/// Primes used when none are given. Results over all three stand in for
/// characteristic zero.
inline constexpr std::array<std::uint64_t, 3> kDefaultPrimes{65521, 32749, 8191};

}  // namespace nodal
