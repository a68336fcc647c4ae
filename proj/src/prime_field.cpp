#include "nodal/prime_field.hpp"

#include <limits>
#include <string>

#include "nodal/errors.hpp"

namespace nodal {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint64_t p) {
  if (p >= kMaxModulus || !is_prime(p))
    throw PreconditionError("modulus " + std::to_string(p) +
                            " is not a prime below 2^31");
  p_ = static_cast<Scalar>(p);
  const std::uint64_t sq = std::uint64_t{p_ - 1} * (p_ - 1);
  const std::uint64_t room = std::numeric_limits<std::uint64_t>::max() - p_;
  lazy_budget_ = sq == 0 ? room : room / sq;
}

Scalar PrimeField::pow(Scalar base, std::uint64_t exp) const noexcept {
  std::uint64_t result = 1 % p_;
  std::uint64_t b = base % p_;
  while (exp > 0) {
    if (exp & 1) result = result * b % p_;
    b = b * b % p_;
    exp >>= 1;
  }
  return static_cast<Scalar>(result);
}

Scalar PrimeField::inv(Scalar a) const {
  if (a % p_ == 0) throw PreconditionError("inverse of zero in GF(p)");
  return pow(a, p_ - 2);
}

Scalar PrimeField::from_int(std::int64_t v) const noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Scalar>(r);
}

}  // namespace nodal
