#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "nodal/prime_field.hpp"

namespace nodal {

/// Largest degree for which monomial bases and random forms are produced.
inline constexpr int kDefaultDegreeGuard = 40;

/// S = GF(p)[x_0, ..., x_n].
class GradedRing {
 public:
  /// Requires n >= 1 and p > n + 1.
  GradedRing(int n, PrimeField field);

  int n() const noexcept { return n_; }
  int nvars() const noexcept { return n_ + 1; }
  const PrimeField& field() const noexcept { return field_; }

  /// dim S_k = C(n + k, n).
  std::size_t dim(int k) const;

  friend bool operator==(const GradedRing& a, const GradedRing& b) noexcept {
    return a.n_ == b.n_ && a.field_ == b.field_;
  }

 private:
  int n_;
  PrimeField field_;
};

/// Exponent vector. Ordered graded-lexicographically with x_0 > x_1 > ...
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);

  static Monomial one(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }
  static Monomial variable(int nvars, int i);

  int degree() const noexcept { return degree_; }
  int nvars() const noexcept { return static_cast<int>(exps_.size()); }
  int operator[](int i) const noexcept { return exps_[i]; }
  const std::vector<int>& exponents() const noexcept { return exps_; }

  Monomial operator*(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    return a.exps_ <=> b.exps_;
  }

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

/// Position of a monomial of degree k in monomial_basis(ring, k).
std::size_t monomial_rank(const Monomial& m);
std::size_t monomial_rank(std::span<const int> exps, int degree);

/// All monomials of degree k, strictly decreasing. Throws GuardExceeded past
/// the degree guard.
std::vector<Monomial> monomial_basis(const GradedRing& ring, int k,
                                     int degree_guard = kDefaultDegreeGuard);

/// Sparse homogeneous form. Never stores zero coefficients.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Scalar, std::greater<>>;

  Polynomial(GradedRing ring, int degree);
  static Polynomial constant(GradedRing ring, Scalar c);
  static Polynomial variable(GradedRing ring, int i);
  static Polynomial monomial(GradedRing ring, Monomial m, Scalar c = 1);
  /// Form whose coefficient on monomial_basis(ring, k)[j] is coeffs[j].
  static Polynomial from_coefficients(GradedRing ring, int k,
                                      std::span<const Scalar> coeffs);

  const GradedRing& ring() const noexcept { return ring_; }
  int degree() const noexcept { return degree_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const Terms& terms() const noexcept { return terms_; }

  Scalar coefficient(const Monomial& m) const;
  /// Adds c to the coefficient of m (dropping the term if it cancels).
  void add_term(const Monomial& m, Scalar c);

  /// Dense coefficients over monomial_basis(ring, degree).
  std::vector<Scalar> coefficients() const;

  Polynomial& operator+=(const Polynomial& g);
  Polynomial& operator-=(const Polynomial& g);
  Polynomial& operator*=(Scalar c);

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.ring_ == b.ring_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const Polynomial& g) const;

  GradedRing ring_;
  int degree_;
  Terms terms_;
};

Polynomial operator+(Polynomial f, const Polynomial& g);
Polynomial operator-(Polynomial f, const Polynomial& g);
Polynomial operator*(Polynomial f, Scalar c);
Polynomial operator*(const Polynomial& f, const Polynomial& g);

Polynomial multiply(const Polynomial& f, const Polynomial& g);
Polynomial multiply(const Polynomial& f, const Monomial& m);
Polynomial power(const Polynomial& f, int e);
Polynomial partial_derivative(const Polynomial& f, int i);

/// Replaces x_i by images[i]. The images share one degree t >= 1 and one
/// ring, which may differ from the ring of f (same field).
Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images);

Scalar evaluate(const Polynomial& f, std::span<const Scalar> point);

/// Seeded form of degree k with every coefficient drawn uniformly from the
/// nonzero residues, in monomial_basis order, one splitmix64 stream per seed.
Polynomial random_form(const GradedRing& ring, int k, std::uint64_t seed,
                       int degree_guard = kDefaultDegreeGuard);
/// As random_form but supported on monomials in the listed variables only.
Polynomial random_form_in(const GradedRing& ring, int k, std::uint64_t seed,
                          std::span<const int> vars,
                          int degree_guard = kDefaultDegreeGuard);

}  // namespace nodal
