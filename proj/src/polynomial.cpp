#include "nodal/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "nodal/combinatorics.hpp"
#include "nodal/errors.hpp"

namespace nodal {

GradedRing::GradedRing(int n, PrimeField field) : n_(n), field_(field) {
  if (n < 1) throw PreconditionError("projective dimension must be at least 1");
  if (field.modulus() <= static_cast<Scalar>(n + 1))
    throw PreconditionError("prime " + std::to_string(field.modulus()) +
                            " must exceed n + 1 = " + std::to_string(n + 1));
}

std::size_t GradedRing::dim(int k) const {
  return k < 0 ? 0 : static_cast<std::size_t>(binomial(n_ + k, n_));
}

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  for (int e : exps_) {
    if (e < 0) throw PreconditionError("negative exponent");
    degree_ += e;
  }
}

Monomial Monomial::variable(int nvars, int i) {
  std::vector<int> e(nvars, 0);
  e.at(i) = 1;
  return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (other.exps_.size() != exps_.size())
    throw RingMismatch("monomials in different numbers of variables");
  std::vector<int> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exps_[i];
  return Monomial(std::move(e));
}

std::size_t monomial_rank(std::span<const int> exps, int degree) {
  // Count the monomials of the same degree that are lexicographically larger.
  const int nv = static_cast<int>(exps.size());
  std::size_t idx = 0;
  int rem = degree;
  for (int i = 0; i + 1 < nv; ++i) {
    const int tail_vars = nv - 1 - i;
    if (rem > exps[i])
      idx += static_cast<std::size_t>(
          binomial(rem - exps[i] - 1 + tail_vars, tail_vars));
    rem -= exps[i];
  }
  return idx;
}

std::size_t monomial_rank(const Monomial& m) {
  return monomial_rank(m.exponents(), m.degree());
}

namespace {

void enumerate(int var, int nvars, int rem, std::vector<int>& cur,
               std::vector<Monomial>& out) {
  if (var == nvars - 1) {
    cur[var] = rem;
    out.emplace_back(cur);
    return;
  }
  for (int e = rem; e >= 0; --e) {
    cur[var] = e;
    enumerate(var + 1, nvars, rem - e, cur, out);
  }
  cur[var] = 0;
}

}  // namespace

std::vector<Monomial> monomial_basis(const GradedRing& ring, int k,
                                     int degree_guard) {
  if (k < 0) throw PreconditionError("negative degree");
  if (k > degree_guard)
    throw GuardExceeded("degree " + std::to_string(k) + " exceeds the guard " +
                        std::to_string(degree_guard));
  std::vector<Monomial> out;
  out.reserve(ring.dim(k));
  std::vector<int> cur(ring.nvars(), 0);
  enumerate(0, ring.nvars(), k, cur, out);
  return out;
}

Polynomial::Polynomial(GradedRing ring, int degree)
    : ring_(std::move(ring)), degree_(degree) {
  if (degree < 0) throw PreconditionError("negative degree");
}

Polynomial Polynomial::constant(GradedRing ring, Scalar c) {
  Polynomial f(std::move(ring), 0);
  f.add_term(Monomial::one(f.ring_.nvars()), f.ring_.field().reduce(c));
  return f;
}

Polynomial Polynomial::variable(GradedRing ring, int i) {
  if (i < 0 || i >= ring.nvars())
    throw PreconditionError("variable index " + std::to_string(i) + " out of range");
  return monomial(ring, Monomial::variable(ring.nvars(), i));
}

Polynomial Polynomial::monomial(GradedRing ring, Monomial m, Scalar c) {
  if (m.nvars() != ring.nvars()) throw RingMismatch("monomial does not fit the ring");
  Polynomial f(std::move(ring), m.degree());
  f.add_term(m, f.ring_.field().reduce(c));
  return f;
}

Polynomial Polynomial::from_coefficients(GradedRing ring, int k,
                                         std::span<const Scalar> coeffs) {
  auto basis = monomial_basis(ring, k);
  if (coeffs.size() != basis.size())
    throw DimensionMismatch("coefficient vector does not match dim S_k");
  Polynomial f(std::move(ring), k);
  for (std::size_t j = 0; j < basis.size(); ++j)
    if (coeffs[j] != 0) f.terms_.emplace(std::move(basis[j]), coeffs[j]);
  return f;
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void Polynomial::add_term(const Monomial& m, Scalar c) {
  if (m.nvars() != ring_.nvars()) throw RingMismatch("monomial does not fit the ring");
  if (m.degree() != degree_)
    throw PreconditionError("term of degree " + std::to_string(m.degree()) +
                            " added to a form of degree " + std::to_string(degree_));
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = ring_.field().add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

std::vector<Scalar> Polynomial::coefficients() const {
  std::vector<Scalar> out(ring_.dim(degree_), 0);
  for (const auto& [m, c] : terms_) out[monomial_rank(m)] = c;
  return out;
}

void Polynomial::check_compatible(const Polynomial& g) const {
  if (!(ring_ == g.ring_)) throw RingMismatch("polynomials over different rings");
  if (degree_ != g.degree_ && !is_zero() && !g.is_zero())
    throw DimensionMismatch("sum of forms of degrees " + std::to_string(degree_) +
                            " and " + std::to_string(g.degree_));
}

Polynomial& Polynomial::operator+=(const Polynomial& g) {
  check_compatible(g);
  if (is_zero()) degree_ = g.degree_;
  for (const auto& [m, c] : g.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) {
  check_compatible(g);
  if (is_zero()) degree_ = g.degree_;
  for (const auto& [m, c] : g.terms_) add_term(m, ring_.field().neg(c));
  return *this;
}

Polynomial& Polynomial::operator*=(Scalar c) {
  c = ring_.field().reduce(c);
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v = ring_.field().mul(v, c);
  return *this;
}

Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
Polynomial operator*(Polynomial f, Scalar c) { return f *= c; }
Polynomial operator*(const Polynomial& f, const Polynomial& g) { return multiply(f, g); }

Polynomial multiply(const Polynomial& f, const Polynomial& g) {
  if (!(f.ring() == g.ring())) throw RingMismatch("product of polynomials over different rings");
  const PrimeField& F = f.ring().field();
  Polynomial out(f.ring(), f.degree() + g.degree());
  for (const auto& [a, ca] : f.terms())
    for (const auto& [b, cb] : g.terms()) out.add_term(a * b, F.mul(ca, cb));
  return out;
}

Polynomial multiply(const Polynomial& f, const Monomial& m) {
  Polynomial out(f.ring(), f.degree() + m.degree());
  for (const auto& [a, c] : f.terms()) out.add_term(a * m, c);
  return out;
}

Polynomial power(const Polynomial& f, int e) {
  if (e < 0) throw PreconditionError("negative power");
  Polynomial result = Polynomial::constant(f.ring(), 1);
  Polynomial base = f;
  while (e > 0) {
    if (e & 1) result = multiply(result, base);
    e >>= 1;
    if (e > 0) base = multiply(base, base);
  }
  return result;
}

Polynomial partial_derivative(const Polynomial& f, int i) {
  if (i < 0 || i >= f.ring().nvars())
    throw PreconditionError("variable index " + std::to_string(i) + " out of range");
  const PrimeField& F = f.ring().field();
  Polynomial out(f.ring(), std::max(f.degree() - 1, 0));
  for (const auto& [m, c] : f.terms()) {
    if (m[i] == 0) continue;
    std::vector<int> e = m.exponents();
    const Scalar factor = F.reduce(static_cast<std::uint64_t>(e[i]));
    e[i] -= 1;
    out.add_term(Monomial(std::move(e)), F.mul(c, factor));
  }
  return out;
}

Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images) {
  if (static_cast<int>(images.size()) != f.ring().nvars())
    throw DimensionMismatch("substitution needs one image per variable");
  const GradedRing& target = images.front().ring();
  const int t = images.front().degree();
  for (const auto& g : images) {
    if (!(g.ring() == target)) throw RingMismatch("substitution images over different rings");
    if (g.degree() != t)
      throw PreconditionError("substitution images of unequal degrees " +
                              std::to_string(t) + " and " + std::to_string(g.degree()));
  }
  if (!(target.field() == f.ring().field()))
    throw RingMismatch("substitution into a ring over another field");
  if (t < 1) throw PreconditionError("substitution images must have degree >= 1");

  // powers[i][e] = images[i]^e, filled on demand.
  std::vector<std::vector<Polynomial>> powers(images.size());
  for (std::size_t i = 0; i < images.size(); ++i)
    powers[i].push_back(Polynomial::constant(target, 1));
  auto pow_of = [&](std::size_t i, int e) -> const Polynomial& {
    while (static_cast<int>(powers[i].size()) <= e)
      powers[i].push_back(multiply(powers[i].back(), images[i]));
    return powers[i][e];
  };

  Polynomial out(target, t * f.degree());
  for (const auto& [m, c] : f.terms()) {
    Polynomial term = Polynomial::constant(target, c);
    for (int i = 0; i < m.nvars(); ++i)
      if (m[i] > 0) term = multiply(term, pow_of(i, m[i]));
    out += term;
  }
  return out;
}

Scalar evaluate(const Polynomial& f, std::span<const Scalar> point) {
  if (static_cast<int>(point.size()) != f.ring().nvars())
    throw DimensionMismatch("point has " + std::to_string(point.size()) +
                            " coordinates, ring has " +
                            std::to_string(f.ring().nvars()) + " variables");
  const PrimeField& F = f.ring().field();
  Scalar sum = 0;
  for (const auto& [m, c] : f.terms()) {
    Scalar v = c;
    for (int i = 0; i < m.nvars() && v != 0; ++i)
      if (m[i] > 0) v = F.mul(v, F.pow(F.reduce(point[i]), m[i]));
    sum = F.add(sum, v);
  }
  return sum;
}

Polynomial random_form_in(const GradedRing& ring, int k, std::uint64_t seed,
                          std::span<const int> vars, int degree_guard) {
  std::vector<char> allowed(ring.nvars(), 0);
  for (int v : vars) {
    if (v < 0 || v >= ring.nvars())
      throw PreconditionError("variable index " + std::to_string(v) + " out of range");
    allowed[v] = 1;
  }
  const Scalar p = ring.field().modulus();
  SplitMix64 rng(seed);
  Polynomial f(ring, k);
  for (auto& m : monomial_basis(ring, k, degree_guard)) {
    bool ok = true;
    for (int i = 0; i < ring.nvars(); ++i)
      if (m[i] > 0 && !allowed[i]) ok = false;
    if (!ok) continue;
    f.add_term(m, static_cast<Scalar>(1 + rng.below(p - 1)));
  }
  return f;
}

Polynomial random_form(const GradedRing& ring, int k, std::uint64_t seed,
                       int degree_guard) {
  std::vector<int> all(ring.nvars());
  std::iota(all.begin(), all.end(), 0);
  return random_form_in(ring, k, seed, all, degree_guard);
}

}  // namespace nodal
