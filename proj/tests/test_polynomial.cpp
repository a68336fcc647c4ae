#include <doctest.h>

#include <vector>

#include "nodal/combinatorics.hpp"
#include "nodal/errors.hpp"
#include "nodal/poly_text.hpp"
#include "nodal/polynomial.hpp"

using namespace nodal;

namespace {
const GradedRing R3(3, PrimeField(65521));
}

TEST_CASE("monomial bases are decreasing and ranked") {
  for (int k = 0; k <= 6; ++k) {
    const auto B = monomial_basis(R3, k);
    CHECK(B.size() == R3.dim(k));
    for (std::size_t i = 0; i < B.size(); ++i) {
      CHECK(monomial_rank(B[i]) == i);
      if (i > 0) CHECK(B[i - 1] > B[i]);
    }
  }
  CHECK(monomial_basis(R3, 1)[0] == Monomial::variable(4, 0));
  CHECK_THROWS_AS(monomial_basis(R3, 41), GuardExceeded);
}

TEST_CASE("ring axioms on random forms") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Polynomial a = random_form(R3, 2, 3 * s), b = random_form(R3, 2, 3 * s + 1),
                     c = random_form(R3, 3, 3 * s + 2);
    CHECK(a * c == c * a);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("Euler identity") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const int k = 1 + static_cast<int>(s % 5);
    const Polynomial f = random_form(R3, k, s);
    Polynomial sum(R3, k);
    for (int i = 0; i < 4; ++i) sum += partial_derivative(f, i) * Polynomial::variable(R3, i);
    CHECK(sum == f * static_cast<Scalar>(k));
  }
}

TEST_CASE("random forms are dense, seeded and respect variable restrictions") {
  const Polynomial f = random_form(R3, 3, 9);
  CHECK(f.size() == R3.dim(3));
  CHECK(f == random_form(R3, 3, 9));
  CHECK_FALSE(f == random_form(R3, 3, 10));
  const std::vector<int> vars{1, 2, 3};
  const Polynomial g = random_form_in(R3, 3, 9, vars);
  CHECK(g.size() == 10);
  for (const auto& [m, c] : g.terms()) CHECK(m[0] == 0);
}

TEST_CASE("substitution and evaluation commute") {
  const GradedRing R2(2, PrimeField(65521));
  const Polynomial f = random_form(R3, 3, 1);
  std::vector<Polynomial> images;
  for (int i = 0; i < 4; ++i) images.push_back(random_form(R2, 2, 10 + i));
  const Polynomial g = substitute(f, images);
  CHECK(g.degree() == 6);
  CHECK(g.ring() == R2);
  const std::vector<Scalar> pt{3, 5, 7};
  std::vector<Scalar> img;
  for (const auto& p : images) img.push_back(evaluate(p, pt));
  CHECK(evaluate(g, pt) == evaluate(f, img));
}

TEST_CASE("power and coefficient access") {
  const Polynomial x0 = Polynomial::variable(R3, 0), x1 = Polynomial::variable(R3, 1);
  const Polynomial s = power(x0 + x1, 3);
  CHECK(s.coefficient(Monomial({2, 1, 0, 0})) == 3);
  CHECK(power(x0, 0) == Polynomial::constant(R3, 1));
  CHECK_THROWS_AS(x0 + Polynomial::constant(R3, 1), DimensionMismatch);
}

TEST_CASE("parse and print roundtrip on 100 forms") {
  for (std::uint64_t s = 0; s < 100; ++s) {
    const int k = static_cast<int>(s % 6);
    const Polynomial f = random_form(R3, k, s);
    CHECK(parse_polynomial(R3, to_string(f)) == f);
  }
  CHECK(to_string(Polynomial(R3, 2)) == "0");
  CHECK(to_string(parse_polynomial(R3, "x0*x1 - x2^2")) == "x0*x1 + 65520*x2^2");
}

TEST_CASE("parse errors carry columns") {
  try {
    parse_polynomial(R3, "x0^2 + x1");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.column() == 8);
    CHECK(std::string(e.what()).find("mixed degrees 2 and 1") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_polynomial(R3, "x4"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(R3, "x0 +"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(R3, "x0 $ x1"), ParseError);
}
