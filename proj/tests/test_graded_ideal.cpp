#include <doctest.h>

#include <vector>

#include "nodal/combinatorics.hpp"
#include "nodal/errors.hpp"
#include "nodal/graded_ideal.hpp"
#include "nodal/poly_text.hpp"
#include "oracles.hpp"

using namespace nodal;

namespace {

GradedRing ring3(std::uint64_t p = 65521) { return GradedRing(3, PrimeField(p)); }

// Linear form, then two general forms of the given degrees.
IdealGens general_ci(const GradedRing& R, int a, int b, std::uint64_t seed) {
  return IdealGens(R, {random_form(R, 1, derive_seed(seed, 1)),
                       random_form(R, a, derive_seed(seed, 2)),
                       random_form(R, b, derive_seed(seed, 3))});
}

}  // namespace

TEST_CASE("engine agrees with the full Macaulay matrix") {
  const GradedRing R = ring3(32749);
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    IdealGens I(R, {random_form(R, 2, derive_seed(seed, 1)),
                    random_form(R, 3, derive_seed(seed, 2)),
                    random_form(R, 3, derive_seed(seed, 3)),
                    random_form(R, 4, derive_seed(seed, 4))});
    GradedIdeal engine(I);
    for (int k = 0; k <= 7; ++k) {
      const GradedPiece direct = graded_piece_direct(I, k);
      CHECK(engine.piece(k) == direct.subspace);
    }
  }
}

TEST_CASE("engine agrees with the reference route on monomial and sparse ideals") {
  const GradedRing R = ring3(8191);
  IdealGens I(R, {parse_polynomial(R, "x0^2 - x1*x2"), parse_polynomial(R, "x1^3"),
                  parse_polynomial(R, "x2^2*x3 + x0*x3^2"), parse_polynomial(R, "x3^4")});
  GradedIdeal engine(I);
  for (int k = 0; k <= 8; ++k) CHECK(engine.piece(k) == graded_piece_direct(I, k).subspace);
}

TEST_CASE("complete intersections match the Koszul series") {
  const GradedRing R = ring3();
  struct Case {
    int a, b;
  };
  for (Case c : {Case{4, 7}, Case{5, 9}, Case{4, 9}, Case{3, 3}}) {
    const auto expected = oracle::koszul_hilbert(3, {1, c.a, c.b}, 16);
    CHECK(hilbert_fn(general_ci(R, c.a, c.b, 11), 16).values == expected);
  }
}

TEST_CASE("the CI(1,4,7) plateau is 28 and starts in degree 9") {
  const HilbertTable h = hilbert_fn(general_ci(ring3(), 4, 7, 5), 12);
  const std::vector<std::int64_t> expected{1, 3, 6, 10, 14, 18, 22, 25, 27, 28, 28, 28, 28};
  CHECK(h.values == expected);
}

TEST_CASE("pullback by squares of a CI(1,4,7)") {
  const GradedRing R = ring3();
  const IdealGens I = general_ci(R, 4, 7, 9);
  std::vector<Polynomial> sq;
  for (int i = 0; i < 4; ++i) sq.push_back(power(Polynomial::variable(R, i), 2));
  const IdealGens I2 = pullback_gens(I, sq);
  const auto expected = oracle::koszul_hilbert(3, {2, 8, 14}, 24);
  CHECK(hilbert_fn(I2, 24).values == expected);
  CHECK(expected[18] == 215);
  CHECK(expected[21] == 224);
}

TEST_CASE("normal form and membership") {
  const GradedRing R = ring3();
  const IdealGens I = general_ci(R, 4, 7, 3);
  GradedIdeal G(I);
  const Polynomial f = multiply(I.gens()[1], random_form(R, 3, 77));
  CHECK(G.contains(f));
  CHECK(contains(f, I));
  CHECK_FALSE(G.contains(random_form(R, 7, 78)));
  const auto nf = G.normal_form(random_form(R, 7, 79));
  CHECK(static_cast<std::int64_t>(nf.size()) == G.hilbert(7));
}

TEST_CASE("the unit ideal and the zero ideal") {
  const GradedRing R = ring3();
  CHECK(hilbert_fn(IdealGens(R, {Polynomial::constant(R, 5)}), 4).values ==
        std::vector<std::int64_t>{0, 0, 0, 0, 0});
  const HilbertTable h = hilbert_fn(IdealGens::zero(R), 4);
  for (int k = 0; k <= 4; ++k) CHECK(h.at(k) == binomial(k + 3, 3));
}

TEST_CASE("Hilbert function of points matches the vanishing ideal") {
  const GradedRing R = ring3(101);
  SplitMix64 g(4);
  std::vector<Point> pts;
  for (int i = 0; i < 7; ++i) {
    Point P(4);
    for (auto& c : P) c = static_cast<Scalar>(g.below(101));
    P[0] = 1;
    pts.push_back(P);
  }
  const HilbertTable h = vanishing_hilbert(R, pts, 5);
  CHECK(h.at(0) == 1);
  CHECK(h.at(1) == 4);
  CHECK(h.at(2) == 7);
  CHECK(h.at(5) == 7);
}

TEST_CASE("repeated points are rejected") {
  const GradedRing R = ring3(101);
  std::vector<Point> pts{{1, 2, 3, 4}, {2, 4, 6, 8}};
  CHECK_THROWS_AS(vanishing_ideal_piece(R, pts, 2), PreconditionError);
}

TEST_CASE("general linear sections keep the Hilbert differences") {
  const GradedRing R = ring3();
  IdealGens I(R, {random_form(R, 2, 1), random_form(R, 3, 2)});
  const LinearSection H = general_linear_section(I, 42, 8);
  CHECK(H.ideal.ring().n() == 2);
  const HilbertTable hI = hilbert_fn(I, 8);
  const HilbertTable hH = hilbert_fn(H.ideal, 8);
  for (int k = 1; k <= 8; ++k) CHECK(hH.at(k) == hI.at(k) - hI.at(k - 1));
}

TEST_CASE("a special linear form is rejected") {
  const GradedRing R = ring3();
  // x0 is a zero divisor modulo (x0*x1).
  IdealGens I(R, {parse_polynomial(R, "x0*x1")});
  CHECK_THROWS_AS(quotient_by_linear(I, Polynomial::variable(R, 0), 3), GenericityFailure);
}

TEST_CASE("Gorenstein closure is symmetric with socle in degree d+1") {
  const GradedRing R = ring3();
  const int d = 7;
  IdealGens I(R, {random_form(R, 1, 5), random_form(R, 4, 6), random_form(R, d - 1, 7)});
  const LinearSection H = general_linear_section(I, 3, d + 2);
  const GorensteinClosure J = gorenstein_closure(H.ideal, d);
  CHECK(J.top == d + 1);
  CHECK(J.hilbert.at(d + 1) == 1);
  for (int k = 0; k <= d + 1; ++k) CHECK(J.hilbert.at(k) == J.hilbert.at(d + 1 - k));
  const HilbertTable hH = hilbert_fn(H.ideal, d + 1);
  for (int k = 0; k <= d + 1; ++k) CHECK(J.hilbert.at(k) <= hH.at(k));
}

TEST_CASE("base locus verdicts") {
  const GradedRing R = ring3();
  SUBCASE("complete intersection of four forms is empty") {
    IdealGens I(R, {random_form(R, 2, 1), random_form(R, 2, 2), random_form(R, 2, 3),
                    random_form(R, 2, 4)});
    const auto rep = base_locus(I, 2);
    CHECK(rep.verdict == BaseLocus::Empty);
    CHECK(finite_base_locus(I, 2) == std::optional<bool>(true));
  }
  SUBCASE("three general forms cut points") {
    IdealGens I(R, {random_form(R, 1, 1), random_form(R, 2, 2), random_form(R, 2, 3)});
    const auto rep = base_locus(I, 2);
    CHECK(rep.verdict == BaseLocus::Finite);
    CHECK(rep.plateau == 4);
  }
  SUBCASE("two forms cut a curve") {
    IdealGens I(R, {random_form(R, 1, 1), random_form(R, 2, 2)});
    CHECK(base_locus(I, 2).verdict == BaseLocus::PositiveDimensional);
    CHECK(finite_base_locus(I, 2) == std::optional<bool>(false));
  }
}

TEST_CASE("pullback requires a base point free map") {
  const GradedRing R = ring3();
  IdealGens I(R, {random_form(R, 1, 1)});
  std::vector<Polynomial> bad;
  for (int i = 0; i < 4; ++i) bad.push_back(power(Polynomial::variable(R, i == 3 ? 2 : i), 2));
  CHECK_THROWS_AS(pullback_gens(I, bad), PreconditionError);
}

TEST_CASE("ideal files roundtrip and report line numbers") {
  const GradedRing R = ring3(8191);
  IdealGens I(R, {random_form(R, 1, 3), random_form(R, 2, 4)});
  const IdealGens back = parse_ideal(to_text(I));
  CHECK(back.ring() == R);
  CHECK(back.gens() == I.gens());

  try {
    parse_ideal("ring n=3 p=8191\n# comment\n\nx0 + x1\nx0*x1 + x2\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 5);
  }
  CHECK_THROWS_AS(parse_ideal("ring n=3 p=8190\nx0\n"), ParseError);
  CHECK_THROWS_AS(parse_ideal("x0\n"), ParseError);
}

TEST_CASE("entry guard is enforced") {
  const GradedRing R = ring3();
  IdealGens I(R, {random_form(R, 2, 1)});
  CHECK_THROWS_AS(graded_piece_direct(I, 30, 1000), GuardExceeded);
}
