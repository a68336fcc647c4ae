#include "nodal/surface.hpp"

#include <algorithm>

#include "nodal/combinatorics.hpp"
#include "nodal/errors.hpp"
#include "nodal/linalg.hpp"

namespace nodal {

namespace {

constexpr int kWindow = 4;  // n + 1 for P^3

bool free_of_x0(const Polynomial& g) {
  return std::all_of(g.terms().begin(), g.terms().end(),
                     [](const auto& t) { return t.first[0] == 0; });
}

void check_range(int d, int a) {
  if (d < 8) throw PreconditionError("degree d = " + std::to_string(d) + " is below 8");
  if (a < 4 || 2 * a > d)
    throw PreconditionError("a = " + std::to_string(a) + " is outside [4, d/2] for d = " +
                            std::to_string(d));
}

}  // namespace

int default_kmax(int d) { return (3 * d + 1) / 2 - 3; }

NodalExample make_example(int d, int a, const Polynomial& f1, const Polynomial& f2,
                          const Polynomial& f3, int kmax) {
  check_range(d, a);
  const GradedRing& ring = f1.ring();
  if (ring.n() != 3) throw PreconditionError("surfaces live in P^3");
  if (!(f2.ring() == ring) || !(f3.ring() == ring))
    throw RingMismatch("f1, f2, f3 over different rings");
  if (d % static_cast<std::int64_t>(ring.field().modulus()) == 0)
    throw PreconditionError("characteristic " + std::to_string(ring.field().modulus()) +
                            " divides d = " + std::to_string(d));
  if (f1.degree() != d - 1 || f2.degree() != a || f3.degree() != d - 2 * a)
    throw DimensionMismatch("expected degrees (" + std::to_string(d - 1) + ", " +
                            std::to_string(a) + ", " + std::to_string(d - 2 * a) + ")");
  if (f2.is_zero() || f3.is_zero()) throw PreconditionError("f2 and f3 must be nonzero");
  if (!free_of_x0(f2) || !free_of_x0(f3))
    throw PreconditionError("f2 and f3 must not involve x0");
  if (kmax < 0) kmax = default_kmax(d);

  const Polynomial x0 = Polynomial::variable(ring, 0);
  Polynomial f = x0 * f1 + f2 * f2 * f3;
  IdealGens node(ring, {x0, f2, f1});
  GradedIdeal G(node);
  for (int i = 0; i < 4; ++i)
    if (!G.contains(partial_derivative(f, i)))
      throw InternalMismatch("partial derivative " + std::to_string(i) +
                             " is not in the node ideal");

  HilbertTable h = G.hilbert_table(kmax + 3);
  std::int64_t length;
  try {
    length = length_of(h, kWindow);
  } catch (const NoPlateau&) {
    throw GenericityFailure("node ideal has no plateau by degree " + std::to_string(kmax + 3));
  }
  const std::int64_t expected = static_cast<std::int64_t>(a) * (d - 1);
  if (length != expected)
    throw GenericityFailure("node ideal has length " + std::to_string(length) + ", not " +
                            std::to_string(expected));
  return NodalExample{d,    a,  0,  1,           f1,
                      f2,   f3, std::move(f), std::move(node), kmax,
                      std::move(h), length};
}

NodalExample build_example(int d, int a, const GradedRing& ring, std::uint64_t seed, int kmax,
                           int max_attempts) {
  check_range(d, a);
  if (ring.n() != 3) throw PreconditionError("surfaces live in P^3");
  if (d % static_cast<std::int64_t>(ring.field().modulus()) == 0)
    throw PreconditionError("characteristic " + std::to_string(ring.field().modulus()) +
                            " divides d = " + std::to_string(d));
  const std::vector<int> tail_vars{1, 2, 3};
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    const std::uint64_t s = attempt == 0 ? seed : derive_seed(seed, 0x5EED + attempt);
    const Polynomial f1 = random_form(ring, d - 1, derive_seed(s, 1));
    const Polynomial f2 = random_form_in(ring, a, derive_seed(s, 2), tail_vars);
    const Polynomial f3 = random_form_in(ring, d - 2 * a, derive_seed(s, 3), tail_vars);
    try {
      NodalExample ex = make_example(d, a, f1, f2, f3, kmax);
      ex.seed = seed;
      ex.attempts = attempt + 1;
      return ex;
    } catch (const GenericityFailure&) {
    }
  }
  throw GenericityExhausted("no general example for d = " + std::to_string(d) + ", a = " +
                            std::to_string(a) + " after " + std::to_string(max_attempts) +
                            " draws");
}

IdealGens jacobian_ideal(const Polynomial& f) {
  if (f.degree() % static_cast<std::int64_t>(f.ring().field().modulus()) == 0)
    throw PreconditionError("characteristic divides the degree " + std::to_string(f.degree()));
  std::vector<Polynomial> partials;
  for (int i = 0; i < f.ring().nvars(); ++i) partials.push_back(partial_derivative(f, i));
  return IdealGens(f.ring(), std::move(partials));
}

TangentDims tangent_dims(const NodalExample& ex) {
  const int d = ex.d;
  const DefectReport dr = defect(ex.hilbert, 3, ex.length, d);
  GradedIdeal J(jacobian_ideal(ex.f));
  TangentDims t;
  t.expected_codim = ex.length;
  t.excess = dr.delta;
  t.actual_codim = ex.length - dr.delta;
  t.dim_I_d = binomial(d + 3, 3) - ex.hilbert.at(d);
  t.dim_J_d = static_cast<std::int64_t>(J.piece(d).rank());
  // J_d lies in I_d since every partial lies in I.
  t.aut_gap = (t.dim_I_d - t.dim_J_d) - (t.dim_I_d - 1);
  return t;
}

AlexanderExponent alexander_exponent(const HilbertTable& h, std::int64_t length, int d) {
  AlexanderExponent r{0, static_cast<std::int64_t>(d) * d - 3 * d + 3, -1};
  if (d % 2 == 0) {
    r.degree = 3 * d / 2 - 4;
    r.exponent = defect(h, 3, length, r.degree).delta;
  }
  if (r.exponent > r.bound)
    throw InternalMismatch("Alexander exponent " + std::to_string(r.exponent) +
                           " exceeds the bound " + std::to_string(r.bound));
  return r;
}

AlexanderExponent alexander_exponent(const IdealGens& node_ideal, int d) {
  if (d % 2 != 0) return alexander_exponent(HilbertTable{}, 0, d);
  GradedIdeal G(node_ideal);
  const HilbertTable h = hilbert_to_plateau(G, kWindow, 3 * d / 2 - 4);
  return alexander_exponent(h, length_of(h, kWindow), d);
}

CIDetection detect_ci(const IdealGens& I, int d, int kmax) {
  if (kmax < 0) kmax = default_kmax(d);
  const GradedRing& ring = I.ring();
  GradedIdeal G(I);
  std::vector<Polynomial> found;
  CIDetection out{false, {}, -1, {}};
  for (int k = 0; k <= kmax; ++k) {
    GradedIdeal lower(IdealGens(ring, found));
    const std::int64_t hI = G.hilbert(k), hK = lower.hilbert(k);
    out.evidence.push_back({k, hI, hK, hK - hI});
    if (hK == hI) continue;
    EchelonBuilder b(ring.field(), ring.dim(k));
    b.insert_basis(lower.piece(k));
    const RowBasis& Ik = G.piece(k);
    for (std::size_t i = 0; i < Ik.rank(); ++i) {
      const std::vector<Scalar> row = Ik.row(i);
      if (b.insert(row)) {
        found.push_back(Polynomial::from_coefficients(ring, k, row));
        out.generator_degrees.push_back(k);
      }
    }
  }
  try {
    out.length = length_of(G.hilbert_table(kmax + 3), kWindow);
  } catch (const NoPlateau&) {
    out.length = -1;
  }
  out.verdict = out.generator_degrees == std::vector<int>{1, 4, d - 1} &&
                out.length == 4 * static_cast<std::int64_t>(d - 1);
  return out;
}

LocusDims locus_dims(int d, int a) {
  check_range(d, a);
  LocusDims r;
  const std::int64_t base = binomial(d + 2, 3) + binomial(a + 2, 2) + binomial(d - 2 * a + 2, 2);
  r.dim_L0 = base - 1;
  r.dim_L = base + 2;
  r.codim_L = binomial(d + 3, 3) - r.dim_L;
  const std::int64_t twice = -5LL * a * a + 3LL * a + 4LL * d * a - 6;
  if (twice != 2 * r.codim_L)
    throw InternalMismatch("codimension of L: " + std::to_string(r.codim_L) +
                           " from dimensions, " + std::to_string(twice) + "/2 from the closed form");
  return r;
}

std::string_view to_string(PointType t) {
  switch (t) {
    case PointType::Smooth: return "smooth";
    case PointType::Node: return "node";
    case PointType::Degenerate: return "degenerate";
  }
  return "unknown";
}

PointType classify_singular_point(const Polynomial& f, std::span<const Scalar> P) {
  const int nv = f.ring().nvars();
  if (static_cast<int>(P.size()) != nv) throw DimensionMismatch("point has wrong length");
  const auto chart = std::find_if(P.begin(), P.end(), [](Scalar c) { return c != 0; });
  if (chart == P.end()) throw PreconditionError("the zero vector is not a point");
  if (evaluate(f, P) != 0) return PointType::Smooth;
  std::vector<Polynomial> grad;
  for (int i = 0; i < nv; ++i) {
    grad.push_back(partial_derivative(f, i));
    if (evaluate(grad.back(), P) != 0) return PointType::Smooth;
  }
  const int skip = static_cast<int>(chart - P.begin());
  Matrix H(f.ring().field(), nv - 1, nv - 1);
  for (int i = 0, r = 0; i < nv; ++i) {
    if (i == skip) continue;
    for (int j = 0, c = 0; j < nv; ++j) {
      if (j == skip) continue;
      H.set(r, c++, evaluate(partial_derivative(grad[i], j), P));
    }
    ++r;
  }
  return rref(H).second == static_cast<std::size_t>(nv - 1) ? PointType::Node
                                                            : PointType::Degenerate;
}

SpotcheckReport rational_node_spotcheck(const NodalExample& ex) {
  const Scalar p = ex.f.ring().field().modulus();
  if (p > 101) throw PreconditionError("rational enumeration needs p <= 101");
  SpotcheckReport r;
  const auto visit = [&](Scalar x1, Scalar x2, Scalar x3) {
    const std::vector<Scalar> P{0, x1, x2, x3};
    ++r.enumerated;
    if (evaluate(ex.f2, P) != 0 || evaluate(ex.f1, P) != 0) return;
    ++r.on_locus;
    if (classify_singular_point(ex.f, P) == PointType::Node)
      ++r.nodes;
    else
      ++r.non_nodes;
  };
  for (Scalar y = 0; y < p; ++y)
    for (Scalar z = 0; z < p; ++z) visit(1, y, z);
  for (Scalar z = 0; z < p; ++z) visit(0, 1, z);
  visit(0, 0, 1);
  return r;
}

std::string compare(std::int64_t lhs, std::int64_t rhs) {
  return lhs < rhs ? "<" : lhs == rhs ? "=" : ">";
}

AnalysisReport analyze(const NodalExample& ex) {
  AnalysisReport r;
  r.d = ex.d;
  r.a = ex.a;
  r.prime = ex.f.ring().field().modulus();
  r.seed = ex.seed;
  r.hilbert = ex.hilbert;
  r.length = ex.length;

  const TangentDims t = tangent_dims(ex);
  r.defect_d = t.excess;
  r.tangent_expected_codim = t.expected_codim;
  r.tangent_actual_codim = t.actual_codim;
  r.tangent_excess = t.excess;
  r.jacobian_dim_d = t.dim_J_d;
  r.aut_gap = t.aut_gap;

  const AlexanderExponent alex = alexander_exponent(ex.hilbert, ex.length, ex.d);
  r.alexander_exponent = alex.exponent;
  r.alexander_bound = alex.bound;

  r.ci_1_4_dm1 = detect_ci(ex.node_ideal, ex.d, ex.kmax).verdict;

  const LocusDims L = locus_dims(ex.d, ex.a);
  r.dim_L0 = L.dim_L0;
  r.dim_L = L.dim_L;
  r.codim_L = L.codim_L;
  r.codim_L_vs_length = compare(L.codim_L, ex.length);
  r.codim_L_vs_h_d = compare(L.codim_L, ex.hilbert.at(ex.d));

  // The node ideal and the Jacobian ideal both vanish on the nodes, so no
  // piece is base point free.
  r.macaulay_violations = macaulay_gotzmann_check(ex.hilbert);
  const auto jv = macaulay_gotzmann_check(hilbert_fn(jacobian_ideal(ex.f), ex.kmax));
  r.macaulay_violations.insert(r.macaulay_violations.end(), jv.begin(), jv.end());
  return r;
}

}  // namespace nodal
