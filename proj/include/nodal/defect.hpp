#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nodal/graded_ideal.hpp"
#include "nodal/hilbert_table.hpp"

namespace nodal {

/// Alternating Betti numbers B_j = sum_i (-1)^i beta_{i,j} of S/I, tied to
/// the Hilbert function by h_I(k) = sum_{j<=k} B_j C(n+k-j, n).
struct BettiAlt {
  int n = 0;
  std::vector<std::int64_t> values;  // B_0 .. B_jmax

  int jmax() const noexcept { return static_cast<int>(values.size()) - 1; }
  std::int64_t at(int j) const;

  friend bool operator==(const BettiAlt&, const BettiAlt&) = default;
};

/// Solves the triangular system for B_0..B_jmax (jmax defaults to the table's
/// kmax; asking for more throws PreconditionError).
BettiAlt betti_alternating(const HilbertTable& h, int n, int jmax = -1);

HilbertTable hilbert_from_betti(const BettiAlt& B, int kmax);

/// Value at x of the Hilbert polynomial sum_j B_j C(n+x-j, n), with the
/// binomial read as a polynomial in x.
std::int64_t hilbert_polynomial(const BettiAlt& B, std::int64_t x);

/// The final plateau of a zero-dimensional Hilbert function: the last
/// `window` values must agree. Throws NoPlateau otherwise.
std::int64_t length_of(const HilbertTable& h, int window);

struct DefectReport {
  int k = 0;
  std::int64_t length = 0;
  std::int64_t h_k = 0;
  std::int64_t delta = 0;            // length - h(k)
  std::int64_t delta_via_betti = 0;  // (-1)^n sum_{j>=k+n+1} B_j C(j-k-1, n)
};

/// Both defect formulas; throws InternalMismatch when they disagree.
DefectReport defect(const HilbertTable& h, int n, std::int64_t length, int k);

/// The defect through the Betti sum alone.
std::int64_t defect_via_betti(const BettiAlt& B, int k);

struct MacaulayViolation {
  int k;
  int clause;  // 1: growth after h(k) <= k; 2: no strict drop with I_{k+1} base point free
  std::string detail;
};

/// Checks, for every k with h(k) <= k: h(k+1) <= h(k), and, when
/// base_point_free[k+1] is true, h(k+1) < h(k) or h(k) = 0.
std::vector<MacaulayViolation> macaulay_gotzmann_check(
    const HilbertTable& h, const std::map<int, bool>& base_point_free = {});

/// Extends the Hilbert table of `ideal` until its last `window` values agree
/// and it reaches at least min_kmax. Throws NoPlateau past max_degree.
HilbertTable hilbert_to_plateau(GradedIdeal& ideal, int window, int min_kmax = 0,
                                int max_degree = kDefaultDegreeGuard);

/// Failures of B_j(I_t) = 0 for t not dividing j and B_{tj}(I_t) = B_j(I),
/// over every j covered by `pulled`. Empty means both laws hold.
std::vector<std::string> pullback_law_failures(const BettiAlt& base,
                                               const BettiAlt& pulled, int t);

struct PullbackReport {
  int t = 0;
  HilbertTable base_hilbert;
  HilbertTable pulled_hilbert;
  BettiAlt base_betti;
  BettiAlt pulled_betti;
  std::int64_t base_length = 0;
  std::int64_t pulled_length = 0;
  std::vector<std::string> law_failures;

  // Bound length(I_t) - h_{I_t}(tk-n-1) >= C(n+t, n) - n, evaluated when the
  // hypothesis h_I(k-n) != length(I) holds.
  int k = -1;
  bool hypothesis = false;
  std::int64_t bound_lhs = 0;
  std::int64_t bound_rhs = 0;

  bool laws_hold() const noexcept { return law_failures.empty(); }
  bool bound_holds() const noexcept { return !hypothesis || bound_lhs >= bound_rhs; }
};

/// Computes B on I and on pullback_gens(I, images) independently and compares.
/// k < 0 skips the bound.
PullbackReport pullback_betti_check(const IdealGens& I, std::span<const Polynomial> images,
                                    int k = -1);

}  // namespace nodal
