#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nodal/hilbert_table.hpp"
#include "nodal/linalg.hpp"
#include "nodal/polynomial.hpp"

namespace nodal {

/// A homogeneous generating set. Zero generators are allowed and ignored.
class IdealGens {
 public:
  IdealGens(GradedRing ring, std::vector<Polynomial> gens);
  static IdealGens zero(GradedRing ring) { return IdealGens(std::move(ring), {}); }

  const GradedRing& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& gens() const noexcept { return gens_; }
  std::vector<int> degrees() const;

 private:
  GradedRing ring_;
  std::vector<Polynomial> gens_;
};

/// I_k as a subspace of S_k, coordinates over monomial_basis(ring, k).
struct GradedPiece {
  GradedRing ring;
  int degree;
  RowBasis subspace;

  std::size_t dim() const noexcept { return subspace.rank(); }
  std::int64_t hilbert() const noexcept {
    return static_cast<std::int64_t>(subspace.codim());
  }
};

/// Degree-by-degree model of an ideal.
///
/// I_k is built from I_{k-1} and the generators of degree k, since
/// I_k = S_1 I_{k-1} + span(gens of degree k). Each piece is held in reduced
/// echelon form with columns in decreasing monomial order, so its pivots are
/// the leading monomials and the free columns are the standard monomials.
///
/// The elimination for degree k runs in the span of S_1 * (standard monomials
/// of degree k-1), which is small for zero-dimensional ideals; every other
/// monomial is rewritten into that span through x_j * NF(m / x_j). Products
/// x_i * b and x_j * b' with the same leading monomial are skipped when the
/// quotient of that monomial by x_i x_j already leads a row in degree k-2,
/// because their difference then reduces to rows with smaller leads.
class GradedIdeal {
 public:
  explicit GradedIdeal(IdealGens gens, int degree_guard = kDefaultDegreeGuard,
                       std::size_t entry_guard = kDefaultEntryGuard);

  const IdealGens& generators() const noexcept { return gens_; }
  const GradedRing& ring() const noexcept { return gens_.ring(); }

  const RowBasis& piece(int k);
  std::int64_t hilbert(int k);
  HilbertTable hilbert_table(int kmax);

  /// Coordinates of f mod I over the standard monomials of degree deg f.
  std::vector<Scalar> normal_form(const Polynomial& f);
  bool contains(const Polynomial& f);

 private:
  void extend_to(int k);
  void build_degree(int k);
  const std::vector<std::uint32_t>& up(int k);
  const std::vector<std::int32_t>& down(int k);

  IdealGens gens_;
  int degree_guard_;
  std::size_t entry_guard_;
  std::vector<RowBasis> pieces_;
  std::vector<std::vector<int>> exps_;             // per degree, flat
  std::vector<std::vector<std::uint32_t>> up_;     // x_i * v, v in degree k-1
  std::vector<std::vector<std::int32_t>> down_;    // u / x_i or -1
};

GradedPiece graded_piece(const IdealGens& I, int k);

/// Reference route: row reduction of the full Macaulay matrix
/// span{ m * g : deg m = k - deg g }.
GradedPiece graded_piece_direct(const IdealGens& I, int k,
                                std::size_t entry_guard = kDefaultEntryGuard);

HilbertTable hilbert_fn(const IdealGens& I, int kmax);

bool contains(const Polynomial& f, const IdealGens& I);

/// The ideal generated by pairwise products of generators.
IdealGens ideal_square(const IdealGens& I);

/// I_H = (I, l) expressed in n variables.
struct LinearSection {
  IdealGens ideal;
  Polynomial linear_form;
  int eliminated_variable;
};

/// Eliminates the last variable with a nonzero coefficient in l and rewrites
/// the generators in the remaining variables. Throws GenericityFailure unless
/// multiplication by l is injective on (S/I)_k for every k <= kmax.
LinearSection quotient_by_linear(const IdealGens& I, const Polynomial& l, int kmax);

/// quotient_by_linear with seeded general linear forms, reseeding up to
/// max_attempts times before throwing GenericityExhausted.
LinearSection general_linear_section(const IdealGens& I, std::uint64_t seed,
                                     int kmax, int max_attempts = 16);

using Point = std::vector<Scalar>;

/// { f in S_k : f(P) = 0 for every P }. Throws PreconditionError for a zero
/// or projectively repeated point.
GradedPiece vanishing_ideal_piece(const GradedRing& ring,
                                  std::span<const Point> points, int k);
HilbertTable vanishing_hilbert(const GradedRing& ring,
                               std::span<const Point> points, int kmax);

/// J_k = { f in S_k : f S_{top-k} in J_top } with top = d + 1 and J_top a
/// hyperplane of S_top containing (I_H)_top.
struct GorensteinClosure {
  int top;
  std::vector<GradedPiece> pieces;  // J_0 .. J_top
  HilbertTable hilbert;             // h_J(0) .. h_J(top)
  std::size_t kept_monomial;        // index in monomial_basis(top) spanning S/J_top
};

/// J_top keeps the largest standard monomial of (I_H)_top out of the
/// hyperplane. Throws PreconditionError when h_{I_H}(d+1) = 0.
GorensteinClosure gorenstein_closure(const IdealGens& IH, int d);

enum class BaseLocus { Empty, Finite, PositiveDimensional, Inconclusive };

std::string_view to_string(BaseLocus b);

struct BaseLocusReport {
  BaseLocus verdict;
  int start_degree;
  std::vector<std::int64_t> trace;  // h of (I_k) from start_degree on
  std::int64_t plateau = -1;        // eventual h when finite or empty
};

/// Dimension test for the base locus of the linear system I_k, via the
/// Hilbert function of the ideal generated by I_k: a plateau of `window`
/// equal values (default n + 1) means finite, Gotzmann persistence with
/// growth means positive dimensional.
BaseLocusReport base_locus(const IdealGens& I, int k, int window = -1,
                           int max_degree = kDefaultDegreeGuard);

/// true/false, or nullopt when the degree limit is hit first.
std::optional<bool> finite_base_locus(const IdealGens& I, int k);

/// Substitutes the images into every generator. The images must have no
/// common zero, which is certified by an empty base locus.
IdealGens pullback_gens(const IdealGens& I, std::span<const Polynomial> images);

/// Ideal file: "ring n=<n> p=<p>" then one polynomial per line. Blank lines
/// and lines starting with '#' are skipped.
IdealGens parse_ideal(std::string_view text);
IdealGens read_ideal_file(const std::string& path);
std::string to_text(const IdealGens& I);

}  // namespace nodal
