#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nodal/defect.hpp"
#include "nodal/graded_ideal.hpp"

namespace nodal {

/// ceil(3d/2) - 3: from this degree on the node ideal's Hilbert function
/// equals the number of nodes.
int default_kmax(int d);

/// f = x0 f1 + f2^2 f3 in P^3, singular along the complete intersection
/// (x0, f2, f1) of multidegree (1, a, d-1). f2 and f3 involve x1, x2, x3 only.
struct NodalExample {
  int d;
  int a;
  std::uint64_t seed;  // seed of the accepted draw
  int attempts;        // draws used, 1 when the first one was general
  Polynomial f1, f2, f3, f;
  IdealGens node_ideal;
  int kmax;
  HilbertTable hilbert;  // h of node_ideal for 0 <= k <= kmax + 3
  std::int64_t length;
};

/// Validates a given decomposition: ranges of d and a, p not dividing d, the
/// partials lying in the node ideal and a plateau of length a(d-1). Throws
/// PreconditionError or GenericityFailure. kmax < 0 means default_kmax(d).
NodalExample make_example(int d, int a, const Polynomial& f1, const Polynomial& f2,
                          const Polynomial& f3, int kmax = -1);

/// Seeded draw of f1, f2, f3 (f3 a nonzero constant when a = d/2), redrawn
/// with derived seeds until make_example accepts, at most max_attempts times.
NodalExample build_example(int d, int a, const GradedRing& ring, std::uint64_t seed,
                           int kmax = -1, int max_attempts = 16);

/// The four partial derivatives. Throws PreconditionError when p divides deg f.
IdealGens jacobian_ideal(const Polynomial& f);

struct TangentDims {
  std::int64_t expected_codim;  // number of nodes
  std::int64_t actual_codim;    // nodes minus the defect in degree d
  std::int64_t excess;          // defect in degree d
  std::int64_t dim_I_d;
  std::int64_t dim_J_d;
  std::int64_t aut_gap;         // dim (I/J)_d - dim I_d/<f>
};

TangentDims tangent_dims(const NodalExample& ex);

struct AlexanderExponent {
  std::int64_t exponent;
  std::int64_t bound;  // d^2 - 3d + 3
  int degree;          // 3d/2 - 4, or -1 for odd d
};

/// Exponent of (t+1) in the Alexander polynomial: the defect of the node
/// ideal in degree 3d/2 - 4, and 0 for odd d.
AlexanderExponent alexander_exponent(const HilbertTable& h, std::int64_t length, int d);
AlexanderExponent alexander_exponent(const IdealGens& node_ideal, int d);

struct CIStep {
  int k;
  std::int64_t h_ideal;      // h_I(k)
  std::int64_t h_lower;      // h of the ideal of generators found below k
  std::int64_t new_generators;
};

struct CIDetection {
  bool verdict;
  std::vector<int> generator_degrees;
  std::int64_t length;  // -1 when the table has no plateau
  std::vector<CIStep> evidence;
};

/// Reads minimal generator degrees up to kmax from Hilbert-function
/// comparisons with the ideal of the generators found so far. The verdict
/// requires degrees exactly (1, 4, d-1) and length 4(d-1).
CIDetection detect_ci(const IdealGens& I, int d, int kmax = -1);

struct LocusDims {
  std::int64_t dim_L0;
  std::int64_t dim_L;
  std::int64_t codim_L;  // in S_d
};

/// Closed forms for surfaces singular along a (1, a, d-1) complete
/// intersection, with the plane fixed (L0) or free (L). The codimension is
/// checked against (-5a^2 + 3a + 4da - 6) / 2.
LocusDims locus_dims(int d, int a);

enum class PointType { Smooth, Node, Degenerate };

std::string_view to_string(PointType t);

/// Node when f and its gradient vanish at P and the Hessian of a local
/// dehomogenization has full rank 3.
PointType classify_singular_point(const Polynomial& f, std::span<const Scalar> P);

struct SpotcheckReport {
  std::int64_t enumerated = 0;  // rational points of the plane x0 = 0
  std::int64_t on_locus = 0;    // common rational zeros of the node ideal
  std::int64_t nodes = 0;
  std::int64_t non_nodes = 0;
};

/// Enumerates the rational points of the node locus. Requires p <= 101.
SpotcheckReport rational_node_spotcheck(const NodalExample& ex);

/// "<", "=" or ">".
std::string compare(std::int64_t lhs, std::int64_t rhs);

struct AnalysisReport {
  int d = 0;
  int a = 0;
  std::uint64_t prime = 0;
  std::uint64_t seed = 0;
  HilbertTable hilbert;
  std::int64_t length = 0;
  std::int64_t defect_d = 0;
  std::int64_t tangent_expected_codim = 0;
  std::int64_t tangent_actual_codim = 0;
  std::int64_t tangent_excess = 0;
  std::int64_t jacobian_dim_d = 0;
  std::int64_t alexander_exponent = 0;
  std::int64_t alexander_bound = 0;
  bool ci_1_4_dm1 = false;
  std::int64_t dim_L0 = 0;
  std::int64_t dim_L = 0;
  std::int64_t codim_L = 0;
  std::string codim_L_vs_length;
  std::string codim_L_vs_h_d;

  // Not serialized.
  std::int64_t aut_gap = 0;
  std::vector<MacaulayViolation> macaulay_violations;
};

AnalysisReport analyze(const NodalExample& ex);

}  // namespace nodal
