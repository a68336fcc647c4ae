#include "nodal/defect.hpp"

#include <algorithm>

#include "nodal/combinatorics.hpp"
#include "nodal/errors.hpp"

namespace nodal {

std::int64_t BettiAlt::at(int j) const {
  if (j < 0) return 0;
  if (j > jmax())
    throw PreconditionError("B_" + std::to_string(j) + " lies past the computed range (jmax " +
                            std::to_string(jmax()) + ")");
  return values[static_cast<std::size_t>(j)];
}

BettiAlt betti_alternating(const HilbertTable& h, int n, int jmax) {
  if (n < 1) throw PreconditionError("ambient dimension must be positive");
  if (jmax < 0) jmax = h.kmax();
  if (jmax > h.kmax() || h.empty())
    throw PreconditionError("Hilbert table too short: B_" + std::to_string(jmax) +
                            " needs h up to degree " + std::to_string(jmax));
  BettiAlt B{n, std::vector<std::int64_t>(static_cast<std::size_t>(jmax) + 1, 0)};
  for (int k = 0; k <= jmax; ++k) {
    std::int64_t v = h.at(k);
    for (int j = 0; j < k; ++j) v -= B.values[j] * binomial(n + k - j, n);
    B.values[k] = v;
  }
  return B;
}

HilbertTable hilbert_from_betti(const BettiAlt& B, int kmax) {
  if (B.jmax() < 0) throw PreconditionError("empty Betti table");
  std::vector<std::int64_t> h(static_cast<std::size_t>(std::max(kmax, -1) + 1), 0);
  for (int k = 0; k <= kmax; ++k)
    for (int j = 0; j <= std::min(k, B.jmax()); ++j)
      h[k] += B.values[j] * binomial(B.n + k - j, B.n);
  return HilbertTable(std::move(h));
}

std::int64_t hilbert_polynomial(const BettiAlt& B, std::int64_t x) {
  std::int64_t v = 0;
  for (int j = 0; j <= B.jmax(); ++j) v += B.values[j] * binomial_poly(B.n + x - j, B.n);
  return v;
}

std::int64_t length_of(const HilbertTable& h, int window) {
  if (window < 1) throw PreconditionError("plateau window must be positive");
  if (h.kmax() + 1 < window)
    throw NoPlateau("Hilbert table has " + std::to_string(h.kmax() + 1) +
                    " entries, fewer than the window " + std::to_string(window));
  const std::int64_t last = h.values.back();
  for (int i = 0; i < window; ++i)
    if (h.at(h.kmax() - i) != last)
      throw NoPlateau("h is not constant on the last " + std::to_string(window) +
                      " degrees up to " + std::to_string(h.kmax()));
  return last;
}

std::int64_t defect_via_betti(const BettiAlt& B, int k) {
  const int n = B.n;
  std::int64_t s = 0;
  for (int j = k + n + 1; j <= B.jmax(); ++j) s += B.values[j] * binomial(j - k - 1, n);
  return n % 2 == 0 ? s : -s;
}

DefectReport defect(const HilbertTable& h, int n, std::int64_t length, int k) {
  if (k < 0 || k > h.kmax())
    throw PreconditionError("no Hilbert value in degree " + std::to_string(k));
  // With h constant on the last n+1 degrees every B_j past the table vanishes,
  // so the Betti sum below is complete.
  if (h.kmax() < n)
    throw PreconditionError("Hilbert table must cover the plateau window");
  for (int i = 0; i <= n; ++i)
    if (h.at(h.kmax() - i) != length)
      throw PreconditionError("Hilbert table does not end on a plateau of width " +
                              std::to_string(n + 1) + " at the length " +
                              std::to_string(length));
  const BettiAlt B = betti_alternating(h, n);
  DefectReport r;
  r.k = k;
  r.length = length;
  r.h_k = h.at(k);
  r.delta = length - r.h_k;
  r.delta_via_betti = defect_via_betti(B, k);
  if (r.delta != r.delta_via_betti)
    throw InternalMismatch("defect in degree " + std::to_string(k) + ": length - h = " +
                           std::to_string(r.delta) + " but the Betti sum gives " +
                           std::to_string(r.delta_via_betti));
  return r;
}

std::vector<MacaulayViolation> macaulay_gotzmann_check(const HilbertTable& h,
                                                       const std::map<int, bool>& base_point_free) {
  std::vector<MacaulayViolation> out;
  for (int k = 0; k < h.kmax(); ++k) {
    const std::int64_t hk = h.at(k), next = h.at(k + 1);
    if (hk > k) continue;
    if (next > hk)
      out.push_back({k, 1, "h(" + std::to_string(k) + ") = " + std::to_string(hk) +
                               " <= " + std::to_string(k) + " but h(" + std::to_string(k + 1) +
                               ") = " + std::to_string(next)});
    const auto it = base_point_free.find(k + 1);
    if (it != base_point_free.end() && it->second && hk != 0 && next >= hk)
      out.push_back({k, 2, "I_" + std::to_string(k + 1) + " is base point free but h(" +
                               std::to_string(k + 1) + ") = " + std::to_string(next) +
                               " is not below h(" + std::to_string(k) + ") = " +
                               std::to_string(hk)});
  }
  return out;
}

HilbertTable hilbert_to_plateau(GradedIdeal& ideal, int window, int min_kmax, int max_degree) {
  if (window < 1) throw PreconditionError("plateau window must be positive");
  std::vector<std::int64_t> h;
  for (int k = 0;; ++k) {
    if (k > max_degree)
      throw NoPlateau("no plateau of width " + std::to_string(window) + " up to degree " +
                      std::to_string(max_degree));
    h.push_back(ideal.hilbert(k));
    if (k < min_kmax || k + 1 < window) continue;
    if (std::all_of(h.end() - window, h.end(), [&](std::int64_t v) { return v == h.back(); }))
      return HilbertTable(std::move(h));
  }
}

std::vector<std::string> pullback_law_failures(const BettiAlt& base, const BettiAlt& pulled,
                                               int t) {
  if (t < 1) throw PreconditionError("pullback degree must be positive");
  std::vector<std::string> out;
  for (int j = 0; j <= pulled.jmax(); ++j) {
    const std::int64_t v = pulled.at(j);
    if (j % t != 0) {
      if (v != 0)
        out.push_back("B_j(I_t)=0 for t not dividing j fails at j=" + std::to_string(j) +
                      ": B_" + std::to_string(j) + "(I_t) = " + std::to_string(v));
      continue;
    }
    const int q = j / t;
    const std::int64_t w = q <= base.jmax() ? base.at(q) : 0;
    if (v != w)
      out.push_back("B_{tj}(I_t)=B_j(I) fails at j=" + std::to_string(q) + ": B_" +
                    std::to_string(j) + "(I_t) = " + std::to_string(v) + ", B_" +
                    std::to_string(q) + "(I) = " + std::to_string(w));
  }
  return out;
}

PullbackReport pullback_betti_check(const IdealGens& I, std::span<const Polynomial> images,
                                    int k) {
  if (images.empty()) throw PreconditionError("no images given");
  const int n = I.ring().n();
  const int t = images.front().degree();
  if (images.front().ring().n() != n)
    throw DimensionMismatch("pullback must map P^n to itself");
  const int window = n + 1;

  PullbackReport r;
  r.t = t;
  r.k = k;
  GradedIdeal base(I);
  GradedIdeal pulled(pullback_gens(I, images));
  r.base_hilbert = hilbert_to_plateau(base, window, std::max(k - n, 0));
  r.pulled_hilbert = hilbert_to_plateau(
      pulled, window, std::max(t * r.base_hilbert.kmax(), t * k - n - 1));
  const int base_need = (r.pulled_hilbert.kmax() + t - 1) / t;
  if (base_need > r.base_hilbert.kmax())
    r.base_hilbert = hilbert_to_plateau(base, window, base_need);

  r.base_length = length_of(r.base_hilbert, window);
  r.pulled_length = length_of(r.pulled_hilbert, window);
  r.base_betti = betti_alternating(r.base_hilbert, n);
  r.pulled_betti = betti_alternating(r.pulled_hilbert, n);
  r.law_failures = pullback_law_failures(r.base_betti, r.pulled_betti, t);

  if (k >= 0) {
    const std::int64_t h_base = k - n >= 0 ? r.base_hilbert.at(k - n) : 0;
    r.hypothesis = h_base != r.base_length;
    const int deg = t * k - n - 1;
    const std::int64_t h_pulled = deg >= 0 ? r.pulled_hilbert.at(deg) : 0;
    r.bound_lhs = r.pulled_length - h_pulled;
    r.bound_rhs = binomial(n + t, n) - n;
  }
  return r;
}

}  // namespace nodal
