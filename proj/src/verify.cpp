#include "nodal/verify.hpp"

#include <chrono>
#include <numeric>
#include <sstream>

#include "nodal/combinatorics.hpp"
#include "nodal/defect.hpp"
#include "nodal/errors.hpp"
#include "nodal/report.hpp"

namespace nodal {

const NodalExample& VerifyContext::example(int d, int a, std::uint64_t prime) {
  const auto key = std::make_tuple(d, a, prime);
  auto it = examples_.find(key);
  if (it == examples_.end())
    it = examples_.emplace(key, build_example(d, a, GradedRing(3, PrimeField(prime)), opts_.seed))
             .first;
  return it->second;
}

const AnalysisReport& VerifyContext::report(int d, int a, std::uint64_t prime) {
  const auto key = std::make_tuple(d, a, prime);
  auto it = reports_.find(key);
  if (it == reports_.end()) it = reports_.emplace(key, analyze(example(d, a, prime))).first;
  return it->second;
}

namespace {

// Counts assertions and keeps the first failure.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok && failures_++ == 0) first_ = what;
  }
  template <class T>
  void equal(const T& got, const T& want, const std::string& what) {
    std::ostringstream s;
    s << what << ": got " << got << ", expected " << want;
    expect(got == want, s.str());
  }
  CheckOutcome outcome() const {
    if (failures_ == 0) return {true, std::to_string(count_) + " assertions"};
    return {false, first_ + " (" + std::to_string(failures_) + " of " + std::to_string(count_) +
                       " assertions failed)"};
  }

 private:
  int count_ = 0;
  int failures_ = 0;
  std::string first_;
};

std::string tag(int d, int a, std::uint64_t p) {
  return "d=" + std::to_string(d) + " a=" + std::to_string(a) + " p=" + std::to_string(p);
}

// Numerator prod (1 - z^e) of the Hilbert series of a complete intersection.
std::vector<std::int64_t> ci_numerator(const std::vector<int>& degrees, int jmax) {
  std::vector<std::int64_t> num(static_cast<std::size_t>(jmax) + 1, 0);
  num[0] = 1;
  for (int e : degrees)
    for (int k = jmax; k >= e; --k) num[k] -= num[k - e];
  return num;
}

std::vector<std::int64_t> ci_hilbert(int n, const std::vector<int>& degrees, int kmax) {
  std::vector<std::int64_t> h = ci_numerator(degrees, kmax);
  for (int r = 0; r <= n; ++r)
    for (int k = 1; k <= kmax; ++k) h[k] += h[k - 1];
  return h;
}

template <class F>
void for_each_example(VerifyContext& ctx, F&& f) {
  for (int d = 8; d <= 12; ++d)
    for (int a = 4; 2 * a <= d; ++a)
      for (std::uint64_t p : ctx.options().primes) f(d, a, p);
}

CheckOutcome check_ci_defect(VerifyContext& ctx) {
  Tally t;
  for (int d : {8, 10, 12})
    for (std::uint64_t p : ctx.options().primes) {
      const auto start = std::chrono::steady_clock::now();
      const AnalysisReport& r = ctx.report(d, 4, p);
      const double secs =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      const std::string at = tag(d, 4, p);
      t.equal<std::int64_t>(r.defect_d, 1, at + " defect_d");
      t.equal<std::int64_t>(r.tangent_actual_codim, 4 * (d - 1) - 1, at + " tangent_actual_codim");
      t.expect(r.ci_1_4_dm1, at + " detect_ci is false");
      t.expect(r.hilbert.values == ci_hilbert(3, {1, 4, d - 1}, r.hilbert.kmax()),
               at + " Hilbert function differs from the Koszul series");
      t.expect(secs < 10.0, at + " took " + std::to_string(secs) + " s");
    }
  return t.outcome();
}

CheckOutcome check_stabilization(VerifyContext& ctx) {
  Tally t;
  for_each_example(ctx, [&](int d, int a, std::uint64_t p) {
    const NodalExample& ex = ctx.example(d, a, p);
    for (int k = default_kmax(d); k <= ex.kmax + 3; ++k)
      t.equal(ex.hilbert.at(k), ex.length, tag(d, a, p) + " h(" + std::to_string(k) + ")");
  });
  return t.outcome();
}

CheckOutcome check_gorenstein(VerifyContext& ctx) {
  Tally t;
  const std::vector<std::int64_t> table{1, 2, 3, 4, 4, 4, 4, 3, 2, 1, 0};
  for_each_example(ctx, [&](int d, int a, std::uint64_t p) {
    const NodalExample& ex = ctx.example(d, a, p);
    const std::string at = tag(d, a, p);
    const int top = ex.hilbert.kmax();
    const LinearSection H = general_linear_section(ex.node_ideal, ctx.options().seed, top);
    const HilbertTable hH = hilbert_fn(H.ideal, top);
    if (d == 8 && a == 4)
      t.expect(std::vector<std::int64_t>(hH.values.begin(), hH.values.begin() + 11) == table,
               at + " h of the hyperplane section is not (1,2,3,4,4,4,4,3,2,1,0)");
    std::int64_t sum = 0;
    for (int k = 0; k <= top; ++k) {
      sum += hH.at(k);
      t.equal(sum, ex.hilbert.at(k), at + " partial sum of h_H up to " + std::to_string(k));
    }
    const GorensteinClosure J = gorenstein_closure(H.ideal, d);
    t.equal<std::int64_t>(J.hilbert.at(d + 1), 1, at + " h_J(d+1)");
    for (int k = 0; k <= d + 1; ++k)
      t.equal(J.hilbert.at(k), J.hilbert.at(d + 1 - k),
              at + " h_J(" + std::to_string(k) + ") vs h_J(d+1-k)");
  });
  return t.outcome();
}

CheckOutcome check_betti(VerifyContext& ctx) {
  Tally t;
  const std::uint64_t p = ctx.options().primes.front();
  const GradedRing R(3, PrimeField(p));
  for (std::uint64_t s = 0; s < 100; ++s) {
    std::vector<Polynomial> gens;
    const int count = 1 + static_cast<int>(s % 5);
    for (int i = 0; i < count; ++i)
      gens.push_back(random_form(R, 1 + static_cast<int>((s + 2 * i) % 4), derive_seed(s, i)));
    const HilbertTable h = hilbert_fn(IdealGens(R, gens), 10);
    t.expect(hilbert_from_betti(betti_alternating(h, 3), 10) == h,
             "roundtrip fails on seeded ideal " + std::to_string(s));
  }
  // defect() raises InternalMismatch when the two formulas disagree.
  for_each_example(ctx, [&](int d, int a, std::uint64_t q) {
    const NodalExample& ex = ctx.example(d, a, q);
    for (int k = 0; k <= ex.hilbert.kmax(); ++k) {
      const DefectReport r = defect(ex.hilbert, 3, ex.length, k);
      t.equal(r.delta, r.delta_via_betti, tag(d, a, q) + " defect formulas");
    }
    t.expect(hilbert_from_betti(betti_alternating(ex.hilbert, 3), ex.hilbert.kmax()) == ex.hilbert,
             tag(d, a, q) + " roundtrip");
  });
  for (std::uint64_t q : ctx.options().primes) {
    const NodalExample& ex = ctx.example(8, 4, q);
    const BettiAlt B = betti_alternating(ex.hilbert, 3);
    const auto want = ci_numerator({1, 4, 7}, B.jmax());
    for (int j : {0, 1, 4, 5, 7, 8, 11, 12})
      t.equal(B.at(j), want[j], tag(8, 4, q) + " B_" + std::to_string(j));
    t.expect(B.values == want, tag(8, 4, q) + " B has support off {0,1,4,5,7,8,11,12}");
  }
  return t.outcome();
}

CheckOutcome check_pullback(VerifyContext& ctx) {
  Tally t;
  for (std::uint64_t p : ctx.options().primes) {
    const NodalExample& ex = ctx.example(8, 4, p);
    std::vector<Polynomial> squares;
    for (int i = 0; i < 4; ++i) squares.push_back(power(Polynomial::variable(ex.f.ring(), i), 2));
    const PullbackReport r = pullback_betti_check(ex.node_ideal, squares, 11);
    const std::string at = tag(8, 4, p);
    t.expect(r.hypothesis, at + " h_I(k-n) equals the length");
    t.equal<std::int64_t>(r.bound_lhs, 9, at + " defect of I_2 in degree 18");
    t.equal<std::int64_t>(r.bound_rhs, 7, at + " C(5,3) - 3");
    t.expect(r.bound_holds(), at + " bound fails");
    BettiAlt base = r.base_betti;
    if (ctx.options().inject_betti_fault) base.values[4] = -base.values[4];
    const auto failures = pullback_law_failures(base, r.pulled_betti, 2);
    t.expect(failures.empty(), at + " " + (failures.empty() ? "" : failures.front()));
  }
  return t.outcome();
}

CheckOutcome check_alexander(VerifyContext& ctx) {
  Tally t;
  for (std::uint64_t p : ctx.options().primes) {
    t.equal<std::int64_t>(ctx.report(10, 4, p).alexander_exponent, 0, tag(10, 4, p) + " exponent");
    t.equal<std::int64_t>(ctx.report(10, 5, p).alexander_exponent, 1, tag(10, 5, p) + " exponent");
    t.equal<std::int64_t>(ctx.report(9, 4, p).alexander_exponent, 0, tag(9, 4, p) + " exponent");
    t.equal<std::int64_t>(ctx.report(10, 4, p).alexander_bound, 73, tag(10, 4, p) + " bound");
  }
  for_each_example(ctx, [&](int d, int a, std::uint64_t p) {
    const AnalysisReport& r = ctx.report(d, a, p);
    t.expect(r.alexander_exponent <= r.alexander_bound, tag(d, a, p) + " exponent above bound");
  });
  return t.outcome();
}

CheckOutcome check_locus(VerifyContext& ctx) {
  Tally t;
  t.equal<std::int64_t>(locus_dims(8, 4).codim_L, 27, "codim_L(8,4)");
  t.equal<std::int64_t>(locus_dims(10, 4).codim_L, 43, "codim_L(10,4)");
  t.equal<std::int64_t>(locus_dims(10, 5).codim_L, 42, "codim_L(10,5)");
  for (std::uint64_t p : ctx.options().primes) {
    t.equal<std::int64_t>(ctx.example(8, 4, p).hilbert.at(8), 27, tag(8, 4, p) + " h_I(8)");
    t.equal<std::int64_t>(ctx.example(10, 4, p).hilbert.at(10), 35, tag(10, 4, p) + " h_I(10)");
    t.equal<std::int64_t>(ctx.example(10, 5, p).hilbert.at(10), 42, tag(10, 5, p) + " h_I(10)");
    t.equal<std::string>(ctx.report(8, 4, p).codim_L_vs_h_d, "=", tag(8, 4, p) + " codim_L vs h_I(d)");
    t.equal<std::string>(ctx.report(10, 4, p).codim_L_vs_h_d, ">", tag(10, 4, p) + " codim_L vs h_I(d)");
    t.equal<std::string>(ctx.report(10, 5, p).codim_L_vs_h_d, "=", tag(10, 5, p) + " codim_L vs h_I(d)");
  }
  return t.outcome();
}

CheckOutcome check_dictionary(VerifyContext& ctx) {
  Tally t;
  for_each_example(ctx, [&](int d, int a, std::uint64_t p) {
    const AnalysisReport& r = ctx.report(d, a, p);
    t.equal<std::int64_t>(r.jacobian_dim_d, 16, tag(d, a, p) + " dim J_d");
    t.equal<std::int64_t>(r.aut_gap, -15, tag(d, a, p) + " dim (I/J)_d - dim I_d/<f>");
    t.equal(r.tangent_excess, r.defect_d, tag(d, a, p) + " tangent excess");
  });
  return t.outcome();
}

CheckOutcome check_macaulay(VerifyContext& ctx) {
  Tally t;
  for_each_example(ctx, [&](int d, int a, std::uint64_t p) {
    const AnalysisReport& r = ctx.report(d, a, p);
    t.expect(r.macaulay_violations.empty(),
             tag(d, a, p) + (r.macaulay_violations.empty() ? "" : " " + r.macaulay_violations[0].detail));
  });
  for (std::uint64_t p : ctx.options().primes) {
    // Four general quadrics: the base locus is empty from degree 2 on.
    const GradedRing R(3, PrimeField(p));
    std::vector<Polynomial> q;
    for (int i = 0; i < 4; ++i) q.push_back(random_form(R, 2, derive_seed(ctx.options().seed, i)));
    const IdealGens I(R, q);
    const HilbertTable h = hilbert_fn(I, 8);
    std::map<int, bool> bpf;
    for (int k = 2; k <= 8; ++k) bpf[k] = base_locus(I, k).verdict == BaseLocus::Empty;
    const auto v = macaulay_gotzmann_check(h, bpf);
    t.expect(v.empty(), "complete intersection of quadrics over p=" + std::to_string(p) +
                            (v.empty() ? "" : ": " + v[0].detail));
  }
  const auto synthetic = macaulay_gotzmann_check(HilbertTable({1, 4, 10, 12, 6, 4, 5, 5}));
  t.expect(synthetic.size() == 1 && synthetic[0].k == 5,
           "synthetic table with h(5)=4, h(6)=5 is not flagged at k=5");
  return t.outcome();
}

CheckOutcome check_determinism(VerifyContext& ctx) {
  Tally t;
  SweepConfig cfg;
  cfg.d_min = 8;
  cfg.d_max = 10;
  cfg.primes = ctx.options().primes;
  cfg.seeds = {ctx.options().seed};
  const auto first = run_sweep(cfg);
  const auto second = run_sweep(cfg);
  t.expect(sweep_csv(first) == sweep_csv(second), "sweep output differs between runs");
  t.equal<std::size_t>(first.size(), 4 * cfg.primes.size(), "sweep row count");
  for (const auto& row : first) {
    t.expect(row.ok, tag(row.d, row.a, row.prime) + " failed: " + row.error);
    t.expect(row.consensus, tag(row.d, row.a, row.prime) + " disagrees across primes");
  }
  return t.outcome();
}

}  // namespace

const std::vector<AcceptanceCheck>& acceptance_checks() {
  static const std::vector<AcceptanceCheck> checks{
      {1, "ci-defect",
       "4(d-1) nodes on a (1,4,d-1) complete intersection: defect 1 in degree d, "
       "tangent codimension 4(d-1)-1 (d = 8, 10, 12)",
       check_ci_defect},
      {2, "stabilization", "h_I(k) = #nodes for ceil(3d/2)-3 <= k <= kmax+3", check_stabilization},
      {3, "gorenstein",
       "h_I(k) = sum_{j<=k} h_{I_H}(j); h_{I_H} = (1,2,3,4,4,4,4,3,2,1,0) for d=8, a=4; "
       "h_J(k) = h_J(d+1-k)",
       check_gorenstein},
      {4, "betti",
       "h_I(k) = sum_j B_j C(n+k-j, n) inverts exactly; "
       "length - h_I(k) = (-1)^n sum_{j>=k+n+1} B_j C(j-k-1, n)",
       check_betti},
      {5, "pullback",
       "B_{tj}(I_t)=B_j(I) and B_j(I_t)=0 for t not dividing j; "
       "length(I_t) - h_{I_t}(tk-n-1) >= C(n+t,n) - n",
       check_pullback},
      {6, "alexander",
       "exponent of (t+1) is the defect in degree 3d/2-4, zero for odd d, at most d^2-3d+3",
       check_alexander},
      {7, "locus", "codim_L = (-5a^2+3a+4da-6)/2 against h_I(d)", check_locus},
      {8, "dictionary", "dim J_d = 16 and dim (I/J)_d - dim I_d/<f> = -15", check_dictionary},
      {9, "macaulay",
       "h_I(k) <= k implies h_I(k+1) <= h_I(k), strictly when I_{k+1} is base point free",
       check_macaulay},
      {10, "determinism", "sweep over d in [8,10] is byte-identical and agrees across primes",
       check_determinism},
  };
  return checks;
}

std::vector<CheckResult> run_checks(const VerifyOptions& opts, std::string_view only) {
  const auto& checks = acceptance_checks();
  std::vector<bool> selected(checks.size(), only.empty());
  std::size_t pos = 0;
  while (!only.empty() && pos <= only.size()) {
    const std::size_t end = std::min(only.find(',', pos), only.size());
    const std::string_view item = only.substr(pos, end - pos);
    pos = end + 1;
    if (item.empty()) continue;
    bool hit = false;
    for (std::size_t i = 0; i < checks.size(); ++i)
      if (item == checks[i].name || item == std::to_string(checks[i].number)) selected[i] = hit = true;
    if (!hit) throw PreconditionError("unknown check '" + std::string(item) + "'");
  }

  VerifyContext ctx(opts);
  std::vector<CheckResult> out;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    if (!selected[i]) continue;
    const AcceptanceCheck& c = checks[i];
    CheckResult r{c.number, c.name, c.claim, false, {}};
    try {
      const CheckOutcome o = c.run(ctx);
      r.passed = o.passed;
      r.detail = o.detail;
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace nodal
