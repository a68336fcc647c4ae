// Acceptance criteria 1-10, one PASS/FAIL line each, all at zero tolerance.
// Reference values come from the Koszul series in oracles.hpp or are literal.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "nodal/combinatorics.hpp"
#include "nodal/defect.hpp"
#include "nodal/report.hpp"
#include "nodal/surface.hpp"
#include "nodal/verify.hpp"
#include "oracles.hpp"

using namespace nodal;

namespace {

const std::vector<std::uint64_t> kPrimes{65521, 32749, 8191};
constexpr std::uint64_t kSeed = 7;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Result {
  bool ok = true;
  std::string why;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      why = what;
    }
  }
};

std::string at(int d, int a, std::uint64_t p) {
  return "d=" + std::to_string(d) + " a=" + std::to_string(a) + " p=" + std::to_string(p);
}

std::map<std::tuple<int, int, std::uint64_t>, NodalExample> cache;

const NodalExample& example(int d, int a, std::uint64_t p) {
  const auto key = std::make_tuple(d, a, p);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, build_example(d, a, GradedRing(3, PrimeField(p)), kSeed)).first;
  return it->second;
}

template <class F>
void all_examples(F&& f) {
  for (int d = 8; d <= 12; ++d)
    for (int a = 4; 2 * a <= d; ++a)
      for (std::uint64_t p : kPrimes) f(d, a, p);
}

Result criterion1() {
  Result r;
  for (int d : {8, 10, 12})
    for (std::uint64_t p : kPrimes) {
      const auto t0 = std::chrono::steady_clock::now();
      const AnalysisReport rep = analyze(example(d, 4, p));
      const double secs = seconds_since(t0);
      const auto koszul = oracle::koszul_hilbert(3, {1, 4, d - 1}, d);
      r.require(rep.defect_d == 1, at(d, 4, p) + " defect_d = " + std::to_string(rep.defect_d));
      r.require(4 * (d - 1) - koszul[d] == 1, at(d, 4, p) + " oracle defect is not 1");
      r.require(rep.tangent_actual_codim == 4 * (d - 1) - 1, at(d, 4, p) + " tangent_actual_codim");
      r.require(rep.ci_1_4_dm1, at(d, 4, p) + " detect_ci false");
      r.require(secs < 10.0, at(d, 4, p) + " took " + std::to_string(secs) + " s");
    }
  return r;
}

Result criterion2() {
  Result r;
  all_examples([&](int d, int a, std::uint64_t p) {
    const NodalExample& ex = example(d, a, p);
    r.require(ex.length == static_cast<std::int64_t>(a) * (d - 1), at(d, a, p) + " length");
    for (int k = (3 * d + 1) / 2 - 3; k <= ex.kmax + 3; ++k)
      r.require(ex.hilbert.at(k) == ex.length, at(d, a, p) + " h(" + std::to_string(k) + ")");
  });
  return r;
}

Result criterion3() {
  Result r;
  const std::vector<std::int64_t> table{1, 2, 3, 4, 4, 4, 4, 3, 2, 1, 0};
  all_examples([&](int d, int a, std::uint64_t p) {
    const NodalExample& ex = example(d, a, p);
    const int top = ex.hilbert.kmax();
    const LinearSection H = general_linear_section(ex.node_ideal, 99, top);
    const HilbertTable hH = hilbert_fn(H.ideal, top);
    if (d == 8 && a == 4)
      r.require(std::vector<std::int64_t>(hH.values.begin(), hH.values.begin() + 11) == table,
                at(d, a, p) + " h_{I_H}");
    std::int64_t sum = 0;
    for (int k = 0; k <= top; ++k) {
      sum += hH.at(k);
      r.require(sum == ex.hilbert.at(k), at(d, a, p) + " summation at k=" + std::to_string(k));
    }
    const GorensteinClosure J = gorenstein_closure(H.ideal, d);
    for (int k = 0; k <= d + 1; ++k)
      r.require(J.hilbert.at(k) == J.hilbert.at(d + 1 - k),
                at(d, a, p) + " h_J asymmetric at k=" + std::to_string(k));
  });
  return r;
}

Result criterion4() {
  Result r;
  int tables = 0;
  for (std::uint64_t p : kPrimes) {
    const GradedRing R(3, PrimeField(p));
    for (std::uint64_t s = 0; s < 40; ++s) {
      std::vector<Polynomial> gens;
      for (int i = 0; i <= static_cast<int>(s % 4); ++i)
        gens.push_back(random_form(R, 1 + static_cast<int>((3 * s + i) % 5), derive_seed(p + s, i)));
      const HilbertTable h = hilbert_fn(IdealGens(R, gens), 11);
      r.require(hilbert_from_betti(betti_alternating(h, 3), 11) == h, "roundtrip, seed " + std::to_string(s));
      ++tables;
    }
  }
  r.require(tables >= 100, "fewer than 100 roundtrip tables");
  all_examples([&](int d, int a, std::uint64_t p) {
    const NodalExample& ex = example(d, a, p);
    const BettiAlt B = betti_alternating(ex.hilbert, 3);
    for (int k = 0; k <= ex.hilbert.kmax(); ++k) {
      r.require(ex.length - ex.hilbert.at(k) == defect_via_betti(B, k),
                at(d, a, p) + " defect formulas at k=" + std::to_string(k));
    }
  });
  for (std::uint64_t p : kPrimes) {
    const BettiAlt B = betti_alternating(example(8, 4, p).hilbert, 3);
    const auto want = oracle::koszul_betti({1, 4, 7}, B.jmax());
    r.require(B.values == want, at(8, 4, p) + " Betti numbers");
    for (int j : {0, 1, 4, 5, 7, 8, 11, 12}) r.require(B.at(j) != 0, "B_" + std::to_string(j) + " vanishes");
  }
  return r;
}

Result criterion5() {
  Result r;
  for (std::uint64_t p : kPrimes) {
    const NodalExample& ex = example(8, 4, p);
    std::vector<Polynomial> sq;
    for (int i = 0; i < 4; ++i) sq.push_back(power(Polynomial::variable(ex.f.ring(), i), 2));
    const PullbackReport rep = pullback_betti_check(ex.node_ideal, sq, 11);
    r.require(rep.hypothesis, at(8, 4, p) + " hypothesis");
    r.require(rep.bound_lhs == 9, at(8, 4, p) + " delta_18(I_2) = " + std::to_string(rep.bound_lhs));
    r.require(rep.bound_rhs == 7, at(8, 4, p) + " bound value");
    r.require(rep.bound_lhs >= rep.bound_rhs, at(8, 4, p) + " bound");
    r.require(rep.laws_hold(), at(8, 4, p) + " Betti scaling law");
    const auto koszul = oracle::koszul_hilbert(3, {2, 8, 14}, 18);
    r.require(224 - koszul[18] == 9, "oracle defect of I_2");
    for (int j = 0; j <= rep.pulled_betti.jmax(); ++j) {
      const std::int64_t want = j % 2 ? 0 : (j / 2 <= rep.base_betti.jmax() ? rep.base_betti.at(j / 2) : 0);
      r.require(rep.pulled_betti.at(j) == want, at(8, 4, p) + " B_" + std::to_string(j) + "(I_2)");
    }
  }
  return r;
}

Result criterion6() {
  Result r;
  for (std::uint64_t p : kPrimes) {
    r.require(analyze(example(10, 4, p)).alexander_exponent == 0, at(10, 4, p));
    r.require(analyze(example(10, 5, p)).alexander_exponent == 1, at(10, 5, p));
    r.require(analyze(example(9, 4, p)).alexander_exponent == 0, at(9, 4, p));
  }
  all_examples([&](int d, int a, std::uint64_t p) {
    const AlexanderExponent e = alexander_exponent(example(d, a, p).hilbert, example(d, a, p).length, d);
    r.require(e.bound == static_cast<std::int64_t>(d) * d - 3 * d + 3, at(d, a, p) + " bound");
    r.require(e.exponent <= e.bound, at(d, a, p) + " exponent above bound");
  });
  r.require(alexander_exponent(example(10, 4, kPrimes[0]).node_ideal, 10).bound == 73, "bound for d=10");
  return r;
}

Result criterion7() {
  Result r;
  for (std::uint64_t p : kPrimes) {
    const std::int64_t h8 = example(8, 4, p).hilbert.at(8);
    const std::int64_t h10a = example(10, 4, p).hilbert.at(10);
    const std::int64_t h10b = example(10, 5, p).hilbert.at(10);
    r.require(locus_dims(8, 4).codim_L == 27 && h8 == 27, at(8, 4, p));
    r.require(locus_dims(10, 4).codim_L == 43 && h10a == 35 && 43 > h10a, at(10, 4, p));
    r.require(locus_dims(10, 5).codim_L == 42 && h10b == 42, at(10, 5, p));
  }
  return r;
}

Result criterion8() {
  Result r;
  all_examples([&](int d, int a, std::uint64_t p) {
    const TangentDims t = tangent_dims(example(d, a, p));
    r.require(t.dim_J_d == 16, at(d, a, p) + " dim J_d = " + std::to_string(t.dim_J_d));
    r.require(t.aut_gap == -15, at(d, a, p) + " gap = " + std::to_string(t.aut_gap));
  });
  return r;
}

Result criterion9() {
  Result r;
  all_examples([&](int d, int a, std::uint64_t p) {
    const NodalExample& ex = example(d, a, p);
    r.require(macaulay_gotzmann_check(ex.hilbert).empty(), at(d, a, p) + " node ideal");
    r.require(macaulay_gotzmann_check(hilbert_fn(jacobian_ideal(ex.f), ex.kmax)).empty(),
              at(d, a, p) + " Jacobian ideal");
    r.require(analyze(ex).macaulay_violations.empty(), at(d, a, p) + " report");
  });
  const auto v = macaulay_gotzmann_check(HilbertTable({1, 4, 10, 12, 6, 4, 5, 5}));
  r.require(v.size() == 1 && v[0].k == 5, "synthetic counterexample not flagged at k=5");
  return r;
}

Result criterion10() {
  Result r;
  SweepConfig cfg;
  cfg.d_min = 8;
  cfg.d_max = 10;
  cfg.primes = kPrimes;
  cfg.seeds = {kSeed};
  cfg.jobs = 1;
  const std::string first = sweep_csv(run_sweep(cfg));
  cfg.jobs = 4;
  const auto rows = run_sweep(cfg);
  r.require(sweep_csv(rows) == first, "sweep output differs between runs");
  r.require(rows.size() == 12, "expected 12 rows for (8,4),(9,4),(10,4),(10,5) over 3 primes");
  for (const auto& row : rows) {
    r.require(row.ok && row.consensus, at(row.d, row.a, row.prime) + " not in consensus");
    if (row.a == 4) r.require(row.report.ci_1_4_dm1, at(row.d, row.a, row.prime) + " ci");
  }
  const auto t0 = std::chrono::steady_clock::now();
  const auto results = run_checks(VerifyOptions{});
  const double secs = seconds_since(t0);
  for (const auto& c : results) r.require(c.passed, "verify: " + c.name + ": " + c.detail);
  r.require(secs < 300.0, "full verify took " + std::to_string(secs) + " s");
  return r;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
      {"defect 1 and (1,4,d-1) detection for d = 8, 10, 12", criterion1},
      {"Hilbert function equals the length from ceil(3d/2)-3 on", criterion2},
      {"hyperplane section table, summation and Gorenstein symmetry", criterion3},
      {"Betti roundtrip, defect formula agreement, CI(1,4,7) support", criterion4},
      {"pullback by squares: defect 9 >= 7 and Betti scaling", criterion5},
      {"Alexander exponents 0, 1, 0 and the bound", criterion6},
      {"locus codimensions against h_I(d)", criterion7},
      {"dim J_d = 16 and the gap -15", criterion8},
      {"Macaulay-Gotzmann checker", criterion9},
      {"sweep determinism, consensus, verify runtime", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Result res;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      res = criteria[i].second();
    } catch (const std::exception& e) {
      res.ok = false;
      res.why = std::string("exception: ") + e.what();
    }
    std::printf("criterion %2zu: %s  %s (%.2f s)%s%s\n", i + 1, res.ok ? "PASS" : "FAIL",
                criteria[i].first.c_str(), seconds_since(t0), res.ok ? "" : "\n    ",
                res.ok ? "" : res.why.c_str());
    failed += !res.ok;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
