// Command-line front end: analyze, sweep, verify, hilbert, pullback-check.

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "nodal/combinatorics.hpp"
#include "nodal/defect.hpp"
#include "nodal/errors.hpp"
#include "nodal/graded_ideal.hpp"
#include "nodal/report.hpp"
#include "nodal/surface.hpp"
#include "nodal/verify.hpp"

namespace {

using namespace nodal;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitDivergence = 2;

struct Range {
  std::int64_t lo, hi;
};

Range parse_range(const std::string& text, const std::string& flag) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const std::int64_t v = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {v, v};
    }
    const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
    const std::int64_t lo = std::stoll(a, &used);
    if (used != a.size()) throw std::invalid_argument(text);
    const std::int64_t hi = std::stoll(b, &used);
    if (used != b.size() || hi < lo) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw CLI::ValidationError(flag, "expected N or LO..HI, got '" + text + "'");
  }
}

// Timestamps go here, never into reports.
class SideLog {
 public:
  void open(const std::string& path) {
    if (!path.empty()) out_.open(path, std::ios::app);
  }
  void line(const std::string& msg) {
    if (!out_) return;
    const std::time_t now = std::time(nullptr);
    out_ << std::put_time(std::gmtime(&now), "%Y-%m-%dT%H:%M:%SZ") << ' ' << msg << '\n';
  }

 private:
  std::ofstream out_;
};

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path);
  f << text;
}

void check_primes(const std::vector<std::uint64_t>& primes) {
  if (primes.empty()) throw CLI::ValidationError("--primes", "at least one prime is required");
  for (auto p : primes)
    if (!is_prime(p) || p >= PrimeField::kMaxModulus)
      throw CLI::ValidationError("--primes", std::to_string(p) + " is not a prime below 2^31");
}

void check_degrees(int d, int a) {
  if (d < 8) throw CLI::ValidationError("--d", "d must be at least 8");
  if (a < 4 || 2 * a > d)
    throw CLI::ValidationError("--a", "a must satisfy 4 <= a <= d/2 (got a=" + std::to_string(a) +
                                          ", d=" + std::to_string(d) + ")");
}

struct Common {
  std::vector<std::uint64_t> primes{kDefaultPrimes.begin(), kDefaultPrimes.end()};
  std::string out;
  std::string format = "json";
  std::string log;
};

void add_common(CLI::App* cmd, Common& c, bool with_primes = true) {
  if (with_primes)
    cmd->add_option("--primes", c.primes, "Comma-separated primes")->delimiter(',');
  cmd->add_option("--out", c.out, "Output file (default: stdout)");
  cmd->add_option("--format", c.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--log", c.log, "Append timestamped progress lines to this file");
}

std::string table_text(const HilbertTable& h, int n, std::int64_t length, const std::string& format) {
  const BettiAlt B = betti_alternating(h, n);
  const bool has_length = length >= 0;
  if (format == "json") {
    nlohmann::json j;
    j["schema"] = kReportSchema;
    j["n"] = n;
    j["hilbert"] = h.values;
    j["betti"] = B.values;
    if (has_length) {
      j["length"] = length;
      std::vector<std::int64_t> deltas;
      for (int k = 0; k <= h.kmax(); ++k) deltas.push_back(defect(h, n, length, k).delta);
      j["defect"] = deltas;
    } else {
      j["length"] = nullptr;
    }
    return j.dump(2) + "\n";
  }
  std::ostringstream s;
  s << "k,h,B,defect\n";
  for (int k = 0; k <= h.kmax(); ++k) {
    s << k << ',' << h.at(k) << ',' << B.at(k) << ',';
    if (has_length) s << defect(h, n, length, k).delta;
    s << '\n';
  }
  return s.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert functions, defects and nodal surfaces over prime fields"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "nodal 1.0");

  Common common;        // analyze, hilbert, pullback-check, verify
  Common sweep_common;  // sweep writes CSV by default
  sweep_common.format = "csv";
  SideLog log;
  int d = 0, a = 0, kmax = -1;
  std::uint64_t seed = 7;

  auto* analyze_cmd = app.add_subcommand("analyze", "Build and analyze one surface per prime");
  analyze_cmd->add_option("--d", d, "Surface degree")->required();
  analyze_cmd->add_option("--a", a, "Degree of f2")->required();
  analyze_cmd->add_option("--seed", seed, "Seed");
  analyze_cmd->add_option("--kmax", kmax, "Hilbert table bound (default ceil(3d/2)-3)");
  add_common(analyze_cmd, common);
  std::uint64_t fault_prime = 0;
  analyze_cmd->add_option("--inject-fault", fault_prime,
                          "Perturb the length reported for this prime")
      ->group("");

  std::string d_range = "8..10", a_range, seed_range = "7";
  unsigned jobs = 0;
  auto* sweep_cmd = app.add_subcommand("sweep", "Analyze every legal (d, a) in a range");
  sweep_cmd->add_option("--d", d_range, "Degree range LO..HI within 8..12");
  sweep_cmd->add_option("--a", a_range, "Optional range filter for a");
  sweep_cmd->add_option("--seed", seed_range, "Seed or seed range LO..HI");
  sweep_cmd->add_option("--kmax", kmax, "Hilbert table bound (default ceil(3d/2)-3)");
  sweep_cmd->add_option("--jobs", jobs, "Worker threads (default: hardware threads)");
  add_common(sweep_cmd, sweep_common);

  std::string only;
  bool inject = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run the acceptance checks");
  verify_cmd->add_option("--only", only, "Comma-separated check names or numbers");
  verify_cmd->add_option("--seed", seed, "Seed");
  verify_cmd->add_option("--primes", common.primes, "Comma-separated primes")->delimiter(',');
  verify_cmd->add_flag("--inject-betti-fault", inject,
                       "Flip one Betti sign before the pullback comparison");
  verify_cmd->add_option("--log", common.log, "Append timestamped progress lines to this file");

  std::string ideal_file;
  auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert function, Betti numbers and defects");
  hilbert_cmd->add_option("file", ideal_file, "Ideal file")->required();
  hilbert_cmd->add_option("--kmax", kmax, "Last degree (default: until the table plateaus)");
  add_common(hilbert_cmd, common, false);

  int t = 2, k = -1;
  auto* pullback_cmd =
      app.add_subcommand("pullback-check", "Betti laws and defect bound under x_i -> x_i^t");
  pullback_cmd->add_option("file", ideal_file, "Ideal file")->required();
  pullback_cmd->add_option("--t", t, "Degree of the pullback map")->check(CLI::PositiveNumber);
  pullback_cmd->add_option("--k", k, "Degree for the defect bound");
  add_common(pullback_cmd, common, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }
  log.open(sweep_cmd->parsed() ? sweep_common.log : common.log);

  try {
    if (analyze_cmd->parsed()) {
      check_degrees(d, a);
      check_primes(common.primes);
      log.line("analyze d=" + std::to_string(d) + " a=" + std::to_string(a) + " start");
      ConsensusReport c = analyze_across_primes(d, a, seed, common.primes, kmax);
      if (fault_prime != 0) {
        for (auto& r : c.reports)
          if (r.prime == fault_prime) ++r.length;
        c = make_consensus(std::move(c.reports));
      }
      log.line("analyze done");
      if (common.format == "json") {
        write_output(common.out, to_json(c).dump(2) + "\n");
      } else {
        std::vector<SweepRow> rows;
        for (const auto& r : c.reports)
          rows.push_back({r.d, r.a, r.prime, r.seed, true, {}, r, c.consensus});
        write_output(common.out, sweep_csv(rows));
      }
      if (!c.consensus) {
        std::string primes;
        for (auto p : c.minority_primes) primes += " " + std::to_string(p);
        std::cerr << "divergence across primes; minority:" << primes << "\n";
        return kExitDivergence;
      }
      return kExitOk;
    }

    if (sweep_cmd->parsed()) {
      check_primes(sweep_common.primes);
      const Range dr = parse_range(d_range, "--d");
      if (dr.lo < 8 || dr.hi > 12) throw CLI::ValidationError("--d", "range must lie in 8..12");
      const Range sr = parse_range(seed_range, "--seed");
      if (sr.lo < 0) throw CLI::ValidationError("--seed", "seeds are non-negative");
      SweepConfig cfg;
      cfg.d_min = static_cast<int>(dr.lo);
      cfg.d_max = static_cast<int>(dr.hi);
      cfg.primes = sweep_common.primes;
      cfg.seeds.clear();
      for (std::int64_t s = sr.lo; s <= sr.hi; ++s) cfg.seeds.push_back(static_cast<std::uint64_t>(s));
      cfg.kmax = kmax;
      cfg.jobs = jobs;
      log.line("sweep start");
      std::vector<SweepRow> rows = run_sweep(cfg);
      if (!a_range.empty()) {
        const Range ar = parse_range(a_range, "--a");
        std::erase_if(rows, [&](const SweepRow& r) { return r.a < ar.lo || r.a > ar.hi; });
      }
      log.line("sweep done, " + std::to_string(rows.size()) + " rows");
      write_output(sweep_common.out,
                   sweep_common.format == "csv" ? sweep_csv(rows) : to_json(rows).dump(2) + "\n");
      bool failed = false, divergent = false;
      for (const auto& r : rows) {
        failed |= !r.ok;
        divergent |= r.ok && !r.consensus;
      }
      if (failed) return kExitError;
      return divergent ? kExitDivergence : kExitOk;
    }

    if (verify_cmd->parsed()) {
      check_primes(common.primes);
      VerifyOptions opts;
      opts.primes = common.primes;
      opts.seed = seed;
      opts.inject_betti_fault = inject;
      std::cout << "check  name           claim\n";
      for (const auto& c : acceptance_checks())
        std::cout << std::setw(5) << c.number << "  " << std::left << std::setw(14) << c.name
                  << " " << c.claim << std::right << "\n";
      std::cout << "\n";
      log.line("verify start");
      const auto results = run_checks(opts, only);
      log.line("verify done");
      bool all = true;
      for (const auto& r : results) {
        std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.number << " " << r.name << ": "
                  << r.detail << "\n";
        if (!r.passed) {
          if (all) std::cout << "      violated claim: " << r.claim << "\n";
          all = false;
        }
      }
      std::cout << (all ? "all checks passed\n" : "some checks failed\n");
      return all ? kExitOk : kExitError;
    }

    if (hilbert_cmd->parsed()) {
      const IdealGens I = read_ideal_file(ideal_file);
      const int n = I.ring().n();
      GradedIdeal G(I);
      HilbertTable h;
      std::int64_t length = -1;
      if (kmax >= 0) {
        h = G.hilbert_table(kmax);
        try {
          length = length_of(h, n + 1);
        } catch (const NoPlateau&) {
        }
      } else {
        try {
          h = hilbert_to_plateau(G, n + 1);
          length = length_of(h, n + 1);
        } catch (const NoPlateau&) {
          h = G.hilbert_table(12);
        }
      }
      write_output(common.out, table_text(h, n, length, common.format));
      return kExitOk;
    }

    if (pullback_cmd->parsed()) {
      const IdealGens I = read_ideal_file(ideal_file);
      std::vector<Polynomial> images;
      for (int i = 0; i < I.ring().nvars(); ++i)
        images.push_back(power(Polynomial::variable(I.ring(), i), t));
      const PullbackReport r = pullback_betti_check(I, images, k);
      nlohmann::json j;
      j["schema"] = kReportSchema;
      j["t"] = r.t;
      j["base_hilbert"] = r.base_hilbert.values;
      j["pulled_hilbert"] = r.pulled_hilbert.values;
      j["base_betti"] = r.base_betti.values;
      j["pulled_betti"] = r.pulled_betti.values;
      j["base_length"] = r.base_length;
      j["pulled_length"] = r.pulled_length;
      j["laws_hold"] = r.laws_hold();
      j["law_failures"] = r.law_failures;
      if (k >= 0) {
        j["k"] = k;
        j["hypothesis"] = r.hypothesis;
        j["bound_lhs"] = r.bound_lhs;
        j["bound_rhs"] = r.bound_rhs;
        j["bound_holds"] = r.bound_holds();
      }
      if (common.format == "json") {
        write_output(common.out, j.dump(2) + "\n");
      } else {
        std::ostringstream s;
        s << "j,B_j(I),B_j(I_t)\n";
        for (int jj = 0; jj <= r.pulled_betti.jmax(); ++jj)
          s << jj << ',' << (jj <= r.base_betti.jmax() ? std::to_string(r.base_betti.at(jj)) : "")
            << ',' << r.pulled_betti.at(jj) << '\n';
        write_output(common.out, s.str());
      }
      return r.laws_hold() && r.bound_holds() ? kExitOk : kExitError;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
