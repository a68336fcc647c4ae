#include "nodal/report.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include "nodal/errors.hpp"

namespace nodal {

nlohmann::json to_json(const AnalysisReport& r) {
  nlohmann::json j;
  j["schema"] = kReportSchema;
  j["d"] = r.d;
  j["a"] = r.a;
  j["prime"] = r.prime;
  j["seed"] = r.seed;
  j["hilbert"] = r.hilbert.values;
  j["length"] = r.length;
  j["defect_d"] = r.defect_d;
  j["tangent_expected_codim"] = r.tangent_expected_codim;
  j["tangent_actual_codim"] = r.tangent_actual_codim;
  j["tangent_excess"] = r.tangent_excess;
  j["jacobian_dim_d"] = r.jacobian_dim_d;
  j["alexander_exponent"] = r.alexander_exponent;
  j["alexander_bound"] = r.alexander_bound;
  j["ci_1_4_dm1"] = r.ci_1_4_dm1;
  j["dim_L0"] = r.dim_L0;
  j["dim_L"] = r.dim_L;
  j["codim_L"] = r.codim_L;
  j["comparisons"] = {{"codim_L_vs_length", r.codim_L_vs_length},
                      {"codim_L_vs_h_d", r.codim_L_vs_h_d}};
  return j;
}

ConsensusReport make_consensus(std::vector<AnalysisReport> reports) {
  ConsensusReport c;
  c.reports = std::move(reports);
  std::vector<nlohmann::json> js;
  for (const auto& r : c.reports) js.push_back(to_json(r));
  if (js.empty()) return c;

  std::set<std::uint64_t> minority;
  for (const auto& [key, _] : js.front().items()) {
    if (key == "prime") continue;
    std::map<std::string, int> counts;
    for (const auto& j : js) ++counts[j[key].dump()];
    if (counts.size() == 1) continue;
    c.divergent_fields.push_back(key);
    // Majority value; ties go to the smallest serialization.
    const auto best = std::max_element(counts.begin(), counts.end(), [](const auto& x, const auto& y) {
      return x.second < y.second;
    });
    for (std::size_t i = 0; i < js.size(); ++i)
      if (js[i][key].dump() != best->first) minority.insert(c.reports[i].prime);
  }
  c.consensus = c.divergent_fields.empty();
  c.minority_primes.assign(minority.begin(), minority.end());
  return c;
}

nlohmann::json to_json(const ConsensusReport& c) {
  nlohmann::json j;
  j["schema"] = kReportSchema;
  j["consensus"] = c.consensus;
  j["divergent_fields"] = c.divergent_fields;
  j["minority_primes"] = c.minority_primes;
  j["reports"] = nlohmann::json::array();
  for (const auto& r : c.reports) j["reports"].push_back(to_json(r));
  return j;
}

ConsensusReport analyze_across_primes(int d, int a, std::uint64_t seed,
                                      const std::vector<std::uint64_t>& primes, int kmax) {
  if (primes.empty()) throw PreconditionError("no primes given");
  std::vector<AnalysisReport> reports;
  for (std::uint64_t p : primes) {
    const GradedRing ring(3, PrimeField(p));
    reports.push_back(analyze(build_example(d, a, ring, seed, kmax)));
  }
  return make_consensus(std::move(reports));
}

std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
  if (cfg.primes.empty() || cfg.seeds.empty()) throw PreconditionError("empty prime or seed list");
  if (cfg.d_min > cfg.d_max) throw PreconditionError("empty degree range");
  std::vector<SweepRow> rows;
  for (int d = cfg.d_min; d <= cfg.d_max; ++d)
    for (int a = 4; 2 * a <= d; ++a)
      for (std::uint64_t p : cfg.primes)
        for (std::uint64_t s : cfg.seeds) {
          SweepRow r;
          r.d = d;
          r.a = a;
          r.prime = p;
          r.seed = s;
          rows.push_back(std::move(r));
        }

  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) {
      SweepRow& r = rows[i];
      try {
        const GradedRing ring(3, PrimeField(r.prime));
        r.report = analyze(build_example(r.d, r.a, ring, r.seed, cfg.kmax));
        r.ok = true;
      } catch (const std::exception& e) {
        r.error = e.what();
      }
    }
  };
  unsigned jobs = cfg.jobs ? cfg.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, rows.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::sort(rows.begin(), rows.end(), [](const SweepRow& x, const SweepRow& y) {
    return std::tie(x.d, x.a, x.prime, x.seed) < std::tie(y.d, y.a, y.prime, y.seed);
  });

  std::map<std::tuple<int, int, std::uint64_t>, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < rows.size(); ++i)
    groups[{rows[i].d, rows[i].a, rows[i].seed}].push_back(i);
  for (const auto& [_, idx] : groups) {
    bool all_ok = true;
    std::vector<AnalysisReport> reps;
    for (std::size_t i : idx) {
      all_ok = all_ok && rows[i].ok;
      reps.push_back(rows[i].report);
    }
    const bool agree = all_ok && make_consensus(std::move(reps)).consensus;
    for (std::size_t i : idx) rows[i].consensus = agree;
  }
  return rows;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "d,a,prime,seed,status,consensus,length,defect_d,tangent_expected_codim,"
         "tangent_actual_codim,tangent_excess,jacobian_dim_d,alexander_exponent,"
         "alexander_bound,ci_1_4_dm1,dim_L0,dim_L,codim_L,codim_L_vs_length,"
         "codim_L_vs_h_d,hilbert,error\n";
  for (const auto& row : rows) {
    out << row.d << ',' << row.a << ',' << row.prime << ',' << row.seed << ','
        << (row.ok ? "ok" : "error") << ',' << (row.consensus ? 1 : 0) << ',';
    if (row.ok) {
      const AnalysisReport& r = row.report;
      std::string h;
      for (std::size_t k = 0; k < r.hilbert.values.size(); ++k)
        h += (k ? " " : "") + std::to_string(r.hilbert.values[k]);
      out << r.length << ',' << r.defect_d << ',' << r.tangent_expected_codim << ','
          << r.tangent_actual_codim << ',' << r.tangent_excess << ',' << r.jacobian_dim_d << ','
          << r.alexander_exponent << ',' << r.alexander_bound << ',' << (r.ci_1_4_dm1 ? 1 : 0)
          << ',' << r.dim_L0 << ',' << r.dim_L << ',' << r.codim_L << ','
          << csv_field(r.codim_L_vs_length) << ',' << csv_field(r.codim_L_vs_h_d) << ',' << h
          << ",\n";
    } else {
      out << ",,,,,,,,,,,,,,," << csv_field(row.error) << '\n';
    }
  }
  return out.str();
}

nlohmann::json to_json(const std::vector<SweepRow>& rows) {
  nlohmann::json j;
  j["schema"] = kReportSchema;
  j["rows"] = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json r = row.ok ? to_json(row.report) : nlohmann::json::object();
    r["d"] = row.d;
    r["a"] = row.a;
    r["prime"] = row.prime;
    r["seed"] = row.seed;
    r["status"] = row.ok ? "ok" : "error";
    r["consensus"] = row.consensus;
    if (!row.ok) r["error"] = row.error;
    j["rows"].push_back(std::move(r));
  }
  return j;
}

}  // namespace nodal
