#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "nodal/surface.hpp"

namespace nodal {

inline constexpr int kReportSchema = 1;

/// Report fields plus schema. Keys come out sorted and every number is an
/// integer, so equal reports dump to equal bytes.
nlohmann::json to_json(const AnalysisReport& r);

/// Per-prime reports for one (d, a, seed).
struct ConsensusReport {
  std::vector<AnalysisReport> reports;
  bool consensus = true;
  std::vector<std::string> divergent_fields;
  std::vector<std::uint64_t> minority_primes;  // primes off the majority value of some field
};

/// Compares every field except the prime.
ConsensusReport make_consensus(std::vector<AnalysisReport> reports);

nlohmann::json to_json(const ConsensusReport& c);

/// Builds and analyzes (d, a, seed) over every prime.
ConsensusReport analyze_across_primes(int d, int a, std::uint64_t seed,
                                      const std::vector<std::uint64_t>& primes, int kmax = -1);

struct SweepConfig {
  int d_min = 8, d_max = 10;
  std::vector<std::uint64_t> primes{kDefaultPrimes.begin(), kDefaultPrimes.end()};
  std::vector<std::uint64_t> seeds{7};
  int kmax = -1;
  unsigned jobs = 0;  // 0: one per hardware thread
};

struct SweepRow {
  int d = 0;
  int a = 0;
  std::uint64_t prime = 0;
  std::uint64_t seed = 0;
  bool ok = false;
  std::string error;
  AnalysisReport report;
  bool consensus = false;  // across primes for the same (d, a, seed)
};

/// One row per legal (d, a) with 4 <= a <= d/2, prime and seed, sorted by
/// (d, a, prime, seed). A failing row is flagged and the sweep continues.
std::vector<SweepRow> run_sweep(const SweepConfig& cfg);

std::string sweep_csv(const std::vector<SweepRow>& rows);
nlohmann::json to_json(const std::vector<SweepRow>& rows);

}  // namespace nodal
