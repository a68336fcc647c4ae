#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "nodal/prime_field.hpp"
#include "nodal/surface.hpp"

namespace nodal {

struct VerifyOptions {
  std::vector<std::uint64_t> primes{kDefaultPrimes.begin(), kDefaultPrimes.end()};
  std::uint64_t seed = 7;
  // Flips the sign of one Betti number before the pullback comparison.
  bool inject_betti_fault = false;
};

/// Built examples shared between checks, keyed by (d, a, prime).
class VerifyContext {
 public:
  explicit VerifyContext(VerifyOptions opts) : opts_(std::move(opts)) {}

  const VerifyOptions& options() const noexcept { return opts_; }
  const NodalExample& example(int d, int a, std::uint64_t prime);
  const AnalysisReport& report(int d, int a, std::uint64_t prime);

 private:
  VerifyOptions opts_;
  std::map<std::tuple<int, int, std::uint64_t>, NodalExample> examples_;
  std::map<std::tuple<int, int, std::uint64_t>, AnalysisReport> reports_;
};

struct CheckOutcome {
  bool passed = true;
  std::string detail;  // first failure, or a summary on success
};

struct AcceptanceCheck {
  int number;
  std::string name;
  std::string claim;
  std::function<CheckOutcome(VerifyContext&)> run;
};

/// The ten acceptance checks in order.
const std::vector<AcceptanceCheck>& acceptance_checks();

struct CheckResult {
  int number;
  std::string name;
  std::string claim;
  bool passed;
  std::string detail;
};

/// Runs the checks selected by `only` (comma-separated names or numbers;
/// empty selects all). Throws PreconditionError for an unknown selector.
std::vector<CheckResult> run_checks(const VerifyOptions& opts, std::string_view only = {});

}  // namespace nodal
