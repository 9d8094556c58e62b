#pragma once

// Seeded property suites behind `ucz verify`, and the report formats.

#include <ucz/liealg.hpp>

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ucz {

/// One named check. Sampled checks aggregate their samples: `passed` of
/// `total` held, and `failure` describes the first sample that did not.
struct CheckDetail {
  std::string check;
  std::string inputs;
  std::string expected;
  std::string got;
  int passed = 0;
  int total = 0;
  std::optional<std::string> failure;
};

struct SuiteResult {
  std::string name;
  std::vector<CheckDetail> details;
  /// Elapsed time; shown in text output only, so JSON stays reproducible.
  double seconds = 0;

  int passed() const;
  int total() const;
  const CheckDetail* find(const std::string& check) const;
};

struct Report {
  std::string algebra;
  std::uint64_t seed = 0;
  std::vector<SuiteResult> suites;

  bool all_passed() const;
};

/// kostant, moment, wonderful, logsympl, reduction.
const std::vector<std::string>& suite_names();
/// A suite name or "all"; nullopt for anything else.
std::optional<std::vector<std::string>> expand_suite(const std::string& selector);

/// Each suite draws from its own stream seeded by (seed, suite name), so a
/// suite's result does not depend on which other suites run.
SuiteResult run_suite(const LieAlgebra& L, const std::string& name, std::uint64_t seed,
                      int samples);
Report run_verify(const LieAlgebra& L, const std::vector<std::string>& suites,
                  std::uint64_t seed, int samples);

nlohmann::ordered_json report_json(const Report& r);
std::string report_text(const Report& r);

nlohmann::ordered_json describe_json(const LieAlgebra& L);
std::string describe_text(const LieAlgebra& L);

}  // namespace ucz
