#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "utg/report.hpp"

// Sweeps that compare closed forms against oracles over families of rings.
namespace utg {

// "A..B" or "{a,b,c}".
std::vector<std::int64_t> parse_zmod_range(std::string_view text);

std::vector<std::string> zmod_pool(const std::vector<std::int64_t>& moduli);
// GF(p)[x]/(f) for every monic f of degree 1..max_degree.
std::vector<std::string> gf_pool(std::uint32_t p, int max_degree);
// Zi/(a+bi) with a > 0, b >= 0 (one generator per ideal) and 2 <= a^2+b^2 <= norm_max.
std::vector<std::string> gauss_pool(std::int64_t norm_max);

struct VerifyFailure {
  std::string ring;
  std::string invariant;
  nlohmann::ordered_json formula;
  nlohmann::ordered_json oracle;
};

struct VerificationSuiteResult {
  std::string suite;
  std::uint64_t rings = 0;
  std::uint64_t cases_run = 0;
  std::uint64_t cases_skipped = 0;
  std::vector<VerifyFailure> failures;
  double elapsed_seconds = 0;

  bool ok() const { return failures.empty(); }
};

// Rings run in parallel; failures are listed in pool order.
VerificationSuiteResult run_suite(Suite suite, const std::vector<std::string>& specs, int m_max,
                                  const OracleLimits& limits = {});

// elapsed_seconds is included only when with_elapsed is set.
nlohmann::ordered_json to_json(const VerificationSuiteResult& result, bool with_elapsed = false);

}  // namespace utg
