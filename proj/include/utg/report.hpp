#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "utg/oracle.hpp"
#include "utg/ring.hpp"

// Invariant reports: every closed form next to its brute-force counterpart.
namespace utg {

inline constexpr int kReportSchemaVersion = 1;

enum class Suite { Totients, Cliques, Coloring, Domination, Metrics, Strong, All };

// Accepts the lower-case suite names.
Suite parse_suite(std::string_view name);
std::string_view to_string(Suite suite);

struct ReportOptions {
  bool oracle = false;
  int m_max = 4;
  OracleLimits limits;
  // Empty means every suite.
  std::set<Suite> suites;
  // Sweep mode: all r in 1..6, every clique order, all vertex pairs.
  bool exhaustive = false;
  // Record wall time per entry (kept out of the payload by default so that
  // reruns are byte-identical).
  bool timings = false;
  // Witness vertex lists are attached only up to this order.
  std::uint32_t max_witness_order = 1024;
};

struct ReportEntry {
  std::string name;
  Suite suite = Suite::All;
  nlohmann::ordered_json formula_value;  // null when there is no closed form
  std::string relation = "eq";           // "le": the formula is an upper bound
  nlohmann::ordered_json oracle_value;   // null when not computed
  std::optional<bool> agree;
  nlohmann::ordered_json witness;
  std::optional<std::string> skipped;  // why the oracle was not run
  double seconds = 0;
};

struct InvariantReport {
  std::string ring;
  std::uint32_t order = 0;
  std::vector<PrimeFactor> factors;
  std::uint64_t q_min = 0;
  int lambda = 0;
  std::uint64_t phi = 0;
  ReportOptions options;
  std::vector<ReportEntry> entries;

  std::size_t disagreements() const;
};

// Throws on parse or build failure; oracle limits only turn entries into
// skipped ones.
InvariantReport build_report(const QuotientRing& ring, const ReportOptions& options);

nlohmann::ordered_json to_json(const InvariantReport& report);
// Compact JSON followed by a newline.
std::string render_json(const InvariantReport& report);
std::string render_text(const InvariantReport& report);

nlohmann::ordered_json describe_json(const QuotientRing& ring);
std::string describe_text(const QuotientRing& ring);

struct CounterexampleReport {
  std::uint64_t n = 0;
  std::uint32_t longest_run = 0;        // lambda-hat
  std::uint64_t run_start = 0;          // first integer of the first longest run
  std::uint32_t claimed_value = 0;      // lambda-hat + 1
  std::vector<std::uint32_t> known_witness;
  std::optional<bool> known_witness_dominates;
  std::vector<std::uint32_t> minimum_set;
  bool contradiction = false;
};

// Longest run of consecutive integers in 1..2n each sharing a prime with n.
std::pair<std::uint32_t, std::uint64_t> longest_nonunit_run(std::uint64_t n);

// Refuses (InvalidArgument) unless n is composite and not twice a prime.
CounterexampleReport build_counterexample(std::uint64_t n, const OracleLimits& limits = {});

nlohmann::ordered_json to_json(const CounterexampleReport& report);

}  // namespace utg
