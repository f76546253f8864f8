#include "utg/verify.hpp"

#include <chrono>
#include <charconv>
#include <exception>

#include "utg/error.hpp"

namespace utg {

using json = nlohmann::ordered_json;

namespace {

std::int64_t parse_int(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw Error(ErrorKind::ParseError, "expected an integer, got '" + std::string(text) + "'");
  }
  return v;
}

// Monic polynomials of the given degree over F_p, as spec strings.
void monic_polys(std::uint32_t p, int degree, std::vector<std::string>& out) {
  std::vector<std::uint32_t> c(degree, 0);
  for (;;) {
    Poly f;
    f.coeffs = c;
    f.coeffs.push_back(1);
    out.push_back("GF(" + std::to_string(p) + ")[x]/(" + to_string(f) + ")");
    int i = 0;
    while (i < degree && ++c[i] == p) c[i++] = 0;
    if (i == degree) return;
  }
}

struct RingLog {
  std::uint64_t run = 0;
  std::uint64_t skipped = 0;
  std::vector<VerifyFailure> failures;
};

RingLog check_ring(Suite suite, const std::string& spec, int m_max, const OracleLimits& limits) {
  RingLog log;
  try {
    const QuotientRing ring = build_quotient_ring(parse_ring_spec(spec));
    ReportOptions options;
    options.oracle = true;
    options.m_max = m_max;
    options.limits = limits;
    options.suites = {suite};
    options.exhaustive = true;
    options.max_witness_order = 0;
    const InvariantReport report = build_report(ring, options);
    for (const auto& e : report.entries) {
      if (e.skipped) ++log.skipped;
      if (!e.agree) continue;
      ++log.run;
      if (!*e.agree) log.failures.push_back({report.ring, e.name, e.formula_value, e.oracle_value});
    }
  } catch (const Error& err) {
    if (err.kind() == ErrorKind::OrderCapExceeded) {
      ++log.skipped;
    } else {
      log.failures.push_back({spec, "error", nullptr, err.what()});
    }
  } catch (const std::exception& err) {
    log.failures.push_back({spec, "error", nullptr, err.what()});
  }
  return log;
}

}  // namespace

std::vector<std::int64_t> parse_zmod_range(std::string_view text) {
  std::vector<std::int64_t> out;
  if (!text.empty() && text.front() == '{') {
    if (text.back() != '}') throw Error(ErrorKind::ParseError, "unterminated list '" + std::string(text) + "'");
    text = text.substr(1, text.size() - 2);
    while (!text.empty()) {
      const auto comma = text.find(',');
      out.push_back(parse_int(text.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      text.remove_prefix(comma + 1);
    }
  } else {
    const auto dots = text.find("..");
    if (dots == std::string_view::npos) throw Error(ErrorKind::ParseError, "expected A..B or {a,b,c}");
    const std::int64_t a = parse_int(text.substr(0, dots)), b = parse_int(text.substr(dots + 2));
    if (a > b) throw Error(ErrorKind::InvalidArgument, "empty range " + std::string(text));
    for (std::int64_t n = a; n <= b; ++n) out.push_back(n);
  }
  if (out.empty()) throw Error(ErrorKind::InvalidArgument, "empty modulus list");
  for (auto n : out) {
    if (n < 2) throw Error(ErrorKind::InvalidArgument, "modulus " + std::to_string(n) + " must be >= 2");
  }
  return out;
}

std::vector<std::string> zmod_pool(const std::vector<std::int64_t>& moduli) {
  std::vector<std::string> out;
  for (auto n : moduli) out.push_back("Z/" + std::to_string(n));
  return out;
}

std::vector<std::string> gf_pool(std::uint32_t p, int max_degree) {
  if (max_degree < 1) throw Error(ErrorKind::InvalidArgument, "max degree must be >= 1");
  std::vector<std::string> out;
  for (int d = 1; d <= max_degree; ++d) monic_polys(p, d, out);
  return out;
}

std::vector<std::string> gauss_pool(std::int64_t norm_max) {
  std::vector<std::string> out;
  for (std::int64_t a = 1; a * a <= norm_max; ++a) {
    for (std::int64_t b = 0; a * a + b * b <= norm_max; ++b) {
      if (a * a + b * b < 2) continue;
      out.push_back("Zi/(" + to_string(Gaussian{a, b}) + ")");
    }
  }
  return out;
}

VerificationSuiteResult run_suite(Suite suite, const std::vector<std::string>& specs, int m_max,
                                  const OracleLimits& limits) {
  limits.validate();
  const auto start = std::chrono::steady_clock::now();
  std::vector<RingLog> logs(specs.size());
  const auto n = static_cast<std::int64_t>(specs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < n; ++i) logs[i] = check_ring(suite, specs[i], m_max, limits);

  VerificationSuiteResult result;
  result.suite = std::string(to_string(suite));
  result.rings = specs.size();
  for (auto& log : logs) {
    result.cases_run += log.run;
    result.cases_skipped += log.skipped;
    for (auto& f : log.failures) result.failures.push_back(std::move(f));
  }
  result.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

json to_json(const VerificationSuiteResult& result, bool with_elapsed) {
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["suite"] = result.suite;
  j["rings"] = result.rings;
  j["cases_run"] = result.cases_run;
  j["cases_skipped"] = result.cases_skipped;
  j["failures"] = json::array();
  for (const auto& f : result.failures) {
    j["failures"].push_back({{"ring", f.ring}, {"invariant", f.invariant}, {"formula", f.formula}, {"oracle", f.oracle}});
  }
  if (with_elapsed) j["elapsed_seconds"] = result.elapsed_seconds;
  return j;
}

}  // namespace utg
