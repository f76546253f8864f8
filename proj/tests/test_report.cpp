#include <gtest/gtest.h>

#include "support.hpp"
#include "utg/error.hpp"
#include "utg/report.hpp"
#include "utg/verify.hpp"

using namespace utg;
using testing_support::ring;

TEST(Pools, ZmodRange) {
  EXPECT_EQ(parse_zmod_range("2..5"), (std::vector<std::int64_t>{2, 3, 4, 5}));
  EXPECT_EQ(parse_zmod_range("{7,3,12}"), (std::vector<std::int64_t>{7, 3, 12}));
  EXPECT_THROW(parse_zmod_range("5..2"), Error);
  EXPECT_THROW(parse_zmod_range("1..4"), Error);
  EXPECT_THROW(parse_zmod_range("2-9"), Error);
  EXPECT_EQ(zmod_pool({2, 9}), (std::vector<std::string>{"Z/2", "Z/9"}));
}

TEST(Pools, FamiliesHaveExpectedSizes) {
  // Monic polynomials of degree 1..D over F_p: p + p^2 + ... + p^D.
  EXPECT_EQ(gf_pool(2, 3).size(), 2u + 4u + 8u);
  EXPECT_EQ(gf_pool(3, 2).size(), 3u + 9u);
  std::size_t gauss = 0;
  for (std::int64_t a = 1; a <= 10; ++a) {
    for (std::int64_t b = 0; b <= 10; ++b) gauss += a * a + b * b >= 2 && a * a + b * b <= 50;
  }
  EXPECT_EQ(gauss_pool(50).size(), gauss);
  for (const auto& spec : gf_pool(3, 2)) EXPECT_NO_THROW(ring(spec)) << spec;
  for (const auto& spec : gauss_pool(50)) EXPECT_NO_THROW(ring(spec)) << spec;
}

TEST(Report, ByteIdenticalOnRerun) {
  ReportOptions opt;
  opt.oracle = true;
  const auto r = ring("Z/15");
  const auto a = render_json(build_report(r, opt));
  const auto b = render_json(build_report(r, opt));
  EXPECT_EQ(a, b);
  const auto j = nlohmann::ordered_json::parse(a);
  EXPECT_EQ(j["schema_version"], kReportSchemaVersion);
  EXPECT_EQ(j["ring"], "Z/15");
  EXPECT_EQ(build_report(r, opt).disagreements(), 0u);
}

TEST(Report, FormulaOnlyHasNoOracleValues) {
  const auto rep = build_report(ring("Zi/(3)"), ReportOptions{});
  ASSERT_FALSE(rep.entries.empty());
  for (const auto& e : rep.entries) {
    EXPECT_TRUE(e.oracle_value.is_null()) << e.name;
    EXPECT_FALSE(e.agree.has_value()) << e.name;
  }
}

TEST(Report, OverLimitEntriesAreSkipped) {
  ReportOptions opt;
  opt.oracle = true;
  opt.suites = {Suite::Coloring};
  const auto rep = build_report(ring("Z/70"), opt);
  std::size_t skipped = 0;
  for (const auto& e : rep.entries) {
    if (e.skipped) {
      ++skipped;
      EXPECT_FALSE(e.agree.has_value());
    }
  }
  EXPECT_GT(skipped, 0u);
  EXPECT_EQ(rep.disagreements(), 0u);
}

TEST(Report, SuiteNames) {
  EXPECT_EQ(parse_suite("cliques"), Suite::Cliques);
  EXPECT_EQ(to_string(Suite::Strong), "strong");
  EXPECT_THROW(parse_suite("bogus"), Error);
}

TEST(Counterexample, ThirtyContradicts) {
  OracleLimits wide;
  wide.max_dominating_search = 60;
  const auto rep = build_counterexample(30, wide);
  EXPECT_EQ(rep.longest_run, 5u);
  EXPECT_EQ(rep.claimed_value, 6u);
  EXPECT_EQ(rep.known_witness, (std::vector<std::uint32_t>{0, 7, 10, 12, 15}));
  EXPECT_EQ(rep.known_witness_dominates, true);
  EXPECT_LE(rep.minimum_set.size(), 5u);
  EXPECT_TRUE(rep.contradiction);
}

TEST(Counterexample, RefusesPrimesAndTwicePrimes) {
  for (std::uint64_t n : {7u, 13u, 10u, 22u, 3u}) {
    try {
      build_counterexample(n);
      ADD_FAILURE() << n;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::InvalidArgument) << n;
    }
  }
}

TEST(Counterexample, LongestRun) {
  // 2..4 share a factor with 6 but 1 and 5 do not.
  EXPECT_EQ(longest_nonunit_run(6).first, 3u);
  EXPECT_EQ(longest_nonunit_run(30).first, 5u);
}

TEST(Verify, SmallSweepPasses) {
  const auto res = run_suite(Suite::All, zmod_pool(parse_zmod_range("2..20")), 4);
  EXPECT_TRUE(res.ok());
  EXPECT_EQ(res.rings, 19u);
  EXPECT_GT(res.cases_run, 0u);
  const auto j = to_json(res);
  EXPECT_FALSE(j.contains("elapsed_seconds"));
}
