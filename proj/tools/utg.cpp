// utg: describe quotient rings, export their unitary Cayley graphs, and
// compare closed-form invariants against exhaustive search.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "utg/error.hpp"
#include "utg/graph.hpp"
#include "utg/report.hpp"
#include "utg/ring.hpp"
#include "utg/verify.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitError = 2;

utg::QuotientRing load(const std::string& spec) { return utg::build_quotient_ring(utg::parse_ring_spec(spec)); }

int cmd_describe(const std::string& spec, bool as_json) {
  const auto ring = load(spec);
  if (as_json) {
    std::cout << utg::describe_json(ring).dump() << "\n";
  } else {
    std::cout << utg::describe_text(ring);
  }
  return 0;
}

int cmd_invariants(const std::string& spec, const utg::ReportOptions& options, bool as_json) {
  const auto ring = load(spec);
  const auto report = utg::build_report(ring, options);
  std::cout << (as_json ? utg::render_json(report) : utg::render_text(report));
  return 0;
}

struct VerifyArgs {
  std::string suite;
  std::string zmod;
  std::optional<std::uint32_t> gf;
  int max_deg = 2;
  std::optional<std::int64_t> gauss_norm_max;
  int m = 4;
  bool json = false;
  bool timings = false;
};

int cmd_verify(const VerifyArgs& a) {
  const utg::Suite suite = utg::parse_suite(a.suite);
  std::vector<std::string> pool;
  if (!a.zmod.empty()) pool = utg::zmod_pool(utg::parse_zmod_range(a.zmod));
  if (a.gf) {
    auto more = utg::gf_pool(*a.gf, a.max_deg);
    pool.insert(pool.end(), more.begin(), more.end());
  }
  if (a.gauss_norm_max) {
    auto more = utg::gauss_pool(*a.gauss_norm_max);
    pool.insert(pool.end(), more.begin(), more.end());
  }
  if (pool.empty()) pool = utg::zmod_pool(utg::parse_zmod_range("2..30"));

  const auto result = utg::run_suite(suite, pool, a.m);
  if (a.json) {
    std::cout << utg::to_json(result, a.timings).dump() << "\n";
  } else {
    std::cout << "suite " << result.suite << ": " << result.rings << " rings, " << result.cases_run << " cases, "
              << result.cases_skipped << " skipped, " << result.failures.size() << " failures\n";
    for (const auto& f : result.failures) {
      std::cout << "  FAIL " << f.ring << " " << f.invariant << ": formula " << f.formula.dump() << ", oracle "
                << f.oracle.dump() << "\n";
    }
    if (a.timings) std::cerr << "elapsed " << result.elapsed_seconds << " s\n";
  }
  return result.ok() ? 0 : kExitFailure;
}

int cmd_export(const std::string& spec, const std::string& format, const std::string& out_path) {
  const auto fmt = utg::parse_graph_format(format);
  const auto g = utg::build_graph(load(spec));
  const std::string bytes = utg::export_graph(g, fmt);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw utg::Error(utg::ErrorKind::InvalidArgument, "cannot open " + out_path + " for writing");
  out << bytes;
  out.close();
  if (!out) throw utg::Error(utg::ErrorKind::InvalidArgument, "write to " + out_path + " failed");
  return 0;
}

int cmd_counterexample(std::uint64_t n, bool as_json) {
  const auto r = utg::build_counterexample(n);
  if (as_json) {
    std::cout << utg::to_json(r).dump() << "\n";
    return 0;
  }
  std::cout << "n                         " << r.n << "\n";
  std::cout << "longest non-unit run      " << r.longest_run << " (from " << r.run_start << ")\n";
  std::cout << "claimed domination number " << r.claimed_value << "\n";
  if (r.known_witness_dominates) {
    std::cout << "set {0,7,10,12,15}        " << (*r.known_witness_dominates ? "dominates" : "does not dominate")
              << "\n";
  }
  std::cout << "minimum dominating set    " << r.minimum_set.size() << " {";
  for (std::size_t i = 0; i < r.minimum_set.size(); ++i) std::cout << (i ? "," : "") << r.minimum_set[i];
  std::cout << "}\n";
  std::cout << (r.contradiction ? "CONTRADICTION: minimum is below the claimed value\n" : "no contradiction\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unitary Cayley graphs of finite quotient rings"};
  app.require_subcommand(1);

  std::string spec;
  bool as_json = false;

  auto* describe = app.add_subcommand("describe", "Order, prime factorization, Q, lambda and phi of a ring");
  describe->add_option("spec", spec, "Ring, e.g. Z/30, GF(2)[x]/(x^2+x+1), Zi/(3)")->required();
  describe->add_flag("--json", as_json, "Emit JSON");

  utg::ReportOptions report;
  std::vector<std::string> suites;
  auto* invariants = app.add_subcommand("invariants", "Closed-form invariants, optionally checked by search");
  invariants->add_option("spec", spec, "Ring")->required();
  invariants->add_flag("--oracle", report.oracle, "Also run the exhaustive oracles");
  invariants->add_option("--m-max", report.m_max, "Largest clique order counted")->check(CLI::Range(1, 8));
  invariants->add_option("--suite", suites, "Restrict to these suites");
  invariants->add_flag("--json", as_json, "Emit the JSON report");
  invariants->add_flag("--timings", report.timings, "Record wall time per entry");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Sweep a family of rings; exit 1 on any disagreement");
  verify->add_option("suite", va.suite, "totients|cliques|coloring|domination|metrics|strong|all")->required();
  verify->add_option("--zmod", va.zmod, "Moduli: A..B or {a,b,c}");
  auto* gf = verify->add_option("--gf", va.gf, "Prime p for GF(p)[x]/(f)");
  verify->add_option("--max-deg", va.max_deg, "Largest degree of f")->needs(gf)->check(CLI::Range(1, 8));
  verify->add_option("--gauss-norm-max", va.gauss_norm_max, "Largest norm of z in Zi/(z)");
  verify->add_option("--m", va.m, "Largest clique order")->check(CLI::Range(1, 8));
  verify->add_flag("--json", va.json, "Emit JSON");
  verify->add_flag("--timings", va.timings, "Report elapsed time");

  std::string format, out_path;
  auto* exp = app.add_subcommand("export", "Write the graph as graph6, DIMACS, DOT or JSON");
  exp->add_option("spec", spec, "Ring")->required();
  exp->add_option("--format", format, "g6|dimacs|dot|json")->required();
  exp->add_option("--out", out_path, "Output file")->required();

  std::uint64_t n = 30;
  auto* counter = app.add_subcommand("counterexample", "Minimum dominating set of G_{Z/n} against the run bound");
  counter->add_option("--n", n, "Composite modulus, not twice a prime");
  counter->add_flag("--json", as_json, "Emit JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*describe) return cmd_describe(spec, as_json);
    if (*invariants) {
      for (const auto& s : suites) report.suites.insert(utg::parse_suite(s));
      return cmd_invariants(spec, report, as_json);
    }
    if (*verify) return cmd_verify(va);
    if (*exp) return cmd_export(spec, format, out_path);
    if (*counter) return cmd_counterexample(n, as_json);
  } catch (const utg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitError;
  }
  return 0;
}
