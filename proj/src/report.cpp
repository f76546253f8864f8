#include "utg/report.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>

#include "utg/closed_form.hpp"
#include "utg/error.hpp"
#include "utg/kernels.hpp"
#include "utg/number_theory.hpp"
#include "utg/totients.hpp"

namespace utg {

using json = nlohmann::ordered_json;

namespace {

// Census work is roughly the number of (m-1)-cliques; past this it is skipped.
constexpr double kCensusBudget = 5e7;
constexpr std::uint32_t kMaxCommonNeighborOrder = 256;

json big_to_json(const BigInt& v) {
  if (v <= std::numeric_limits<std::uint64_t>::max()) return json(v.convert_to<std::uint64_t>());
  return json(v.str());
}

json vertices_json(const std::vector<std::uint32_t>& v) { return json(v); }

json factor_json(const PrimeFactor& pf) {
  json j;
  j["generator"] = to_string(pf.generator);
  j["exponent"] = pf.exponent;
  j["residue_index"] = pf.residue_index;
  j["residue_char"] = pf.residue_char;
  return j;
}

std::string_view family_name(RingFamily f) {
  switch (f) {
    case RingFamily::IntegerMod: return "integer";
    case RingFamily::PolyMod: return "polynomial";
    case RingFamily::GaussianMod: return "gaussian";
  }
  return "unknown";
}

bool numbers_le(const json& a, const json& b) {
  if (!a.is_number() || !b.is_number()) return false;
  return a.get<std::uint64_t>() <= b.get<std::uint64_t>();
}

class Builder {
 public:
  Builder(const QuotientRing& ring, const ReportOptions& options, std::vector<ReportEntry>& out)
      : ring_(ring), options_(options), out_(out) {}

  bool wants(Suite s) const {
    return options_.suites.empty() || options_.suites.count(Suite::All) || options_.suites.count(s);
  }
  bool oracle() const { return options_.oracle; }
  const ReportOptions& options() const { return options_; }
  const QuotientRing& ring() const { return ring_; }
  bool witness_ok() const { return ring_.order() <= options_.max_witness_order; }

  const Graph& graph() {
    if (!graph_) graph_.emplace(build_graph(ring_));
    return graph_->graph();
  }
  const UnitaryCayleyGraph& cayley() {
    graph();
    return *graph_;
  }

  // Runs fill(entry) and records it; limit errors while computing the oracle
  // side turn into a skipped note.
  template <class F>
  void entry(std::string name, Suite suite, F&& fill) {
    ReportEntry e;
    e.name = std::move(name);
    e.suite = suite;
    const auto start = std::chrono::steady_clock::now();
    try {
      fill(e);
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::LimitExceeded) throw;
      e.oracle_value = nullptr;
      e.skipped = err.what();
    }
    e.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!e.formula_value.is_null() && !e.oracle_value.is_null()) {
      e.agree = e.relation == "le" ? numbers_le(e.oracle_value, e.formula_value) : e.formula_value == e.oracle_value;
    }
    out_.push_back(std::move(e));
  }

 private:
  const QuotientRing& ring_;
  const ReportOptions& options_;
  std::vector<ReportEntry>& out_;
  std::optional<UnitaryCayleyGraph> graph_;
};

void totient_entries(Builder& b) {
  const QuotientRing& ring = b.ring();
  const int r_max = b.options().exhaustive ? 6 : 3;
  b.entry("phi", Suite::Totients, [&](ReportEntry& e) {
    e.formula_value = phi(ring);
    if (b.oracle()) e.oracle_value = phi_enumerate(ring);
  });
  for (int r = 1; r <= r_max; ++r) {
    b.entry("script_S[" + std::to_string(r) + "]", Suite::Totients, [&](ReportEntry& e) {
      e.formula_value = script_S_formula(r, ring);
      if (b.oracle()) e.oracle_value = script_S_enumerate(r, ring);
    });
  }
  const bool integers = ring.spec().family() == RingFamily::IntegerMod;
  for (int r = 0; r <= r_max; ++r) {
    b.entry("cal_S[" + std::to_string(r) + "]", Suite::Totients, [&](ReportEntry& e) {
      e.formula_value = cal_S(r, ring);
      // On Z/n the formula-defined and enumeration-defined totients coincide.
      if (b.oracle() && integers) e.oracle_value = r == 0 ? std::uint64_t{ring.order()} : script_S_enumerate(r, ring);
    });
  }
  if (integers && b.options().exhaustive) {
    for (int r = 0; r <= r_max; ++r) {
      b.entry("schemmel_classic[" + std::to_string(r) + "]", Suite::Totients, [&](ReportEntry& e) {
        e.formula_value = schemmel_classic(r, ring.order());
        e.oracle_value = cal_S(r, ring);
      });
    }
  }
}

void clique_entries(Builder& b) {
  const QuotientRing& ring = b.ring();
  const int m_max = b.options().m_max;
  std::optional<kernels::CliqueCensus> census;
  std::optional<std::string> census_skip;
  if (b.oracle()) {
    try {
      if (m_max > 1 && static_cast<double>(clique_count_formula(ring, m_max - 1)) > kCensusBudget) {
        throw Error(ErrorKind::LimitExceeded, "clique census work exceeds budget");
      }
      census = oracle_clique_census(b.graph(), m_max, b.options().limits);
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::LimitExceeded) throw;
      census_skip = err.what();
    }
  }
  for (int m = 1; m <= m_max; ++m) {
    b.entry("cliques[" + std::to_string(m) + "]", Suite::Cliques, [&](ReportEntry& e) {
      e.formula_value = big_to_json(clique_count_formula(ring, m));
      if (census) e.oracle_value = census->counts[m];
      if (census_skip) e.skipped = census_skip;
    });
  }
  if (!b.options().exhaustive) return;
  for (int m = 1; m <= std::max(m_max, 8); ++m) {
    b.entry("divisibility[" + std::to_string(m) + "]", Suite::Cliques, [&](ReportEntry& e) {
      BigInt factorial = 1;
      for (int i = 2; i <= m; ++i) factorial *= i;
      e.formula_value = true;
      e.oracle_value = clique_numerator(ring, m) % factorial == 0;
    });
  }
  if (ring.spec().family() == RingFamily::IntegerMod) {
    b.entry("triangle_identity", Suite::Cliques, [&](ReportEntry& e) {
      const std::uint64_t n = ring.order();
      e.formula_value = big_to_json(clique_count_formula(ring, 3));
      e.oracle_value = big_to_json(BigInt(n) * schemmel_classic(1, n) * schemmel_classic(2, n) / 6);
    });
  }
}

void coloring_entries(Builder& b) {
  const QuotientRing& ring = b.ring();
  const auto& limits = b.options().limits;
  b.entry("omega", Suite::Coloring, [&](ReportEntry& e) {
    e.formula_value = omega_chi_formula(ring);
    if (!b.oracle()) return;
    if (ring.order() > static_cast<std::uint32_t>(limits.max_vertices_coloring)) {
      throw Error(ErrorKind::LimitExceeded, "vertex count " + std::to_string(ring.order()) + " exceeds limit " +
                                                std::to_string(limits.max_vertices_coloring));
    }
    const Clique c = oracle_max_clique(b.graph());
    e.oracle_value = c.order();
    e.witness = vertices_json(c.vertices);
  });
  b.entry("chromatic_number", Suite::Coloring, [&](ReportEntry& e) {
    e.formula_value = omega_chi_formula(ring);
    if (b.witness_ok()) e.witness = omega_chi_witness(ring).color_of;
    if (b.oracle()) e.oracle_value = oracle_chromatic_number(b.graph(), limits).colors;
  });
  b.entry("chromatic_index", Suite::Coloring, [&](ReportEntry& e) {
    e.formula_value = chromatic_index_formula(ring);
    if (b.oracle()) e.oracle_value = oracle_chromatic_index(b.graph(), limits);
  });
  b.entry("bipartite", Suite::Coloring, [&](ReportEntry& e) {
    const BipartiteResult r = bipartite_formula(ring);
    e.formula_value = r.bipartite;
    if (r.witness && b.witness_ok()) e.witness = vertices_json(r.witness->in_prime);
    if (b.oracle()) e.oracle_value = oracle_metrics(b.graph()).bipartite;
  });
}

void metric_entries(Builder& b) {
  const QuotientRing& ring = b.ring();
  std::optional<GraphMetrics> metrics;
  if (b.oracle()) metrics = oracle_metrics(b.graph());
  const DiameterClassification d = diameter_components_formula(ring);
  b.entry("components", Suite::Metrics, [&](ReportEntry& e) {
    e.formula_value = d.component_count;
    if (metrics) e.oracle_value = metrics->component_count;
  });
  b.entry("component_diameter", Suite::Metrics, [&](ReportEntry& e) {
    e.formula_value = d.component_diameter;
    if (!metrics) return;
    const auto& ds = metrics->diameters;
    if (std::all_of(ds.begin(), ds.end(), [&](auto x) { return x == ds.front(); })) {
      e.oracle_value = ds.front();
    } else {
      e.oracle_value = ds;
    }
  });
  b.entry("girth", Suite::Metrics, [&](ReportEntry& e) {
    const auto* m = std::get_if<IntegerModulus>(&ring.spec().modulus);
    if (m && m->n >= 3) e.formula_value = girth_formula_integer(m->n);
    if (metrics) e.oracle_value = metrics->girth ? json(*metrics->girth) : json("none");
  });
  for (std::size_t i = 0; i < ring.factors().size(); ++i) {
    const auto cycle = four_cycle_witness(ring, i);
    if (!cycle) continue;
    b.entry("four_cycle[" + to_string(ring.factors()[i].generator) + "]", Suite::Metrics, [&](ReportEntry& e) {
      e.formula_value = true;
      e.witness = vertices_json(*cycle);
      if (!b.oracle()) return;
      const Graph& g = b.graph();
      bool ok = true;
      for (std::size_t k = 0; k < 4; ++k) ok = ok && g.adjacent((*cycle)[k], (*cycle)[(k + 1) % 4]);
      e.oracle_value = ok;
    });
  }
  b.entry("common_neighbors", Suite::Metrics, [&](ReportEntry& e) {
    const std::uint32_t n = ring.order();
    if (n > kMaxCommonNeighborOrder) {
      throw Error(ErrorKind::LimitExceeded,
                  "vertex count " + std::to_string(n) + " exceeds limit " + std::to_string(kMaxCommonNeighborOrder));
    }
    json formula = json::array();
    for (const RingElement s : ring.elements()) formula.push_back(common_neighbor_formula(ring, s));
    e.formula_value = formula;
    if (!b.oracle()) return;
    // Every pair (a, b) is counted; a difference class reports -1 if its
    // pairs disagree among themselves.
    const auto counts = kernels::common_neighbor_matrix(b.graph());
    std::vector<std::int64_t> by_diff(n, -2);
    for (std::uint32_t a = 0; a < n; ++a) {
      for (std::uint32_t c = 0; c < n; ++c) {
        auto& slot = by_diff[ring.sub_index(a, c)];
        const auto v = static_cast<std::int64_t>(counts[std::size_t{a} * n + c]);
        slot = (slot == -2 || slot == v) ? v : -1;
      }
    }
    e.oracle_value = by_diff;
  });
}

void domination_entries(Builder& b) {
  const QuotientRing& ring = b.ring();
  const auto& limits = b.options().limits;
  const auto gamma = clique_domination_formula(ring);
  b.entry("clique_domination", Suite::Domination, [&](ReportEntry& e) {
    e.formula_value = gamma ? json(*gamma) : json("none");
    if (!b.oracle()) return;
    const auto c = oracle_min_dominating_clique(b.graph(), limits);
    e.oracle_value = c ? json(c->size()) : json("none");
    if (c) e.witness = vertices_json(*c);
  });
  if (b.options().exhaustive) {
    b.entry("clique_domination_profile", Suite::Domination, [&](ReportEntry& e) {
      // Dominating k-cliques: all of them from order gamma on, none before.
      // Past order lambda + 1 every clique contains a dominating one.
      const IdealStats s = ideal_stats(ring);
      const auto top = std::min<std::uint64_t>(s.q_min, static_cast<std::uint64_t>(s.lambda) + 1);
      json formula = json::array();
      for (std::uint64_t k = 1; k <= top; ++k) {
        const bool all = gamma && k >= *gamma;
        formula.push_back(all ? big_to_json(clique_count_formula(ring, static_cast<int>(k))) : json(0));
      }
      e.formula_value = formula;
      if (!b.oracle()) return;
      json oracle = json::array();
      for (const auto& row : oracle_clique_domination_profile(b.graph(), static_cast<int>(top), limits)) oracle.push_back(row.dominating);
      e.oracle_value = oracle;
    });
  }
  b.entry("domination_number", Suite::Domination, [&](ReportEntry& e) {
    if (!b.oracle()) return;
    const auto set = oracle_min_dominating_set(b.graph(), limits);
    e.oracle_value = set.size();
    e.witness = vertices_json(set);
  });
}

// Smallest k with G strongly k-colorable, searching outward from `start`.
std::uint64_t strong_chromatic_search(const Graph& g, std::uint64_t start, const OracleLimits& limits) {
  auto ok = [&](std::uint64_t k) { return oracle_strong_chromatic(g, static_cast<std::uint32_t>(k), limits); };
  std::uint64_t k = start;
  if (ok(k)) {
    while (k > 1 && ok(k - 1)) --k;
    return k;
  }
  while (!ok(++k)) {
  }
  return k;
}

void strong_entries(Builder& b) {
  const QuotientRing& ring = b.ring();
  const auto& limits = b.options().limits;
  if (ring.factors().size() == 1) {
    b.entry("strong_chromatic", Suite::Strong, [&](ReportEntry& e) {
      e.formula_value = strong_chromatic_formula_prime_power(ring);
      if (b.oracle()) e.oracle_value = strong_chromatic_search(b.graph(), e.formula_value.get<std::uint64_t>(), limits);
    });
    b.entry("strong_edge_chromatic", Suite::Strong, [&](ReportEntry& e) {
      e.formula_value = strong_edge_formula_prime_power(ring);
      if (b.oracle()) e.oracle_value = oracle_strong_edge_chromatic(b.graph(), limits);
    });
    return;
  }
  std::optional<PairingColoring> pairing;
  try {
    pairing = strong_edge_coloring_QM(ring);
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::ShapeMismatch) throw;
    return;
  }
  b.entry("strong_edge_chromatic", Suite::Strong, [&](ReportEntry& e) {
    e.formula_value = pairing->bound;
    e.relation = "le";
    if (b.oracle()) e.oracle_value = oracle_strong_edge_chromatic(b.graph(), limits);
  });
  b.entry("strong_edge_pairing", Suite::Strong, [&](ReportEntry& e) {
    e.formula_value = pairing->bound;
    e.witness = json{{"mu", pairing->mu}, {"colors", pairing->coloring.color_count}};
    if (!b.oracle()) return;
    const bool valid = verify_strong_edge_coloring(b.graph(), pairing->coloring);
    e.oracle_value = valid ? json(pairing->coloring.color_count) : json("invalid");
  });
}

std::string value_text(const json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  const std::string s = v.dump();
  return s.size() > 40 ? s.substr(0, 37) + "..." : s;
}

}  // namespace

Suite parse_suite(std::string_view name) {
  static constexpr std::pair<std::string_view, Suite> kNames[] = {
      {"totients", Suite::Totients}, {"cliques", Suite::Cliques}, {"coloring", Suite::Coloring},
      {"domination", Suite::Domination}, {"metrics", Suite::Metrics}, {"strong", Suite::Strong},
      {"all", Suite::All}};
  for (const auto& [n, s] : kNames) {
    if (n == name) return s;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown suite '" + std::string(name) + "'");
}

std::string_view to_string(Suite suite) {
  switch (suite) {
    case Suite::Totients: return "totients";
    case Suite::Cliques: return "cliques";
    case Suite::Coloring: return "coloring";
    case Suite::Domination: return "domination";
    case Suite::Metrics: return "metrics";
    case Suite::Strong: return "strong";
    case Suite::All: return "all";
  }
  return "unknown";
}

std::size_t InvariantReport::disagreements() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const ReportEntry& e) { return e.agree == false; }));
}

InvariantReport build_report(const QuotientRing& ring, const ReportOptions& options) {
  options.limits.validate();
  if (options.m_max < 1) throw Error(ErrorKind::InvalidArgument, "m_max must be >= 1");
  InvariantReport report;
  report.ring = ring.name();
  report.order = ring.order();
  report.factors = ring.factors();
  const IdealStats stats = ideal_stats(ring);
  report.q_min = stats.q_min;
  report.lambda = stats.lambda;
  report.phi = phi(ring);
  report.options = options;

  Builder b(ring, options, report.entries);
  if (b.wants(Suite::Totients)) totient_entries(b);
  if (b.wants(Suite::Cliques)) clique_entries(b);
  if (b.wants(Suite::Coloring)) coloring_entries(b);
  if (b.wants(Suite::Metrics)) metric_entries(b);
  if (b.wants(Suite::Domination)) domination_entries(b);
  if (b.wants(Suite::Strong)) strong_entries(b);
  return report;
}

json to_json(const InvariantReport& report) {
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["ring"] = report.ring;
  j["order"] = report.order;
  j["factorization"] = json::array();
  for (const auto& pf : report.factors) j["factorization"].push_back(factor_json(pf));
  j["q_min"] = report.q_min;
  j["lambda"] = report.lambda;
  j["phi"] = report.phi;
  const auto& l = report.options.limits;
  j["oracle"] = report.options.oracle;
  j["limits"] = {{"m_max", report.options.m_max},
                 {"max_vertices_coloring", l.max_vertices_coloring},
                 {"max_edges_edge_coloring", l.max_edges_edge_coloring},
                 {"max_vertices_strong", l.max_vertices_strong},
                 {"max_dominating_search", l.max_dominating_search},
                 {"max_clique_order", l.max_clique_order}};
  j["entries"] = json::array();
  for (const auto& e : report.entries) {
    json x;
    x["name"] = e.name;
    x["suite"] = to_string(e.suite);
    x["formula_value"] = e.formula_value;
    if (e.relation != "eq") x["relation"] = e.relation;
    if (!e.oracle_value.is_null()) x["oracle_value"] = e.oracle_value;
    if (e.agree) x["agree"] = *e.agree;
    if (!e.witness.is_null()) x["witness"] = e.witness;
    if (e.skipped) x["skipped"] = *e.skipped;
    if (report.options.timings) x["seconds"] = e.seconds;
    j["entries"].push_back(std::move(x));
  }
  return j;
}

std::string render_json(const InvariantReport& report) { return to_json(report).dump() + "\n"; }

std::string render_text(const InvariantReport& report) {
  std::ostringstream out;
  out << report.ring << "  order " << report.order << "  Q " << report.q_min << "  lambda " << report.lambda
      << "  phi " << report.phi << "\n";
  for (const auto& e : report.entries) {
    out << "  " << e.name;
    for (std::size_t pad = e.name.size(); pad < 28; ++pad) out << ' ';
    out << (e.relation == "le" ? "<= " : "") << value_text(e.formula_value) << "  oracle "
        << value_text(e.oracle_value);
    if (e.agree) out << (*e.agree ? "  ok" : "  MISMATCH");
    if (e.skipped) out << "  skipped: " << *e.skipped;
    out << "\n";
  }
  return out.str();
}

json describe_json(const QuotientRing& ring) {
  const IdealStats s = ideal_stats(ring);
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["ring"] = ring.name();
  j["family"] = family_name(ring.spec().family());
  j["order"] = ring.order();
  j["factorization"] = json::array();
  for (const auto& pf : ring.factors()) j["factorization"].push_back(factor_json(pf));
  j["q_min"] = s.q_min;
  j["lambda"] = s.lambda;
  j["phi"] = phi(ring);
  j["prime_ideal"] = is_prime_ideal(ring);
  return j;
}

std::string describe_text(const QuotientRing& ring) {
  const IdealStats s = ideal_stats(ring);
  std::ostringstream out;
  out << "ring    " << ring.name() << "\n";
  out << "order   " << ring.order() << "\n";
  out << "factors";
  const char* sep = " ";
  for (const auto& pf : ring.factors()) {
    out << sep << "(" << to_string(pf.generator) << ")";
    if (pf.exponent > 1) out << "^" << pf.exponent;
    out << " [index " << pf.residue_index << ", char " << pf.residue_char << "]";
    sep = " * ";
  }
  out << "\n";
  out << "Q       " << s.q_min << "\n";
  out << "lambda  " << s.lambda << "\n";
  out << "phi     " << phi(ring) << "\n";
  return out.str();
}

std::pair<std::uint32_t, std::uint64_t> longest_nonunit_run(std::uint64_t n) {
  std::uint32_t best = 0, run = 0;
  std::uint64_t best_start = 0;
  for (std::uint64_t k = 1; k <= 2 * n; ++k) {
    if (std::gcd(k, n) > 1) {
      if (++run > best) {
        best = run;
        best_start = k + 1 - run;
      }
    } else {
      run = 0;
    }
  }
  return {best, best_start};
}

CounterexampleReport build_counterexample(std::uint64_t n, const OracleLimits& limits) {
  if (n < 4 || is_prime(n)) throw Error(ErrorKind::InvalidArgument, std::to_string(n) + " is not composite");
  if (n % 2 == 0 && is_prime(n / 2)) {
    throw Error(ErrorKind::InvalidArgument, std::to_string(n) + " is twice a prime");
  }
  if (n > static_cast<std::uint64_t>(limits.max_dominating_search)) {
    throw Error(ErrorKind::LimitExceeded, "n = " + std::to_string(n) + " exceeds the domination search limit " +
                                              std::to_string(limits.max_dominating_search));
  }
  CounterexampleReport r;
  r.n = n;
  std::tie(r.longest_run, r.run_start) = longest_nonunit_run(n);
  r.claimed_value = r.longest_run + 1;
  const auto ring = build_quotient_ring(parse_ring_spec("Z/" + std::to_string(n)));
  const auto g = build_graph(ring);
  if (n == 30) {
    r.known_witness = {0, 7, 10, 12, 15};
    r.known_witness_dominates = dominates(g, r.known_witness);
  }
  r.minimum_set = oracle_min_dominating_set(g, limits);
  r.contradiction = r.minimum_set.size() < r.claimed_value;
  return r;
}

json to_json(const CounterexampleReport& r) {
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["n"] = r.n;
  j["longest_run"] = r.longest_run;
  j["run_start"] = r.run_start;
  j["claimed_value"] = r.claimed_value;
  if (r.known_witness_dominates) {
    j["known_witness"] = r.known_witness;
    j["known_witness_dominates"] = *r.known_witness_dominates;
  }
  j["minimum_dominating_set"] = {{"size", r.minimum_set.size()}, {"witness", r.minimum_set}};
  j["contradiction"] = r.contradiction;
  return j;
}

}  // namespace utg
