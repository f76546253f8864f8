#include <gtest/gtest.h>

#include <set>

#include "support.hpp"
#include "utg/error.hpp"
#include "utg/oracle.hpp"

using namespace utg;
using testing_support::graph;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidArgument;
}

// Every vertex outside `set` has a neighbour inside it, checked without the library.
bool dominates_naive(const Graph& g, const std::vector<std::uint32_t>& set) {
  for (std::uint32_t v = 0; v < g.n(); ++v) {
    bool hit = false;
    for (auto s : set) hit = hit || s == v || g.adjacent(s, v);
    if (!hit) return false;
  }
  return true;
}

bool is_clique(const Graph& g, const std::vector<std::uint32_t>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (!g.adjacent(vs[i], vs[j])) return false;
    }
  }
  return true;
}

}  // namespace

TEST(Cliques, CensusExamples) {
  EXPECT_EQ(oracle_clique_census(Graph::complete(5), 3).counts[3], 10u);
  EXPECT_EQ(oracle_clique_census(graph("Z/15").graph(), 3).counts[3], 60u);
  EXPECT_EQ(oracle_clique_census(graph("Z/12").graph(), 3).counts[3], 0u);
  EXPECT_EQ(kind_of([] { oracle_clique_census(Graph::complete(5), 9); }), ErrorKind::LimitExceeded);
}

TEST(Cliques, ListAndMaximum) {
  const auto g = graph("Z/15").graph();
  const auto tri = oracle_cliques_of_order(g, 3);
  EXPECT_EQ(tri.size(), 60u);
  for (const auto& c : tri) EXPECT_TRUE(is_clique(g, c));
  EXPECT_TRUE(std::is_sorted(tri.begin(), tri.end()));
  const auto mc = oracle_max_clique(g);
  EXPECT_EQ(mc.order(), 3u);
  EXPECT_TRUE(is_clique(g, mc.vertices));
  EXPECT_EQ(oracle_max_clique(Graph::complete(9)).order(), 9u);
  EXPECT_EQ(oracle_max_clique(Graph::cycle(7)).order(), 2u);
}

TEST(Coloring, Examples) {
  const auto c6 = oracle_coloring(Graph::cycle(6));
  EXPECT_EQ(c6.chromatic_number, 2u);
  EXPECT_EQ(c6.chromatic_index, 2u);
  const auto z15 = oracle_coloring(graph("Z/15").graph());
  EXPECT_EQ(z15.chromatic_number, 3u);
  EXPECT_EQ(z15.chromatic_index, 9u);
  const auto k4 = oracle_coloring(Graph::complete(4));
  EXPECT_EQ(k4.chromatic_number, 4u);
  EXPECT_EQ(k4.chromatic_index, 3u);
  EXPECT_EQ(oracle_chromatic_index(Graph::complete(5)), 5u);
  EXPECT_EQ(oracle_chromatic_number(Graph::cycle(7)).colors, 3u);
}

TEST(Coloring, WitnessesAreProper) {
  const auto g = graph("Zi/(3)").graph();
  const auto vc = oracle_chromatic_number(g);
  for (const auto& e : g.edges()) EXPECT_NE(vc.color_of[e.u], vc.color_of[e.v]);
  EXPECT_FALSE(oracle_k_coloring(g, vc.colors - 1).has_value());
  const auto h = graph("Z/10").graph();
  const auto ec = oracle_edge_coloring(h, 4);
  ASSERT_TRUE(ec.has_value());
  ASSERT_EQ(ec->edges.size(), ec->colors.size());
  for (std::size_t i = 0; i < ec->edges.size(); ++i) {
    for (std::size_t j = i + 1; j < ec->edges.size(); ++j) {
      const auto& a = ec->edges[i];
      const auto& b = ec->edges[j];
      const bool touch = a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
      if (touch) EXPECT_NE(ec->colors[i], ec->colors[j]);
    }
  }
}

TEST(Coloring, Limits) {
  OracleLimits tiny;
  tiny.max_vertices_coloring = 5;
  tiny.max_edges_edge_coloring = 5;
  EXPECT_EQ(kind_of([&] { oracle_chromatic_number(Graph::complete(6), tiny); }), ErrorKind::LimitExceeded);
  EXPECT_EQ(kind_of([&] { oracle_chromatic_index(Graph::complete(4), tiny); }), ErrorKind::LimitExceeded);
  tiny.max_clique_order = 0;
  EXPECT_EQ(kind_of([&] { tiny.validate(); }), ErrorKind::InvalidArgument);
}

TEST(Metrics, Examples) {
  const auto z6 = oracle_metrics(graph("Z/6").graph());
  EXPECT_EQ(z6.girth, 6u);
  EXPECT_EQ(z6.component_count, 1u);
  EXPECT_EQ(z6.diameters, (std::vector<std::uint32_t>{3}));
  EXPECT_TRUE(z6.bipartite);
  const auto f = oracle_metrics(graph("GF(2)[x]/(x^2+x)").graph());
  EXPECT_EQ(f.girth, std::nullopt);
  EXPECT_EQ(f.component_count, 2u);
  EXPECT_EQ(f.diameters, (std::vector<std::uint32_t>{1, 1}));
  EXPECT_TRUE(f.bipartite);
  const auto z35 = oracle_metrics(graph("Z/35").graph());
  EXPECT_EQ(z35.girth, 3u);
  EXPECT_EQ(z35.component_count, 1u);
  EXPECT_EQ(z35.diameters, (std::vector<std::uint32_t>{2}));
  EXPECT_FALSE(z35.bipartite);
}

TEST(Metrics, CommonNeighbors) {
  const auto g = graph("Z/12").graph();
  EXPECT_EQ(oracle_common_neighbors(g, 0, 6), 4u);
  EXPECT_EQ(oracle_common_neighbors(g, 0, 1), 0u);
  EXPECT_EQ(oracle_common_neighbors(graph("Z/15").graph(), 3, 4), 3u);
}

TEST(Domination, Examples) {
  const auto k7 = oracle_domination(Graph::complete(7));
  EXPECT_EQ(k7.dominating_set.size(), 1u);
  ASSERT_TRUE(k7.dominating_clique.has_value());
  EXPECT_EQ(k7.dominating_clique->size(), 1u);
  const auto z30 = graph("Z/30").graph();
  OracleLimits wide;
  wide.max_dominating_search = 60;
  EXPECT_EQ(oracle_min_dominating_clique(z30, wide), std::nullopt);
  EXPECT_TRUE(dominates(z30, {0, 7, 10, 12, 15}));
  EXPECT_TRUE(dominates_naive(z30, {0, 7, 10, 12, 15}));
  const auto best = oracle_min_dominating_set(z30, wide);
  EXPECT_LE(best.size(), 5u);
  EXPECT_TRUE(dominates_naive(z30, best));
  EXPECT_TRUE(dominates_naive(z30, {0, 3, 5, 8}));
  EXPECT_EQ(kind_of([] { oracle_min_dominating_set(graph("Z/42").graph()); }), ErrorKind::LimitExceeded);
}

TEST(Domination, MinimumIsMinimal) {
  // Exhaustive check over all subsets of one size below the reported minimum.
  for (const char* spec : {"Z/12", "Z/15", "Z/21", "Zi/(3)"}) {
    const auto g = graph(spec).graph();
    const auto best = oracle_min_dominating_set(g);
    ASSERT_TRUE(dominates_naive(g, best));
    const std::size_t k = best.size() - 1;
    if (k == 0) continue;
    std::vector<std::uint32_t> pick;
    bool found = false;
    auto rec = [&](auto&& self, std::uint32_t from) -> void {
      if (found) return;
      if (pick.size() == k) {
        found = dominates_naive(g, pick);
        return;
      }
      for (std::uint32_t v = from; v < g.n(); ++v) {
        pick.push_back(v);
        self(self, v + 1);
        pick.pop_back();
      }
    };
    rec(rec, 0);
    EXPECT_FALSE(found) << spec;
  }
}

TEST(Domination, Profile) {
  const auto rows = oracle_clique_domination_profile(graph("Z/35").graph(), 3);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].dominating, 0u);
  EXPECT_EQ(rows[1].dominating, 0u);
  EXPECT_EQ(rows[2].dominating, rows[2].cliques);
  EXPECT_GT(rows[2].cliques, 0u);
}

TEST(Strong, ChromaticExamples) {
  const auto z4 = graph("Z/4").graph();
  EXPECT_FALSE(oracle_strong_chromatic(z4, 3));
  EXPECT_TRUE(oracle_strong_chromatic(z4, 4));
  EXPECT_TRUE(oracle_strong_chromatic(Graph::complete(3), 3));
  EXPECT_FALSE(oracle_strong_chromatic(Graph::complete(3), 2));
  EXPECT_EQ(kind_of([] { oracle_strong_chromatic(Graph::complete(13), 13); }), ErrorKind::LimitExceeded);
}

TEST(Strong, EdgeChromaticExamples) {
  EXPECT_EQ(oracle_strong_edge_chromatic(Graph::complete(3)), 3u);
  EXPECT_EQ(oracle_strong_edge_chromatic(Graph::cycle(6)), 3u);
  EXPECT_EQ(oracle_strong_edge_chromatic(Graph::complete(5)), 10u);
  EXPECT_EQ(strong_edge_conflict_graph(Graph::cycle(6)).edge_count(), 12u);
}

TEST(Strong, VerifyColoring) {
  const auto k3 = Graph::complete(3);
  EdgeColoring two{k3.edges(), {0, 1, 0}, 2};
  EXPECT_FALSE(verify_strong_edge_coloring(k3, two));
  EdgeColoring three{k3.edges(), {0, 1, 2}, 3};
  EXPECT_TRUE(verify_strong_edge_coloring(k3, three));
  EdgeColoring short_{{k3.edges()[0]}, {0}, 1};
  EXPECT_EQ(kind_of([&] { verify_strong_edge_coloring(k3, short_); }), ErrorKind::IncompleteColoring);
  const auto c4 = Graph::cycle(4);
  EdgeColoring bad{{{0, 1}, {1, 2}, {2, 3}, {0, 2}}, {0, 1, 2, 3}, 4};
  EXPECT_EQ(kind_of([&] { verify_strong_edge_coloring(c4, bad); }), ErrorKind::NotAnEdge);
}

TEST(Automorphism, Checks) {
  const auto c6 = Graph::cycle(6);
  EXPECT_TRUE(is_automorphism(c6, VertexMap{{1, 2, 3, 4, 5, 0}}));
  EXPECT_TRUE(is_automorphism(c6, VertexMap{{0, 5, 4, 3, 2, 1}}));
  EXPECT_FALSE(is_automorphism(c6, VertexMap{{1, 0, 2, 3, 4, 5}}));
  EXPECT_EQ(kind_of([&] { is_automorphism(c6, VertexMap{{0, 0, 1, 2, 3, 4}}); }), ErrorKind::NotAPermutation);
  EXPECT_EQ(kind_of([&] { is_automorphism(c6, VertexMap{{0, 1, 2}}); }), ErrorKind::NotAPermutation);
}
