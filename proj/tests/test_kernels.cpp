#include <gtest/gtest.h>

#include "support.hpp"
#include "utg/kernels.hpp"

using namespace utg;
using testing_support::graph;
using testing_support::ring;

namespace {

Graph petersen() {
  std::vector<Edge> e;
  for (std::uint32_t i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5});
    e.push_back({i, i + 5});
    e.push_back({i + 5, (i + 2) % 5 + 5});
  }
  return Graph::from_edges(10, e);
}

Graph path(std::uint32_t n) {
  Graph g(n);
  for (std::uint32_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

}  // namespace

TEST(Kernels, UnitRunsSerialMatchesParallel) {
  for (const char* spec : {"Z/360", "Zi/(5+5i)", "GF(3)[x]/(x^4+x)"}) {
    const auto r = ring(spec);
    for (int k = 1; k <= 6; ++k) EXPECT_EQ(kernels::count_unit_runs(r, k), kernels::serial::count_unit_runs(r, k));
  }
}

TEST(Kernels, CensusMatchesNaiveCount) {
  for (const char* spec : {"Z/15", "Z/35", "Zi/(3)", "GF(2)[x]/(x^3+x+1)", "Z/12", "Zi/(2+i)"}) {
    const auto g = graph(spec);
    const auto census = kernels::clique_census(g, 5);
    const auto serial = kernels::serial::clique_census(g, 5);
    EXPECT_EQ(census.counts, serial.counts);
    EXPECT_EQ(census.max_order, serial.max_order);
    EXPECT_EQ(census.counts[0], 1u);
    for (int m = 1; m <= 5; ++m) EXPECT_EQ(census.counts[m], testing_support::naive_cliques(g, m)) << spec << " " << m;
  }
  EXPECT_EQ(kernels::clique_census(Graph::complete(70), 3).counts[3], 70u * 69 * 68 / 6);
}

TEST(Kernels, Girth) {
  EXPECT_EQ(kernels::girth(petersen()), 5u);
  EXPECT_EQ(kernels::serial::girth(petersen()), 5u);
  EXPECT_EQ(kernels::girth(Graph::cycle(9)), 9u);
  EXPECT_EQ(kernels::girth(path(6)), std::nullopt);
  EXPECT_EQ(kernels::girth(graph("Z/6")), 6u);
  EXPECT_EQ(kernels::girth(graph("Z/8")), 4u);
  EXPECT_EQ(kernels::girth(graph("Z/2")), std::nullopt);
}

TEST(Kernels, Eccentricities) {
  EXPECT_EQ(kernels::eccentricities(path(5)), (std::vector<std::uint32_t>{4, 3, 2, 3, 4}));
  for (const char* spec : {"Z/30", "GF(2)[x]/(x^2+x)", "Zi/(6)"}) {
    const auto g = graph(spec);
    EXPECT_EQ(kernels::eccentricities(g), kernels::serial::eccentricities(g));
  }
}

TEST(Kernels, CommonNeighborMatrix) {
  const auto g = graph("Z/42");
  const auto m = kernels::common_neighbor_matrix(g);
  EXPECT_EQ(m, kernels::serial::common_neighbor_matrix(g));
  const auto& gr = g.graph();
  for (std::uint32_t u = 0; u < gr.n(); ++u) {
    for (std::uint32_t v = 0; v < gr.n(); ++v) {
      std::uint32_t c = 0;
      for (std::uint32_t w = 0; w < gr.n(); ++w) c += gr.adjacent(u, w) && gr.adjacent(v, w);
      EXPECT_EQ(m[u * gr.n() + v], c);
    }
  }
}

TEST(Kernels, ThreadCountPositive) { EXPECT_GE(kernels::thread_count(), 1); }
