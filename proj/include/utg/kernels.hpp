#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "utg/graph.hpp"
#include "utg/ring.hpp"

// Data-parallel inner loops shared by the totient enumeration and the graph
// oracles. The top-level functions use OpenMP when it is available; the
// serial:: versions are the reference implementations the tests compare
// against. Both return identical results for identical input.
namespace utg::kernels {

// |{a : a + i is a unit for all 0 <= i < r}|.
std::uint64_t count_unit_runs(const QuotientRing& ring, int r);

struct CliqueCensus {
  // counts[k] = number of k-cliques, k = 0..m_max (counts[0] = 1).
  std::vector<std::uint64_t> counts;
  // Largest k <= m_max with counts[k] > 0.
  int max_order = 0;
};

CliqueCensus clique_census(const Graph& g, int m_max);

// Eccentricity of every vertex inside its own connected component.
std::vector<std::uint32_t> eccentricities(const Graph& g);

// Length of the shortest cycle, or nullopt for a forest.
std::optional<std::uint32_t> girth(const Graph& g);

// Row-major n x n matrix of |N(u) ∩ N(v)|.
std::vector<std::uint32_t> common_neighbor_matrix(const Graph& g);

namespace serial {

std::uint64_t count_unit_runs(const QuotientRing& ring, int r);
CliqueCensus clique_census(const Graph& g, int m_max);
std::vector<std::uint32_t> eccentricities(const Graph& g);
std::optional<std::uint32_t> girth(const Graph& g);
std::vector<std::uint32_t> common_neighbor_matrix(const Graph& g);

}  // namespace serial

// Threads OpenMP will use for the parallel kernels (1 without OpenMP).
int thread_count();

}  // namespace utg::kernels
