#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "utg/graph.hpp"
#include "utg/kernels.hpp"

// Exact exhaustive computations on a materialized graph. None of these look
// at the ring; they are the ground truth the closed forms are checked against.
// Every search branches in a fixed vertex order, so witnesses are reproducible.
namespace utg {

struct OracleLimits {
  int max_vertices_coloring = 64;
  int max_edges_edge_coloring = 60;
  int max_vertices_strong = 12;
  int max_dominating_search = 40;
  int max_clique_order = 8;

  // Throws InvalidArgument unless every limit is positive.
  void validate() const;
};

// Largest dominating set the exact search will look for.
inline constexpr std::uint32_t kMaxDominatingWitness = 8;

kernels::CliqueCensus oracle_clique_census(const Graph& g, int m_max, const OracleLimits& limits = {});

// Every clique of exactly k vertices, each sorted, in lexicographic order.
std::vector<std::vector<std::uint32_t>> oracle_cliques_of_order(const Graph& g, int k);

struct Clique {
  std::vector<std::uint32_t> vertices;
  std::uint32_t order() const { return static_cast<std::uint32_t>(vertices.size()); }
};

// Branch and bound; no size limit.
Clique oracle_max_clique(const Graph& g);

struct VertexColoring {
  std::uint32_t colors = 0;
  std::vector<std::uint32_t> color_of;
};

// Smallest proper vertex coloring, searching upward from the clique number.
VertexColoring oracle_chromatic_number(const Graph& g, const OracleLimits& limits = {});
// Proper k-coloring if one exists.
std::optional<VertexColoring> oracle_k_coloring(const Graph& g, std::uint32_t k);

// Minimum proper edge coloring size; only Delta and Delta + 1 are tried.
std::uint32_t oracle_chromatic_index(const Graph& g, const OracleLimits& limits = {});
// Proper edge coloring with k colors if one exists, over g.edges().
std::optional<EdgeColoring> oracle_edge_coloring(const Graph& g, std::uint32_t k);

struct ColoringNumbers {
  std::uint32_t chromatic_number = 0;
  std::uint32_t chromatic_index = 0;
};

ColoringNumbers oracle_coloring(const Graph& g, const OracleLimits& limits = {});

struct GraphMetrics {
  std::optional<std::uint32_t> girth;
  std::uint64_t component_count = 0;
  // One entry per component, components ordered by their smallest vertex.
  std::vector<std::uint32_t> diameters;
  std::vector<std::uint32_t> component_of;
  bool bipartite = false;
};

GraphMetrics oracle_metrics(const Graph& g);

std::uint64_t oracle_common_neighbors(const Graph& g, std::uint32_t u, std::uint32_t v);

bool dominates(const Graph& g, const std::vector<std::uint32_t>& set);

// Smallest dominating set; lexicographically first among those of that size
// in branching order. Throws LimitExceeded past the vertex cap or when no
// set of at most kMaxDominatingWitness vertices dominates.
std::vector<std::uint32_t> oracle_min_dominating_set(const Graph& g, const OracleLimits& limits = {});

// Smallest clique that dominates, or nullopt if no clique does.
std::optional<std::vector<std::uint32_t>> oracle_min_dominating_clique(const Graph& g,
                                                                        const OracleLimits& limits = {});

struct DominationResult {
  std::vector<std::uint32_t> dominating_set;
  std::optional<std::vector<std::uint32_t>> dominating_clique;
};

DominationResult oracle_domination(const Graph& g, const OracleLimits& limits = {});

struct CliqueDominationRow {
  int order = 0;
  std::uint64_t cliques = 0;
  std::uint64_t dominating = 0;
};

// For every clique order 1..max_order (stopping early once no clique of an
// order exists): how many cliques, how many dominate.
std::vector<CliqueDominationRow> oracle_clique_domination_profile(const Graph& g, int max_order,
                                                                  const OracleLimits& limits = {});

// Pads g with the fewest isolated vertices making the order divisible by k,
// then checks that every partition into k-blocks admits a proper coloring
// using each of k colors once per block.
bool oracle_strong_chromatic(const Graph& g, std::uint32_t k, const OracleLimits& limits = {});

// Chromatic number of the conflict graph on edges.
std::uint32_t oracle_strong_edge_chromatic(const Graph& g, const OracleLimits& limits = {});

// Vertex i of the result is edge i of g.edges(); two edges conflict when they
// share an endpoint or an edge joins them.
Graph strong_edge_conflict_graph(const Graph& g);

// Throws IncompleteColoring unless every edge of g receives a color.
bool verify_strong_edge_coloring(const Graph& g, const EdgeColoring& coloring);

// Throws NotAPermutation unless map is a bijection on the vertices.
bool is_automorphism(const Graph& g, const VertexMap& map);

}  // namespace utg
