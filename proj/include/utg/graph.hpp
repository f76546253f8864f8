#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "utg/ring.hpp"

namespace utg {

struct Edge {
  std::uint32_t u = 0;
  std::uint32_t v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct EdgeColoring {
  std::vector<Edge> edges;            // sorted, u < v
  std::vector<std::uint32_t> colors;  // parallel to edges
  std::uint32_t color_count = 0;
};

class UnitaryCayleyGraph;

// Simple undirected graph with one word-packed adjacency row per vertex.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::uint32_t n);

  static Graph from_edges(std::uint32_t n, std::span<const Edge> edges);
  static Graph complete(std::uint32_t n);
  static Graph cycle(std::uint32_t n);

  std::uint32_t n() const { return n_; }
  std::size_t words() const { return words_; }

  bool adjacent(std::uint32_t u, std::uint32_t v) const;
  std::span<const std::uint64_t> row(std::uint32_t u) const {
    return {bits_.data() + std::size_t{u} * words_, words_};
  }
  std::uint32_t degree(std::uint32_t u) const;
  std::uint32_t max_degree() const;
  std::uint64_t edge_count() const;
  // Each edge once with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;
  std::vector<std::uint32_t> neighbors(std::uint32_t u) const;

  void add_edge(std::uint32_t u, std::uint32_t v);

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::uint32_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;

  std::span<std::uint64_t> mutable_row(std::uint32_t u) {
    return {bits_.data() + std::size_t{u} * words_, words_};
  }
  friend class UnitaryCayleyGraph;
  friend UnitaryCayleyGraph build_graph(const QuotientRing& ring);
};

// G_{R/I}: vertices are ring elements in enumeration order; u ~ v iff u - v
// is a unit. Every vertex has degree phi(R/I).
class UnitaryCayleyGraph {
 public:
  const QuotientRing& ring() const { return ring_; }
  const Graph& graph() const { return graph_; }
  operator const Graph&() const { return graph_; }

  std::uint32_t n_vertices() const { return graph_.n(); }
  std::uint32_t degree() const { return degree_; }

 private:
  UnitaryCayleyGraph(QuotientRing ring, Graph graph, std::uint32_t degree)
      : ring_(std::move(ring)), graph_(std::move(graph)), degree_(degree) {}

  QuotientRing ring_;
  Graph graph_;
  std::uint32_t degree_ = 0;

  friend UnitaryCayleyGraph build_graph(const QuotientRing& ring);
};

// Rows are translates of the unit set: row(u) = {u + s : s a unit}.
// Throws OrderCapExceeded past the current order cap.
UnitaryCayleyGraph build_graph(const QuotientRing& ring);

struct VertexMap {
  std::vector<std::uint32_t> image;

  friend bool operator==(const VertexMap&, const VertexMap&) = default;
};

// Z -> C - (A - Z)(C - D)(A - B)^{-1}; sends A to C and B to D.
// Throws NotAnEdge unless A ~ B and C ~ D.
VertexMap automorphism_from_edges(const UnitaryCayleyGraph& g, std::uint32_t a, std::uint32_t b,
                                  std::uint32_t c, std::uint32_t d);

enum class GraphFormat { Graph6, Dimacs, Dot, Json };

// Accepts "g6", "graph6", "dimacs", "dot", "json".
GraphFormat parse_graph_format(std::string_view name);

std::string encode_graph6(const Graph& g);
std::string encode_dimacs(const Graph& g);
std::string export_graph(const UnitaryCayleyGraph& g, GraphFormat format);

struct ImportedGraph {
  std::string ring;
  std::uint32_t degree = 0;
  Graph graph;
};

ImportedGraph import_graph_json(std::string_view text);

}  // namespace utg
