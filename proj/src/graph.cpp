#include "utg/graph.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "utg/bitset.hpp"
#include "utg/error.hpp"

namespace utg {

Graph::Graph(std::uint32_t n) : n_(n), words_(bits::words_for(n)), bits_(std::size_t{n} * words_, 0) {}

Graph Graph::from_edges(std::uint32_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

Graph Graph::complete(std::uint32_t n) {
  Graph g(n);
  for (std::uint32_t u = 0; u < n; ++u) {
    for (std::uint32_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph Graph::cycle(std::uint32_t n) {
  Graph g(n);
  for (std::uint32_t u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
  return g;
}

bool Graph::adjacent(std::uint32_t u, std::uint32_t v) const { return bits::test(row(u), v); }

std::uint32_t Graph::degree(std::uint32_t u) const { return static_cast<std::uint32_t>(bits::count(row(u))); }

std::uint32_t Graph::max_degree() const {
  std::uint32_t best = 0;
  for (std::uint32_t u = 0; u < n_; ++u) best = std::max(best, degree(u));
  return best;
}

std::uint64_t Graph::edge_count() const {
  std::uint64_t twice = 0;
  for (std::uint32_t u = 0; u < n_; ++u) twice += degree(u);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (std::uint32_t u = 0; u < n_; ++u) {
    bits::for_each(row(u), [&](std::size_t v) {
      if (v > u) out.push_back({u, static_cast<std::uint32_t>(v)});
    });
  }
  return out;
}

std::vector<std::uint32_t> Graph::neighbors(std::uint32_t u) const {
  std::vector<std::uint32_t> out;
  bits::for_each(row(u), [&](std::size_t v) { out.push_back(static_cast<std::uint32_t>(v)); });
  return out;
}

void Graph::add_edge(std::uint32_t u, std::uint32_t v) {
  if (u >= n_ || v >= n_) throw Error(ErrorKind::IndexOutOfRange, "edge endpoint out of range");
  if (u == v) throw Error(ErrorKind::InvalidArgument, "loops are not allowed");
  bits::set(mutable_row(u), v);
  bits::set(mutable_row(v), u);
}

UnitaryCayleyGraph build_graph(const QuotientRing& ring) {
  const std::uint64_t cap = default_order_cap();
  if (ring.order() > cap) {
    throw Error(ErrorKind::OrderCapExceeded,
                ring.name() + " has order " + std::to_string(ring.order()) + " above cap " + std::to_string(cap));
  }
  const std::uint32_t n = ring.order();
  std::vector<std::uint32_t> units;
  for (std::uint32_t s = 0; s < n; ++s) {
    if (ring.prime_mask(s) == 0) units.push_back(s);
  }
  Graph g(n);
  for (std::uint32_t u = 0; u < n; ++u) {
    auto row = g.mutable_row(u);
    for (std::uint32_t s : units) bits::set(row, ring.add_index(u, s));
  }
  const auto degree = static_cast<std::uint32_t>(units.size());
  for (std::uint32_t u = 0; u < n; ++u) {
    if (g.degree(u) != degree || g.adjacent(u, u)) {
      throw std::logic_error("unitary Cayley graph of " + ring.name() + " is not regular");
    }
  }
  return UnitaryCayleyGraph(ring, std::move(g), degree);
}

VertexMap automorphism_from_edges(const UnitaryCayleyGraph& g, std::uint32_t a, std::uint32_t b,
                                  std::uint32_t c, std::uint32_t d) {
  const Graph& gr = g.graph();
  for (auto v : {a, b, c, d}) {
    if (v >= gr.n()) throw Error(ErrorKind::IndexOutOfRange, "vertex " + std::to_string(v));
  }
  if (!gr.adjacent(a, b)) throw Error(ErrorKind::NotAnEdge, "A and B are not adjacent");
  if (!gr.adjacent(c, d)) throw Error(ErrorKind::NotAnEdge, "C and D are not adjacent");
  const QuotientRing& ring = g.ring();
  const auto inv = ring.inverse(ring.element(ring.sub_index(a, b)));
  if (!inv) throw std::logic_error("A - B is adjacent but not invertible");
  const std::uint32_t scale = ring.mul_index(ring.sub_index(c, d), inv->index);
  VertexMap map;
  map.image.resize(gr.n());
  for (std::uint32_t z = 0; z < gr.n(); ++z) {
    map.image[z] = ring.sub_index(c, ring.mul_index(ring.sub_index(a, z), scale));
  }
  return map;
}

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "g6" || name == "graph6") return GraphFormat::Graph6;
  if (name == "dimacs") return GraphFormat::Dimacs;
  if (name == "dot") return GraphFormat::Dot;
  if (name == "json") return GraphFormat::Json;
  throw Error(ErrorKind::FormatUnsupported, "unknown graph format '" + std::string(name) + "'");
}

std::string encode_graph6(const Graph& g) {
  const std::uint64_t n = g.n();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(63 + n);
  } else if (n <= 258047) {
    out += static_cast<char>(126);
    for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(63 + ((n >> shift) & 63));
  } else if (n <= 68719476735ULL) {
    out += static_cast<char>(126);
    out += static_cast<char>(126);
    for (int shift = 30; shift >= 0; shift -= 6) out += static_cast<char>(63 + ((n >> shift) & 63));
  } else {
    throw Error(ErrorKind::FormatUnsupported, "graph6 supports at most 68719476735 vertices");
  }
  // Upper triangle, column by column: (0,1), (0,2), (1,2), (0,3), ...
  int filled = 0;
  unsigned acc = 0;
  for (std::uint32_t j = 1; j < g.n(); ++j) {
    for (std::uint32_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1u : 0u);
      if (++filled == 6) {
        out += static_cast<char>(63 + acc);
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>(63 + (acc << (6 - filled)));
  out += '\n';
  return out;
}

std::string encode_dimacs(const Graph& g) {
  std::ostringstream os;
  const auto edges = g.edges();
  os << "p edge " << g.n() << ' ' << edges.size() << '\n';
  for (const Edge& e : edges) os << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  return os.str();
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string encode_dot(const UnitaryCayleyGraph& g) {
  std::ostringstream os;
  const QuotientRing& ring = g.ring();
  os << "graph \"" << dot_escape(ring.name()) << "\" {\n";
  for (std::uint32_t v = 0; v < g.n_vertices(); ++v) {
    os << "  " << v << " [label=\"" << dot_escape(ring.format(ring.element(v))) << "\"];\n";
  }
  for (const Edge& e : g.graph().edges()) os << "  " << e.u << " -- " << e.v << ";\n";
  os << "}\n";
  return os.str();
}

std::string encode_json(const UnitaryCayleyGraph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.n_vertices();
  auto edges = nlohmann::ordered_json::array();
  for (const Edge& e : g.graph().edges()) edges.push_back({e.u, e.v});
  j["edges"] = std::move(edges);
  j["degree"] = g.degree();
  j["ring"] = g.ring().name();
  return j.dump() + "\n";
}

}  // namespace

std::string export_graph(const UnitaryCayleyGraph& g, GraphFormat format) {
  switch (format) {
    case GraphFormat::Graph6: return encode_graph6(g.graph());
    case GraphFormat::Dimacs: return encode_dimacs(g.graph());
    case GraphFormat::Dot: return encode_dot(g);
    case GraphFormat::Json: return encode_json(g);
  }
  throw Error(ErrorKind::FormatUnsupported, "unknown format");
}

ImportedGraph import_graph_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  try {
    ImportedGraph out;
    out.ring = j.at("ring").get<std::string>();
    out.degree = j.at("degree").get<std::uint32_t>();
    const auto n = j.at("n").get<std::uint32_t>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      const auto u = e.at(0).get<std::uint32_t>();
      const auto v = e.at(1).get<std::uint32_t>();
      if (e.size() != 2 || u >= v || v >= n) throw Error(ErrorKind::ParseError, "malformed edge");
      edges.push_back({u, v});
    }
    out.graph = Graph::from_edges(n, edges);
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

}  // namespace utg
