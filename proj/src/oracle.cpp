#include "utg/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <string>

#include "utg/bitset.hpp"
#include "utg/error.hpp"

namespace utg {

namespace {

using Row = std::vector<std::uint64_t>;

void require_at_most(std::uint64_t value, int limit, const char* what) {
  if (value > static_cast<std::uint64_t>(limit)) {
    throw Error(ErrorKind::LimitExceeded,
                std::string(what) + " " + std::to_string(value) + " exceeds limit " + std::to_string(limit));
  }
}

Row closed_row(const Graph& g, std::uint32_t v) {
  const auto r = g.row(v);
  Row out(r.begin(), r.end());
  bits::set(out, v);
  return out;
}

Row full_row(std::uint32_t n) {
  Row out(bits::words_for(n), 0);
  for (std::uint32_t v = 0; v < n; ++v) bits::set(out, v);
  return out;
}

// Calls f(clique) for every k-clique in lexicographic order until f returns false.
template <class F>
void for_each_clique(const Graph& g, int k, F&& f) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "clique order must be >= 1");
  std::vector<std::uint32_t> current;
  auto rec = [&](auto&& self, Row rest) -> bool {
    if (static_cast<int>(current.size()) == k) return f(static_cast<const std::vector<std::uint32_t>&>(current));
    Row next(rest.size());
    for (std::size_t i = 0; i < rest.size(); ++i) {
      while (rest[i]) {
        const auto w = static_cast<std::uint32_t>(i * bits::kWordBits + std::countr_zero(rest[i]));
        rest[i] &= rest[i] - 1;
        const auto row = g.row(w);
        for (std::size_t j = 0; j < rest.size(); ++j) next[j] = rest[j] & row[j];
        current.push_back(w);
        const bool go_on = self(self, next);
        current.pop_back();
        if (!go_on) return false;
      }
    }
    return true;
  };
  rec(rec, full_row(g.n()));
}

class MaxCliqueSearch {
 public:
  explicit MaxCliqueSearch(const Graph& g) : g_(g) {}

  std::vector<std::uint32_t> run() {
    expand(full_row(g_.n()));
    return best_;
  }

 private:
  void expand(Row cand) {
    if (!bits::any(cand)) {
      if (current_.size() > best_.size()) best_ = current_;
      return;
    }
    while (bits::any(cand)) {
      if (current_.size() + bits::count(cand) <= best_.size()) return;
      std::uint32_t v = 0;
      for (std::size_t i = 0; i < cand.size(); ++i) {
        if (cand[i]) {
          v = static_cast<std::uint32_t>(i * bits::kWordBits + std::countr_zero(cand[i]));
          break;
        }
      }
      bits::reset(cand, v);
      Row next(cand.size());
      const auto row = g_.row(v);
      for (std::size_t i = 0; i < cand.size(); ++i) next[i] = cand[i] & row[i];
      current_.push_back(v);
      expand(std::move(next));
      current_.pop_back();
    }
  }

  const Graph& g_;
  std::vector<std::uint32_t> current_, best_;
};

// DSATUR backtracking for a proper k-coloring.
class KColoringSearch {
 public:
  KColoringSearch(const Graph& g, std::uint32_t k)
      : g_(g), k_(k), color_(g.n(), kNone), forbid_(std::size_t{g.n()} * k, 0), sat_(g.n(), 0) {}

  std::optional<VertexColoring> run() {
    if (g_.n() == 0) return VertexColoring{};
    if (k_ == 0) return std::nullopt;
    if (!solve(g_.n(), 0)) return std::nullopt;
    VertexColoring out;
    out.color_of = color_;
    for (auto c : color_) out.colors = std::max(out.colors, c + 1);
    return out;
  }

 private:
  static constexpr std::uint32_t kNone = ~std::uint32_t{0};

  std::uint32_t pick() const {
    std::uint32_t best = kNone;
    for (std::uint32_t v = 0; v < g_.n(); ++v) {
      if (color_[v] != kNone) continue;
      if (best == kNone || sat_[v] > sat_[best] || (sat_[v] == sat_[best] && g_.degree(v) > g_.degree(best))) {
        best = v;
      }
    }
    return best;
  }

  void paint(std::uint32_t v, std::uint32_t c, int delta) {
    bits::for_each(g_.row(v), [&](std::size_t w) {
      auto& f = forbid_[w * k_ + c];
      if (delta > 0 && f++ == 0) ++sat_[w];
      if (delta < 0 && --f == 0) --sat_[w];
    });
  }

  bool solve(std::uint32_t uncolored, std::uint32_t used) {
    if (uncolored == 0) return true;
    const std::uint32_t v = pick();
    if (sat_[v] >= k_) return false;
    const std::uint32_t top = std::min(k_, used + 1);
    for (std::uint32_t c = 0; c < top; ++c) {
      if (forbid_[std::size_t{v} * k_ + c]) continue;
      color_[v] = c;
      paint(v, c, +1);
      if (solve(uncolored - 1, std::max(used, c + 1))) return true;
      paint(v, c, -1);
      color_[v] = kNone;
    }
    return false;
  }

  const Graph& g_;
  std::uint32_t k_;
  std::vector<std::uint32_t> color_;
  std::vector<std::uint32_t> forbid_;
  std::vector<std::uint32_t> sat_;
};

VertexColoring exact_chromatic(const Graph& g) {
  if (g.n() == 0) return {};
  const auto lower = static_cast<std::uint32_t>(MaxCliqueSearch(g).run().size());
  for (std::uint32_t k = lower; k <= g.n(); ++k) {
    if (auto c = KColoringSearch(g, k).run()) return *c;
  }
  throw std::logic_error("no proper coloring with n colors");
}

// Colors the line graph. The colors still free at a vertex bound how many of
// its remaining edges can be colored; each color class is a matching, so the
// color classes together cover at most sum_c floor(f_c / 2) more edges.
class EdgeColoringSearch {
 public:
  EdgeColoringSearch(const Graph& g, std::uint32_t k)
      : n_(g.n()), k_(k), edges_(g.edges()), used_(g.n(), 0), remaining_(g.n(), 0), color_(edges_.size(), kNone) {
    for (const auto& e : edges_) {
      ++remaining_[e.u];
      ++remaining_[e.v];
    }
    mask_ = k_ >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k_) - 1;
  }

  std::optional<EdgeColoring> run() {
    if (k_ > 64) throw Error(ErrorKind::LimitExceeded, "edge coloring supports at most 64 colors");
    if (!solve(edges_.size(), 0)) return std::nullopt;
    EdgeColoring out;
    out.edges = edges_;
    out.colors = color_;
    for (auto c : color_) out.color_count = std::max(out.color_count, c + 1);
    return out;
  }

 private:
  static constexpr std::uint32_t kNone = ~std::uint32_t{0};

  std::uint64_t available(const Edge& e) const { return ~(used_[e.u] | used_[e.v]) & mask_; }

  bool feasible(std::size_t uncolored) const {
    std::uint64_t capacity = 0;
    for (std::uint32_t c = 0; c < k_; ++c) {
      std::uint64_t free_vertices = 0;
      for (std::uint32_t v = 0; v < n_; ++v) {
        if (remaining_[v] > 0 && !((used_[v] >> c) & 1u)) ++free_vertices;
      }
      capacity += free_vertices / 2;
    }
    if (capacity < uncolored) return false;
    for (std::uint32_t v = 0; v < n_; ++v) {
      if (remaining_[v] > k_ - static_cast<std::uint32_t>(std::popcount(used_[v]))) return false;
    }
    return true;
  }

  bool solve(std::size_t uncolored, std::uint32_t used) {
    if (uncolored == 0) return true;
    if (!feasible(uncolored)) return false;
    std::size_t best = edges_.size();
    int best_free = 65;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (color_[i] != kNone) continue;
      const int f = std::popcount(available(edges_[i]));
      if (f < best_free) {
        best_free = f;
        best = i;
      }
    }
    if (best_free == 0) return false;
    const Edge e = edges_[best];
    const std::uint64_t avail = available(e);
    const std::uint32_t top = std::min(k_, used + 1);
    for (std::uint32_t c = 0; c < top; ++c) {
      if (!((avail >> c) & 1u)) continue;
      const std::uint64_t bit = std::uint64_t{1} << c;
      color_[best] = c;
      used_[e.u] |= bit;
      used_[e.v] |= bit;
      --remaining_[e.u];
      --remaining_[e.v];
      if (solve(uncolored - 1, std::max(used, c + 1))) return true;
      ++remaining_[e.u];
      ++remaining_[e.v];
      used_[e.u] &= ~bit;
      used_[e.v] &= ~bit;
      color_[best] = kNone;
    }
    return false;
  }

  std::uint32_t n_;
  std::uint32_t k_;
  std::uint64_t mask_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> used_;
  std::vector<std::uint32_t> remaining_;
  std::vector<std::uint32_t> color_;
};

class DominatingSetSearch {
 public:
  DominatingSetSearch(const Graph& g) : g_(g), closed_(g.n()), full_(full_row(g.n())) {
    for (std::uint32_t v = 0; v < g.n(); ++v) closed_[v] = closed_row(g, v);
    reach_ = g.max_degree() + 1;
  }

  // Greedy: repeatedly take the vertex covering the most undominated vertices.
  std::vector<std::uint32_t> greedy() const {
    Row dominated(full_.size(), 0);
    std::vector<std::uint32_t> chosen;
    while (dominated != full_) {
      std::uint32_t best = 0;
      std::size_t gain = 0;
      for (std::uint32_t v = 0; v < g_.n(); ++v) {
        std::size_t fresh = 0;
        for (std::size_t i = 0; i < full_.size(); ++i) {
          fresh += static_cast<std::size_t>(std::popcount(closed_[v][i] & ~dominated[i]));
        }
        if (fresh > gain) {
          gain = fresh;
          best = v;
        }
      }
      chosen.push_back(best);
      for (std::size_t i = 0; i < full_.size(); ++i) dominated[i] |= closed_[best][i];
    }
    return chosen;
  }

  std::optional<std::vector<std::uint32_t>> of_size(std::uint32_t size) {
    chosen_.clear();
    if (branch(Row(full_.size(), 0), size)) {
      auto out = chosen_;
      std::sort(out.begin(), out.end());
      return out;
    }
    return std::nullopt;
  }

 private:
  bool branch(const Row& dominated, std::uint32_t budget) {
    std::size_t missing = 0;
    std::uint32_t first = g_.n();
    for (std::size_t i = 0; i < full_.size(); ++i) {
      const std::uint64_t w = full_[i] & ~dominated[i];
      if (w && first == g_.n()) first = static_cast<std::uint32_t>(i * bits::kWordBits + std::countr_zero(w));
      missing += static_cast<std::size_t>(std::popcount(w));
    }
    if (missing == 0) return true;
    if (missing > std::size_t{budget} * reach_) return false;
    // some vertex of N[first] must be chosen
    bool found = false;
    bits::for_each(closed_[first], [&](std::size_t w) {
      if (found) return;
      Row next = dominated;
      for (std::size_t i = 0; i < next.size(); ++i) next[i] |= closed_[w][i];
      chosen_.push_back(static_cast<std::uint32_t>(w));
      if (branch(next, budget - 1)) {
        found = true;
        return;
      }
      chosen_.pop_back();
    });
    return found;
  }

  const Graph& g_;
  std::vector<Row> closed_;
  Row full_;
  std::size_t reach_ = 1;
  std::vector<std::uint32_t> chosen_;
};

bool dominates_rows(const Graph& g, const std::vector<std::uint32_t>& set, const Row& full) {
  Row covered(full.size(), 0);
  for (auto v : set) {
    const auto r = g.row(v);
    for (std::size_t i = 0; i < covered.size(); ++i) covered[i] |= r[i];
    bits::set(covered, v);
  }
  return covered == full;
}

// Rainbow proper coloring of a padded graph (bitmask rows, N <= 32) for a
// fixed partition into k-blocks.
class RainbowSearch {
 public:
  RainbowSearch(const std::vector<std::uint32_t>& adj, std::uint32_t k)
      : adj_(adj), k_(k), block_of_(adj.size()), color_(adj.size()) {}

  bool colorable(const std::vector<std::uint32_t>& block_of) {
    block_of_ = block_of;
    block_used_.assign(adj_.size() / k_, 0);
    return assign(0);
  }

 private:
  bool assign(std::size_t v) {
    if (v == adj_.size()) return true;
    std::uint32_t banned = block_used_[block_of_[v]];
    for (std::size_t w = 0; w < v; ++w) {
      if ((adj_[v] >> w) & 1u) banned |= 1u << color_[w];
    }
    for (std::uint32_t c = 0; c < k_; ++c) {
      if ((banned >> c) & 1u) continue;
      color_[v] = c;
      block_used_[block_of_[v]] |= 1u << c;
      if (assign(v + 1)) return true;
      block_used_[block_of_[v]] &= ~(1u << c);
    }
    return false;
  }

  const std::vector<std::uint32_t>& adj_;
  std::uint32_t k_;
  std::vector<std::uint32_t> block_of_;
  std::vector<std::uint32_t> color_;
  std::vector<std::uint32_t> block_used_;
};

// Visits every partition of 0..N-1 into blocks of size k; the smallest
// unassigned vertex always opens the next block. Stops when f returns false.
template <class F>
bool for_each_partition(std::uint32_t n, std::uint32_t k, F&& f) {
  std::vector<std::uint32_t> block_of(n, ~std::uint32_t{0});
  std::uint32_t blocks = 0;
  auto open = [&](auto&& self) -> bool {
    std::uint32_t first = 0;
    while (first < n && block_of[first] != ~std::uint32_t{0}) ++first;
    if (first == n) return f(static_cast<const std::vector<std::uint32_t>&>(block_of));
    const std::uint32_t b = blocks++;
    block_of[first] = b;
    auto fill = [&](auto&& fill_self, std::uint32_t from, std::uint32_t need) -> bool {
      if (need == 0) return self(self);
      for (std::uint32_t v = from; v < n; ++v) {
        if (block_of[v] != ~std::uint32_t{0}) continue;
        block_of[v] = b;
        const bool go_on = fill_self(fill_self, v + 1, need - 1);
        block_of[v] = ~std::uint32_t{0};
        if (!go_on) return false;
      }
      return true;
    };
    const bool go_on = fill(fill, first + 1, k - 1);
    block_of[first] = ~std::uint32_t{0};
    --blocks;
    return go_on;
  };
  return open(open);
}

}  // namespace

void OracleLimits::validate() const {
  if (max_vertices_coloring < 1 || max_edges_edge_coloring < 1 || max_vertices_strong < 1 ||
      max_dominating_search < 1 || max_clique_order < 1) {
    throw Error(ErrorKind::InvalidArgument, "oracle limits must be positive");
  }
}

kernels::CliqueCensus oracle_clique_census(const Graph& g, int m_max, const OracleLimits& limits) {
  limits.validate();
  if (m_max < 1) throw Error(ErrorKind::InvalidArgument, "clique order must be >= 1");
  require_at_most(static_cast<std::uint64_t>(m_max), limits.max_clique_order, "clique order");
  return kernels::clique_census(g, m_max);
}

std::vector<std::vector<std::uint32_t>> oracle_cliques_of_order(const Graph& g, int k) {
  std::vector<std::vector<std::uint32_t>> out;
  for_each_clique(g, k, [&](const std::vector<std::uint32_t>& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

Clique oracle_max_clique(const Graph& g) { return {MaxCliqueSearch(g).run()}; }

VertexColoring oracle_chromatic_number(const Graph& g, const OracleLimits& limits) {
  limits.validate();
  require_at_most(g.n(), limits.max_vertices_coloring, "vertex count");
  return exact_chromatic(g);
}

std::optional<VertexColoring> oracle_k_coloring(const Graph& g, std::uint32_t k) {
  return KColoringSearch(g, k).run();
}

std::optional<EdgeColoring> oracle_edge_coloring(const Graph& g, std::uint32_t k) {
  return EdgeColoringSearch(g, k).run();
}

std::uint32_t oracle_chromatic_index(const Graph& g, const OracleLimits& limits) {
  limits.validate();
  require_at_most(g.edge_count(), limits.max_edges_edge_coloring, "edge count");
  if (g.edge_count() == 0) return 0;
  const std::uint32_t delta = g.max_degree();
  for (std::uint32_t k : {delta, delta + 1}) {
    if (EdgeColoringSearch(g, k).run()) return k;
  }
  throw std::logic_error("no proper edge coloring with max degree + 1 colors");
}

ColoringNumbers oracle_coloring(const Graph& g, const OracleLimits& limits) {
  return {oracle_chromatic_number(g, limits).colors, oracle_chromatic_index(g, limits)};
}

GraphMetrics oracle_metrics(const Graph& g) {
  GraphMetrics m;
  const std::uint32_t n = g.n();
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  m.component_of.assign(n, kUnset);
  std::vector<std::uint32_t> side(n, 0), queue;
  queue.reserve(n);
  m.bipartite = true;
  for (std::uint32_t s = 0; s < n; ++s) {
    if (m.component_of[s] != kUnset) continue;
    const auto comp = static_cast<std::uint32_t>(m.component_count++);
    queue.clear();
    queue.push_back(s);
    m.component_of[s] = comp;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::uint32_t u = queue[head];
      bits::for_each(g.row(u), [&](std::size_t w) {
        if (m.component_of[w] == kUnset) {
          m.component_of[w] = comp;
          side[w] = side[u] ^ 1u;
          queue.push_back(static_cast<std::uint32_t>(w));
        } else if (side[w] == side[u]) {
          m.bipartite = false;
        }
      });
    }
  }
  m.diameters.assign(m.component_count, 0);
  const auto ecc = kernels::eccentricities(g);
  for (std::uint32_t v = 0; v < n; ++v) {
    auto& d = m.diameters[m.component_of[v]];
    d = std::max(d, ecc[v]);
  }
  m.girth = kernels::girth(g);
  return m;
}

std::uint64_t oracle_common_neighbors(const Graph& g, std::uint32_t u, std::uint32_t v) {
  if (u >= g.n() || v >= g.n()) throw Error(ErrorKind::IndexOutOfRange, "vertex out of range");
  return bits::count_and(g.row(u), g.row(v));
}

bool dominates(const Graph& g, const std::vector<std::uint32_t>& set) {
  for (auto v : set) {
    if (v >= g.n()) throw Error(ErrorKind::IndexOutOfRange, "vertex " + std::to_string(v) + " out of range");
  }
  return dominates_rows(g, set, full_row(g.n()));
}

std::vector<std::uint32_t> oracle_min_dominating_set(const Graph& g, const OracleLimits& limits) {
  limits.validate();
  require_at_most(g.n(), limits.max_dominating_search, "vertex count");
  if (g.n() == 0) return {};
  DominatingSetSearch search(g);
  auto greedy = search.greedy();
  std::sort(greedy.begin(), greedy.end());
  const auto cap = std::min<std::uint32_t>(static_cast<std::uint32_t>(greedy.size()) - 1, kMaxDominatingWitness);
  for (std::uint32_t size = 1; size <= cap; ++size) {
    if (auto found = search.of_size(size)) return *found;
  }
  if (greedy.size() > kMaxDominatingWitness) {
    throw Error(ErrorKind::LimitExceeded, "no dominating set of at most " + std::to_string(kMaxDominatingWitness) +
                                              " vertices; search stopped");
  }
  return greedy;
}

std::optional<std::vector<std::uint32_t>> oracle_min_dominating_clique(const Graph& g, const OracleLimits& limits) {
  limits.validate();
  require_at_most(g.n(), limits.max_dominating_search, "vertex count");
  const Row full = full_row(g.n());
  for (int k = 1;; ++k) {
    bool any = false;
    std::optional<std::vector<std::uint32_t>> found;
    for_each_clique(g, k, [&](const std::vector<std::uint32_t>& c) {
      any = true;
      if (dominates_rows(g, c, full)) found = c;
      return !found;
    });
    if (found) return found;
    if (!any) return std::nullopt;
  }
}

DominationResult oracle_domination(const Graph& g, const OracleLimits& limits) {
  return {oracle_min_dominating_set(g, limits), oracle_min_dominating_clique(g, limits)};
}

std::vector<CliqueDominationRow> oracle_clique_domination_profile(const Graph& g, int max_order,
                                                                  const OracleLimits& limits) {
  limits.validate();
  require_at_most(g.n(), limits.max_dominating_search, "vertex count");
  const Row full = full_row(g.n());
  std::vector<CliqueDominationRow> rows;
  for (int k = 1; k <= max_order; ++k) {
    CliqueDominationRow row{k, 0, 0};
    for_each_clique(g, k, [&](const std::vector<std::uint32_t>& c) {
      ++row.cliques;
      if (dominates_rows(g, c, full)) ++row.dominating;
      return true;
    });
    if (row.cliques == 0) break;
    rows.push_back(row);
  }
  return rows;
}

bool oracle_strong_chromatic(const Graph& g, std::uint32_t k, const OracleLimits& limits) {
  limits.validate();
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "k must be >= 1");
  const std::uint32_t padding = (k - g.n() % k) % k;
  const std::uint32_t total = g.n() + padding;
  require_at_most(total, limits.max_vertices_strong, "padded vertex count");
  if (total > 32) throw Error(ErrorKind::LimitExceeded, "strong colorability supports at most 32 vertices");
  std::vector<std::uint32_t> adj(total, 0);
  for (std::uint32_t u = 0; u < g.n(); ++u) {
    bits::for_each(g.row(u), [&](std::size_t w) { adj[u] |= 1u << w; });
  }
  RainbowSearch rainbow(adj, k);
  return for_each_partition(total, k, [&](const std::vector<std::uint32_t>& block_of) {
    return rainbow.colorable(block_of);
  });
}

Graph strong_edge_conflict_graph(const Graph& g) {
  const auto edges = g.edges();
  Graph conflict(static_cast<std::uint32_t>(edges.size()));
  auto touches = [&](std::uint32_t x, std::uint32_t y) { return x == y || g.adjacent(x, y); };
  for (std::uint32_t i = 0; i < edges.size(); ++i) {
    for (std::uint32_t j = i + 1; j < edges.size(); ++j) {
      const Edge e = edges[i], f = edges[j];
      if (touches(e.u, f.u) || touches(e.u, f.v) || touches(e.v, f.u) || touches(e.v, f.v)) {
        conflict.add_edge(i, j);
      }
    }
  }
  return conflict;
}

std::uint32_t oracle_strong_edge_chromatic(const Graph& g, const OracleLimits& limits) {
  limits.validate();
  require_at_most(g.edge_count(), limits.max_edges_edge_coloring, "edge count");
  return exact_chromatic(strong_edge_conflict_graph(g)).colors;
}

bool verify_strong_edge_coloring(const Graph& g, const EdgeColoring& coloring) {
  if (coloring.colors.size() != coloring.edges.size()) {
    throw Error(ErrorKind::IncompleteColoring, "edge and color lists differ in length");
  }
  std::map<Edge, std::uint32_t> color_of;
  for (std::size_t i = 0; i < coloring.edges.size(); ++i) {
    Edge e = coloring.edges[i];
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.v >= g.n() || !g.adjacent(e.u, e.v)) {
      throw Error(ErrorKind::NotAnEdge, "{" + std::to_string(e.u) + ", " + std::to_string(e.v) + "}");
    }
    color_of[e] = coloring.colors[i];
  }
  const auto edges = g.edges();
  for (const auto& e : edges) {
    if (!color_of.count(e)) {
      throw Error(ErrorKind::IncompleteColoring,
                  "edge {" + std::to_string(e.u) + ", " + std::to_string(e.v) + "} has no color");
    }
  }
  std::map<std::uint32_t, std::vector<Edge>> classes;
  for (const auto& [e, c] : color_of) classes[c].push_back(e);
  auto touches = [&](std::uint32_t x, std::uint32_t y) { return x == y || g.adjacent(x, y); };
  for (const auto& [c, members] : classes) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        const Edge e = members[i], f = members[j];
        if (touches(e.u, f.u) || touches(e.u, f.v) || touches(e.v, f.u) || touches(e.v, f.v)) return false;
      }
    }
  }
  return true;
}

bool is_automorphism(const Graph& g, const VertexMap& map) {
  if (map.image.size() != g.n()) throw Error(ErrorKind::NotAPermutation, "map size differs from vertex count");
  std::vector<bool> hit(g.n(), false);
  for (auto v : map.image) {
    if (v >= g.n() || hit[v]) throw Error(ErrorKind::NotAPermutation, "map is not a bijection");
    hit[v] = true;
  }
  // A bijection sending edges to edges is injective on the finite edge set,
  // so it also sends non-edges to non-edges.
  for (std::uint32_t u = 0; u < g.n(); ++u) {
    bool ok = true;
    bits::for_each(g.row(u), [&](std::size_t w) {
      if (ok && !g.adjacent(map.image[u], map.image[w])) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

}  // namespace utg
