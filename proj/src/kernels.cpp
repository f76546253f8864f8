#include "utg/kernels.hpp"

#include <algorithm>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "utg/bitset.hpp"
#include "utg/error.hpp"

namespace utg::kernels {

namespace {

bool starts_unit_run(const QuotientRing& ring, std::uint32_t a, std::uint32_t unity, int r) {
  for (int i = 0; i < r; ++i) {
    if (ring.prime_mask(a) != 0) return false;
    a = ring.add_index(a, unity);
  }
  return true;
}

void check_census_args(int m_max) {
  if (m_max < 1) throw Error(ErrorKind::InvalidArgument, "clique order must be >= 1");
}

// Depth-first clique extension. `frames` holds one candidate row per depth.
class CliqueWalker {
 public:
  CliqueWalker(const Graph& g, int m_max)
      : g_(g), m_max_(m_max), words_(g.words()), frames_(std::size_t(m_max + 1) * words_), counts_(m_max + 1, 0) {}

  void from_vertex(std::uint32_t v) {
    ++counts_[1];
    if (m_max_ < 2) return;
    auto cand = frame(1);
    const auto row = g_.row(v);
    std::copy(row.begin(), row.end(), cand.begin());
    clear_upto(cand, v);
    extend(1);
  }

  std::vector<std::uint64_t>& counts() { return counts_; }

 private:
  std::span<std::uint64_t> frame(int depth) { return {frames_.data() + std::size_t(depth) * words_, words_}; }

  static void clear_upto(std::span<std::uint64_t> row, std::size_t v) {
    const std::size_t w = v / bits::kWordBits;
    for (std::size_t i = 0; i < w; ++i) row[i] = 0;
    const std::size_t b = v % bits::kWordBits;
    row[w] &= (b == 63) ? 0 : (~std::uint64_t{0} << (b + 1));
  }

  // A clique of size `depth` whose common later neighbours are frame(depth).
  void extend(int depth) {
    auto cand = frame(depth);
    if (depth + 1 == m_max_) {
      counts_[m_max_] += bits::count(cand);
      return;
    }
    auto next = frame(depth + 1);
    bits::for_each(cand, [&](std::size_t w) {
      ++counts_[depth + 1];
      const auto row = g_.row(static_cast<std::uint32_t>(w));
      for (std::size_t i = 0; i < words_; ++i) next[i] = cand[i] & row[i];
      clear_upto(next, w);
      if (bits::any(next)) extend(depth + 1);
    });
  }

  const Graph& g_;
  int m_max_;
  std::size_t words_;
  std::vector<std::uint64_t> frames_;
  std::vector<std::uint64_t> counts_;
};

CliqueCensus finish_census(std::vector<std::uint64_t> counts) {
  CliqueCensus out;
  counts[0] = 1;
  for (std::size_t k = 1; k < counts.size(); ++k) {
    if (counts[k] > 0) out.max_order = static_cast<int>(k);
  }
  out.counts = std::move(counts);
  return out;
}

std::uint32_t eccentricity_from(const Graph& g, std::uint32_t s, std::vector<std::uint64_t>& scratch) {
  const std::size_t w = g.words();
  scratch.assign(3 * w, 0);
  std::span<std::uint64_t> visited(scratch.data(), w), frontier(scratch.data() + w, w), next(scratch.data() + 2 * w, w);
  bits::set(visited, s);
  bits::set(frontier, s);
  std::uint32_t ecc = 0;
  for (;;) {
    std::fill(next.begin(), next.end(), 0);
    bits::for_each(frontier, [&](std::size_t u) {
      const auto row = g.row(static_cast<std::uint32_t>(u));
      for (std::size_t i = 0; i < w; ++i) next[i] |= row[i];
    });
    bool grew = false;
    for (std::size_t i = 0; i < w; ++i) {
      next[i] &= ~visited[i];
      visited[i] |= next[i];
      grew = grew || next[i];
    }
    if (!grew) return ecc;
    ++ecc;
    std::copy(next.begin(), next.end(), frontier.begin());
  }
}

constexpr std::uint32_t kNoCycle = std::numeric_limits<std::uint32_t>::max();

// Shortest cycle seen by a BFS from `root`, never reporting more than `bound`.
std::uint32_t shortest_cycle_from(const std::vector<std::vector<std::uint32_t>>& adj, std::uint32_t root,
                                  std::uint32_t bound) {
  const auto n = static_cast<std::uint32_t>(adj.size());
  std::vector<std::uint32_t> dist(n, kNoCycle), parent(n, kNoCycle), queue;
  queue.reserve(n);
  dist[root] = 0;
  queue.push_back(root);
  std::uint32_t best = bound;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t u = queue[head];
    if (2 * dist[u] + 1 >= best) break;
    for (std::uint32_t w : adj[u]) {
      if (dist[w] == kNoCycle) {
        dist[w] = dist[u] + 1;
        parent[w] = u;
        queue.push_back(w);
      } else if (parent[u] != w) {
        best = std::min(best, dist[u] + dist[w] + 1);
      }
    }
  }
  return best;
}

std::vector<std::vector<std::uint32_t>> adjacency_lists(const Graph& g) {
  std::vector<std::vector<std::uint32_t>> adj(g.n());
  for (std::uint32_t u = 0; u < g.n(); ++u) adj[u] = g.neighbors(u);
  return adj;
}

}  // namespace

// ---------------------------------------------------------------------------
// Serial reference implementations

namespace serial {

std::uint64_t count_unit_runs(const QuotientRing& ring, int r) {
  const std::uint32_t unity = ring.one().index;
  std::uint64_t count = 0;
  for (std::uint32_t a = 0; a < ring.order(); ++a) {
    if (starts_unit_run(ring, a, unity, r)) ++count;
  }
  return count;
}

CliqueCensus clique_census(const Graph& g, int m_max) {
  check_census_args(m_max);
  CliqueWalker walker(g, m_max);
  for (std::uint32_t v = 0; v < g.n(); ++v) walker.from_vertex(v);
  return finish_census(std::move(walker.counts()));
}

std::vector<std::uint32_t> eccentricities(const Graph& g) {
  std::vector<std::uint32_t> ecc(g.n());
  std::vector<std::uint64_t> scratch;
  for (std::uint32_t s = 0; s < g.n(); ++s) ecc[s] = eccentricity_from(g, s, scratch);
  return ecc;
}

std::optional<std::uint32_t> girth(const Graph& g) {
  const auto adj = adjacency_lists(g);
  std::uint32_t best = kNoCycle;
  for (std::uint32_t root = 0; root < g.n(); ++root) best = std::min(best, shortest_cycle_from(adj, root, best));
  if (best == kNoCycle) return std::nullopt;
  return best;
}

std::vector<std::uint32_t> common_neighbor_matrix(const Graph& g) {
  const std::size_t n = g.n();
  std::vector<std::uint32_t> out(n * n);
  for (std::uint32_t u = 0; u < n; ++u) {
    for (std::uint32_t v = 0; v < n; ++v) {
      out[u * n + v] = static_cast<std::uint32_t>(bits::count_and(g.row(u), g.row(v)));
    }
  }
  return out;
}

}  // namespace serial

// ---------------------------------------------------------------------------
// OpenMP versions

std::uint64_t count_unit_runs(const QuotientRing& ring, int r) {
  const std::uint32_t unity = ring.one().index;
  const auto n = static_cast<std::int64_t>(ring.order());
  std::uint64_t count = 0;
#pragma omp parallel for reduction(+ : count) schedule(static)
  for (std::int64_t a = 0; a < n; ++a) {
    if (starts_unit_run(ring, static_cast<std::uint32_t>(a), unity, r)) ++count;
  }
  return count;
}

CliqueCensus clique_census(const Graph& g, int m_max) {
  check_census_args(m_max);
  std::vector<std::uint64_t> total(m_max + 1, 0);
  const auto n = static_cast<std::int64_t>(g.n());
#pragma omp parallel
  {
    CliqueWalker walker(g, m_max);
#pragma omp for schedule(dynamic, 1) nowait
    for (std::int64_t v = 0; v < n; ++v) walker.from_vertex(static_cast<std::uint32_t>(v));
#pragma omp critical(utg_clique_census)
    for (int k = 0; k <= m_max; ++k) total[k] += walker.counts()[k];
  }
  return finish_census(std::move(total));
}

std::vector<std::uint32_t> eccentricities(const Graph& g) {
  std::vector<std::uint32_t> ecc(g.n());
  const auto n = static_cast<std::int64_t>(g.n());
#pragma omp parallel
  {
    std::vector<std::uint64_t> scratch;
#pragma omp for schedule(dynamic, 4)
    for (std::int64_t s = 0; s < n; ++s) {
      ecc[s] = eccentricity_from(g, static_cast<std::uint32_t>(s), scratch);
    }
  }
  return ecc;
}

std::optional<std::uint32_t> girth(const Graph& g) {
  const auto adj = adjacency_lists(g);
  const auto n = static_cast<std::int64_t>(g.n());
  std::uint32_t best = kNoCycle;
#pragma omp parallel for reduction(min : best) schedule(dynamic, 4)
  for (std::int64_t root = 0; root < n; ++root) {
    best = std::min(best, shortest_cycle_from(adj, static_cast<std::uint32_t>(root), best));
  }
  if (best == kNoCycle) return std::nullopt;
  return best;
}

std::vector<std::uint32_t> common_neighbor_matrix(const Graph& g) {
  const auto n = static_cast<std::int64_t>(g.n());
  std::vector<std::uint32_t> out(static_cast<std::size_t>(n * n));
#pragma omp parallel for schedule(static)
  for (std::int64_t u = 0; u < n; ++u) {
    for (std::int64_t v = 0; v < n; ++v) {
      out[u * n + v] = static_cast<std::uint32_t>(
          bits::count_and(g.row(static_cast<std::uint32_t>(u)), g.row(static_cast<std::uint32_t>(v))));
    }
  }
  return out;
}

int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace utg::kernels
