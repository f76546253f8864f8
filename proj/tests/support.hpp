#pragma once

// Independent reference arithmetic for the tests. Nothing here calls into the
// library's ring code.

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "utg/graph.hpp"
#include "utg/ring.hpp"

namespace testing_support {

inline utg::QuotientRing ring(const std::string& spec) {
  return utg::build_quotient_ring(utg::parse_ring_spec(spec));
}

inline utg::UnitaryCayleyGraph graph(const std::string& spec) { return utg::build_graph(ring(spec)); }

// G_{Z/n} straight from gcd.
inline utg::Graph zmod_graph(std::int64_t n) {
  utg::Graph g(static_cast<std::uint32_t>(n));
  for (std::int64_t a = 0; a < n; ++a) {
    for (std::int64_t b = a + 1; b < n; ++b) {
      if (std::gcd(b - a, n) == 1) g.add_edge(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
    }
  }
  return g;
}

// Gaussian integers: w is divisible by z iff w * conj(z) / N(z) is integral.
struct Gi {
  std::int64_t re, im;
};

inline Gi gmul(Gi a, Gi b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
inline Gi gsub(Gi a, Gi b) { return {a.re - b.re, a.im - b.im}; }

inline bool gdivides(Gi z, Gi w) {
  const std::int64_t n = z.re * z.re + z.im * z.im;
  const Gi t = gmul(w, Gi{z.re, -z.im});
  return t.re % n == 0 && t.im % n == 0;
}

inline bool gcongruent(Gi a, Gi b, Gi z) { return gdivides(z, gsub(a, b)); }

// Polynomials over F_p, lowest degree first.
using P = std::vector<std::int64_t>;

inline P ptrim(P a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

inline P pmul(const P& a, const P& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  P c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  return ptrim(c);
}

// Remainder of a modulo monic f.
inline P pmod(P a, const P& f, std::int64_t p) {
  a = ptrim(a);
  const std::size_t d = f.size() - 1;
  while (a.size() > d) {
    const std::int64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - d;
    for (std::size_t i = 0; i <= d; ++i) a[shift + i] = ((a[shift + i] - lead * f[i]) % p + p) % p;
    a = ptrim(a);
  }
  return a;
}

// Residue of element `index` in F_p[x]/(f): base-p digits, low degree first.
inline P pdigits(std::uint64_t index, std::int64_t p, std::size_t deg) {
  P out(deg, 0);
  for (std::size_t i = 0; i < deg; ++i) {
    out[i] = static_cast<std::int64_t>(index % p);
    index /= p;
  }
  return ptrim(out);
}

inline std::uint64_t pindex(const P& a, std::int64_t p) {
  std::uint64_t idx = 0;
  for (std::size_t i = a.size(); i-- > 0;) idx = idx * p + static_cast<std::uint64_t>(a[i]);
  return idx;
}

// Brute-force clique count of order m by plain subset recursion.
inline std::uint64_t naive_cliques(const utg::Graph& g, int m) {
  std::vector<std::uint32_t> cur;
  std::uint64_t count = 0;
  auto rec = [&](auto&& self, std::uint32_t from) -> void {
    if (static_cast<int>(cur.size()) == m) {
      ++count;
      return;
    }
    for (std::uint32_t v = from; v < g.n(); ++v) {
      bool ok = true;
      for (auto u : cur) ok = ok && g.adjacent(u, v);
      if (!ok) continue;
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return count;
}

// Direct Schemmel count: k in 1..n with k, ..., k+r-1 all coprime to n.
inline std::uint64_t naive_schemmel(int r, std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    bool ok = true;
    for (int i = 0; i < r && ok; ++i) ok = std::gcd(k + i, n) == 1;
    if (ok) ++count;
  }
  return count;
}

}  // namespace testing_support
