#include "utg/closed_form.hpp"

#include <algorithm>
#include <stdexcept>

#include "utg/error.hpp"
#include "utg/number_theory.hpp"
#include "utg/totients.hpp"

namespace utg {

namespace {

std::uint64_t ipow(std::uint64_t base, int exp) { return checked_pow(base, exp); }

bool is_power_of_two(std::uint64_t x) { return x != 0 && (x & (x - 1)) == 0; }

// y in P_j^{a_j} for every j != skip, i.e. y lies in I / P_skip^{a_skip}.
bool in_cofactor(const QuotientRing& ring, std::size_t skip, RingElement y) {
  const auto& factors = ring.factors();
  for (std::size_t j = 0; j < factors.size(); ++j) {
    if (j == skip) continue;
    if (!ring.in_prime_power(j, y, factors[j].exponent)) return false;
  }
  return true;
}

// Smallest element (in enumeration order) of I / P_skip^{a_skip} outside P_skip.
std::optional<RingElement> first_cofactor_element_outside(const QuotientRing& ring, std::size_t skip) {
  for (const RingElement y : ring.elements()) {
    if (!ring.in_prime(skip, y) && in_cofactor(ring, skip, y)) return y;
  }
  return std::nullopt;
}

bool adjacent_in_ring(const QuotientRing& ring, std::uint32_t a, std::uint32_t b) {
  return ring.prime_mask(ring.sub_index(a, b)) == 0;
}

}  // namespace

IdealStats ideal_stats(const QuotientRing& ring) {
  IdealStats s;
  s.q_min = ring.factors().front().residue_index;
  for (const auto& pf : ring.factors()) {
    s.q_min = std::min(s.q_min, pf.residue_index);
    ++s.lambda;
    if (pf.residue_index == 2) {
      ++s.index2_count;
      if (pf.exponent > 1) s.has_exponent_gt1_on_index2 = true;
    } else {
      s.j_nontrivial = true;
    }
  }
  return s;
}

bool is_prime_ideal(const QuotientRing& ring) {
  return ring.factors().size() == 1 && ring.factors().front().exponent == 1;
}

BigInt clique_numerator(const QuotientRing& ring, int m) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "clique order must be >= 1");
  BigInt acc = 1;
  for (int k = 1; k <= m; ++k) acc *= cal_S(k - 1, ring);
  return acc;
}

BigInt clique_count_formula(const QuotientRing& ring, int m) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "clique order must be >= 1");
  // After step k the running value is the number of k-cliques, hence integral.
  BigInt acc = 1;
  for (int k = 1; k <= m; ++k) {
    acc *= cal_S(k - 1, ring);
    if (acc % k != 0) {
      const BigInt numerator = clique_numerator(ring, m);
      BigInt factorial = 1;
      for (int i = 2; i <= m; ++i) factorial *= i;
      if (numerator % factorial != 0) {
        throw std::logic_error("clique count product not divisible by m! for " + ring.name());
      }
      return numerator / factorial;
    }
    acc /= k;
  }
  return acc;
}

std::uint64_t omega_chi_formula(const QuotientRing& ring) { return ideal_stats(ring).q_min; }

ColoringWitness omega_chi_witness(const QuotientRing& ring) {
  const std::uint64_t q = omega_chi_formula(ring);
  const auto& factors = ring.factors();
  std::size_t p = 0;
  while (factors[p].residue_index != q) ++p;
  ColoringWitness w;
  w.color_of.resize(ring.order());
  std::vector<RingElement> reps;
  for (const RingElement v : ring.elements()) {
    std::size_t c = 0;
    while (c < reps.size() && !ring.in_prime(p, ring.sub(v, reps[c]))) ++c;
    if (c == reps.size()) reps.push_back(v);
    w.color_of[v.index] = static_cast<std::uint32_t>(c);
  }
  w.colors = reps.size();
  return w;
}

const Bipartition& BipartiteResult::require_witness() const {
  if (!witness) throw Error(ErrorKind::WitnessUnavailable, "graph is not bipartite");
  return *witness;
}

BipartiteResult bipartite_formula(const QuotientRing& ring) {
  BipartiteResult out;
  const auto& factors = ring.factors();
  const auto it = std::find_if(factors.begin(), factors.end(),
                               [](const PrimeFactor& pf) { return pf.residue_index == 2; });
  if (it == factors.end()) return out;
  const auto p = static_cast<std::size_t>(it - factors.begin());
  out.bipartite = true;
  Bipartition parts;
  for (const RingElement a : ring.elements()) {
    (ring.in_prime(p, a) ? parts.in_prime : parts.not_in_prime).push_back(a.index);
  }
  out.witness = std::move(parts);
  return out;
}

std::uint64_t chromatic_index_formula(const QuotientRing& ring) {
  const std::uint64_t degree = phi(ring);
  for (const auto& pf : ring.factors()) {
    if (is_power_of_two(pf.residue_index)) return degree;
  }
  return degree + 1;
}

std::optional<std::uint64_t> clique_domination_formula(const QuotientRing& ring) {
  if (is_prime_ideal(ring)) return 1;
  const IdealStats s = ideal_stats(ring);
  if (s.q_min > static_cast<std::uint64_t>(s.lambda)) return static_cast<std::uint64_t>(s.lambda) + 1;
  return std::nullopt;
}

std::uint32_t girth_formula_integer(std::int64_t n) {
  if (n < 3) throw Error(ErrorKind::Unsupported, "G_{Z/" + std::to_string(n) + "} is acyclic");
  if (n % 2 != 0) return 3;
  if (n == 6) return 6;
  return 4;
}

std::optional<std::vector<std::uint32_t>> four_cycle_witness(const QuotientRing& ring, std::size_t factor_index) {
  const auto& factors = ring.factors();
  if (factor_index >= factors.size()) {
    throw Error(ErrorKind::IndexOutOfRange, "factor index " + std::to_string(factor_index));
  }
  const PrimeFactor& pf = factors[factor_index];
  const RingElement p = ring.from_generator(pf.generator);
  const RingElement one = ring.one();
  const bool hypothesis = pf.exponent > 1 || (!in_cofactor(ring, factor_index, ring.sub(p, one)) &&
                                              !in_cofactor(ring, factor_index, ring.add(p, one)));
  if (!hypothesis) return std::nullopt;
  const auto y = first_cofactor_element_outside(ring, factor_index);
  if (!y) throw std::logic_error("J is contained in P for " + ring.name());
  const RingElement p2 = ring.mul(p, p);
  const std::vector<std::uint32_t> cycle = {
      ring.zero().index,
      ring.sub(p2, *y).index,
      ring.add(p2, p).index,
      ring.sub(p, *y).index,
  };
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (cycle[i] == cycle[j]) throw std::logic_error("four-cycle witness has repeated vertices");
    }
    if (!adjacent_in_ring(ring, cycle[i], cycle[(i + 1) % 4])) {
      throw std::logic_error("four-cycle witness is not a cycle");
    }
  }
  return cycle;
}

std::optional<std::vector<std::uint32_t>> four_cycle_witness(const QuotientRing& ring, const PrimeFactor& factor) {
  const auto& factors = ring.factors();
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].generator == factor.generator) return four_cycle_witness(ring, i);
  }
  throw Error(ErrorKind::InvalidArgument, to_string(factor.generator) + " does not divide the modulus");
}

std::uint64_t common_neighbor_formula(const QuotientRing& ring, RingElement s) {
  std::uint64_t count = 1;
  const auto& factors = ring.factors();
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const std::uint64_t q = factors[i].residue_index;
    const std::uint64_t eps = ring.in_prime(i, s) ? 1 : 2;
    count *= ipow(q, factors[i].exponent - 1) * (q - eps);
  }
  return count;
}

DiameterClassification diameter_components_formula(const QuotientRing& ring) {
  const IdealStats s = ideal_stats(ring);
  DiameterClassification d;
  if (s.index2_count == 0) {
    d.component_count = 1;
    d.component_diameter = is_prime_ideal(ring) ? 1 : 2;
    return d;
  }
  d.component_count = std::uint64_t{1} << (s.index2_count - 1);
  if (s.j_nontrivial) {
    d.component_diameter = 3;
  } else {
    d.component_diameter = s.has_exponent_gt1_on_index2 ? 2 : 1;
  }
  return d;
}

std::vector<bool> t_signature(const QuotientRing& ring, RingElement a) {
  std::vector<bool> sig;
  const auto& factors = ring.factors();
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].residue_index == 2) sig.push_back(!ring.in_prime(i, a));
  }
  if (sig.empty()) throw Error(ErrorKind::NoIndexTwoPrimes, ring.name() + " has no prime divisor of index 2");
  return sig;
}

namespace {

const PrimeFactor& require_prime_power(const QuotientRing& ring) {
  if (ring.factors().size() != 1) {
    throw Error(ErrorKind::NotPrimePower, ring.name() + " is not a prime-power quotient");
  }
  return ring.factors().front();
}

}  // namespace

std::uint64_t strong_chromatic_formula_prime_power(const QuotientRing& ring) {
  const PrimeFactor& pf = require_prime_power(ring);
  return ipow(pf.residue_index, pf.exponent);
}

std::uint64_t strong_edge_formula_prime_power(const QuotientRing& ring) {
  const PrimeFactor& pf = require_prime_power(ring);
  return ipow(pf.residue_index, 2 * pf.exponent - 1) * (pf.residue_index - 1) / 2;
}

PairingColoring strong_edge_coloring_QM(const QuotientRing& ring) {
  const auto& factors = ring.factors();
  if (factors.size() < 2) throw Error(ErrorKind::ShapeMismatch, ring.name() + " is not of the form Q*M with M != R");
  const auto it = std::find_if(factors.begin(), factors.end(), [](const PrimeFactor& pf) {
    return pf.residue_index == 2 && pf.exponent == 1;
  });
  if (it == factors.end()) {
    throw Error(ErrorKind::ShapeMismatch, ring.name() + " has no index-2 prime dividing it exactly once");
  }
  PairingColoring out;
  out.q_factor = static_cast<std::size_t>(it - factors.begin());
  const auto mu = first_cofactor_element_outside(ring, out.q_factor);
  if (!mu) throw std::logic_error("M is contained in Q for " + ring.name());
  out.mu = mu->index;
  out.bound = (ring.order() / 2) * phi(ring) / 2;

  auto& col = out.coloring;
  const std::uint32_t n = ring.order();
  for (std::uint32_t u = 0; u < n; ++u) {
    for (std::uint32_t v = u + 1; v < n; ++v) {
      if (adjacent_in_ring(ring, u, v)) col.edges.push_back({u, v});
    }
  }
  constexpr std::uint32_t kUncolored = ~std::uint32_t{0};
  col.colors.assign(col.edges.size(), kUncolored);
  auto position = [&](std::uint32_t a, std::uint32_t b) {
    const Edge e{std::min(a, b), std::max(a, b)};
    const auto pos = std::lower_bound(col.edges.begin(), col.edges.end(), e);
    if (pos == col.edges.end() || *pos != e) throw std::logic_error("shifted edge is not an edge");
    return static_cast<std::size_t>(pos - col.edges.begin());
  };
  std::vector<std::size_t> partner(col.edges.size());
  for (std::size_t i = 0; i < col.edges.size(); ++i) {
    const Edge e = col.edges[i];
    partner[i] = position(ring.add_index(e.u, out.mu), ring.add_index(e.v, out.mu));
    if (col.colors[i] != kUncolored) continue;
    col.colors[i] = col.colors[partner[i]] = col.color_count++;
  }

  // Each colour class is {E, E + mu}; no endpoint of one may meet or neighbour the other.
  for (std::size_t i = 0; i < col.edges.size(); ++i) {
    const Edge e = col.edges[i], f = col.edges[partner[i]];
    if (partner[i] == i || col.colors[i] != col.colors[partner[i]]) {
      throw std::logic_error("pairing coloring is not an involution on edges");
    }
    for (std::uint32_t x : {e.u, e.v}) {
      for (std::uint32_t y : {f.u, f.v}) {
        if (x == y || adjacent_in_ring(ring, x, y)) throw std::logic_error("pairing coloring is not strong");
      }
    }
  }
  if (col.color_count != out.bound) throw std::logic_error("pairing coloring uses an unexpected number of colors");
  return out;
}

}  // namespace utg
