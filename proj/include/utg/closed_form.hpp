#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "utg/graph.hpp"
#include "utg/ring.hpp"

// Invariants of G_{R/I} evaluated from the factorization of I alone. Nothing
// here reads graph adjacency; witnesses are built from ring arithmetic.
namespace utg {

using BigInt = boost::multiprecision::cpp_int;

struct IdealStats {
  std::uint64_t q_min = 0;       // Q(I): smallest residue field
  int lambda = 0;                // number of distinct prime divisors
  int index2_count = 0;          // prime divisors with |R/P| = 2
  bool has_exponent_gt1_on_index2 = false;
  bool j_nontrivial = false;     // some prime divisor has |R/P| > 2
};

IdealStats ideal_stats(const QuotientRing& ring);

// I is prime iff it has a single prime divisor with exponent 1.
bool is_prime_ideal(const QuotientRing& ring);

// prod_{k=1}^{m} cal_S(k-1) / k, exactly.
BigInt clique_count_formula(const QuotientRing& ring, int m);

// prod_{k=1}^{m} cal_S(k-1), whose divisibility by m! is tested elsewhere.
BigInt clique_numerator(const QuotientRing& ring, int m);

struct ColoringWitness {
  std::uint64_t colors = 0;
  std::vector<std::uint32_t> color_of;  // indexed by vertex
};

// omega = chi = Q(I).
std::uint64_t omega_chi_formula(const QuotientRing& ring);
// Colour classes are the cosets of a prime divisor of index Q(I).
ColoringWitness omega_chi_witness(const QuotientRing& ring);

struct Bipartition {
  std::vector<std::uint32_t> in_prime;      // A0 = {a : a in P}
  std::vector<std::uint32_t> not_in_prime;  // A1 = {a : a not in P}
};

struct BipartiteResult {
  bool bipartite = false;
  std::optional<Bipartition> witness;

  // Throws WitnessUnavailable when the graph is not bipartite.
  const Bipartition& require_witness() const;
};

BipartiteResult bipartite_formula(const QuotientRing& ring);

// phi if some prime divisor has index a power of 2, else phi + 1.
std::uint64_t chromatic_index_formula(const QuotientRing& ring);

// 1 if I is prime; lambda + 1 if Q > lambda; nullopt (no dominating clique) otherwise.
std::optional<std::uint64_t> clique_domination_formula(const QuotientRing& ring);

// Girth of G_{Z/n} for n >= 3. Throws Unsupported below 3.
std::uint32_t girth_formula_integer(std::int64_t n);

// Four vertices 0, p^2 - y, p^2 + p, p - y with y in J \ P, where I = P^a J.
// nullopt unless a > 1, or p - 1 and p + 1 both lie outside J.
std::optional<std::vector<std::uint32_t>> four_cycle_witness(const QuotientRing& ring, std::size_t factor_index);
std::optional<std::vector<std::uint32_t>> four_cycle_witness(const QuotientRing& ring, const PrimeFactor& factor);

// Number of common neighbours of a and b with a - b = s.
std::uint64_t common_neighbor_formula(const QuotientRing& ring, RingElement s);

struct DiameterClassification {
  std::uint64_t component_count = 1;
  int component_diameter = 1;

  friend bool operator==(const DiameterClassification&, const DiameterClassification&) = default;
};

DiameterClassification diameter_components_formula(const QuotientRing& ring);

// Bit i is 0 iff a lies in the i-th index-2 prime (in factor order).
// Throws NoIndexTwoPrimes when there are none.
std::vector<bool> t_signature(const QuotientRing& ring, RingElement a);

// Both require I = P^a; throw NotPrimePower otherwise.
std::uint64_t strong_chromatic_formula_prime_power(const QuotientRing& ring);
std::uint64_t strong_edge_formula_prime_power(const QuotientRing& ring);

struct PairingColoring {
  EdgeColoring coloring;
  std::size_t q_factor = 0;  // index of Q in ring.factors()
  std::uint32_t mu = 0;      // vertex index of the shift
  std::uint64_t bound = 0;   // |R/M| phi(R/M) / 2
};

// For I = Q M with |R/Q| = 2, M not in Q and M != R: pair each edge {Y, Z}
// with {Y + mu, Z + mu} for the first mu in M \ Q and give each pair one
// colour. Throws ShapeMismatch for other ideals.
PairingColoring strong_edge_coloring_QM(const QuotientRing& ring);

}  // namespace utg
