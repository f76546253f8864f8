#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace utg {

struct Gaussian {
  std::int64_t re = 0;
  std::int64_t im = 0;

  friend bool operator==(const Gaussian&, const Gaussian&) = default;
  friend auto operator<=>(const Gaussian&, const Gaussian&) = default;
};

// Polynomial over a prime field. Coefficients are stored lowest degree first
// with no trailing zeros, so the zero polynomial is empty.
struct Poly {
  std::vector<std::uint32_t> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }

  friend bool operator==(const Poly&, const Poly&) = default;
};

std::string to_string(const Gaussian& z);
std::string to_string(const Poly& f);

struct IntegerModulus {
  std::int64_t n = 0;
};

struct PolyModulus {
  std::uint32_t p = 0;
  Poly f;
};

struct GaussianModulus {
  Gaussian z;
};

enum class RingFamily { IntegerMod, PolyMod, GaussianMod };

struct RingSpec {
  std::variant<IntegerModulus, PolyModulus, GaussianModulus> modulus;

  RingFamily family() const { return static_cast<RingFamily>(modulus.index()); }
};

std::string to_string(const RingSpec& spec);

// Grammar:
//   spec  := "Z/" INT | "GF(" INT ")[x]/(" POLY ")" | "Zi/(" GAUSS ")"
//   POLY  := signed sum of "c*x^k", "x^k", "x", "c"
//   GAUSS := "a+bi" | "a-bi" | "a" | "bi"
// Whitespace is ignored. Throws ParseError, TrivialQuotient, InfiniteQuotient
// or UnsupportedRing.
RingSpec parse_ring_spec(std::string_view text);

// Canonical generator of a prime ideal: the prime integer, the monic
// irreducible polynomial, or the Gaussian prime with re > 0 and im >= 0.
using Generator = std::variant<std::int64_t, Poly, Gaussian>;

std::string to_string(const Generator& g);

struct PrimeFactor {
  Generator generator;
  int exponent = 0;
  std::uint64_t residue_index = 0;  // |R/P|
  std::uint64_t residue_char = 0;   // char(R/P)
};

struct RingElement {
  std::uint32_t index = 0;
  std::uint32_t ring_id = 0;

  friend bool operator==(const RingElement&, const RingElement&) = default;
};

// Canonical residue: an integer in [0, n), the coefficient vector of length
// deg f, or a Gaussian x+yi inside the ring's fundamental box.
using Residue = std::variant<std::int64_t, std::vector<std::uint32_t>, Gaussian>;

enum class ArithOp { Add, Sub, Mul, Neg };

inline constexpr std::uint64_t kDefaultOrderCap = 65536;
inline constexpr std::uint64_t kMaxOrderCap = std::uint64_t{1} << 31;

// kDefaultOrderCap unless UTG_MAX_ORDER is set in the environment (clamped
// to kMaxOrderCap).
std::uint64_t default_order_cap();

class QuotientRing;

QuotientRing build_quotient_ring(const RingSpec& spec,
                                 std::uint64_t order_cap = default_order_cap());

// A finite quotient R/I. Elements are indexed 0..order-1 in ascending
// canonical-residue order. Immutable; copies share state.
class QuotientRing {
 public:
  const RingSpec& spec() const;
  std::string name() const { return to_string(spec()); }
  std::uint32_t order() const;
  const std::vector<PrimeFactor>& factors() const;
  std::uint32_t id() const;

  RingElement element(std::uint64_t index) const;
  RingElement zero() const { return element(0); }
  RingElement one() const;
  // The k-fold sum of unity (negative k gives the additive inverse).
  RingElement from_integer(std::int64_t k) const;
  RingElement from_generator(const Generator& g) const;
  // Reduces an arbitrary representative of the family into canonical form.
  RingElement reduce(const Residue& representative) const;
  std::vector<RingElement> elements() const;

  Residue residue(RingElement a) const;
  std::string format(RingElement a) const;

  RingElement arith(ArithOp op, RingElement a, std::optional<RingElement> b = std::nullopt) const;
  RingElement add(RingElement a, RingElement b) const;
  RingElement sub(RingElement a, RingElement b) const;
  RingElement mul(RingElement a, RingElement b) const;
  RingElement neg(RingElement a) const;
  std::optional<RingElement> inverse(RingElement a) const;

  bool is_unit(RingElement a) const;
  bool in_prime(std::size_t factor_index, RingElement a) const;
  // a in P_i^e for 1 <= e <= alpha_i.
  bool in_prime_power(std::size_t factor_index, RingElement a, int exponent) const;

  // Index-level arithmetic for the enumeration and graph kernels. No
  // ownership checks.
  std::uint32_t add_index(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg_index(std::uint32_t a) const;
  std::uint32_t sub_index(std::uint32_t a, std::uint32_t b) const { return add_index(a, neg_index(b)); }
  std::uint32_t mul_index(std::uint32_t a, std::uint32_t b) const;
  // Bit i is set iff element `index` lies in P_i.
  std::uint32_t prime_mask(std::uint32_t index) const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;

  void check(RingElement a) const;

  friend QuotientRing build_quotient_ring(const RingSpec& spec, std::uint64_t order_cap);
};

}  // namespace utg
