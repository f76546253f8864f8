#pragma once

#include <cstdint>

#include "utg/ring.hpp"

namespace utg {

enum class TotientMethod { Formula, Enumeration };

struct TotientValue {
  std::uint64_t value = 0;
  TotientMethod method = TotientMethod::Formula;
};

// Enumeration is refused for r above this.
inline constexpr int kMaxEnumerationShift = 16;

// Classic Schemmel totient S_r(n) on the positive integers, computed from the
// factorization of n: S_r(p^a) = p^(a-1) (p - r) when p > r, else 0.
// S_0(n) = n and S_1 = Euler's phi.
std::uint64_t schemmel_classic(int r, std::uint64_t n);

// |U(R/I)| from the factorization.
std::uint64_t phi(const QuotientRing& ring);
// |U(R/I)| by testing every element.
std::uint64_t phi_enumerate(const QuotientRing& ring);

// Number of a in R/I with a, a+1, ..., a+(r-1) all units. Pure enumeration.
// r in [1, kMaxEnumerationShift].
std::uint64_t script_S_enumerate(int r, const QuotientRing& ring);

// Product over P^a || I of |R/P|^(a-1) (|R/P| - min(r, char(R/P))). r >= 1.
std::uint64_t script_S_formula(int r, const QuotientRing& ring);

// Product over P^a || I of |R/P|^(a-1) (|R/P| - r), or 0 once r > |R/P|.
// Zero exactly when Q(I) <= r.
std::uint64_t cal_S(int r, const QuotientRing& ring);

// The finite field R viewed as R/(0): |R| - min(r, char R). r >= 1.
std::uint64_t script_S_field_zero_ideal(int r, std::uint64_t field_order, std::uint64_t field_char);

}  // namespace utg
