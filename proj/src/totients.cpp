#include "utg/totients.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "utg/error.hpp"
#include "utg/kernels.hpp"
#include "utg/number_theory.hpp"

namespace utg {

namespace {

void require_positive_shift(int r) {
  if (r < 1) throw Error(ErrorKind::InvalidArgument, "r must be >= 1, got " + std::to_string(r));
}

}  // namespace

std::uint64_t schemmel_classic(int r, std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "n must be positive");
  if (r < 0) throw Error(ErrorKind::InvalidArgument, "r must be >= 0");
  if (r == 0) return n;
  std::uint64_t value = 1;
  for (const auto& [p, a] : factor_integer(n)) {
    if (p <= static_cast<std::uint64_t>(r)) return 0;
    value *= checked_pow(p, a - 1) * (p - static_cast<std::uint64_t>(r));
  }
  return value;
}

std::uint64_t phi(const QuotientRing& ring) {
  const std::uint64_t value = cal_S(1, ring);
  assert(value == phi_enumerate(ring));
  return value;
}

std::uint64_t phi_enumerate(const QuotientRing& ring) { return kernels::count_unit_runs(ring, 1); }

std::uint64_t script_S_enumerate(int r, const QuotientRing& ring) {
  require_positive_shift(r);
  if (r > kMaxEnumerationShift) {
    throw Error(ErrorKind::LimitExceeded,
                "enumeration supports r <= " + std::to_string(kMaxEnumerationShift) + ", got " + std::to_string(r));
  }
  return kernels::count_unit_runs(ring, r);
}

std::uint64_t script_S_formula(int r, const QuotientRing& ring) {
  require_positive_shift(r);
  std::uint64_t value = 1;
  for (const auto& pf : ring.factors()) {
    const std::uint64_t q = pf.residue_index;
    const std::uint64_t shift = std::min<std::uint64_t>(static_cast<std::uint64_t>(r), pf.residue_char);
    value *= checked_pow(q, pf.exponent - 1) * (q - shift);
  }
  return value;
}

std::uint64_t cal_S(int r, const QuotientRing& ring) {
  if (r < 0) throw Error(ErrorKind::InvalidArgument, "r must be >= 0");
  std::uint64_t value = 1;
  for (const auto& pf : ring.factors()) {
    const std::uint64_t q = pf.residue_index;
    if (static_cast<std::uint64_t>(r) >= q) return 0;
    value *= checked_pow(q, pf.exponent - 1) * (q - static_cast<std::uint64_t>(r));
  }
  return value;
}

std::uint64_t script_S_field_zero_ideal(int r, std::uint64_t field_order, std::uint64_t field_char) {
  require_positive_shift(r);
  const auto factors = field_order >= 2 ? factor_integer(field_order) : std::vector<IntegerPrimePower>{};
  if (factors.size() != 1) {
    throw Error(ErrorKind::InvalidArgument, std::to_string(field_order) + " is not a prime power");
  }
  if (factors.front().prime != field_char) {
    throw Error(ErrorKind::InvalidArgument,
                "characteristic " + std::to_string(field_char) + " does not match order " + std::to_string(field_order));
  }
  return field_order - std::min<std::uint64_t>(static_cast<std::uint64_t>(r), field_char);
}

}  // namespace utg
