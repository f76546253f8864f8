#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace utg {

struct IntegerPrimePower {
  std::uint64_t prime;
  int exponent;
};

// Trial division; factors come back in ascending prime order.
std::vector<IntegerPrimePower> factor_integer(std::uint64_t n);

bool is_prime(std::uint64_t n);

// base^exp, or 0 when the result would exceed 2^63.
std::uint64_t checked_pow(std::uint64_t base, int exp);

std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t floor_mod(std::int64_t a, std::int64_t b);

struct ExtendedGcd {
  std::int64_t gcd;
  std::int64_t x;  // a*x + b*y == gcd
  std::int64_t y;
};

ExtendedGcd extended_gcd(std::int64_t a, std::int64_t b);

}  // namespace utg
