#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>

// Word-packed bit rows. Bit v of a row lives in word v / 64, position v % 64.
namespace utg::bits {

inline constexpr std::size_t kWordBits = 64;

inline constexpr std::size_t words_for(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

inline bool test(std::span<const std::uint64_t> row, std::size_t v) {
  return (row[v / kWordBits] >> (v % kWordBits)) & 1u;
}

inline void set(std::span<std::uint64_t> row, std::size_t v) {
  row[v / kWordBits] |= std::uint64_t{1} << (v % kWordBits);
}

inline void reset(std::span<std::uint64_t> row, std::size_t v) {
  row[v / kWordBits] &= ~(std::uint64_t{1} << (v % kWordBits));
}

inline std::size_t count(std::span<const std::uint64_t> row) {
  std::size_t c = 0;
  for (auto w : row) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

inline std::size_t count_and(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

inline bool any(std::span<const std::uint64_t> row) {
  for (auto w : row) {
    if (w) return true;
  }
  return false;
}

// Calls f(v) for every set bit in ascending order.
template <class F>
void for_each(std::span<const std::uint64_t> row, F&& f) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    std::uint64_t w = row[i];
    while (w) {
      const int b = std::countr_zero(w);
      f(i * kWordBits + static_cast<std::size_t>(b));
      w &= w - 1;
    }
  }
}

}  // namespace utg::bits
