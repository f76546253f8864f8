#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace utg {

enum class ErrorKind {
  ParseError,
  TrivialQuotient,
  InfiniteQuotient,
  UnsupportedRing,
  OrderCapExceeded,
  MixedRings,
  IndexOutOfRange,
  InvalidArgument,
  NotAnEdge,
  NotAPermutation,
  FormatUnsupported,
  WitnessUnavailable,
  Unsupported,
  NoIndexTwoPrimes,
  NotPrimePower,
  ShapeMismatch,
  LimitExceeded,
  IncompleteColoring,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so callers (the CLI,
// the sweeps) can tell infeasibility apart from bad input.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace utg
