#include "utg/error.hpp"

namespace utg {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::TrivialQuotient: return "TrivialQuotient";
    case ErrorKind::InfiniteQuotient: return "InfiniteQuotient";
    case ErrorKind::UnsupportedRing: return "UnsupportedRing";
    case ErrorKind::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorKind::MixedRings: return "MixedRings";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotAnEdge: return "NotAnEdge";
    case ErrorKind::NotAPermutation: return "NotAPermutation";
    case ErrorKind::FormatUnsupported: return "FormatUnsupported";
    case ErrorKind::WitnessUnavailable: return "WitnessUnavailable";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::NoIndexTwoPrimes: return "NoIndexTwoPrimes";
    case ErrorKind::NotPrimePower: return "NotPrimePower";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::LimitExceeded: return "LimitExceeded";
    case ErrorKind::IncompleteColoring: return "IncompleteColoring";
  }
  return "Unknown";
}

}  // namespace utg
