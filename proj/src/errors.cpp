#include "congkit/errors.hpp"

namespace congkit {

  char const* to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::invalid_size:
        return "InvalidSize";
      case ErrorKind::invalid_input:
        return "InvalidInput";
      case ErrorKind::parse_error:
        return "ParseError";
      case ErrorKind::not_associative:
        return "NotAssociative";
      case ErrorKind::not_a_congruence:
        return "NotACongruence";
      case ErrorKind::not_an_equivalence:
        return "NotAnEquivalence";
      case ErrorKind::not_an_ideal:
        return "NotAnIdeal";
      case ErrorKind::carrier_mismatch:
        return "CarrierMismatch";
      case ErrorKind::dimension_mismatch:
        return "DimensionMismatch";
      case ErrorKind::field_mismatch:
        return "FieldMismatch";
      case ErrorKind::algebra_mismatch:
        return "AlgebraMismatch";
      case ErrorKind::guard_exceeded:
        return "GuardExceeded";
      case ErrorKind::internal_invariant:
        return "InternalInvariant";
    }
    return "Unknown";
  }

  Error::Error(ErrorKind kind, std::string const& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        _kind(kind) {}

  NotAssociative::NotAssociative(std::size_t i, std::size_t j, std::size_t k)
      : Error(ErrorKind::not_associative,
              "(s" + std::to_string(i) + " s" + std::to_string(j) + ") s"
                  + std::to_string(k) + " != s" + std::to_string(i) + " (s"
                  + std::to_string(j) + " s" + std::to_string(k) + ")"),
        _triple{i, j, k} {}

  GuardExceeded::GuardExceeded(std::string const& what,
                               std::uint64_t      value,
                               std::uint64_t      bound)
      : Error(ErrorKind::guard_exceeded,
              what + " (" + std::to_string(value) + " > "
                  + std::to_string(bound) + ")"),
        _value(value),
        _bound(bound) {}

  NotAnEquivalence::NotAnEquivalence(std::string axiom,
                                     std::size_t x,
                                     std::size_t y)
      : Error(ErrorKind::not_an_equivalence,
              "relation is not " + axiom + ", witness (" + std::to_string(x)
                  + ", " + std::to_string(y) + ")"),
        _axiom(std::move(axiom)),
        _pair{x, y} {}

}  // namespace congkit
