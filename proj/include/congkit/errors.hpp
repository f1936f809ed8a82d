#ifndef CONGKIT_ERRORS_HPP_
#define CONGKIT_ERRORS_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace congkit {

  enum class ErrorKind {
    invalid_size,
    invalid_input,
    parse_error,
    not_associative,
    not_a_congruence,
    not_an_equivalence,
    not_an_ideal,
    carrier_mismatch,
    dimension_mismatch,
    field_mismatch,
    algebra_mismatch,
    guard_exceeded,
    internal_invariant
  };

  char const* to_string(ErrorKind kind) noexcept;

  // Base class of everything the library throws.
  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& what);

    ErrorKind kind() const noexcept {
      return _kind;
    }

   private:
    ErrorKind _kind;
  };

  class NotAssociative : public Error {
   public:
    NotAssociative(std::size_t i, std::size_t j, std::size_t k);

    // (i, j, k) with (s_i s_j) s_k != s_i (s_j s_k)
    std::array<std::size_t, 3> triple() const noexcept {
      return _triple;
    }

   private:
    std::array<std::size_t, 3> _triple;
  };

  class GuardExceeded : public Error {
   public:
    GuardExceeded(std::string const& what,
                  std::uint64_t      value,
                  std::uint64_t      bound);

    std::uint64_t value() const noexcept {
      return _value;
    }
    std::uint64_t bound() const noexcept {
      return _bound;
    }

   private:
    std::uint64_t _value;
    std::uint64_t _bound;
  };

  class NotAnEquivalence : public Error {
   public:
    NotAnEquivalence(std::string axiom, std::size_t x, std::size_t y);

    // "reflexive", "symmetric" or "transitive"
    std::string const& axiom() const noexcept {
      return _axiom;
    }
    std::array<std::size_t, 2> pair() const noexcept {
      return _pair;
    }

   private:
    std::string                _axiom;
    std::array<std::size_t, 2> _pair;
  };

}  // namespace congkit

#endif  // CONGKIT_ERRORS_HPP_
