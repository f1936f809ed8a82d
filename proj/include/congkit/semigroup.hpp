#ifndef CONGKIT_SEMIGROUP_HPP_
#define CONGKIT_SEMIGROUP_HPP_

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "congkit/partition.hpp"

namespace congkit {

  using table_rows = std::vector<std::vector<std::size_t>>;

  // A finite semigroup given by its multiplication table. Element i has
  // display name name(i) and the product s_i s_j is the element at (i, j).
  // Immutable once constructed; the constructor rejects non-associative
  // tables.
  class CayleyTable {
   public:
    static constexpr std::size_t default_max_size = 12;

    CayleyTable(table_rows const&        rows,
                std::vector<std::string> names,
                std::string              label    = "custom",
                std::size_t              max_size = default_max_size);

    std::size_t size() const noexcept {
      return _n;
    }

    std::size_t product(std::size_t i, std::size_t j) const noexcept {
      return _table[i * _n + j];
    }

    std::string const& name(std::size_t i) const {
      return _names.at(i);
    }

    std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    // Short description used in reports, e.g. "rect-band:2,2".
    std::string const& label() const noexcept {
      return _label;
    }

    table_rows rows() const;

    bool operator==(CayleyTable const& that) const {
      return _n == that._n && _table == that._table && _names == that._names;
    }

   private:
    std::size_t              _n;
    std::vector<std::size_t> _table;
    std::vector<std::string> _names;
    std::string              _label;
  };

  namespace family {
    // Meet semilattice of the chain 0 < 1 < ... < n - 1, product = min.
    struct SemilatticeChain {
      std::size_t n;
    };
    // L x R with (a, b)(a', b') = (a, b').
    struct RectangularBand {
      std::size_t l;
      std::size_t r;
    };
    struct CyclicGroup {
      std::size_t n;
    };
    struct LeftZero {
      std::size_t n;
    };
    struct RightZero {
      std::size_t n;
    };
    // {e, f} with e² = e, f² = f, ef = fe = e.
    struct TwoElementSemilattice {};
    struct Custom {
      table_rows               table;
      std::vector<std::string> names;
    };
  }  // namespace family

  using FamilySpec = std::variant<family::SemilatticeChain,
                                  family::RectangularBand,
                                  family::CyclicGroup,
                                  family::LeftZero,
                                  family::RightZero,
                                  family::TwoElementSemilattice,
                                  family::Custom>;

  CayleyTable build(FamilySpec const& spec,
                    std::size_t       max_size = CayleyTable::default_max_size);

  // Parses "chain-semilattice:3", "rect-band:2,2", "cyclic:4", "left-zero:2",
  // "right-zero:2" and "semilattice2".
  FamilySpec parse_family(std::string_view text);

  std::string to_string(FamilySpec const& spec);

  // First (i, j, k) in lexicographic order with (s_i s_j) s_k != s_i (s_j
  // s_k). Entries must already be in range.
  std::optional<std::array<std::size_t, 3>>
  find_associativity_violation(table_rows const& rows);

  // Throws NotAssociative carrying the first violating triple.
  void validate_associativity(table_rows const& rows);

  // The quotient S/alpha. Element k of the result is the k-th class of alpha
  // and is named "{" + comma-joined member names + "}".
  CayleyTable quotient(CayleyTable const& s, Partition const& alpha);

  // Text format: `n`, then n names, then n rows of n zero-based indices.
  // Anything after '#' on a line is ignored.
  CayleyTable read_cayley_table(std::istream& in,
                                std::size_t max_size
                                = CayleyTable::default_max_size);
  CayleyTable read_cayley_table_file(std::string const& path,
                                     std::size_t        max_size
                                     = CayleyTable::default_max_size);
  void        write_cayley_table(std::ostream& out, CayleyTable const& s);

}  // namespace congkit

#endif  // CONGKIT_SEMIGROUP_HPP_
