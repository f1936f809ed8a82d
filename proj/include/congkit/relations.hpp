#ifndef CONGKIT_RELATIONS_HPP_
#define CONGKIT_RELATIONS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "congkit/partition.hpp"
#include "congkit/report.hpp"
#include "congkit/semigroup.hpp"

namespace congkit {

  // A binary relation on {0, ..., n - 1} stored as a bit-packed n x n
  // boolean matrix, one row of 64-bit words per point.
  class BinaryRelation {
   public:
    explicit BinaryRelation(std::size_t n = 0);

    static BinaryRelation identity(std::size_t n);
    static BinaryRelation universal(std::size_t n);

    std::size_t size() const noexcept {
      return _n;
    }

    bool contains(std::size_t x, std::size_t y) const noexcept {
      return (_bits[x * _stride + (y >> 6)] >> (y & 63)) & 1;
    }

    void insert(std::size_t x, std::size_t y) noexcept {
      _bits[x * _stride + (y >> 6)] |= std::uint64_t(1) << (y & 63);
    }

    std::size_t count() const noexcept;

    bool operator==(BinaryRelation const&) const = default;

    friend BinaryRelation compose(BinaryRelation const& a,
                                  BinaryRelation const& b);

   private:
    std::size_t                _n;
    std::size_t                _stride;
    std::vector<std::uint64_t> _bits;
  };

  // (x, y) in a∘b iff there is z with (x, z) in a and (z, y) in b.
  BinaryRelation compose(BinaryRelation const& a, BinaryRelation const& b);

  BinaryRelation as_relation(Partition const& p);

  // Inverse of as_relation; throws NotAnEquivalence naming the first axiom
  // that fails and the lexicographically smallest witness pair.
  Partition classify(BinaryRelation const& r);

  // right: compare x z with y z; left: compare z x with z y.
  enum class Side { right, left };

  char const* to_string(Side side) noexcept;

  struct CongruenceWitness {
    std::size_t x;
    std::size_t y;
    std::size_t z;
    Side        side;

    bool operator==(CongruenceWitness const&) const = default;
  };

  // Smallest (x, y, z, side) with x ~ y but the products in different
  // classes, or nullopt if p is a congruence.
  std::optional<CongruenceWitness> congruence_violation(CayleyTable const& s,
                                                        Partition const&   p);

  inline bool is_congruence(CayleyTable const& s, Partition const& p) {
    return !congruence_violation(s, p).has_value();
  }

  constexpr std::size_t default_partition_guard = 10;

  // Every congruence of s, in canonical Partition order (identity first,
  // universal last). Throws GuardExceeded if s.size() > max_size.
  std::vector<Partition>
  enumerate_congruences(CayleyTable const& s,
                        std::size_t        max_size = default_partition_guard);

  Partition join(Partition const& a, Partition const& b);
  Partition meet(Partition const& a, Partition const& b);

  // Checks α∘β = β∘α for every pair of congruences. Each witness names the
  // pair and the smallest element pair on which the two composites differ.
  CheckReport is_permutable(CayleyTable const& s,
                            std::size_t max_size = default_partition_guard);

}  // namespace congkit

#endif  // CONGKIT_RELATIONS_HPP_
