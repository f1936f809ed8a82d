#ifndef CONGKIT_GF_HPP_
#define CONGKIT_GF_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace congkit {

  using residue = std::uint32_t;

  // The prime field F_p for 2 <= p <= 97.
  class PrimeField {
   public:
    static constexpr std::uint32_t max_prime = 97;

    explicit PrimeField(std::uint32_t p);

    std::uint32_t characteristic() const noexcept {
      return _p;
    }

    residue add(residue a, residue b) const noexcept {
      residue s = a + b;
      return s >= _p ? s - _p : s;
    }
    residue sub(residue a, residue b) const noexcept {
      return a >= b ? a - b : a + _p - b;
    }
    residue neg(residue a) const noexcept {
      return a == 0 ? 0 : _p - a;
    }
    residue mul(residue a, residue b) const noexcept {
      return (a * b) % _p;
    }
    // Throws invalid_input for a == 0.
    residue inv(residue a) const;

    residue reduce(std::int64_t x) const noexcept {
      auto r = x % static_cast<std::int64_t>(_p);
      return static_cast<residue>(r < 0 ? r + _p : r);
    }

    bool operator==(PrimeField const&) const = default;

   private:
    std::uint32_t _p;
  };

  bool is_prime(std::uint32_t n) noexcept;

  // A coordinate vector over F_p; coordinates are always reduced.
  class Vector {
   public:
    Vector(PrimeField field, std::vector<residue> coords);
    Vector(PrimeField field, std::initializer_list<std::int64_t> coords);

    static Vector zero(PrimeField field, std::size_t n);
    static Vector unit(PrimeField field, std::size_t n, std::size_t i);
    static Vector from_ints(PrimeField field, std::vector<std::int64_t> const& xs);

    PrimeField field() const noexcept {
      return _field;
    }
    std::size_t size() const noexcept {
      return _coords.size();
    }
    residue operator[](std::size_t i) const noexcept {
      return _coords[i];
    }
    std::vector<residue> const& coords() const noexcept {
      return _coords;
    }
    bool is_zero() const noexcept;

    Vector& operator+=(Vector const& that);
    Vector& operator-=(Vector const& that);
    Vector  scaled(residue c) const;

    bool operator==(Vector const& that) const = default;

   private:
    PrimeField           _field;
    std::vector<residue> _coords;
  };

  Vector operator+(Vector a, Vector const& b);
  Vector operator-(Vector a, Vector const& b);

  // A linear subspace of F_p^n held as its reduced row echelon basis, which
  // is unique: two subspaces are equal iff their bases are identical.
  class Subspace {
   public:
    // The zero subspace.
    Subspace(PrimeField field, std::size_t ambient_dimension);

    static Subspace full(PrimeField field, std::size_t ambient_dimension);

    PrimeField field() const noexcept {
      return _field;
    }
    std::size_t ambient_dimension() const noexcept {
      return _n;
    }
    std::size_t dimension() const noexcept {
      return _pivots.size();
    }
    std::span<residue const> row(std::size_t i) const noexcept {
      return {_data.data() + i * _n, _n};
    }
    std::vector<std::size_t> const& pivots() const noexcept {
      return _pivots;
    }
    std::vector<residue> const& flattened() const noexcept {
      return _data;
    }
    std::vector<Vector> basis() const;

    bool operator==(Subspace const& that) const {
      return _field == that._field && _n == that._n && _data == that._data;
    }

    // By dimension, then lexicographically on the flattened basis.
    std::strong_ordering operator<=>(Subspace const& that) const;

    // Reduces w in place against the basis; w is in the subspace iff the
    // result is zero.
    void reduce(std::span<residue> w) const noexcept;

   private:
    friend Subspace rref(PrimeField, std::size_t, std::span<Vector const>);
    friend class SubspaceStream;

    PrimeField               _field;
    std::size_t              _n;
    std::vector<std::size_t> _pivots;
    std::vector<residue>     _data;
  };

  // Canonical basis of the row space of `rows`.
  Subspace rref(PrimeField field, std::size_t ambient_dimension,
                std::span<Vector const> rows);

  bool member(Vector const& v, Subspace const& u);

  // inner ⊆ outer
  bool contains(Subspace const& outer, Subspace const& inner);

  Subspace sum(Subspace const& u, Subspace const& w);

  // Zassenhaus: reduce the rows (u | u) and (w | 0); the rows whose left half
  // vanishes carry a basis of U ∩ W in their right half.
  Subspace intersect(Subspace const& u, Subspace const& w);

  // {x in F_p^columns : M x = 0} where M has the given rows.
  Subspace nullspace(PrimeField field, std::size_t columns,
                     std::span<Vector const> matrix_rows);

  // Number of k-dimensional subspaces of F_p^n, saturating at UINT64_MAX.
  std::uint64_t gaussian_binomial(std::size_t n, std::size_t k, std::uint64_t p);
  std::uint64_t subspace_count(std::size_t n, std::uint64_t p);

  // Enumeration is allowed when p^n <= max_vectors or the total number of
  // subspaces is <= max_subspaces.
  struct SubspaceGuard {
    std::uint64_t max_vectors   = 1'000'000;
    std::uint64_t max_subspaces = 100'000;

    bool allows(std::size_t n, PrimeField field) const noexcept;

    // Defaults, except that CONGKIT_GUARD_SUBSPACES=N makes "at most N
    // subspaces" the only criterion.
    static SubspaceGuard from_environment();
  };

  // Yields every subspace of F_p^n exactly once, by dimension, building each
  // reduced echelon basis directly from a pivot set and its free entries.
  //
  //   SubspaceStream stream(field, n);
  //   while (stream.next()) { use(stream.current()); }
  class SubspaceStream {
   public:
    SubspaceStream(PrimeField field, std::size_t n, SubspaceGuard guard = {});

    bool next();

    Subspace const& current() const noexcept {
      return _current;
    }

   private:
    bool next_pivot_set();
    void load_pivot_set();

    std::size_t              _n;
    std::size_t              _rank    = 0;
    bool                     _started = false;
    std::vector<std::size_t> _free;
    Subspace                 _current;
  };

  std::vector<Subspace> enumerate_subspaces(PrimeField    field,
                                            std::size_t   n,
                                            SubspaceGuard guard = {});

}  // namespace congkit

#endif  // CONGKIT_GF_HPP_
