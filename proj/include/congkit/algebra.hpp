#ifndef CONGKIT_ALGEBRA_HPP_
#define CONGKIT_ALGEBRA_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "congkit/gf.hpp"
#include "congkit/relations.hpp"
#include "congkit/semigroup.hpp"

namespace congkit {

  // Coefficient vector indexed by the elements of the semigroup.
  using AlgebraElement = Vector;

  // The semigroup algebra F_p[S]. The elements of S form a basis and the
  // product of two basis elements is the basis element of their product.
  class SemigroupAlgebra {
   public:
    SemigroupAlgebra(CayleyTable semigroup, PrimeField field)
        : _semigroup(std::move(semigroup)), _field(field) {}

    CayleyTable const& semigroup() const noexcept {
      return _semigroup;
    }
    PrimeField field() const noexcept {
      return _field;
    }
    std::size_t dimension() const noexcept {
      return _semigroup.size();
    }

    AlgebraElement zero() const {
      return Vector::zero(_field, dimension());
    }
    // The basis vector of the element with index s.
    AlgebraElement element(std::size_t s) const {
      return Vector::unit(_field, dimension(), s);
    }
    AlgebraElement element(std::vector<std::int64_t> const& coeffs) const;

    // Element of the algebra as a sum like "1 + 2a²".
    std::string format(AlgebraElement const& x) const;

   private:
    CayleyTable _semigroup;
    PrimeField  _field;
  };

  AlgebraElement multiply(SemigroupAlgebra const& algebra,
                          AlgebraElement const&   x,
                          AlgebraElement const&   y);

  // A two-sided ideal; only constructible through the checks below, so the
  // space is always closed under multiplication by S on both sides.
  class Ideal {
   public:
    Subspace const& space() const noexcept {
      return _space;
    }
    std::size_t dimension() const noexcept {
      return _space.dimension();
    }

    bool operator==(Ideal const&) const = default;
    auto operator<=>(Ideal const& that) const {
      return _space <=> that._space;
    }

    // Throws not_an_ideal if u is not closed.
    static Ideal from_subspace(SemigroupAlgebra const& algebra, Subspace u);

   private:
    explicit Ideal(Subspace u) : _space(std::move(u)) {}

    friend Ideal ideal_closure(SemigroupAlgebra const&,
                               std::vector<AlgebraElement> const&);
    friend std::vector<Ideal> enumerate_ideals(SemigroupAlgebra const&,
                                               SubspaceGuard);
    friend Ideal ideal_sum(Ideal const&, Ideal const&);
    friend Ideal ideal_intersection(Ideal const&, Ideal const&);

    Subspace _space;
  };

  Ideal zero_ideal(SemigroupAlgebra const& algebra);
  Ideal full_ideal(SemigroupAlgebra const& algebra);

  Ideal ideal_closure(SemigroupAlgebra const&            algebra,
                      std::vector<AlgebraElement> const& generators);

  struct IdealWitness {
    std::size_t    element;  // s
    std::size_t    row;      // index of the basis row v
    Side           side;     // right: v·s, left: s·v
    AlgebraElement product;
  };

  // First (row, s, side) whose product leaves u, or nullopt if u is an ideal.
  std::optional<IdealWitness> ideal_violation(SemigroupAlgebra const& algebra,
                                              Subspace const&         u);

  inline bool is_ideal(SemigroupAlgebra const& algebra, Subspace const& u) {
    return !ideal_violation(algebra, u).has_value();
  }

  // All two-sided ideals in canonical subspace order (zero ideal first).
  std::vector<Ideal> enumerate_ideals(SemigroupAlgebra const& algebra,
                                      SubspaceGuard           guard = {});

  Ideal ideal_sum(Ideal const& i, Ideal const& j);
  Ideal ideal_intersection(Ideal const& i, Ideal const& j);

  // Hasse diagram of a finite order on {0, ..., count - 1}: pairs (a, b)
  // with a < b and nothing strictly between.
  template <typename LessEq>
  std::vector<std::pair<std::size_t, std::size_t>>
  cover_relation(std::size_t count, LessEq&& leq) {
    std::vector<std::vector<bool>> below(count, std::vector<bool>(count));
    for (std::size_t a = 0; a < count; ++a) {
      for (std::size_t b = 0; b < count; ++b) {
        below[a][b] = a != b && leq(a, b);
      }
    }
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t a = 0; a < count; ++a) {
      for (std::size_t b = 0; b < count; ++b) {
        if (!below[a][b]) {
          continue;
        }
        bool covered = true;
        for (std::size_t c = 0; c < count && covered; ++c) {
          covered = !(below[a][c] && below[c][b]);
        }
        if (covered) {
          edges.emplace_back(a, b);
        }
      }
    }
    return edges;
  }

  std::vector<std::pair<std::size_t, std::size_t>>
  ideal_lattice(std::vector<Ideal> const& ideals);

  constexpr std::uint64_t default_carrier_guard = 10'000;

  // The ring congruence x θ_I y iff x - y ∈ I, materialized on all p^dim
  // elements of the algebra (element k has base-p digits as coordinates).
  BinaryRelation ideal_congruence(SemigroupAlgebra const& algebra,
                                  Ideal const&            ideal,
                                  std::uint64_t max_carrier = default_carrier_guard);

  // θ_I ∘ θ_J = θ_{I+J} = θ_J ∘ θ_I, by exhaustive evaluation.
  bool algebra_congruence_permutability_check(
      SemigroupAlgebra const& algebra,
      Ideal const&            i,
      Ideal const&            j,
      std::uint64_t           max_carrier = default_carrier_guard);

}  // namespace congkit

#endif  // CONGKIT_ALGEBRA_HPP_
