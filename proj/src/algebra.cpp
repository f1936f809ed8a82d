#include "congkit/algebra.hpp"

#include <algorithm>
#include <string>

#include "congkit/errors.hpp"

namespace congkit {

  namespace {
    void check_element(SemigroupAlgebra const& algebra, Vector const& x) {
      if (x.field() != algebra.field() || x.size() != algebra.dimension()) {
        throw Error(ErrorKind::algebra_mismatch,
                    "element of F_" + std::to_string(x.field().characteristic())
                        + "^" + std::to_string(x.size())
                        + " used in an algebra of dimension "
                        + std::to_string(algebra.dimension()) + " over F_"
                        + std::to_string(algebra.field().characteristic()));
      }
    }

    void check_space(SemigroupAlgebra const& algebra, Subspace const& u) {
      if (u.field() != algebra.field()) {
        throw Error(ErrorKind::field_mismatch,
                    "subspace over a different field than the algebra");
      }
      if (u.ambient_dimension() != algebra.dimension()) {
        throw Error(ErrorKind::dimension_mismatch,
                    "subspace of F^" + std::to_string(u.ambient_dimension())
                        + " in an algebra of dimension "
                        + std::to_string(algebra.dimension()));
      }
    }

    // out = v·s (right) or s·v (left); out must be zeroed.
    void multiply_by_basis(CayleyTable const&       s,
                           PrimeField               f,
                           std::span<residue const> v,
                           std::size_t              elt,
                           Side                     side,
                           std::span<residue>       out) {
      for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j] == 0) {
          continue;
        }
        auto const k = side == Side::right ? s.product(j, elt)
                                           : s.product(elt, j);
        out[k]       = f.add(out[k], v[j]);
      }
    }

    // Checks closure using one scratch buffer; this runs once per subspace
    // during enumeration so it avoids allocating.
    class ClosureTester {
     public:
      explicit ClosureTester(SemigroupAlgebra const& algebra)
          : _algebra(algebra),
            _product(algebra.dimension()),
            _residual(algebra.dimension()) {}

      std::optional<IdealWitness> first_violation(Subspace const& u) {
        auto const& s = _algebra.semigroup();
        auto const  f = _algebra.field();
        for (std::size_t r = 0; r < u.dimension(); ++r) {
          for (std::size_t elt = 0; elt < s.size(); ++elt) {
            for (auto side : {Side::right, Side::left}) {
              std::fill(_product.begin(), _product.end(), 0);
              multiply_by_basis(s, f, u.row(r), elt, side, _product);
              _residual = _product;
              u.reduce(_residual);
              if (std::any_of(_residual.begin(),
                              _residual.end(),
                              [](residue c) { return c != 0; })) {
                return IdealWitness{elt, r, side, Vector(f, _product)};
              }
            }
          }
        }
        return std::nullopt;
      }

     private:
      SemigroupAlgebra const& _algebra;
      std::vector<residue>    _product;
      std::vector<residue>    _residual;
    };

    // Base-p codes of the elements of a subspace.
    std::vector<std::uint64_t> element_codes(Subspace const& u) {
      auto const                 p = u.field().characteristic();
      auto const                 n = u.ambient_dimension();
      std::vector<std::uint64_t> codes{0};
      std::vector<residue>       coords(n);
      for (std::size_t r = 0; r < u.dimension(); ++r) {
        auto const                 row = u.row(r);
        std::vector<std::uint64_t> next;
        next.reserve(codes.size() * p);
        for (auto code : codes) {
          // decode, add c·row, encode
          for (std::size_t k = 0, c = code; k < n; ++k, c /= p) {
            coords[k] = c % p;
          }
          for (residue c = 0; c < p; ++c) {
            std::uint64_t out = 0;
            for (std::size_t k = n; k-- > 0;) {
              out = out * p + u.field().add(coords[k], u.field().mul(c, row[k]));
            }
            next.push_back(out);
          }
        }
        codes = std::move(next);
      }
      return codes;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // SemigroupAlgebra
  ////////////////////////////////////////////////////////////////////////

  AlgebraElement
  SemigroupAlgebra::element(std::vector<std::int64_t> const& coeffs) const {
    if (coeffs.size() != dimension()) {
      throw Error(ErrorKind::algebra_mismatch,
                  std::to_string(coeffs.size()) + " coefficients for dimension "
                      + std::to_string(dimension()));
    }
    return Vector::from_ints(_field, coeffs);
  }

  std::string SemigroupAlgebra::format(AlgebraElement const& x) const {
    check_element(*this, x);
    std::string out;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0) {
        continue;
      }
      if (!out.empty()) {
        out += " + ";
      }
      if (x[i] != 1) {
        out += std::to_string(x[i]);
      }
      out += _semigroup.name(i);
    }
    return out.empty() ? "0" : out;
  }

  AlgebraElement multiply(SemigroupAlgebra const& algebra,
                          AlgebraElement const&   x,
                          AlgebraElement const&   y) {
    check_element(algebra, x);
    check_element(algebra, y);
    auto const&          s = algebra.semigroup();
    auto const           f = algebra.field();
    std::vector<residue> out(algebra.dimension(), 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0) {
        continue;
      }
      for (std::size_t j = 0; j < y.size(); ++j) {
        auto const k = s.product(i, j);
        out[k]       = f.add(out[k], f.mul(x[i], y[j]));
      }
    }
    return Vector(f, std::move(out));
  }

  ////////////////////////////////////////////////////////////////////////
  // Ideals
  ////////////////////////////////////////////////////////////////////////

  Ideal Ideal::from_subspace(SemigroupAlgebra const& algebra, Subspace u) {
    if (auto w = ideal_violation(algebra, u)) {
      throw Error(ErrorKind::not_an_ideal,
                  "basis row " + std::to_string(w->row) + " times "
                      + algebra.semigroup().name(w->element) + " on the "
                      + to_string(w->side) + " leaves the subspace");
    }
    return Ideal(std::move(u));
  }

  Ideal zero_ideal(SemigroupAlgebra const& algebra) {
    return Ideal::from_subspace(
        algebra, Subspace(algebra.field(), algebra.dimension()));
  }

  Ideal full_ideal(SemigroupAlgebra const& algebra) {
    return Ideal::from_subspace(
        algebra, Subspace::full(algebra.field(), algebra.dimension()));
  }

  std::optional<IdealWitness> ideal_violation(SemigroupAlgebra const& algebra,
                                              Subspace const&         u) {
    check_space(algebra, u);
    return ClosureTester(algebra).first_violation(u);
  }

  Ideal ideal_closure(SemigroupAlgebra const&            algebra,
                      std::vector<AlgebraElement> const& generators) {
    for (auto const& g : generators) {
      check_element(algebra, g);
    }
    auto const& s     = algebra.semigroup();
    auto const  f     = algebra.field();
    auto const  n     = algebra.dimension();
    Subspace    space = rref(f, n, generators);
    while (true) {
      auto rows = space.basis();
      for (std::size_t r = 0; r < space.dimension(); ++r) {
        for (std::size_t elt = 0; elt < s.size(); ++elt) {
          for (auto side : {Side::right, Side::left}) {
            std::vector<residue> out(n, 0);
            multiply_by_basis(s, f, space.row(r), elt, side, out);
            rows.emplace_back(f, std::move(out));
          }
        }
      }
      auto next = rref(f, n, rows);
      if (next.dimension() == space.dimension()) {
        return Ideal(std::move(next));
      }
      space = std::move(next);
    }
  }

  std::vector<Ideal> enumerate_ideals(SemigroupAlgebra const& algebra,
                                      SubspaceGuard           guard) {
    SubspaceStream     stream(algebra.field(), algebra.dimension(), guard);
    ClosureTester      tester(algebra);
    std::vector<Ideal> result;
    while (stream.next()) {
      if (!tester.first_violation(stream.current())) {
        result.push_back(Ideal(stream.current()));
      }
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  Ideal ideal_sum(Ideal const& i, Ideal const& j) {
    return Ideal(sum(i.space(), j.space()));
  }

  Ideal ideal_intersection(Ideal const& i, Ideal const& j) {
    return Ideal(intersect(i.space(), j.space()));
  }

  std::vector<std::pair<std::size_t, std::size_t>>
  ideal_lattice(std::vector<Ideal> const& ideals) {
    return cover_relation(ideals.size(), [&](std::size_t a, std::size_t b) {
      return contains(ideals[b].space(), ideals[a].space());
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Ring congruences
  ////////////////////////////////////////////////////////////////////////

  BinaryRelation ideal_congruence(SemigroupAlgebra const& algebra,
                                  Ideal const&            ideal,
                                  std::uint64_t           max_carrier) {
    check_space(algebra, ideal.space());
    auto const    p = algebra.field().characteristic();
    auto const    n = algebra.dimension();
    std::uint64_t carrier = 1;
    for (std::size_t k = 0; k < n; ++k) {
      carrier *= p;
      if (carrier > max_carrier) {
        throw GuardExceeded("algebra carrier size p^dim", carrier, max_carrier);
      }
    }
    auto const           members = element_codes(ideal.space());
    std::vector<residue> digits(carrier * n);
    for (std::uint64_t x = 0; x < carrier; ++x) {
      for (std::size_t k = 0, c = x; k < n; ++k, c /= p) {
        digits[x * n + k] = c % p;
      }
    }
    auto const     f = algebra.field();
    BinaryRelation theta(carrier);
    for (std::uint64_t x = 0; x < carrier; ++x) {
      for (auto m : members) {
        std::uint64_t y = 0;
        for (std::size_t k = n; k-- > 0;) {
          y = y * p + f.sub(digits[x * n + k], digits[m * n + k]);
        }
        theta.insert(x, y);
      }
    }
    return theta;
  }

  bool algebra_congruence_permutability_check(SemigroupAlgebra const& algebra,
                                              Ideal const&            i,
                                              Ideal const&            j,
                                              std::uint64_t max_carrier) {
    auto const theta_i   = ideal_congruence(algebra, i, max_carrier);
    auto const theta_j   = ideal_congruence(algebra, j, max_carrier);
    auto const theta_sum = ideal_congruence(algebra, ideal_sum(i, j), max_carrier);
    return compose(theta_i, theta_j) == theta_sum
           && compose(theta_j, theta_i) == theta_sum;
  }

}  // namespace congkit
