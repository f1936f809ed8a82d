#include "congkit/gf.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

#include "congkit/errors.hpp"

namespace congkit {

  namespace {
    void check_compatible(PrimeField a, PrimeField b) {
      if (a != b) {
        throw Error(ErrorKind::field_mismatch,
                    "F_" + std::to_string(a.characteristic()) + " vs F_"
                        + std::to_string(b.characteristic()));
      }
    }

    void check_compatible(PrimeField  fa,
                          std::size_t na,
                          PrimeField  fb,
                          std::size_t nb) {
      check_compatible(fa, fb);
      if (na != nb) {
        throw Error(ErrorKind::dimension_mismatch,
                    "dimensions " + std::to_string(na) + " and "
                        + std::to_string(nb));
      }
    }

    // Gauss-Jordan elimination of an m x n row-major matrix in place.
    // Returns the pivot columns; the first pivots.size() rows hold the
    // reduced basis afterwards.
    std::vector<std::size_t> eliminate(PrimeField            f,
                                       std::vector<residue>& m,
                                       std::size_t           rows,
                                       std::size_t           cols) {
      std::vector<std::size_t> pivots;
      std::size_t              rank = 0;
      for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t r = rank;
        while (r < rows && m[r * cols + c] == 0) {
          ++r;
        }
        if (r == rows) {
          continue;
        }
        if (r != rank) {
          std::swap_ranges(m.begin() + r * cols,
                           m.begin() + (r + 1) * cols,
                           m.begin() + rank * cols);
        }
        residue* pr  = m.data() + rank * cols;
        residue  inv = f.inv(pr[c]);
        for (std::size_t k = c; k < cols; ++k) {
          pr[k] = f.mul(pr[k], inv);
        }
        for (std::size_t q = 0; q < rows; ++q) {
          residue* qr = m.data() + q * cols;
          if (q == rank || qr[c] == 0) {
            continue;
          }
          residue factor = qr[c];
          for (std::size_t k = c; k < cols; ++k) {
            qr[k] = f.sub(qr[k], f.mul(factor, pr[k]));
          }
        }
        pivots.push_back(c);
        ++rank;
      }
      return pivots;
    }

    std::uint64_t saturating_power(std::uint64_t p, std::size_t n) {
      unsigned __int128 x = 1;
      for (std::size_t i = 0; i < n; ++i) {
        x *= p;
        if (x > std::numeric_limits<std::uint64_t>::max()) {
          return std::numeric_limits<std::uint64_t>::max();
        }
      }
      return static_cast<std::uint64_t>(x);
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // PrimeField
  ////////////////////////////////////////////////////////////////////////

  bool is_prime(std::uint32_t n) noexcept {
    if (n < 2) {
      return false;
    }
    for (std::uint32_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        return false;
      }
    }
    return true;
  }

  PrimeField::PrimeField(std::uint32_t p) : _p(p) {
    if (p > max_prime || !is_prime(p)) {
      throw Error(ErrorKind::invalid_input,
                  std::to_string(p) + " is not a prime in [2, "
                      + std::to_string(max_prime) + "]");
    }
  }

  residue PrimeField::inv(residue a) const {
    if (a % _p == 0) {
      throw Error(ErrorKind::invalid_input, "inverse of zero");
    }
    // a^(p - 2) by Fermat
    residue result = 1;
    residue base   = a % _p;
    for (auto e = _p - 2; e != 0; e >>= 1) {
      if (e & 1) {
        result = mul(result, base);
      }
      base = mul(base, base);
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Vector
  ////////////////////////////////////////////////////////////////////////

  Vector::Vector(PrimeField field, std::vector<residue> coords)
      : _field(field), _coords(std::move(coords)) {
    for (auto& c : _coords) {
      c %= field.characteristic();
    }
  }

  Vector::Vector(PrimeField field, std::initializer_list<std::int64_t> coords)
      : _field(field) {
    for (auto c : coords) {
      _coords.push_back(field.reduce(c));
    }
  }

  Vector Vector::zero(PrimeField field, std::size_t n) {
    return Vector(field, std::vector<residue>(n, 0));
  }

  Vector Vector::unit(PrimeField field, std::size_t n, std::size_t i) {
    std::vector<residue> c(n, 0);
    c.at(i) = 1;
    return Vector(field, std::move(c));
  }

  Vector Vector::from_ints(PrimeField field, std::vector<std::int64_t> const& xs) {
    std::vector<residue> c;
    for (auto x : xs) {
      c.push_back(field.reduce(x));
    }
    return Vector(field, std::move(c));
  }

  bool Vector::is_zero() const noexcept {
    return std::all_of(
        _coords.begin(), _coords.end(), [](residue c) { return c == 0; });
  }

  Vector& Vector::operator+=(Vector const& that) {
    check_compatible(_field, size(), that._field, that.size());
    for (std::size_t i = 0; i < size(); ++i) {
      _coords[i] = _field.add(_coords[i], that._coords[i]);
    }
    return *this;
  }

  Vector& Vector::operator-=(Vector const& that) {
    check_compatible(_field, size(), that._field, that.size());
    for (std::size_t i = 0; i < size(); ++i) {
      _coords[i] = _field.sub(_coords[i], that._coords[i]);
    }
    return *this;
  }

  Vector Vector::scaled(residue c) const {
    Vector out = *this;
    for (auto& x : out._coords) {
      x = _field.mul(x, c % _field.characteristic());
    }
    return out;
  }

  Vector operator+(Vector a, Vector const& b) {
    return a += b;
  }

  Vector operator-(Vector a, Vector const& b) {
    return a -= b;
  }

  ////////////////////////////////////////////////////////////////////////
  // Subspace
  ////////////////////////////////////////////////////////////////////////

  Subspace::Subspace(PrimeField field, std::size_t ambient_dimension)
      : _field(field), _n(ambient_dimension) {}

  Subspace Subspace::full(PrimeField field, std::size_t ambient_dimension) {
    Subspace u(field, ambient_dimension);
    u._data.assign(ambient_dimension * ambient_dimension, 0);
    for (std::size_t i = 0; i < ambient_dimension; ++i) {
      u._pivots.push_back(i);
      u._data[i * ambient_dimension + i] = 1;
    }
    return u;
  }

  std::vector<Vector> Subspace::basis() const {
    std::vector<Vector> result;
    for (std::size_t i = 0; i < dimension(); ++i) {
      auto r = row(i);
      result.emplace_back(_field, std::vector<residue>(r.begin(), r.end()));
    }
    return result;
  }

  std::strong_ordering Subspace::operator<=>(Subspace const& that) const {
    if (auto c = dimension() <=> that.dimension(); c != 0) {
      return c;
    }
    return _data <=> that._data;
  }

  void Subspace::reduce(std::span<residue> w) const noexcept {
    for (std::size_t i = 0; i < _pivots.size(); ++i) {
      residue c = w[_pivots[i]];
      if (c == 0) {
        continue;
      }
      residue const* r = _data.data() + i * _n;
      for (std::size_t k = _pivots[i]; k < _n; ++k) {
        if (r[k] != 0) {
          w[k] = _field.sub(w[k], _field.mul(c, r[k]));
        }
      }
    }
  }

  Subspace rref(PrimeField              field,
                std::size_t             ambient_dimension,
                std::span<Vector const> rows) {
    std::vector<residue> m;
    m.reserve(rows.size() * ambient_dimension);
    for (auto const& v : rows) {
      check_compatible(field, ambient_dimension, v.field(), v.size());
      m.insert(m.end(), v.coords().begin(), v.coords().end());
    }
    Subspace u(field, ambient_dimension);
    u._pivots = eliminate(field, m, rows.size(), ambient_dimension);
    m.resize(u._pivots.size() * ambient_dimension);
    u._data = std::move(m);
    return u;
  }

  bool member(Vector const& v, Subspace const& u) {
    check_compatible(
        v.field(), v.size(), u.field(), u.ambient_dimension());
    std::vector<residue> w = v.coords();
    u.reduce(w);
    return std::all_of(w.begin(), w.end(), [](residue c) { return c == 0; });
  }

  bool contains(Subspace const& outer, Subspace const& inner) {
    check_compatible(outer.field(),
                     outer.ambient_dimension(),
                     inner.field(),
                     inner.ambient_dimension());
    if (inner.dimension() > outer.dimension()) {
      return false;
    }
    for (auto const& v : inner.basis()) {
      if (!member(v, outer)) {
        return false;
      }
    }
    return true;
  }

  Subspace sum(Subspace const& u, Subspace const& w) {
    check_compatible(
        u.field(), u.ambient_dimension(), w.field(), w.ambient_dimension());
    auto rows = u.basis();
    for (auto& v : w.basis()) {
      rows.push_back(std::move(v));
    }
    return rref(u.field(), u.ambient_dimension(), rows);
  }

  Subspace intersect(Subspace const& u, Subspace const& w) {
    check_compatible(
        u.field(), u.ambient_dimension(), w.field(), w.ambient_dimension());
    PrimeField const  f = u.field();
    std::size_t const n = u.ambient_dimension();
    std::vector<Vector> stacked;
    for (std::size_t i = 0; i < u.dimension(); ++i) {
      std::vector<residue> c(u.row(i).begin(), u.row(i).end());
      c.insert(c.end(), u.row(i).begin(), u.row(i).end());
      stacked.emplace_back(f, std::move(c));
    }
    for (std::size_t i = 0; i < w.dimension(); ++i) {
      std::vector<residue> c(w.row(i).begin(), w.row(i).end());
      c.resize(2 * n, 0);
      stacked.emplace_back(f, std::move(c));
    }
    auto const          reduced = rref(f, 2 * n, stacked);
    std::vector<Vector> right;
    for (std::size_t i = 0; i < reduced.dimension(); ++i) {
      if (reduced.pivots()[i] < n) {
        continue;
      }
      auto r = reduced.row(i);
      right.emplace_back(f, std::vector<residue>(r.begin() + n, r.end()));
    }
    return rref(f, n, right);
  }

  Subspace nullspace(PrimeField              field,
                     std::size_t             columns,
                     std::span<Vector const> matrix_rows) {
    auto const reduced = rref(field, columns, matrix_rows);
    auto const& pivots = reduced.pivots();
    std::vector<Vector> kernel;
    for (std::size_t free = 0; free < columns; ++free) {
      if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) {
        continue;
      }
      std::vector<residue> x(columns, 0);
      x[free] = 1;
      for (std::size_t i = 0; i < pivots.size(); ++i) {
        x[pivots[i]] = field.neg(reduced.row(i)[free]);
      }
      kernel.emplace_back(field, std::move(x));
    }
    return rref(field, columns, kernel);
  }

  ////////////////////////////////////////////////////////////////////////
  // Counting and enumeration
  ////////////////////////////////////////////////////////////////////////

  std::uint64_t gaussian_binomial(std::size_t n, std::size_t k, std::uint64_t p) {
    constexpr auto saturated = std::numeric_limits<std::uint64_t>::max();
    if (k > n) {
      return 0;
    }
    // Each partial product is itself a Gaussian binomial, so the division
    // is exact at every step.
    unsigned __int128 result = 1;
    for (std::size_t i = 0; i < k; ++i) {
      auto num = saturating_power(p, n - i);
      auto den = saturating_power(p, i + 1);
      if (num == saturated || den == saturated) {
        return saturated;
      }
      result = result * (num - 1) / (den - 1);
      if (result > saturated) {
        return saturated;
      }
    }
    return static_cast<std::uint64_t>(result);
  }

  std::uint64_t subspace_count(std::size_t n, std::uint64_t p) {
    constexpr auto saturated = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t  total     = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      auto g = gaussian_binomial(n, k, p);
      if (g == saturated || total > saturated - g) {
        return saturated;
      }
      total += g;
    }
    return total;
  }

  bool SubspaceGuard::allows(std::size_t n, PrimeField field) const noexcept {
    auto const p = field.characteristic();
    return saturating_power(p, n) <= max_vectors
           || subspace_count(n, p) <= max_subspaces;
  }

  SubspaceGuard SubspaceGuard::from_environment() {
    SubspaceGuard guard;
    if (char const* env = std::getenv("CONGKIT_GUARD_SUBSPACES")) {
      char*      end   = nullptr;
      auto const value = std::strtoull(env, &end, 10);
      if (end == env || *end != '\0') {
        throw Error(ErrorKind::invalid_input,
                    "CONGKIT_GUARD_SUBSPACES must be a non-negative integer");
      }
      guard.max_vectors   = 0;
      guard.max_subspaces = value;
    }
    return guard;
  }

  SubspaceStream::SubspaceStream(PrimeField field, std::size_t n,
                                 SubspaceGuard guard)
      : _n(n), _current(field, n) {
    if (!guard.allows(n, field)) {
      throw GuardExceeded("subspace enumeration of F_"
                              + std::to_string(field.characteristic()) + "^"
                              + std::to_string(n),
                          subspace_count(n, field.characteristic()),
                          guard.max_subspaces);
    }
  }

  void SubspaceStream::load_pivot_set() {
    auto& pivots = _current._pivots;
    auto& data   = _current._data;
    data.assign(_rank * _n, 0);
    _free.clear();
    for (std::size_t i = 0; i < _rank; ++i) {
      data[i * _n + pivots[i]] = 1;
      std::size_t next_pivot   = i + 1;
      for (std::size_t c = pivots[i] + 1; c < _n; ++c) {
        if (next_pivot < _rank && pivots[next_pivot] == c) {
          ++next_pivot;
          continue;
        }
        _free.push_back(i * _n + c);
      }
    }
  }

  bool SubspaceStream::next_pivot_set() {
    auto&       pivots = _current._pivots;
    std::size_t i      = _rank;
    while (i > 0 && pivots[i - 1] == _n - _rank + i - 1) {
      --i;
    }
    if (i == 0) {
      return false;
    }
    ++pivots[i - 1];
    for (std::size_t k = i; k < _rank; ++k) {
      pivots[k] = pivots[k - 1] + 1;
    }
    return true;
  }

  bool SubspaceStream::next() {
    if (!_started) {
      _started = true;
      _rank    = 0;
      _current._pivots.clear();
      load_pivot_set();
      return true;
    }
    auto const p    = _current._field.characteristic();
    auto&      data = _current._data;
    for (auto it = _free.rbegin(); it != _free.rend(); ++it) {
      if (++data[*it] < p) {
        return true;
      }
      data[*it] = 0;
    }
    if (next_pivot_set()) {
      load_pivot_set();
      return true;
    }
    if (_rank == _n) {
      return false;
    }
    ++_rank;
    _current._pivots.resize(_rank);
    for (std::size_t i = 0; i < _rank; ++i) {
      _current._pivots[i] = i;
    }
    load_pivot_set();
    return true;
  }

  std::vector<Subspace> enumerate_subspaces(PrimeField    field,
                                            std::size_t   n,
                                            SubspaceGuard guard) {
    std::vector<Subspace> result;
    SubspaceStream        stream(field, n, guard);
    while (stream.next()) {
      result.push_back(stream.current());
    }
    return result;
  }

}  // namespace congkit
