#include "congkit/relations.hpp"

#include <bit>
#include <chrono>
#include <numeric>
#include <string>

#include "congkit/errors.hpp"

namespace congkit {

  namespace {
    void check_carriers(std::size_t a, std::size_t b) {
      if (a != b) {
        throw Error(ErrorKind::carrier_mismatch,
                    "carriers of size " + std::to_string(a) + " and "
                        + std::to_string(b));
      }
    }

    std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x         = parent[x];
      }
      return x;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // BinaryRelation
  ////////////////////////////////////////////////////////////////////////

  BinaryRelation::BinaryRelation(std::size_t n)
      : _n(n), _stride((n + 63) / 64), _bits(n * _stride, 0) {}

  BinaryRelation BinaryRelation::identity(std::size_t n) {
    BinaryRelation r(n);
    for (std::size_t x = 0; x < n; ++x) {
      r.insert(x, x);
    }
    return r;
  }

  BinaryRelation BinaryRelation::universal(std::size_t n) {
    BinaryRelation r(n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        r.insert(x, y);
      }
    }
    return r;
  }

  std::size_t BinaryRelation::count() const noexcept {
    std::size_t total = 0;
    for (auto w : _bits) {
      total += std::popcount(w);
    }
    return total;
  }

  BinaryRelation compose(BinaryRelation const& a, BinaryRelation const& b) {
    check_carriers(a._n, b._n);
    BinaryRelation result(a._n);
    auto const     stride = a._stride;
    for (std::size_t x = 0; x < a._n; ++x) {
      auto* out = result._bits.data() + x * stride;
      for (std::size_t zw = 0; zw < stride; ++zw) {
        std::uint64_t word = a._bits[x * stride + zw];
        while (word != 0) {
          std::size_t z   = zw * 64 + std::countr_zero(word);
          word           &= word - 1;
          auto const* row = b._bits.data() + z * stride;
          for (std::size_t k = 0; k < stride; ++k) {
            out[k] |= row[k];
          }
        }
      }
    }
    return result;
  }

  BinaryRelation as_relation(Partition const& p) {
    BinaryRelation r(p.size());
    for (auto const& cls : p.classes()) {
      for (auto x : cls) {
        for (auto y : cls) {
          r.insert(x, y);
        }
      }
    }
    return r;
  }

  Partition classify(BinaryRelation const& r) {
    std::size_t const n = r.size();
    for (std::size_t x = 0; x < n; ++x) {
      if (!r.contains(x, x)) {
        throw NotAnEquivalence("reflexive", x, x);
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (r.contains(x, y) && !r.contains(y, x)) {
          throw NotAnEquivalence("symmetric", x, y);
        }
      }
    }
    auto const rr = compose(r, r);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (rr.contains(x, y) && !r.contains(x, y)) {
          throw NotAnEquivalence("transitive", x, y);
        }
      }
    }
    std::vector<std::size_t> labels(n);
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t y = 0;
      while (!r.contains(x, y)) {
        ++y;
      }
      labels[x] = y;
    }
    return Partition(labels);
  }

  ////////////////////////////////////////////////////////////////////////
  // Congruences
  ////////////////////////////////////////////////////////////////////////

  char const* to_string(Side side) noexcept {
    return side == Side::right ? "right" : "left";
  }

  std::optional<CongruenceWitness> congruence_violation(CayleyTable const& s,
                                                        Partition const&   p) {
    check_carriers(s.size(), p.size());
    std::size_t const n = s.size();
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (x == y || !p.same_class(x, y)) {
          continue;
        }
        for (std::size_t z = 0; z < n; ++z) {
          if (!p.same_class(s.product(x, z), s.product(y, z))) {
            return CongruenceWitness{x, y, z, Side::right};
          }
          if (!p.same_class(s.product(z, x), s.product(z, y))) {
            return CongruenceWitness{x, y, z, Side::left};
          }
        }
      }
    }
    return std::nullopt;
  }

  std::vector<Partition> enumerate_congruences(CayleyTable const& s,
                                               std::size_t        max_size) {
    std::size_t const n = s.size();
    if (n > max_size) {
      throw GuardExceeded("partition enumeration carrier size", n, max_size);
    }
    std::vector<Partition> result;
    // Restricted growth strings: rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i)).
    std::vector<std::size_t> rgs(n, 0);
    std::vector<std::size_t> prefix_max(n, 0);
    std::size_t              i = n == 0 ? 0 : n - 1;
    while (true) {
      Partition candidate(rgs);
      if (is_congruence(s, candidate)) {
        result.push_back(std::move(candidate));
      }
      // Advance to the next restricted growth string.
      while (i > 0 && rgs[i] == prefix_max[i - 1] + 1) {
        --i;
      }
      if (i == 0) {
        break;
      }
      ++rgs[i];
      prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
      for (std::size_t k = i + 1; k < n; ++k) {
        rgs[k]        = 0;
        prefix_max[k] = prefix_max[k - 1];
      }
      i = n - 1;
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  Partition join(Partition const& a, Partition const& b) {
    check_carriers(a.size(), b.size());
    std::vector<std::size_t> parent(a.size());
    std::iota(parent.begin(), parent.end(), 0);
    for (auto const* p : {&a, &b}) {
      for (auto const& cls : p->classes()) {
        for (std::size_t k = 1; k < cls.size(); ++k) {
          auto r0 = find_root(parent, cls[0]);
          auto rk = find_root(parent, cls[k]);
          if (r0 != rk) {
            parent[std::max(r0, rk)] = std::min(r0, rk);
          }
        }
      }
    }
    std::vector<std::size_t> labels(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) {
      labels[x] = find_root(parent, x);
    }
    return Partition(labels);
  }

  Partition meet(Partition const& a, Partition const& b) {
    check_carriers(a.size(), b.size());
    std::vector<std::size_t> labels(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) {
      labels[x] = a.class_of(x) * a.size() + b.class_of(x);
    }
    return Partition(labels);
  }

  CheckReport is_permutable(CayleyTable const& s, std::size_t max_size) {
    auto const  start = std::chrono::steady_clock::now();
    CheckReport report;
    report.check     = "permutable";
    report.semigroup = s.label();

    auto const congruences = enumerate_congruences(s, max_size);
    std::vector<BinaryRelation> relations;
    relations.reserve(congruences.size());
    for (auto const& c : congruences) {
      relations.push_back(as_relation(c));
    }
    auto const& names = s.names();
    for (std::size_t i = 0; i < relations.size(); ++i) {
      for (std::size_t j = i + 1; j < relations.size(); ++j) {
        auto const ab = compose(relations[i], relations[j]);
        auto const ba = compose(relations[j], relations[i]);
        if (ab == ba) {
          continue;
        }
        report.verdict = false;
        for (std::size_t x = 0; x < s.size(); ++x) {
          for (std::size_t y = 0; y < s.size(); ++y) {
            if (ab.contains(x, y) != ba.contains(x, y)) {
              report.witnesses.push_back(
                  {{"alpha", to_string(congruences[i], names)},
                   {"beta", to_string(congruences[j], names)},
                   {"alpha_index", i},
                   {"beta_index", j},
                   {"pair", {names[x], names[y]}},
                   {"pair_indices", {x, y}},
                   {"in", ab.contains(x, y) ? "alpha∘beta" : "beta∘alpha"}});
              x = y = s.size();
            }
          }
        }
      }
    }
    report.summary = std::to_string(congruences.size()) + " congruences, "
                     + (report.verdict ? "all pairs commute"
                                       : std::to_string(report.witnesses.size())
                                             + " non-commuting pairs");
    report.details["congruences"] = congruences.size();
    report.timing_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start)
                           .count();
    return report;
  }

}  // namespace congkit
