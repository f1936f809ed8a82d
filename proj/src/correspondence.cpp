#include "congkit/correspondence.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <string>

#include "congkit/errors.hpp"

namespace congkit {

  namespace {
    using clock = std::chrono::steady_clock;

    double elapsed_ms(clock::time_point start) {
      return std::chrono::duration<double, std::milli>(clock::now() - start)
          .count();
    }

    CheckReport start_report(PhiContext const& ctx, std::string name) {
      CheckReport report;
      report.check     = std::move(name);
      report.semigroup = ctx.algebra.semigroup().label();
      report.prime     = ctx.algebra.field().characteristic();
      return report;
    }

    std::string partition_name(PhiContext const& ctx, std::size_t index) {
      return to_string(ctx.congruences[index], ctx.algebra.semigroup().names());
    }
  }  // namespace

  Partition rho(SemigroupAlgebra const& algebra, Ideal const& ideal) {
    auto const&              s = algebra.semigroup();
    std::size_t const        n = s.size();
    std::vector<std::size_t> labels(n);
    for (std::size_t x = 0; x < n; ++x) {
      labels[x] = x;
      for (std::size_t y = 0; y < x; ++y) {
        if (member(algebra.element(x) - algebra.element(y), ideal.space())) {
          labels[x] = y;
          break;
        }
      }
    }
    Partition result(labels);
    if (!is_congruence(s, result)) {
      throw Error(ErrorKind::internal_invariant,
                  "rho produced " + to_string(result, s.names())
                      + " which is not a congruence");
    }
    return result;
  }

  Ideal f_of_alpha(SemigroupAlgebra const& algebra, Partition const& alpha) {
    auto const& s = algebra.semigroup();
    if (alpha.size() != s.size()) {
      throw Error(ErrorKind::carrier_mismatch,
                  "partition size does not match the semigroup");
    }
    if (!is_congruence(s, alpha)) {
      throw Error(ErrorKind::not_a_congruence,
                  to_string(alpha, s.names()) + " is not a congruence");
    }
    std::vector<AlgebraElement> differences;
    for (auto const& cls : alpha.classes()) {
      for (std::size_t k = 1; k < cls.size(); ++k) {
        differences.push_back(algebra.element(cls[k])
                              - algebra.element(cls[0]));
      }
    }
    return Ideal::from_subspace(
        algebra, rref(algebra.field(), algebra.dimension(), differences));
  }

  Ideal quotient_map_kernel(SemigroupAlgebra const& algebra,
                            Partition const&        alpha) {
    auto const& s = algebra.semigroup();
    auto const  q = quotient(s, alpha);
    // quotient() numbers its elements by class label.
    std::vector<std::size_t> image(s.size());
    for (std::size_t x = 0; x < s.size(); ++x) {
      image[x] = alpha.class_of(x);
    }
    for (std::size_t x = 0; x < s.size(); ++x) {
      for (std::size_t y = 0; y < s.size(); ++y) {
        if (image[s.product(x, y)] != q.product(image[x], image[y])) {
          throw Error(ErrorKind::internal_invariant,
                      "canonical map to the quotient is not a homomorphism");
        }
      }
    }
    std::vector<Vector> matrix;
    for (std::size_t c = 0; c < q.size(); ++c) {
      std::vector<residue> row(s.size(), 0);
      for (std::size_t x = 0; x < s.size(); ++x) {
        row[x] = image[x] == c ? 1 : 0;
      }
      matrix.emplace_back(algebra.field(), std::move(row));
    }
    return Ideal::from_subspace(
        algebra, nullspace(algebra.field(), s.size(), matrix));
  }

  std::size_t PhiContext::ideal_index(Ideal const& ideal) const {
    auto it = std::lower_bound(ideals.begin(), ideals.end(), ideal);
    if (it == ideals.end() || !(*it == ideal)) {
      throw Error(ErrorKind::internal_invariant, "ideal missing from the list");
    }
    return it - ideals.begin();
  }

  std::size_t PhiContext::congruence_index(Partition const& alpha) const {
    auto it = std::lower_bound(congruences.begin(), congruences.end(), alpha);
    if (it == congruences.end() || !(*it == alpha)) {
      throw Error(ErrorKind::internal_invariant,
                  "congruence missing from the list");
    }
    return it - congruences.begin();
  }

  std::string PhiContext::label() const {
    return algebra.semigroup().label() + " over F_"
           + std::to_string(algebra.field().characteristic());
  }

  PhiContext build_phi_context(SemigroupAlgebra algebra, Guards const& guards) {
    auto congruences
        = enumerate_congruences(algebra.semigroup(), guards.max_partition_size);
    auto       ideals = enumerate_ideals(algebra, guards.subspaces);
    PhiContext ctx{
        std::move(algebra), std::move(ideals), std::move(congruences), {}};
    std::vector<bool> hit(ctx.congruences.size(), false);
    for (auto const& ideal : ctx.ideals) {
      auto const c = ctx.congruence_index(rho(ctx.algebra, ideal));
      ctx.phi.push_back(c);
      hit[c] = true;
    }
    if (std::find(hit.begin(), hit.end(), false) != hit.end()) {
      throw Error(ErrorKind::internal_invariant,
                  "phi is not onto the congruences of "
                      + ctx.algebra.semigroup().label());
    }
    if (!ctx.congruences[ctx.phi.front()].is_identity()
        || !ctx.congruences[ctx.phi.back()].is_universal()) {
      throw Error(ErrorKind::internal_invariant,
                  "phi does not send {0} to the identity and F[S] to the "
                  "universal congruence");
    }
    return ctx;
  }

  std::vector<std::vector<std::size_t>> kernel_classes(PhiContext const& ctx) {
    std::map<std::size_t, std::size_t>    slot;
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < ctx.ideals.size(); ++i) {
      auto [it, inserted] = slot.try_emplace(ctx.phi[i], classes.size());
      if (inserted) {
        classes.emplace_back();
      }
      classes[it->second].push_back(i);
    }
    return classes;
  }

  nlohmann::json ideal_to_json(PhiContext const& ctx, std::size_t index) {
    auto const&    space = ctx.ideals.at(index).space();
    nlohmann::json basis = nlohmann::json::array();
    nlohmann::json terms = nlohmann::json::array();
    for (auto const& v : space.basis()) {
      basis.push_back(v.coords());
      terms.push_back(ctx.algebra.format(v));
    }
    return {{"index", index},
            {"dim", space.dimension()},
            {"basis", basis},
            {"span", terms}};
  }

  CheckReport check_meet_homomorphism(PhiContext const& ctx) {
    auto const start  = clock::now();
    auto       report = start_report(ctx, "meet_homomorphism");
    for (std::size_t i = 0; i < ctx.ideals.size(); ++i) {
      for (std::size_t j = i; j < ctx.ideals.size(); ++j) {
        auto const both = ctx.ideal_index(
            ideal_intersection(ctx.ideals[i], ctx.ideals[j]));
        auto const expected
            = meet(ctx.congruences[ctx.phi[i]], ctx.congruences[ctx.phi[j]]);
        if (ctx.congruences[ctx.phi[both]] != expected) {
          report.verdict = false;
          report.witnesses.push_back(
              {{"I", ideal_to_json(ctx, i)},
               {"J", ideal_to_json(ctx, j)},
               {"rho_intersection", partition_name(ctx, ctx.phi[both])},
               {"meet",
                to_string(expected, ctx.algebra.semigroup().names())}});
        }
      }
    }
    report.summary = ctx.label() + ": "
                     + (report.verdict ? "rho(I ∩ J) = rho(I) ∧ rho(J)"
                                       : "meet not preserved");
    report.timing_ms = elapsed_ms(start);
    return report;
  }

  CheckReport check_join_compatible_kernel(PhiContext const& ctx) {
    auto const start  = clock::now();
    auto       report = start_report(ctx, "join_compatible_kernel");
    auto const& names = ctx.algebra.semigroup().names();
    for (std::size_t i = 0; i < ctx.ideals.size(); ++i) {
      for (std::size_t j = i; j < ctx.ideals.size(); ++j) {
        auto const total
            = ctx.ideal_index(ideal_sum(ctx.ideals[i], ctx.ideals[j]));
        auto const joined
            = join(ctx.congruences[ctx.phi[i]], ctx.congruences[ctx.phi[j]]);
        if (ctx.congruences[ctx.phi[total]] != joined) {
          report.verdict = false;
          report.witnesses.push_back(
              {{"I", ideal_to_json(ctx, i)},
               {"J", ideal_to_json(ctx, j)},
               {"rho_I", partition_name(ctx, ctx.phi[i])},
               {"rho_J", partition_name(ctx, ctx.phi[j])},
               {"rho_sum", partition_name(ctx, ctx.phi[total])},
               {"join", to_string(joined, names)}});
        }
      }
    }
    report.summary
        = ctx.label() + ": ker phi "
          + (report.verdict ? "is ∨-compatible"
                            : "is not ∨-compatible ("
                                  + std::to_string(report.witnesses.size())
                                  + " failing pairs)");
    report.timing_ms = elapsed_ms(start);
    return report;
  }

  CheckReport check_circ_homomorphism(PhiContext const& ctx) {
    auto const  start  = clock::now();
    auto        report = start_report(ctx, "circ_homomorphism");
    auto const& s      = ctx.algebra.semigroup();
    std::vector<BinaryRelation> relations;
    for (auto const& c : ctx.congruences) {
      relations.push_back(as_relation(c));
    }
    for (std::size_t i = 0; i < ctx.ideals.size(); ++i) {
      for (std::size_t j = 0; j < ctx.ideals.size(); ++j) {
        auto const total
            = ctx.ideal_index(ideal_sum(ctx.ideals[i], ctx.ideals[j]));
        auto const composite
            = compose(relations[ctx.phi[i]], relations[ctx.phi[j]]);
        auto const& expected = relations[ctx.phi[total]];
        if (composite == expected) {
          continue;
        }
        report.verdict = false;
        nlohmann::json witness{{"I", ideal_to_json(ctx, i)},
                               {"J", ideal_to_json(ctx, j)},
                               {"rho_I", partition_name(ctx, ctx.phi[i])},
                               {"rho_J", partition_name(ctx, ctx.phi[j])},
                               {"rho_sum", partition_name(ctx, ctx.phi[total])}};
        for (std::size_t x = 0; x < s.size(); ++x) {
          for (std::size_t y = 0; y < s.size(); ++y) {
            if (composite.contains(x, y) != expected.contains(x, y)) {
              witness["pair"] = {s.name(x), s.name(y)};
              witness["in"]   = composite.contains(x, y) ? "rho_I∘rho_J"
                                                         : "rho_sum";
              x = y = s.size();
            }
          }
        }
        report.witnesses.push_back(std::move(witness));
      }
    }
    auto const permutable = is_permutable(s, s.size()).verdict;
    auto const join_ok    = check_join_compatible_kernel(ctx).verdict;
    report.details["permutable"]             = permutable;
    report.details["join_compatible_kernel"] = join_ok;
    report.summary = ctx.label() + ": phi "
                     + (report.verdict ? "is" : "is not")
                     + " a ∘-homomorphism; S "
                     + (permutable ? "is" : "is not") + " permutable; ker phi "
                     + (join_ok ? "is" : "is not") + " ∨-compatible";
    report.timing_ms = elapsed_ms(start);
    return report;
  }

}  // namespace congkit
