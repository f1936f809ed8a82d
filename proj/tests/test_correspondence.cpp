#include "doctest.h"
#include "oracles.hpp"

#include "congkit/correspondence.hpp"
#include "congkit/errors.hpp"

using namespace congkit;

namespace {
  std::vector<FamilySpec> builtins() {
    return {family::SemilatticeChain{1},  family::SemilatticeChain{2},
            family::SemilatticeChain{3},  family::SemilatticeChain{4},
            family::TwoElementSemilattice{}, family::LeftZero{2},
            family::RightZero{2},         family::LeftZero{3},
            family::RectangularBand{2, 2}, family::RectangularBand{2, 3},
            family::CyclicGroup{2},       family::CyclicGroup{3},
            family::CyclicGroup{4}};
  }

  // s ρ t iff s - t lies in the span of the ideal's basis, by enumeration.
  std::vector<std::size_t> oracle_rho(SemigroupAlgebra const& a, Ideal const& j) {
    std::uint32_t const      p = a.field().characteristic();
    std::size_t const        n = a.dimension();
    std::vector<oracle::Vec> gens;
    for (auto const& v : j.space().basis())
      gens.push_back(v.coords());
    auto const               members = oracle::span(gens, n, p);
    std::vector<std::size_t> labels(n);
    for (std::size_t x = 0; x < n; ++x) {
      labels[x] = x;
      for (std::size_t y = 0; y < x; ++y) {
        oracle::Vec d(n, 0);
        d[x] = 1;
        d[y] = p - 1;
        if (members.count(d)) {
          labels[x] = labels[y];
          break;
        }
      }
    }
    return oracle::canonical(labels);
  }

  std::set<std::size_t> as_set(std::vector<std::size_t> const& v) {
    return {v.begin(), v.end()};
  }
}  // namespace

TEST_CASE("rho") {
  SemigroupAlgebra a(build(family::CyclicGroup{4}), PrimeField(3));
  auto             i = ideal_closure(a, {a.element({1, 0, 1, 0}), a.element({0, 1, 0, 1})});
  auto             j = ideal_closure(
      a, {a.element({1, 1, 0, 0}), a.element({0, 1, 1, 0}), a.element({0, 0, 1, 1})});
  CHECK(i.dimension() == 2);
  CHECK(j.dimension() == 3);
  CHECK(rho(a, i).is_identity());
  CHECK(to_string(rho(a, j), a.semigroup().names()) == "{{1,a²},{a,a³}}");
  CHECK(rho(a, ideal_sum(i, j)).is_universal());
  CHECK(rho(a, zero_ideal(a)).is_identity());
  CHECK(rho(a, full_ideal(a)).is_universal());

  SUBCASE("matches the oracle on every ideal") {
    for (std::uint32_t p : {2u, 3u}) {
      for (auto spec : builtins()) {
        SemigroupAlgebra b(build(spec), PrimeField(p));
        if (b.dimension() > 4)
          continue;
        for (auto const& ideal : enumerate_ideals(b))
          REQUIRE(rho(b, ideal).labels() == oracle_rho(b, ideal));
      }
    }
  }
}

TEST_CASE("f_of_alpha") {
  SUBCASE("ω of right zero gives J_{e-f}") {
    SemigroupAlgebra a(build(family::RightZero{2}), PrimeField(3));
    auto             f = f_of_alpha(a, Partition::universal(2));
    CHECK(f == ideal_closure(a, {a.element({1, -1})}));
    CHECK(f.dimension() == 1);
  }
  SUBCASE("ω of the 2x2 band has dimension 3") {
    SemigroupAlgebra a(build(family::RectangularBand{2, 2}), PrimeField(5));
    CHECK(f_of_alpha(a, Partition::universal(4)).dimension() == 3);
  }
  SUBCASE("ι gives {0}") {
    SemigroupAlgebra a(build(family::CyclicGroup{4}), PrimeField(2));
    CHECK(f_of_alpha(a, Partition::identity(4)) == zero_ideal(a));
  }
  SUBCASE("rejects non-congruences") {
    SemigroupAlgebra a(build(family::SemilatticeChain{3}), PrimeField(2));
    Partition        bad(std::vector<std::size_t>{0, 1, 0});
    CHECK_FALSE(is_congruence(a.semigroup(), bad));
    try {
      f_of_alpha(a, bad);
      FAIL("expected NotACongruence");
    } catch (Error const& e) {
      CHECK(e.kind() == ErrorKind::not_a_congruence);
    }
    CHECK_THROWS_AS(quotient_map_kernel(a, bad), Error);
    CHECK_THROWS_AS(f_of_alpha(a, Partition::identity(2)), Error);
  }
  SUBCASE("two routes agree and rho inverts f on every congruence") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
      for (auto spec : builtins()) {
        SemigroupAlgebra a(build(spec), PrimeField(p));
        CAPTURE(a.semigroup().label());
        CAPTURE(p);
        for (auto const& alpha : enumerate_congruences(a.semigroup())) {
          auto f = f_of_alpha(a, alpha);
          REQUIRE(f == quotient_map_kernel(a, alpha));
          REQUIRE(f.dimension() == alpha.size() - alpha.number_of_classes());
          REQUIRE(rho(a, f) == alpha);
        }
      }
    }
  }
}

TEST_CASE("build_phi_context") {
  SUBCASE("right zero: kernel classes {{0}} and {J_{e-f}, F[S]}") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
      auto ctx = build_phi_context(
          SemigroupAlgebra(build(family::RightZero{2}), PrimeField(p)));
      REQUIRE(ctx.ideals.size() == 3);
      REQUIRE(ctx.congruences.size() == 2);
      CHECK(ctx.phi == std::vector<std::size_t>{0, 1, 1});
      CHECK(kernel_classes(ctx)
            == std::vector<std::vector<std::size_t>>{{0}, {1, 2}});
    }
  }
  SUBCASE("2x2 band kernel classes") {
    auto ctx = build_phi_context(
        SemigroupAlgebra(build(family::RectangularBand{2, 2}), PrimeField(3)));
    auto const& a    = ctx.algebra;
    auto        zero = ctx.ideal_index(zero_ideal(a));
    auto        c    = ctx.ideal_index(ideal_closure(a, {a.element({1, -1, -1, 1})}));
    auto        jl   = ctx.ideal_index(ideal_closure(a, {a.element({1, -1, 0, 0})}));
    auto        jr   = ctx.ideal_index(ideal_closure(a, {a.element({1, 0, -1, 0})}));
    auto        om   = ctx.ideal_index(f_of_alpha(a, Partition::universal(4)));
    auto        full = ctx.ideal_index(full_ideal(a));
    std::set<std::set<std::size_t>> got;
    for (auto const& k : kernel_classes(ctx))
      got.insert(as_set(k));
    CHECK(got
          == std::set<std::set<std::size_t>>{{zero, c}, {jl}, {jr}, {om, full}});
  }
  SUBCASE("lookups of absent items throw") {
    auto ctx = build_phi_context(
        SemigroupAlgebra(build(family::TwoElementSemilattice{}), PrimeField(2)));
    CHECK_THROWS_AS(ctx.congruence_index(Partition::identity(3)), Error);
    CHECK(ctx.label() == "semilattice2 over F_2");
  }
  SUBCASE("guards propagate") {
    Guards g;
    g.max_partition_size = 3;
    CHECK_THROWS_AS(
        build_phi_context(
            SemigroupAlgebra(build(family::CyclicGroup{4}), PrimeField(2)), g),
        GuardExceeded);
  }
}

TEST_CASE("check_join_compatible_kernel and check_circ_homomorphism") {
  SUBCASE("C4 over F3 fails, and the listed witnesses include the known pair") {
    auto ctx = build_phi_context(
        SemigroupAlgebra(build(family::CyclicGroup{4}), PrimeField(3)));
    auto const& a = ctx.algebra;
    auto        i = ctx.ideal_index(
        ideal_closure(a, {a.element({1, 0, 1, 0}), a.element({0, 1, 0, 1})}));
    auto j = ctx.ideal_index(ideal_closure(
        a, {a.element({1, 1, 0, 0}), a.element({0, 1, 1, 0}), a.element({0, 0, 1, 1})}));
    auto join = check_join_compatible_kernel(ctx);
    CHECK_FALSE(join.verdict);
    bool found = false;
    for (auto const& w : join.witnesses) {
      std::set<std::size_t> pair{w["I"]["index"], w["J"]["index"]};
      if (pair == std::set<std::size_t>{i, j}) {
        found = true;
        CHECK(w["join"] == "{{1,a²},{a,a³}}");
        CHECK(w["rho_sum"] == "{{1,a,a²,a³}}");
      }
    }
    CHECK(found);
    CHECK(join.witnesses.size() == 4);

    auto circ = check_circ_homomorphism(ctx);
    CHECK_FALSE(circ.verdict);
    CHECK(circ.details["permutable"] == true);
    CHECK(circ.details["join_compatible_kernel"] == false);
    CHECK(check_meet_homomorphism(ctx).verdict);
  }
  SUBCASE("C4 over F2 passes") {
    auto ctx = build_phi_context(
        SemigroupAlgebra(build(family::CyclicGroup{4}), PrimeField(2)));
    CHECK(check_join_compatible_kernel(ctx).verdict);
    CHECK(check_circ_homomorphism(ctx).verdict);
    CHECK(check_join_compatible_kernel(ctx).witnesses.empty());
  }
  SUBCASE("two-element semilattice over F5 passes") {
    auto ctx = build_phi_context(
        SemigroupAlgebra(build(family::TwoElementSemilattice{}), PrimeField(5)));
    CHECK(check_circ_homomorphism(ctx).verdict);
  }
  SUBCASE("three-element chain over F2 fails and is not permutable") {
    auto ctx = build_phi_context(
        SemigroupAlgebra(build(family::SemilatticeChain{3}), PrimeField(2)));
    auto circ = check_circ_homomorphism(ctx);
    CHECK_FALSE(circ.verdict);
    CHECK(circ.details["permutable"] == false);
    REQUIRE_FALSE(circ.witnesses.empty());
    auto const& w = circ.witnesses.front();
    CHECK(w.contains("pair"));
    CHECK(w.contains("in"));
  }
}

TEST_CASE("properties over built-ins") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (auto spec : builtins()) {
      SemigroupAlgebra a(build(spec), PrimeField(p));
      if (!SubspaceGuard{}.allows(a.dimension(), a.field()))
        continue;
      CAPTURE(a.semigroup().label());
      CAPTURE(p);
      auto ctx = build_phi_context(a);
      CHECK(check_meet_homomorphism(ctx).verdict);

      // Monotone: I ⊆ J implies rho(I) refines rho(J).
      for (std::size_t i = 0; i < ctx.ideals.size(); ++i)
        for (std::size_t j = 0; j < ctx.ideals.size(); ++j)
          if (contains(ctx.ideals[j].space(), ctx.ideals[i].space()))
            REQUIRE(refines(ctx.congruences[ctx.phi[i]],
                            ctx.congruences[ctx.phi[j]]));

      // For permutable S the ∘-check agrees with ∨-compatibility; otherwise
      // it fails.
      auto circ       = check_circ_homomorphism(ctx);
      bool permutable = is_permutable(a.semigroup()).verdict;
      CHECK(circ.details["permutable"] == permutable);
      if (permutable)
        CHECK(circ.verdict == check_join_compatible_kernel(ctx).verdict);
      else
        CHECK_FALSE(circ.verdict);
      CHECK(circ.verdict == circ.witnesses.empty());
    }
  }
}

TEST_CASE("CheckReport json round trip") {
  auto ctx = build_phi_context(
      SemigroupAlgebra(build(family::CyclicGroup{4}), PrimeField(3)));
  for (auto const& r : {check_meet_homomorphism(ctx),
                        check_join_compatible_kernel(ctx),
                        check_circ_homomorphism(ctx),
                        is_permutable(ctx.algebra.semigroup())}) {
    nlohmann::json j = r;
    CHECK(j.at("prime") == (r.prime ? nlohmann::json(*r.prime) : nlohmann::json()));
    CHECK(nlohmann::json::parse(j.dump()).get<CheckReport>() == r);
  }
}
