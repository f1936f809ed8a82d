#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "congkit/errors.hpp"
#include "congkit/relations.hpp"

using namespace congkit;

namespace {
  BinaryRelation from_matrix(oracle::Matrix const& m) {
    BinaryRelation r(m.size());
    for (std::size_t x = 0; x < m.size(); ++x)
      for (std::size_t y = 0; y < m.size(); ++y)
        if (m[x][y])
          r.insert(x, y);
    return r;
  }

  oracle::Matrix to_matrix(BinaryRelation const& r) {
    oracle::Matrix m(r.size(), std::vector<bool>(r.size()));
    for (std::size_t x = 0; x < r.size(); ++x)
      for (std::size_t y = 0; y < r.size(); ++y)
        m[x][y] = r.contains(x, y);
    return m;
  }

  BinaryRelation random_relation(std::size_t n, std::mt19937& rng) {
    std::bernoulli_distribution coin(0.3);
    BinaryRelation              r(n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (coin(rng))
          r.insert(x, y);
    return r;
  }

  std::vector<FamilySpec> families() {
    return {family::TwoElementSemilattice{},
            family::SemilatticeChain{1},
            family::SemilatticeChain{3},
            family::SemilatticeChain{4},
            family::CyclicGroup{4},
            family::CyclicGroup{6},
            family::LeftZero{2},
            family::RightZero{2},
            family::LeftZero{3},
            family::RectangularBand{2, 2},
            family::RectangularBand{2, 3}};
  }

  std::vector<FamilySpec> permutable_families() {
    return {family::TwoElementSemilattice{},
            family::CyclicGroup{4},
            family::CyclicGroup{6},
            family::LeftZero{2},
            family::RightZero{2},
            family::RectangularBand{2, 2}};
  }
}  // namespace

TEST_CASE("compose") {
  SUBCASE("identity is neutral") {
    auto alpha = as_relation(Partition({0, 0, 1, 1}));
    CHECK(compose(alpha, BinaryRelation::identity(4)) == alpha);
    CHECK(compose(BinaryRelation::identity(4), alpha) == alpha);
  }
  SUBCASE("universal absorbs") {
    CHECK(compose(BinaryRelation::universal(5), BinaryRelation::universal(5))
          == BinaryRelation::universal(5));
  }
  SUBCASE("3-chain witness: (e, g) in β1∘β2 but not in β2∘β1") {
    auto b1 = as_relation(Partition({0, 0, 1}));  // {e,f}{g}
    auto b2 = as_relation(Partition({0, 1, 1}));  // {e}{f,g}
    auto m1 = oracle::relation_of({0, 0, 1});
    auto m2 = oracle::relation_of({0, 1, 1});
    CHECK(oracle::compose(m1, m2)[0][2]);
    CHECK_FALSE(oracle::compose(m2, m1)[0][2]);
    CHECK(compose(b1, b2).contains(0, 2));
    CHECK_FALSE(compose(b2, b1).contains(0, 2));
    CHECK(to_matrix(compose(b1, b2)) == oracle::compose(m1, m2));
    CHECK(to_matrix(compose(b2, b1)) == oracle::compose(m2, m1));
  }
  SUBCASE("matches the oracle on random relations, including > 64 points") {
    std::mt19937 rng(7);
    for (std::size_t n : {1, 5, 63, 64, 65, 130}) {
      auto a = random_relation(n, rng);
      auto b = random_relation(n, rng);
      CHECK(to_matrix(compose(a, b)) == oracle::compose(to_matrix(a), to_matrix(b)));
    }
  }
  SUBCASE("carrier mismatch") {
    CHECK_THROWS_AS(compose(BinaryRelation(2), BinaryRelation(3)), Error);
  }
}

TEST_CASE("composition is associative") {
  SUBCASE("all triples of relations on 2 points") {
    std::vector<BinaryRelation> all;
    for (unsigned bits = 0; bits < 16; ++bits) {
      BinaryRelation r(2);
      for (unsigned k = 0; k < 4; ++k)
        if ((bits >> k) & 1)
          r.insert(k / 2, k % 2);
      all.push_back(r);
    }
    for (auto const& a : all)
      for (auto const& b : all)
        for (auto const& c : all)
          REQUIRE(compose(compose(a, b), c) == compose(a, compose(b, c)));
  }
  SUBCASE("random triples on up to 6 points") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
      std::size_t n = 1 + trial % 6;
      auto        a = random_relation(n, rng);
      auto        b = random_relation(n, rng);
      auto        c = random_relation(n, rng);
      REQUIRE(compose(compose(a, b), c) == compose(a, compose(b, c)));
    }
  }
}

TEST_CASE("as_relation and classify") {
  CHECK(as_relation(Partition::identity(3)) == BinaryRelation::identity(3));
  CHECK(classify(BinaryRelation::identity(3)) == Partition::identity(3));
  CHECK(classify(BinaryRelation::universal(2)).number_of_classes() == 1);

  auto r = BinaryRelation::identity(3);
  r.insert(0, 1);
  r.insert(1, 0);
  CHECK(classify(r) == Partition({0, 0, 1}));
  CHECK(classify(r).labels() == oracle::union_find_classes(to_matrix(r)));

  SUBCASE("round trip over every partition of 5 points") {
    for (auto const& labels : oracle::all_partitions(5)) {
      Partition p(labels);
      REQUIRE(classify(as_relation(p)) == p);
      REQUIRE(p.labels() == labels);
    }
  }
  SUBCASE("failing axioms") {
    auto check_axiom = [](BinaryRelation const& bad, std::string axiom,
                          std::array<std::size_t, 2> pair) {
      try {
        classify(bad);
        FAIL("expected NotAnEquivalence");
      } catch (NotAnEquivalence const& e) {
        CHECK(e.axiom() == axiom);
        CHECK(e.pair() == pair);
      }
    };
    BinaryRelation not_reflexive(3);
    not_reflexive.insert(0, 0);
    check_axiom(not_reflexive, "reflexive", {1, 1});

    auto not_symmetric = BinaryRelation::identity(3);
    not_symmetric.insert(1, 2);
    check_axiom(not_symmetric, "symmetric", {1, 2});

    auto not_transitive = BinaryRelation::identity(3);
    for (auto [x, y] : {std::pair{0, 1}, {1, 0}, {1, 2}, {2, 1}})
      not_transitive.insert(x, y);
    check_axiom(not_transitive, "transitive", {0, 2});
  }
}

TEST_CASE("is_congruence") {
  SUBCASE("identity is always a congruence") {
    for (auto const& spec : families()) {
      auto s = build(spec);
      CHECK(is_congruence(s, Partition::identity(s.size())));
      CHECK(is_congruence(s, Partition::universal(s.size())));
    }
  }
  SUBCASE("α_L on the 2x2 band") {
    auto s = build(family::RectangularBand{2, 2});
    CHECK(is_congruence(s, Partition({0, 0, 1, 1})));
  }
  SUBCASE("{1,a}{a²,a³} on C4 fails at (1, a) times a") {
    auto                     s = build(family::CyclicGroup{4});
    std::vector<std::size_t> labels{0, 0, 1, 1};
    CHECK_FALSE(oracle::is_congruence(s.rows(), labels));
    auto w = congruence_violation(s, Partition(labels));
    REQUIRE(w);
    // 1·a = a and a·a = a² fall in different classes
    CHECK(*w == CongruenceWitness{0, 1, 1, Side::right});
  }
  SUBCASE("agrees with the oracle on every partition") {
    for (auto const& spec : families()) {
      auto s = build(spec);
      if (s.size() > 6)
        continue;
      for (auto const& l : oracle::all_partitions(s.size())) {
        REQUIRE(is_congruence(s, Partition(l)) == oracle::is_congruence(s.rows(), l));
      }
    }
  }
  SUBCASE("carrier mismatch") {
    CHECK_THROWS_AS(is_congruence(build(family::CyclicGroup{4}), Partition::identity(3)),
                    Error);
  }
}

TEST_CASE("enumerate_congruences") {
  SUBCASE("two-element semilattice has ι and ω") {
    auto c = enumerate_congruences(build(family::TwoElementSemilattice{}));
    REQUIRE(c.size() == 2);
    CHECK(c[0].is_identity());
    CHECK(c[1].is_universal());
  }
  SUBCASE("2x2 band: ι, α_L, α_R, ω") {
    auto c = enumerate_congruences(build(family::RectangularBand{2, 2}));
    REQUIRE(c.size() == 4);
    CHECK(c[0] == Partition::identity(4));
    CHECK(c[1] == Partition({0, 0, 1, 1}));
    CHECK(c[2] == Partition({0, 1, 0, 1}));
    CHECK(c[3] == Partition::universal(4));
  }
  SUBCASE("C4: ι, α_C2, ω") {
    auto s = build(family::CyclicGroup{4});
    auto c = enumerate_congruences(s);
    REQUIRE(c.size() == 3);
    CHECK(to_string(c[1], s.names()) == "{{1,a²},{a,a³}}");
  }
  SUBCASE("trivial semigroup") {
    CHECK(enumerate_congruences(build(family::CyclicGroup{1})).size() == 1);
  }
  SUBCASE("matches the oracle and is sorted") {
    for (auto const& spec : families()) {
      auto s = build(spec);
      CAPTURE(s.label());
      auto                               c = enumerate_congruences(s);
      std::set<std::vector<std::size_t>> got;
      for (auto const& p : c)
        got.insert(p.labels());
      CHECK(got == oracle::congruences(s.rows()));
      CHECK(std::is_sorted(c.begin(), c.end()));
      CHECK(c.front().is_identity());
      CHECK(c.back().is_universal());
    }
  }
  SUBCASE("closed under join and meet") {
    for (auto const& spec : families()) {
      auto s = build(spec);
      auto c = enumerate_congruences(s);
      for (auto const& a : c)
        for (auto const& b : c) {
          CHECK(std::binary_search(c.begin(), c.end(), join(a, b)));
          CHECK(std::binary_search(c.begin(), c.end(), meet(a, b)));
        }
    }
  }
  SUBCASE("guard") {
    auto s = build(family::SemilatticeChain{11});
    try {
      enumerate_congruences(s);
      FAIL("expected GuardExceeded");
    } catch (GuardExceeded const& e) {
      CHECK(e.value() == 11);
      CHECK(e.bound() == 10);
    }
    CHECK(enumerate_congruences(build(family::CyclicGroup{10})).size() == 4);
  }
}

TEST_CASE("join and meet") {
  Partition alpha({0, 1, 0, 1});
  CHECK(join(alpha, Partition::identity(4)) == alpha);
  CHECK(meet(alpha, Partition::universal(4)) == alpha);
  CHECK(join(Partition({0, 0, 1}), Partition({0, 1, 1})) == Partition::universal(3));
  CHECK(meet(Partition({0, 0, 1}), Partition({0, 1, 1})) == Partition::identity(3));
  SUBCASE("join is the transitive closure of the union") {
    for (auto const& a : oracle::all_partitions(4))
      for (auto const& b : oracle::all_partitions(4)) {
        auto ra = oracle::relation_of(a);
        auto rb = oracle::relation_of(b);
        oracle::Matrix u(4, std::vector<bool>(4));
        for (std::size_t x = 0; x < 4; ++x)
          for (std::size_t y = 0; y < 4; ++y)
            u[x][y] = ra[x][y] || rb[x][y];
        REQUIRE(join(Partition(a), Partition(b)).labels()
                == oracle::union_find_classes(u));
        REQUIRE(refines(meet(Partition(a), Partition(b)), Partition(a)));
        REQUIRE(refines(Partition(b), join(Partition(a), Partition(b))));
      }
  }
}

TEST_CASE("equivalences: a∘b is an equivalence iff a∘b = b∘a") {
  std::vector<Partition> all;
  for (auto const& l : oracle::all_partitions(5))
    all.emplace_back(l);
  for (auto const& a : all)
    for (auto const& b : all) {
      auto ab          = compose(as_relation(a), as_relation(b));
      bool equivalence = true;
      try {
        classify(ab);
      } catch (NotAnEquivalence const&) {
        equivalence = false;
      }
      REQUIRE(equivalence == (ab == compose(as_relation(b), as_relation(a))));
    }
}

TEST_CASE("is_permutable") {
  SUBCASE("groups are permutable") {
    auto r = is_permutable(build(family::CyclicGroup{4}));
    CHECK(r.verdict);
    CHECK(r.witnesses.empty());
  }
  SUBCASE("3-chain is not") {
    auto s = build(family::SemilatticeChain{3});
    auto r = is_permutable(s);
    CHECK_FALSE(r.verdict);
    REQUIRE(!r.witnesses.empty());
    auto const& w = r.witnesses.front();
    auto        c = enumerate_congruences(s);
    auto a = as_relation(c[w["alpha_index"].get<std::size_t>()]);
    auto b = as_relation(c[w["beta_index"].get<std::size_t>()]);
    auto x = w["pair_indices"][0].get<std::size_t>();
    auto y = w["pair_indices"][1].get<std::size_t>();
    CHECK(compose(a, b).contains(x, y) != compose(b, a).contains(x, y));
  }
  SUBCASE("2x3 band is not") {
    auto r = is_permutable(build(family::RectangularBand{2, 3}));
    CHECK_FALSE(r.verdict);
    CHECK_FALSE(r.witnesses.empty());
  }
  SUBCASE("verdicts agree with the oracle") {
    for (auto const& spec : families()) {
      auto s  = build(spec);
      auto cs = oracle::congruences(s.rows());
      bool expected = true;
      for (auto const& a : cs)
        for (auto const& b : cs)
          expected = expected
                     && oracle::compose(oracle::relation_of(a), oracle::relation_of(b))
                            == oracle::compose(oracle::relation_of(b),
                                               oracle::relation_of(a));
      CAPTURE(s.label());
      CHECK(is_permutable(s).verdict == expected);
    }
  }
  SUBCASE("α∘β = α ∨ β for congruences of permutable semigroups") {
    for (auto const& spec : permutable_families()) {
      auto s = build(spec);
      REQUIRE(is_permutable(s).verdict);
      auto c = enumerate_congruences(s);
      for (auto const& a : c)
        for (auto const& b : c)
          CHECK(compose(as_relation(a), as_relation(b)) == as_relation(join(a, b)));
    }
  }
}
