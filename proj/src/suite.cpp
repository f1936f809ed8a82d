#include "congkit/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <set>

#include "congkit/errors.hpp"

namespace congkit {

  NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(FigureNode, name, dim, generators, congruence)
  NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(Figure, family, primes, nodes, covers, kernel,
                                     checks, sums)
  NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(JoinCounterexample, family, prime, i, j, join,
                                     rho_sum, circ)
  NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(Goldens, semilattice, cyclic_f2, cyclic_f3,
                                     cyclic_f2_checks, zero_semigroups, band,
                                     permutable, semilattice_bound, band_bound)

  Goldens Goldens::defaults() {
    Goldens g;
    g.semilattice = {
        "semilattice2",
        {},
        {{"{0}", 0, {}, {}},
         {"J_e", 1, {{1, 0}}, {}},
         {"J_{e−f}", 1, {{1, -1}}, {}},
         {"F[S]", 2, {{1, 0}, {0, 1}}, {}}},
        {{"{0}", "J_e"}, {"{0}", "J_{e−f}"}, {"J_e", "F[S]"}, {"J_{e−f}", "F[S]"}},
        {{"{0}", "J_e"}, {"J_{e−f}", "F[S]"}},
        {true, true, true},
        {}};
    g.cyclic_f2 = {"cyclic:4",
                   {2},
                   {{"{0}", 0, {}, {}},
                    {"Span(1+a+a²+a³)", 1, {{1, 1, 1, 1}}, {}},
                    {"F[α_C2]", 2, {}, {0, 1, 0, 1}},
                    {"F[ω]", 3, {}, {0, 0, 0, 0}},
                    {"F[S]", 4, {{1, 0, 0, 0}}, {}}},
                   {{"{0}", "Span(1+a+a²+a³)"},
                    {"Span(1+a+a²+a³)", "F[α_C2]"},
                    {"F[α_C2]", "F[ω]"},
                    {"F[ω]", "F[S]"}},
                   {},
                   {},
                   {}};
    g.cyclic_f3        = {"cyclic:4",
                          3,
                          {{1, 0, 1, 0}, {0, 1, 0, 1}},
                          {{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}},
                          {0, 1, 0, 1},
                          {0, 0, 0, 0},
                          false};
    g.cyclic_f2_checks = {true, true};
    for (std::string family : {"right-zero:2", "left-zero:2"}) {
      g.zero_semigroups.push_back(
          {family,
           {},
           {{"{0}", 0, {}, {}},
            {"J_{e−f}", 1, {{1, -1}}, {0, 0}},
            {"F[S]", 2, {{1, 0}, {0, 1}}, {}}},
           {{"{0}", "J_{e−f}"}, {"J_{e−f}", "F[S]"}},
           {{"{0}"}, {"J_{e−f}", "F[S]"}},
           {true, true, true},
           {}});
    }
    g.band = {"rect-band:2,2",
              {},
              {{"{0}", 0, {}, {}},
               {"J_L∩J_R", 1, {{1, -1, -1, 1}}, {}},
               {"J_L", 2, {}, {0, 0, 1, 1}},
               {"J_R", 2, {}, {0, 1, 0, 1}},
               {"F[ω]", 3, {}, {0, 0, 0, 0}},
               {"F[S]", 4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}, {}}},
              {{"{0}", "J_L∩J_R"},
               {"J_L∩J_R", "J_L"},
               {"J_L∩J_R", "J_R"},
               {"J_L", "F[ω]"},
               {"J_R", "F[ω]"},
               {"F[ω]", "F[S]"}},
              {{"{0}", "J_L∩J_R"}, {"J_L"}, {"J_R"}, {"F[ω]", "F[S]"}},
              {true, true, true},
              {{"J_L", "J_R", "F[ω]"}}};
    g.permutable = {{"cyclic:4", true},
                    {"semilattice2", true},
                    {"left-zero:2", true},
                    {"right-zero:2", true},
                    {"rect-band:2,2", true},
                    {"chain-semilattice:3", false},
                    {"rect-band:2,3", false},
                    {"rect-band:3,2", false}};
    g.semilattice_bound = 2;
    g.band_bound        = 2;
    return g;
  }

  Goldens patched_goldens(nlohmann::json const& patch) {
    nlohmann::json base = Goldens::defaults();
    base.merge_patch(patch);
    return base.get<Goldens>();
  }

  namespace {
    using Notes = std::vector<std::string>;

    std::string field_name(std::uint32_t p) { return "F_" + std::to_string(p); }

    SemigroupAlgebra algebra_of(std::string const& family, std::uint32_t p) {
      return SemigroupAlgebra(build(parse_family(family)), PrimeField(p));
    }

    Ideal node_ideal(SemigroupAlgebra const& a, FigureNode const& node) {
      std::vector<AlgebraElement> gens;
      for (auto const& g : node.generators) {
        gens.push_back(a.element(g));
      }
      auto ideal = ideal_closure(a, gens);
      if (!node.congruence.empty()) {
        auto image = f_of_alpha(a, Partition(node.congruence));
        if (!gens.empty() && !(image == ideal)) {
          throw Error(ErrorKind::invalid_input,
                      node.name + ": generators and congruence disagree");
        }
        ideal = image;
      }
      return ideal;
    }

    template <typename T>
    std::set<std::set<T>> set_of_sets(std::vector<std::vector<T>> const& v) {
      std::set<std::set<T>> out;
      for (auto const& x : v) {
        out.emplace(x.begin(), x.end());
      }
      return out;
    }

    bool check_figure(Figure const& fig, SuiteConfig const& config, Notes& notes) {
      bool const before = notes.empty();
      auto const primes = fig.primes.empty() ? config.primes : fig.primes;
      for (auto p : primes) {
        std::string const where = fig.family + " over " + field_name(p) + ": ";
        auto ctx = build_phi_context(algebra_of(fig.family, p), config.guards);
        if (ctx.ideals.size() != fig.nodes.size()) {
          notes.push_back(where + std::to_string(ctx.ideals.size())
                          + " ideals, expected "
                          + std::to_string(fig.nodes.size()));
          continue;
        }
        std::vector<std::string> name(ctx.ideals.size());
        std::map<std::string, Ideal> by_name;
        bool                     complete = true;
        for (auto const& node : fig.nodes) {
          auto ideal = node_ideal(ctx.algebra, node);
          by_name.emplace(node.name, ideal);
          if (ideal.dimension() != node.dim) {
            notes.push_back(where + node.name + " has dimension "
                            + std::to_string(ideal.dimension()) + ", expected "
                            + std::to_string(node.dim));
          }
          auto const k = ctx.ideal_index(ideal);
          if (!name[k].empty()) {
            notes.push_back(where + node.name + " coincides with " + name[k]);
            complete = false;
          }
          name[k] = node.name;
        }
        if (!complete) {
          continue;
        }
        std::set<std::array<std::string, 2>> covers;
        for (auto [a, b] : ideal_lattice(ctx.ideals)) {
          covers.insert({name[a], name[b]});
        }
        if (covers
            != std::set<std::array<std::string, 2>>(fig.covers.begin(),
                                                    fig.covers.end())) {
          notes.push_back(where + "cover relation differs");
        }
        if (!fig.kernel.empty()) {
          std::vector<std::vector<std::string>> kernel;
          for (auto const& cls : kernel_classes(ctx)) {
            kernel.emplace_back();
            for (auto i : cls) {
              kernel.back().push_back(name[i]);
            }
          }
          if (set_of_sets(kernel) != set_of_sets(fig.kernel)) {
            notes.push_back(where + "ker phi classes differ");
          }
        }
        if (!fig.checks.empty()) {
          std::vector<bool> got{check_meet_homomorphism(ctx).verdict,
                                check_join_compatible_kernel(ctx).verdict,
                                check_circ_homomorphism(ctx).verdict};
          if (got != fig.checks) {
            notes.push_back(where + "check verdicts (meet, join, circ) differ");
          }
        }
        for (auto const& [x, y, z] : fig.sums) {
          if (!(ideal_sum(by_name.at(x), by_name.at(y)) == by_name.at(z))) {
            notes.push_back(where + x + " + " + y + " != " + z);
          }
        }
      }
      return before && notes.empty();
    }

    bool row_join_counterexample(SuiteConfig const& config, Notes& notes) {
      auto const& g   = config.goldens.cyclic_f3;
      auto        ctx = build_phi_context(algebra_of(g.family, g.prime), config.guards);
      auto const& a   = ctx.algebra;
      auto        as_ideal = [&](std::vector<std::vector<std::int64_t>> const& gens) {
        std::vector<Vector> vs;
        for (auto const& v : gens) {
          vs.push_back(a.element(v));
        }
        return Ideal::from_subspace(a, rref(a.field(), a.dimension(), vs));
      };
      auto const i = as_ideal(g.i);
      auto const j = as_ideal(g.j);
      auto const joined = join(rho(a, i), rho(a, j));
      if (joined != Partition(g.join)) {
        notes.push_back("rho(I) ∨ rho(J) = " + to_string(joined, a.semigroup().names()));
      }
      auto const total = rho(a, ideal_sum(i, j));
      if (total != Partition(g.rho_sum)) {
        notes.push_back("rho(I + J) = " + to_string(total, a.semigroup().names()));
      }
      auto const report = check_join_compatible_kernel(ctx);
      std::set<std::size_t> const wanted{ctx.ideal_index(i), ctx.ideal_index(j)};
      bool                        found = false;
      for (auto const& w : report.witnesses) {
        std::set<std::size_t> pair{w["I"]["index"].get<std::size_t>(),
                                   w["J"]["index"].get<std::size_t>()};
        found = found || pair == wanted;
      }
      if (report.verdict || !found) {
        notes.push_back("join check does not report (I, J) as a failing pair");
      }
      if (check_circ_homomorphism(ctx).verdict != g.circ) {
        notes.push_back("circ check verdict differs");
      }
      return notes.empty();
    }

    bool row_cyclic_f2_checks(SuiteConfig const& config, Notes& notes) {
      auto ctx = build_phi_context(algebra_of("cyclic:4", 2), config.guards);
      std::vector<bool> got{check_join_compatible_kernel(ctx).verdict,
                            check_circ_homomorphism(ctx).verdict};
      if (got != config.goldens.cyclic_f2_checks) {
        notes.push_back("verdicts (join, circ) differ");
      }
      return notes.empty();
    }

    bool row_permutable(SuiteConfig const& config, Notes& notes) {
      for (auto const& [family, expected] : config.goldens.permutable) {
        auto report = is_permutable(build(parse_family(family)),
                                    config.guards.max_partition_size);
        if (report.verdict != expected) {
          notes.push_back(family + ": permutable = "
                          + (report.verdict ? "true" : "false"));
        } else if (!report.verdict && report.witnesses.empty()) {
          notes.push_back(family + ": no witness");
        }
      }
      return notes.empty();
    }

    bool row_sweep(SuiteConfig const& config, Notes& notes) {
      std::vector<std::pair<std::string, bool>> cells;
      for (std::size_t n = 1; n <= 4; ++n) {
        cells.emplace_back("chain-semilattice:" + std::to_string(n),
                           n <= config.goldens.semilattice_bound);
      }
      for (std::size_t l = 1; l <= 3; ++l) {
        for (std::size_t r = 1; r <= 3; ++r) {
          if (l * r <= 6) {
            cells.emplace_back(
                "rect-band:" + std::to_string(l) + "," + std::to_string(r),
                l <= config.goldens.band_bound && r <= config.goldens.band_bound);
          }
        }
      }
      bool        pass    = true;
      std::size_t checked = 0;
      for (auto const& [family, expected] : cells) {
        for (auto p : config.primes) {
          try {
            auto ctx = build_phi_context(algebra_of(family, p), config.guards);
            ++checked;
            if (check_circ_homomorphism(ctx).verdict != expected) {
              pass = false;
              notes.push_back(family + " over " + field_name(p)
                              + ": circ verdict differs");
            }
          } catch (GuardExceeded const& e) {
            notes.push_back(family + " over " + field_name(p)
                            + " skipped: " + e.what());
          }
        }
      }
      notes.push_back(std::to_string(checked) + " cells checked");
      return pass;
    }

    std::vector<CayleyTable> property_semigroups(SuiteConfig const& config) {
      std::vector<CayleyTable> out;
      for (char const* f :
           {"chain-semilattice:1", "chain-semilattice:2", "chain-semilattice:3",
            "chain-semilattice:4", "semilattice2", "left-zero:2", "right-zero:2",
            "left-zero:3", "right-zero:3", "rect-band:2,2", "rect-band:2,3",
            "rect-band:3,2", "cyclic:1", "cyclic:2", "cyclic:3", "cyclic:4"}) {
        out.push_back(build(parse_family(f)));
      }
      if (config.extra) {
        out.push_back(*config.extra);
      }
      return out;
    }

    bool row_properties(SuiteConfig const& config, Notes& notes) {
      auto const  semigroups = property_semigroups(config);
      std::size_t skipped    = 0;
      auto        fail       = [&](std::string const& tag, CayleyTable const& s,
                        std::uint32_t p) {
        notes.push_back(tag + " fails for " + s.label() + " over " + field_name(p));
      };
      for (auto const& s : semigroups) {
        auto const congruences = enumerate_congruences(s, config.guards.max_partition_size);
        for (auto p : config.primes) {
          SemigroupAlgebra a(s, PrimeField(p));
          // (a)
          for (auto const& alpha : congruences) {
            if (rho(a, f_of_alpha(a, alpha)) != alpha) {
              fail("(a) rho(F[α]) = α", s, p);
              break;
            }
          }
          if (!config.guards.subspaces.allows(a.dimension(), a.field())) {
            ++skipped;
            continue;
          }
          auto ctx = build_phi_context(a, config.guards);
          // (b)
          if (!check_meet_homomorphism(ctx).verdict) {
            fail("(b) meet homomorphism", s, p);
          }
          // (c)
          for (auto const& u : ctx.ideals) {
            for (auto const& w : ctx.ideals) {
              if (ideal_sum(u, w).dimension() + ideal_intersection(u, w).dimension()
                  != u.dimension() + w.dimension()) {
                fail("(c) dimension formula", s, p);
              }
            }
          }
          // (f)
          std::uint64_t carrier = 1;
          for (std::size_t k = 0; k < a.dimension(); ++k) {
            carrier *= p;
          }
          if (carrier <= config.guards.max_carrier) {
            for (std::size_t i = 0; i < ctx.ideals.size(); ++i) {
              for (std::size_t j = i + 1; j < ctx.ideals.size(); ++j) {
                if (!algebra_congruence_permutability_check(
                        a, ctx.ideals[i], ctx.ideals[j], config.guards.max_carrier)) {
                  fail("(f) θ_I ∘ θ_J = θ_{I+J}", s, p);
                }
              }
            }
          }
        }
      }
      // (d)
      for (auto p : config.primes) {
        for (std::size_t n = 0; n <= 4; ++n) {
          std::vector<std::uint64_t> by_dim(n + 1, 0);
          for (auto const& u : enumerate_subspaces(PrimeField(p), n, config.guards.subspaces)) {
            ++by_dim[u.dimension()];
          }
          for (std::size_t k = 0; k <= n; ++k) {
            if (by_dim[k] != gaussian_binomial(n, k, p)) {
              notes.push_back("(d) subspace count differs for n=" + std::to_string(n)
                              + ", k=" + std::to_string(k) + " over "
                              + field_name(p));
            }
          }
        }
      }
      // (e): every triple on two points, a fixed random sample on three.
      auto relation = [](std::size_t n, std::uint64_t bits) {
        BinaryRelation r(n);
        for (std::size_t x = 0; x < n; ++x) {
          for (std::size_t y = 0; y < n; ++y) {
            if ((bits >> (x * n + y)) & 1) {
              r.insert(x, y);
            }
          }
        }
        return r;
      };
      auto associative = [&](std::size_t n, std::uint64_t a, std::uint64_t b,
                             std::uint64_t c) {
        auto ra = relation(n, a), rb = relation(n, b), rc = relation(n, c);
        return compose(compose(ra, rb), rc) == compose(ra, compose(rb, rc));
      };
      bool assoc = true;
      for (std::uint64_t a = 0; a < 16; ++a) {
        for (std::uint64_t b = 0; b < 16; ++b) {
          for (std::uint64_t c = 0; c < 16; ++c) {
            assoc = assoc && associative(2, a, b, c);
          }
        }
      }
      std::mt19937_64                         rng(20240101);
      std::uniform_int_distribution<unsigned> bits(0, 511);
      for (int k = 0; k < 4096; ++k) {
        assoc = assoc && associative(3, bits(rng), bits(rng), bits(rng));
      }
      if (!assoc) {
        notes.push_back("(e) relation composition is not associative");
      }
      bool const pass = notes.empty();
      if (skipped) {
        notes.push_back(std::to_string(skipped)
                        + " algebras beyond the subspace guard skipped for (b), (c), (f)");
      }
      return pass;
    }

    char const* title(int id) {
      switch (id) {
        case 1: return "F_p[two-element semilattice]: ideals {0}, J_e, J_{e−f}, F[S] form a diamond";
        case 2: return "F_2[C4]: five ideals in a chain of dimensions 0..4";
        case 3: return "F_3[C4]: ker phi not ∨-compatible, phi not a ∘-homomorphism";
        case 4: return "F_2[C4]: ker phi ∨-compatible, phi a ∘-homomorphism";
        case 5: return "F_p[right/left zero of order 2]: chain of three ideals, all checks hold";
        case 6: return "F_p[2x2 rectangular band]: six ideals, all checks hold";
        case 7: return "permutability by brute force";
        case 8: return "phi a ∘-homomorphism iff |S| <= 2 (chains), |L|,|R| <= 2 (bands)";
        case 9: return "properties (a)-(f)";
        case 10: return "golden self-check: rows 1-9 pass, each corrupted golden fails its row";
        default: return "unknown row";
      }
    }

    double ms_since(std::chrono::steady_clock::time_point start) {
      return std::chrono::duration<double, std::milli>(
                 std::chrono::steady_clock::now() - start)
          .count();
    }
  }  // namespace

  SuiteRow run_row(int id, SuiteConfig const& config) {
    SuiteRow   row{id, title(id), false, {}, 0.0};
    auto const start = std::chrono::steady_clock::now();
    try {
      auto const& g = config.goldens;
      switch (id) {
        case 1: row.pass = check_figure(g.semilattice, config, row.notes); break;
        case 2: row.pass = check_figure(g.cyclic_f2, config, row.notes); break;
        case 3: row.pass = row_join_counterexample(config, row.notes); break;
        case 4: row.pass = row_cyclic_f2_checks(config, row.notes); break;
        case 5: {
          bool pass = !g.zero_semigroups.empty();
          for (auto const& fig : g.zero_semigroups) {
            pass = check_figure(fig, config, row.notes) && pass;
          }
          row.pass = pass;
          break;
        }
        case 6: row.pass = check_figure(g.band, config, row.notes); break;
        case 7: row.pass = row_permutable(config, row.notes); break;
        case 8: row.pass = row_sweep(config, row.notes); break;
        case 9: row.pass = row_properties(config, row.notes); break;
        default:
          throw Error(ErrorKind::invalid_input,
                      "row " + std::to_string(id) + " is not a single check");
      }
    } catch (std::exception const& e) {
      row.pass = false;
      row.notes.push_back(e.what());
    }
    row.ms = ms_since(start);
    return row;
  }

  std::vector<Corruption> corruptions() {
    return {
        {"J_e generator", 1,
         [](Goldens& g) { g.semilattice.nodes[1].generators = {{1, 1}}; }},
        {"Span(1+a+a²+a³) generator", 2,
         [](Goldens& g) { g.cyclic_f2.nodes[1].generators = {{1, 0, 1, 0}}; }},
        {"I generator", 3, [](Goldens& g) { g.cyclic_f3.i[0] = {1, 1, 0, 0}; }},
        {"expected join of rho(I), rho(J)", 3,
         [](Goldens& g) { g.cyclic_f3.join = {0, 0, 0, 0}; }},
        {"F_2[C4] join verdict", 4,
         [](Goldens& g) { g.cyclic_f2_checks[0] = false; }},
        {"right zero ker phi classes", 5,
         [](Goldens& g) {
           g.zero_semigroups[0].kernel = {{"{0}", "J_{e−f}"}, {"F[S]"}};
         }},
        {"J_L∩J_R generator", 6,
         [](Goldens& g) { g.band.nodes[1].generators = {{1, -1, 0, 0}}; }},
        {"J_L congruence", 6,
         [](Goldens& g) { g.band.nodes[2].congruence = {0, 1, 1, 0}; }},
        {"C4 permutability", 7,
         [](Goldens& g) { g.permutable["cyclic:4"] = false; }},
        {"semilattice bound", 8, [](Goldens& g) { g.semilattice_bound = 3; }},
    };
  }

  std::vector<SuiteRow> run_suite(SuiteConfig const& config) {
    std::vector<SuiteRow> rows;
    bool                  all = true;
    for (int id = 1; id < suite_rows; ++id) {
      rows.push_back(run_row(id, config));
      all = all && rows.back().pass;
    }
    SuiteRow   last{suite_rows, title(suite_rows), false, {}, 0.0};
    auto const start = std::chrono::steady_clock::now();
    if (!all) {
      last.notes.push_back("some of rows 1-9 fail");
    }
    std::size_t flipped = 0;
    for (auto const& c : corruptions()) {
      SuiteConfig bad = config;
      // The sweep rows only need one prime to notice a wrong golden.
      bad.primes = {config.primes.front()};
      c.apply(bad.goldens);
      if (run_row(c.row, bad).pass) {
        last.notes.push_back("row " + std::to_string(c.row)
                             + " still passes with corrupted " + c.name);
      } else {
        ++flipped;
      }
    }
    last.pass = all && flipped == corruptions().size();
    last.notes.push_back(std::to_string(flipped) + "/"
                         + std::to_string(corruptions().size())
                         + " corruptions flipped their row");
    last.ms = ms_since(start);
    rows.push_back(last);
    return rows;
  }

  std::string format_row(SuiteRow const& row) {
    char head[32];
    std::snprintf(head, sizeof head, "%2d %s", row.id, row.pass ? "PASS" : "FAIL");
    std::string out = std::string(head) + "  " + row.title + "  ("
                      + std::to_string(static_cast<long>(row.ms)) + " ms)\n";
    for (auto const& note : row.notes) {
      out += "       " + note + "\n";
    }
    return out;
  }

}  // namespace congkit
