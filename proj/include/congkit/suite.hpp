#ifndef CONGKIT_SUITE_HPP_
#define CONGKIT_SUITE_HPP_

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "congkit/correspondence.hpp"

namespace congkit {

  // One node of an expected ideal diagram. The ideal is the closure of
  // `generators` and/or F[α] for α given by `congruence` labels; with neither
  // it is {0}.
  struct FigureNode {
    std::string                            name;
    std::size_t                            dim = 0;
    std::vector<std::vector<std::int64_t>> generators;
    std::vector<std::size_t>               congruence;
  };

  // A complete expected ideal lattice. Empty `primes` means the configured
  // primes; empty `kernel` or `checks` means "not asserted". `checks` holds
  // expected verdicts of the meet, join and ∘ checks in that order. Each
  // entry of `sums` states names[0] + names[1] = names[2].
  struct Figure {
    std::string                             family;
    std::vector<std::uint32_t>              primes;
    std::vector<FigureNode>                 nodes;
    std::vector<std::array<std::string, 2>> covers;
    std::vector<std::vector<std::string>>   kernel;
    std::vector<bool>                       checks;
    std::vector<std::array<std::string, 3>> sums;
  };

  // Two ideals whose ρ-join differs from ρ of their sum.
  struct JoinCounterexample {
    std::string                            family;
    std::uint32_t                          prime = 0;
    std::vector<std::vector<std::int64_t>> i;
    std::vector<std::vector<std::int64_t>> j;
    std::vector<std::size_t>               join;
    std::vector<std::size_t>               rho_sum;
    bool                                   circ = false;
  };

  struct Goldens {
    Figure                      semilattice;
    Figure                      cyclic_f2;
    JoinCounterexample          cyclic_f3;
    std::vector<bool>           cyclic_f2_checks;
    std::vector<Figure>         zero_semigroups;
    Figure                      band;
    std::map<std::string, bool> permutable;
    std::size_t                 semilattice_bound = 0;
    std::size_t                 band_bound        = 0;

    static Goldens defaults();
  };

  void to_json(nlohmann::json& j, FigureNode const& x);
  void from_json(nlohmann::json const& j, FigureNode& x);
  void to_json(nlohmann::json& j, Figure const& x);
  void from_json(nlohmann::json const& j, Figure& x);
  void to_json(nlohmann::json& j, JoinCounterexample const& x);
  void from_json(nlohmann::json const& j, JoinCounterexample& x);
  void to_json(nlohmann::json& j, Goldens const& x);
  void from_json(nlohmann::json const& j, Goldens& x);

  // Defaults with `patch` applied as a JSON merge patch.
  Goldens patched_goldens(nlohmann::json const& patch);

  struct SuiteConfig {
    std::vector<std::uint32_t> primes = {2, 3, 5};
    Guards                     guards;
    Goldens                    goldens = Goldens::defaults();
    std::optional<CayleyTable> extra;  // joins the property sweep
  };

  struct SuiteRow {
    int                      id = 0;
    std::string              title;
    bool                     pass = false;
    std::vector<std::string> notes;
    double                   ms = 0.0;
  };

  inline constexpr int suite_rows = 10;

  // Rows 1..9. Errors raised while running a row make it fail.
  SuiteRow run_row(int id, SuiteConfig const& config);

  // A named change to the goldens and the row it must break.
  struct Corruption {
    std::string                   name;
    int                           row;
    std::function<void(Goldens&)> apply;
  };
  std::vector<Corruption> corruptions();

  // All ten rows; row 10 requires rows 1..9 to pass and every corruption to
  // flip its row to FAIL.
  std::vector<SuiteRow> run_suite(SuiteConfig const& config);

  std::string format_row(SuiteRow const& row);

}  // namespace congkit

#endif  // CONGKIT_SUITE_HPP_
