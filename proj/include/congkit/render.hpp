#ifndef CONGKIT_RENDER_HPP_
#define CONGKIT_RENDER_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "congkit/correspondence.hpp"

namespace congkit {

  // A finite poset given by its Hasse diagram. Nodes on the same level are
  // drawn side by side; edges go from the lower node to its cover.
  struct Lattice {
    struct Node {
      std::string label;
      std::size_t level;
    };
    std::string                                      name;
    std::vector<Node>                                nodes;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
  };

  // ι, ω, α_L / α_R for rectangular bands, α_{C_d} for cyclic groups and α_k
  // (index in the list) otherwise. The family is recovered from the label.
  std::vector<std::string> congruence_names(CayleyTable const&            s,
                                            std::vector<Partition> const& cs);

  // {0}, F[S], J_x, J_{x-y}, J_L / J_R, F[α], intersections of two F[α],
  // and Span(basis) as the fallback.
  std::vector<std::string> ideal_labels(PhiContext const& ctx);

  Lattice ideal_lattice(PhiContext const& ctx);
  Lattice congruence_lattice(CayleyTable const& s, std::vector<Partition> const& cs);

  std::string render_ascii(Lattice const& lattice);
  std::string render_dot(Lattice const& lattice);

  nlohmann::json semigroup_json(CayleyTable const&            s,
                                std::vector<Partition> const& congruences,
                                CheckReport const&            permutable);
  nlohmann::json algebra_json(PhiContext const&               ctx,
                              std::vector<CheckReport> const& checks);

}  // namespace congkit

#endif  // CONGKIT_RENDER_HPP_
