#ifndef CONGKIT_CORRESPONDENCE_HPP_
#define CONGKIT_CORRESPONDENCE_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include <nlohmann/json.hpp>

#include "congkit/algebra.hpp"
#include "congkit/partition.hpp"
#include "congkit/relations.hpp"
#include "congkit/report.hpp"

namespace congkit {

  struct Guards {
    std::size_t   max_partition_size = default_partition_guard;
    SubspaceGuard subspaces          = {};
    std::uint64_t max_carrier        = default_carrier_guard;
  };

  // ρ_J: s ρ_J t iff s - t ∈ J. Throws internal_invariant if the result is
  // not a congruence of S.
  Partition rho(SemigroupAlgebra const& algebra, Ideal const& ideal);

  // F[α] as the span of {s - t : s α t}. Throws not_a_congruence.
  Ideal f_of_alpha(SemigroupAlgebra const& algebra, Partition const& alpha);

  // F[α] as the kernel of the linear extension of S -> S/α. Independent of
  // f_of_alpha; the two must agree.
  Ideal quotient_map_kernel(SemigroupAlgebra const& algebra,
                            Partition const&        alpha);

  // Everything needed to evaluate φ: J ↦ ρ_J on a whole algebra. phi[i] is
  // the index in `congruences` of ρ of ideals[i].
  struct PhiContext {
    SemigroupAlgebra         algebra;
    std::vector<Ideal>       ideals;
    std::vector<Partition>   congruences;
    std::vector<std::size_t> phi;

    // Both throw internal_invariant when the argument is not listed.
    std::size_t ideal_index(Ideal const& ideal) const;
    std::size_t congruence_index(Partition const& alpha) const;

    std::string label() const;
  };

  // Enumerates ideals and congruences, computes φ and checks that it is onto
  // with φ(0) = ι and φ(F[S]) = ω.
  PhiContext build_phi_context(SemigroupAlgebra algebra, Guards const& guards = {});

  // Ideal indices grouped by φ-image, ordered by smallest member.
  std::vector<std::vector<std::size_t>> kernel_classes(PhiContext const& ctx);

  // ρ(I ∩ J) = ρ(I) ∧ ρ(J) for all I, J.
  CheckReport check_meet_homomorphism(PhiContext const& ctx);

  // ρ(I + J) = ρ(I) ∨ ρ(J) for all I, J. Every failing unordered pair is
  // listed as a witness.
  CheckReport check_join_compatible_kernel(PhiContext const& ctx);

  // ρ(I + J) = ρ(I) ∘ ρ(J) as relations, for all ordered pairs. Composition
  // of ideal congruences is θ_I ∘ θ_J = θ_{I+J}, which
  // algebra_congruence_permutability_check confirms on small carriers. The
  // report's details record whether S is permutable and whether the kernel is
  // ∨-compatible.
  CheckReport check_circ_homomorphism(PhiContext const& ctx);

  nlohmann::json ideal_to_json(PhiContext const& ctx, std::size_t index);

}  // namespace congkit

#endif  // CONGKIT_CORRESPONDENCE_HPP_
