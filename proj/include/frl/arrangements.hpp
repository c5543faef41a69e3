#pragma once

#include <cstdint>
#include <vector>

#include "frl/coefficients.hpp"
#include "frl/complex.hpp"

namespace frl {

/// Coordinate subspace arrangement CA(K) = {L_ω : ω ∉ K}, where L_ω sets
/// the coordinates in ω to zero. Only the minimal ω (missing faces) are kept.
struct ArrangementDescription {
  int m = 0;
  std::vector<Face> generators;
  /// No subspaces: U(K) = C^m. Happens exactly for the full simplex.
  bool empty() const { return generators.empty(); }
};

ArrangementDescription arrangement_of(const SimplicialComplex& complex);

/// dims[p] = dim H^p, trailing zeros trimmed.
using GradedDimensions = std::vector<std::int64_t>;

/// dim H^p(U(K)) = Σ_{2j-i=p} β^{-i,2j}(k[K]).
GradedDimensions complement_cohomology(const SimplicialComplex& complex, Coefficients field);

/// Σ_{σ ∈ K̂} dim H̃_{2m-2|σ|-p-2}(link_{K̂} σ), plus 1 in degree 0.
/// Throws PreconditionError for the full simplex.
GradedDimensions goresky_macpherson(const SimplicialComplex& complex, Coefficients field);

/// H̃^i(K_{[m]∖σ}) ≅ H̃_{m-3-i-|σ|}(link_{K̂} σ) for all σ ∈ K̂ and all i.
/// Throws PreconditionError for the full simplex.
bool alexander_duality_check(const SimplicialComplex& complex, Coefficients field);

}  // namespace frl
