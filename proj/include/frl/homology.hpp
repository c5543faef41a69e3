#pragma once

#include <cstdint>
#include <vector>

#include "frl/coefficients.hpp"
#include "frl/complex.hpp"
#include "frl/linalg.hpp"
#include "frl/parallel.hpp"

namespace frl {

/// Dimensions of reduced (co)homology in degrees -1 .. dim K.
/// H̃_{-1} is one-dimensional exactly for {∅}.
class HomologyProfile {
 public:
  HomologyProfile() = default;
  explicit HomologyProfile(std::vector<std::int64_t> dims) : dims_(std::move(dims)) {}

  /// Zero outside the stored range.
  std::int64_t operator()(int degree) const;
  int top_degree() const { return static_cast<int>(dims_.size()) - 2; }
  const std::vector<std::int64_t>& dims() const { return dims_; }
  std::int64_t total() const;
  bool is_acyclic() const { return total() == 0; }
  /// H̃_i = k for i == d and 0 otherwise.
  bool is_sphere_like(int d) const;

  friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;

 private:
  std::vector<std::int64_t> dims_;
};

/// Simplicial boundary map C_d -> C_{d-1} with rows and columns indexed by
/// the lexicographic faces_of_dim lists; d = 0 gives the augmentation.
IntMatrix boundary_matrix(const SimplicialComplex& complex, int d);

HomologyProfile reduced_homology(const SimplicialComplex& complex, Coefficients field);
/// Over a field the cohomology dimensions equal the homology dimensions.
inline HomologyProfile reduced_cohomology(const SimplicialComplex& complex, Coefficients field) {
  return reduced_homology(complex, field);
}

/// Reisner: H̃_i(link σ) = 0 for i < dim link σ, for every face σ including ∅.
bool is_cohen_macaulay(const SimplicialComplex& complex, Coefficients field,
                       Execution exec = Execution::parallel);

/// Every link (including link ∅ = K) has the homology of a sphere of its
/// own dimension.
bool is_gorenstein_star(const SimplicialComplex& complex, Coefficients field,
                        Execution exec = Execution::parallel);

/// Link of every nonempty face σ has the homology of S^{dim K - |σ|}.
/// Throws PreconditionError for non-pure complexes.
bool is_homology_manifold(const SimplicialComplex& complex, Coefficients field);

/// Homology sphere: a homology manifold whose own homology is that of S^{dim K}.
bool is_homology_sphere(const SimplicialComplex& complex, Coefficients field);

}  // namespace frl
