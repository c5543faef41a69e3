#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "frl/coefficients.hpp"
#include "frl/complex.hpp"

namespace frl {

/// Integer n x m matrix Λ; row i holds the coefficients of θ_i = Σ_j λ_ij v_j.
struct CharMatrix {
  std::vector<std::vector<Integer>> rows;

  std::size_t row_count() const { return rows.size(); }
  std::size_t column_count() const { return rows.empty() ? 0 : rows.front().size(); }

  /// "1,0,-1;0,1,-1"
  static CharMatrix parse_inline(const std::string& text);
  /// {"rows": [[1,0,-1],[0,1,-1]]}
  static CharMatrix parse_json(const std::string& text);
  /// Reduces every entry mod p into [0, p).
  CharMatrix reduced_mod(std::uint32_t p) const;
};

struct CharMatrixVerdict {
  /// det Λ_σ = ±1 for every facet σ. Equivalent to Θ being an integral lsop
  /// and to T_Λ acting freely on Z_K; only this condition is computed.
  bool unimodular = false;
  std::vector<Face> failing_facets;
  std::vector<Integer> minors;  // per facet, in facet order
};

/// Throws PreconditionError for non-pure K and std::invalid_argument when Λ
/// is not n x m.
CharMatrixVerdict char_matrix_check(const SimplicialComplex& complex, const CharMatrix& lambda);

/// dim_k (k[K]/(θ_1..θ_n))_{2i} for i = 0..n. Throws PreconditionError
/// unless Λ restricted to every facet has full rank over `field`.
std::vector<std::int64_t> quotient_graded_dims(const SimplicialComplex& complex,
                                               const CharMatrix& lambda, Coefficients field);

struct OddVanishingReport {
  /// Every generator has degree 2, so odd components are zero by construction.
  bool odd_vanishes = true;
  std::vector<std::int64_t> even_dims;
};

OddVanishingReport odd_vanishing_report(const SimplicialComplex& complex,
                                        const CharMatrix& lambda, Coefficients field);

}  // namespace frl
