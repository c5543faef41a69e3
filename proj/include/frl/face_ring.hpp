#pragma once

#include <map>
#include <vector>

#include "frl/betti_table.hpp"
#include "frl/coefficients.hpp"
#include "frl/complex.hpp"
#include "frl/parallel.hpp"
#include "frl/polynomial.hpp"

namespace frl {

/// Square-free monomial generators v_σ of the Stanley-Reisner ideal, one per
/// missing face.
std::vector<Face> ideal_generators(const SimplicialComplex& complex);

/// F(M; t) = numerator(t) / (1 - t^2)^denominator_exponent.
struct HilbertSeries {
  Polynomial numerator;
  int denominator_exponent = 0;

  /// Coefficient of t^power in the power-series expansion.
  Integer series_coefficient(int power) const;
  friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;
};

/// h(t^2) / (1 - t^2)^n, assembled from the f-vector.
HilbertSeries hilbert_series(const SimplicialComplex& complex);

/// dim k[K]_{2d} = Σ_k f_{k-1} C(d-1, k-1), and 1 for d = 0.
Integer graded_dimension(const SimplicialComplex& complex, int d);

struct HochsterOptions {
  /// Skip ω ∈ K with |ω| >= 1; their full subcomplexes are simplices.
  bool skip_faces = true;
  Execution exec = Execution::parallel;
};

/// β^{-i,2j} = Σ_{|ω|=j} dim H̃^{j-i-1}(K_ω), over all ω ⊂ [m].
BigradedBettiTable hochster_betti(const SimplicialComplex& complex, Coefficients field,
                                  HochsterOptions options = {});

/// For every facet σ the columns of `theta` on σ have rank |σ| over `field`.
/// `theta` has one row per θ_i = Σ_j λ_ij v_j. Throws std::invalid_argument
/// if the row count differs from n = dim K + 1 or a row has the wrong length.
bool lsop_check_field(const SimplicialComplex& complex,
                      const std::vector<std::vector<Integer>>& theta, Coefficients field);

struct ResolutionIdentity {
  Polynomial series_side;  // (1 - t^2)^m F(k[K]; t)
  Polynomial betti_side;   // Σ (-1)^i β^{-i,2j} t^{2j}
  bool holds() const { return series_side == betti_side; }
};

ResolutionIdentity euler_resolution_identity(const SimplicialComplex& complex,
                                             Coefficients field);

/// Polynomial in k[v_1..v_m]: exponent vector -> coefficient.
using MonomialPolynomial = std::map<std::vector<int>, Integer>;

/// Drops monomials whose support is not a face.
MonomialPolynomial reduce_modulo_ideal(const SimplicialComplex& complex,
                                       const MonomialPolynomial& polynomial);

/// Ring map k[K2] -> k[K1] induced by a simplicial map φ: K1 -> K2.
class InducedRingMap {
 public:
  InducedRingMap(SimplicialComplex source, std::vector<Face> preimages)
      : source_(std::move(source)), preimages_(std::move(preimages)) {}

  /// preimages()[j-1] = φ^{-1}(j); the generator w_j maps to Σ_{i ∈ φ^{-1}(j)} v_i.
  const std::vector<Face>& preimages() const { return preimages_; }
  /// Image of the square-free monomial w_σ, expanded and reduced modulo I_{K1}.
  MonomialPolynomial image_of(Face target_monomial) const;

 private:
  SimplicialComplex source_;
  std::vector<Face> preimages_;
};

/// Throws PreconditionError when φ is not simplicial. Throws CrossCheckError
/// if some generator of I_{K2} does not map into I_{K1}.
InducedRingMap induced_ring_map(const SimplicialComplex& source,
                                const SimplicialComplex& target, const std::vector<int>& map);

/// h(K) is an M-vector. Throws PreconditionError unless K is Cohen-Macaulay.
bool stanley_m_vector_check(const SimplicialComplex& complex, Coefficients field);

struct GorensteinVerdict {
  bool gorenstein = false;
  bool gorenstein_star = false;
};

/// Cohen-Macaulay with β^{-(m-n)} = 1; the star variant also excludes cones.
GorensteinVerdict is_gorenstein(const SimplicialComplex& complex, Coefficients field);

struct PoincareVerdict {
  bool table_symmetric = false;       // β^{-i,2j} = β^{-(m-n)+i,2(m-j)}
  bool pairing_nondegenerate = false;  // products into H^{-(m-n),2m} form perfect pairings
  bool holds() const { return table_symmetric && pairing_nondegenerate; }
};

PoincareVerdict poincare_algebra_check(const SimplicialComplex& complex, Coefficients field);

}  // namespace frl
