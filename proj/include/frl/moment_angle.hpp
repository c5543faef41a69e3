#pragma once

#include <cstdint>
#include <vector>

#include "frl/betti_table.hpp"
#include "frl/coefficients.hpp"
#include "frl/complex.hpp"
#include "frl/parallel.hpp"
#include "frl/polynomial.hpp"

namespace frl {

/// Cell of the moment-angle complex: coordinates in D are disc cells, in T
/// circle cells, the rest the base point. D must be a face of K.
struct BigradedCell {
  Face d;
  Face t;
  int homological_degree() const { return t.size(); }       // q in (-q, 2p)
  int internal_degree() const { return t.size() + d.size(); }  // p in (-q, 2p)
  friend bool operator==(const BigradedCell&, const BigradedCell&) = default;
};

/// Every cell of Z_K (3^m sign vectors filtered by D ∈ K). Exponential in m.
std::vector<BigradedCell> enumerate_cells(const SimplicialComplex& complex);

/// dim C^{-q,2p}(Z_K) = f_{p-q-1} C(m-p+q, q).
Integer cell_count(const SimplicialComplex& complex, int q, int p);

/// Bigraded Betti numbers of Z_K from the cellular cochain complexes
/// C^{*,2ω}(Z_K), one per ω ⊂ [m], with coboundary T_k -> D_k.
BigradedBettiTable zk_bigraded_betti(const SimplicialComplex& complex, Coefficients field,
                                     Execution exec = Execution::parallel);

/// Σ_{q,p} (-1)^q cell_count(q, p) t^{2p}.
Polynomial chi_from_cells(const SimplicialComplex& complex);
/// (1 - t^2)^{m-n} h(t^2).
Polynomial chi_closed_form(const SimplicialComplex& complex);
/// Both routes; throws CrossCheckError if they differ.
Polynomial chi_polynomial(const SimplicialComplex& complex);

struct ChiPair {
  Polynomial relative;    // χ(Z_K, T^m; t)
  Polynomial complement;  // χ(Z_K ∖ T^m; t)
};
ChiPair chi_pair_polynomials(const SimplicialComplex& complex);

/// χ(Z_K ∖ T^m; t) = (-1)^{m-n} t^{2m} χ(Z_K, T^m; 1/t). Throws
/// PreconditionError when K is not a homology manifold over `field`.
bool relative_pd_check(const SimplicialComplex& complex,
                       Coefficients field = Coefficients::rationals());

/// b^{-q,2p} = b^{-(m-n)+q,2(m-p)} on the Z_K table. Throws
/// PreconditionError unless K is Gorenstein*.
bool pd_symmetry_check(const SimplicialComplex& complex, Coefficients field);

struct HomotopyInfo {
  int neighbourliness = 0;
  int connectivity = 0;            // π_i(Z_K) = 0 for i <= connectivity
  std::int64_t first_nontrivial_rank = 0;  // rank of π_{connectivity+1}
};

/// Throws PreconditionError for the full simplex (Z_K contractible).
HomotopyInfo homotopy_info(const SimplicialComplex& complex);

}  // namespace frl
