#pragma once

#include <compare>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "frl/betti_table.hpp"
#include "frl/coefficients.hpp"
#include "frl/complex.hpp"
#include "frl/linalg.hpp"
#include "frl/parallel.hpp"

namespace frl {

/// Basis monomial v^a u_τ of Λ[u_1..u_m] ⊗ k[K]; u_τ is the product in
/// increasing index order. Bidegree (-|τ|, 2|τ| + 2|a|).
struct KoszulMonomial {
  std::vector<int> v_exponents;  // length m
  Face u;

  int homological_degree() const { return u.size(); }  // i in (-i, 2j)
  int internal_degree() const;                         // j in (-i, 2j)
  /// Z^m-grading a + 1_τ preserved by the differential.
  std::vector<int> multidegree() const;

  friend auto operator<=>(const KoszulMonomial&, const KoszulMonomial&) = default;
};

/// Finite k-linear combination of Koszul monomials in Λ[u] ⊗ k[K]. Monomials
/// whose v-support is not a face are dropped on construction and after
/// every operation.
class KoszulElement {
 public:
  KoszulElement() = default;
  /// c · v_{v_list[0]} v_{v_list[1]} ... u_{τ}; `v_list` is a multiset of
  /// vertices.
  static KoszulElement monomial(const SimplicialComplex& complex, const std::vector<int>& v_list,
                                Face u, FieldScalar coefficient);

  const std::map<KoszulMonomial, FieldScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c · monomial, reducing modulo the Stanley-Reisner ideal.
  void add(const SimplicialComplex& complex, const KoszulMonomial& monomial,
           const FieldScalar& coefficient);

  friend bool operator==(const KoszulElement&, const KoszulElement&) = default;
  std::string to_string() const;

 private:
  std::map<KoszulMonomial, FieldScalar> terms_;
};

/// The derivation with d u_i = v_i, d v_i = 0.
KoszulElement koszul_differential(const SimplicialComplex& complex, const KoszulElement& x);

/// Graded-commutative product: v's are central, u's anticommute, u_i^2 = 0.
KoszulElement koszul_multiply(const SimplicialComplex& complex, const KoszulElement& a,
                              const KoszulElement& b);

/// All multidegrees α ∈ N^m with |α| = total, in lexicographically
/// decreasing order of exponent vectors.
std::vector<std::vector<int>> multidegrees_of_total(int m, int total);

/// β^{-i,2j} as dimensions of the Koszul cohomology H[Λ[u] ⊗ k[K], d],
/// block by multidegree, for 0 <= j <= max_internal_degree (default m).
BigradedBettiTable koszul_betti(const SimplicialComplex& complex, Coefficients field,
                                Execution exec = Execution::parallel,
                                int max_internal_degree = -1);

/// Element of H^{-i,2j} given by coordinates in the TorAlgebra basis.
struct CohomologyClass {
  int i = 0;
  int j = 0;
  FieldVector coordinates;
  bool is_zero() const;
};

/// The Tor-algebra Tor_{k[v]}(k[K], k) realized as Koszul cohomology, with
/// chosen cocycle representatives and the induced product.
///
/// Basis of H^{-i,2j}: multidegree blocks in multidegrees_of_total order;
/// inside a block, cocycles come from the nullspace basis of the outgoing
/// differential (one vector per free column, scanned in column order) and
/// each is kept when independent of the coboundaries and earlier picks.
/// Immutable after construction.
class TorAlgebra {
 public:
  TorAlgebra(const SimplicialComplex& complex, Coefficients field,
             Execution exec = Execution::parallel);

  const SimplicialComplex& complex() const { return complex_; }
  Coefficients field() const { return field_; }
  const BigradedBettiTable& betti() const { return betti_; }

  /// Representative cocycles of the basis of H^{-i,2j}.
  std::vector<KoszulElement> basis(int i, int j) const;
  CohomologyClass basis_class(int i, int j, std::size_t index) const;
  KoszulElement representative(const CohomologyClass& cls) const;

  bool is_cocycle(const KoszulElement& x) const;
  /// Throws std::invalid_argument unless x is a cocycle homogeneous in bidegree.
  CohomologyClass class_of(const KoszulElement& x) const;
  CohomologyClass product(const CohomologyClass& a, const CohomologyClass& b) const;
  CohomologyClass unit() const;

 private:
  struct Block;
  const Block* find_block(const std::vector<int>& multidegree, int i) const;

  SimplicialComplex complex_;
  Coefficients field_;
  BigradedBettiTable betti_;
  // (i, j) -> ordered blocks with nonzero cohomology.
  std::map<std::pair<int, int>, std::vector<std::vector<int>>> block_order_;
  std::map<std::pair<std::vector<int>, int>, std::shared_ptr<const Block>> blocks_;
};

}  // namespace frl
