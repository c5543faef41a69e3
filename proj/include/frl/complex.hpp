#pragma once

#include <vector>

#include "frl/face.hpp"
#include "frl/types.hpp"

namespace frl {

/// Finite simplicial complex on the vertex set [m], stored as its facets.
///
/// The facet list is kept canonical: an antichain under inclusion, sorted
/// lexicographically. A face is any subset of a facet. Vertices of [m] that
/// lie in no facet ("ghost" vertices) are allowed; they are what lets full
/// subcomplexes and dual complexes live on a fixed [m].
///
/// The complex {∅} (only the empty face) is stored with the single facet ∅.
/// It has dimension -1 and an empty f-vector.
class SimplicialComplex {
 public:
  /// Canonicalizes `faces`: drops duplicates and faces contained in others.
  /// Throws std::invalid_argument when m is not in 1..kMaxVertices or a
  /// face uses a vertex outside [m].
  static SimplicialComplex from_facets(int m, const std::vector<Face>& faces);
  static SimplicialComplex from_facets(int m, const std::vector<std::vector<int>>& faces);

  int num_vertices() const { return m_; }
  const std::vector<Face>& facets() const { return facets_; }

  /// max facet size - 1.
  int dimension() const { return dimension_; }
  /// n = dimension + 1.
  int rank() const { return dimension_ + 1; }
  bool is_pure() const;
  /// True for {∅}.
  bool is_empty_complex() const { return dimension_ < 0; }

  bool contains(Face face) const;
  /// Vertices that appear in some facet.
  Face vertex_set() const;

  /// All faces including ∅, ordered by size then lexicographically.
  std::vector<Face> faces() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  SimplicialComplex(int m, std::vector<Face> facets);

  int m_ = 0;
  std::vector<Face> facets_;
  int dimension_ = -1;
};

/// Faces with d+1 vertices in lexicographic order; d = -1 gives [∅].
std::vector<Face> faces_of_dim(const SimplicialComplex& complex, int d);

/// (f_0, ..., f_{n-1}); empty for {∅}.
IntegerSequence f_vector(const SimplicialComplex& complex);

/// {τ : σ∪τ ∈ K, σ∩τ = ∅} on the same [m]. Throws PreconditionError if σ ∉ K.
SimplicialComplex link(const SimplicialComplex& complex, Face sigma);
/// {τ : σ∪τ ∈ K} on the same [m]. Throws PreconditionError if σ ∉ K.
SimplicialComplex star(const SimplicialComplex& complex, Face sigma);

/// Minimal non-faces, lexicographic. These generate the Stanley-Reisner ideal.
std::vector<Face> missing_faces(const SimplicialComplex& complex);

bool is_flag(const SimplicialComplex& complex);

/// Largest q such that every q-subset of [m] is a face.
int neighbourliness(const SimplicialComplex& complex);

/// {ω ⊂ [m] : [m]∖ω ∉ K}. Throws PreconditionError for the full simplex.
SimplicialComplex dual_complex(const SimplicialComplex& complex);

/// K_ω = {σ ∈ K : σ ⊂ ω} on the same [m].
SimplicialComplex full_subcomplex(const SimplicialComplex& complex, Face omega);

/// Adds vertex m+1 to every facet.
SimplicialComplex cone(const SimplicialComplex& complex);
/// Some vertex lies in every facet.
bool is_cone(const SimplicialComplex& complex);

/// f_0 - f_1 + f_2 - ...; zero for {∅}.
Integer euler_characteristic(const SimplicialComplex& complex);

/// `map[i-1]` is the image of vertex i. True iff every facet of `source`
/// maps onto a face of `target`. Throws std::invalid_argument when the map
/// is not total on [m1] or leaves [m2].
bool validate_simplicial_map(const SimplicialComplex& source,
                             const SimplicialComplex& target,
                             const std::vector<int>& map);

}  // namespace frl
