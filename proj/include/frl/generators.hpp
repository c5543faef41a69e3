#pragma once

#include <cstdint>

#include "frl/complex.hpp"

namespace frl {

/// Δ^{m-1}: the single facet [m].
SimplicialComplex full_simplex(int m);
/// ∂Δ^{m-1}: all (m-1)-subsets of [m]. m = 1 gives {∅}.
SimplicialComplex simplex_boundary(int m);
/// Boundary of an m-gon, vertices in cyclic order.
SimplicialComplex polygon(int m);
/// m isolated vertices.
SimplicialComplex disjoint_points(int m);

/// Boundary complex of the cyclic polytope C^n(m) via Gale's evenness
/// condition. Requires m > n >= 1.
SimplicialComplex cyclic_boundary(int n, int m);

/// Starts from ∂Δ^n and applies k stellar subdivisions of facets picked by
/// a mt19937_64 seeded with `seed`. New vertices are numbered n+2, n+3, ...
SimplicialComplex stacked_sphere(int n, int k, std::uint64_t seed);

/// Replaces facet `facet` by the cone over its boundary with apex m+1.
SimplicialComplex stellar_subdivide_facet(const SimplicialComplex& complex, Face facet);

/// Minimal 7-vertex (Möbius) torus: {i,i+1,i+3}, {i,i+2,i+3} mod 7.
SimplicialComplex torus7();
/// 9-vertex torus from the 3x3 grid with one diagonal per square.
SimplicialComplex torus9();
/// Minimal 6-vertex real projective plane.
SimplicialComplex rp2_6();
/// Five-vertex 2-complex with facets 124, 235, 13, 45; its Stanley-Reisner
/// ideal is (v1v5, v3v4, v1v2v3, v2v4v5).
SimplicialComplex two_triangles_two_edges();

}  // namespace frl
