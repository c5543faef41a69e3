#include "frl/generators.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace frl {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

// Gale: every two vertices outside S are separated by an even number of S-vertices.
bool gale_evenness(Face subset, int m) {
  int previous_gap = 0;  // vertex not in S
  int between = 0;
  for (int v = 1; v <= m; ++v) {
    if (subset.contains(v)) {
      ++between;
      continue;
    }
    if (previous_gap != 0 && between % 2 != 0) return false;
    previous_gap = v;
    between = 0;
  }
  return true;
}

}  // namespace

SimplicialComplex full_simplex(int m) {
  return SimplicialComplex::from_facets(m, std::vector<Face>{Face::full(m)});
}

SimplicialComplex simplex_boundary(int m) {
  std::vector<Face> facets;
  const Face all = Face::full(m);
  for (int v = 1; v <= m; ++v) facets.push_back(all.without(v));
  return SimplicialComplex::from_facets(m, facets);
}

SimplicialComplex polygon(int m) {
  require(m >= 3, "polygon needs at least 3 vertices");
  std::vector<Face> facets;
  for (int v = 1; v <= m; ++v) facets.push_back(Face{v, v % m + 1});
  return SimplicialComplex::from_facets(m, facets);
}

SimplicialComplex disjoint_points(int m) {
  std::vector<Face> facets;
  for (int v = 1; v <= m; ++v) facets.push_back(Face{v});
  return SimplicialComplex::from_facets(m, facets);
}

SimplicialComplex cyclic_boundary(int n, int m) {
  require(n >= 1, "cyclic polytope dimension must be positive");
  require(m > n, "cyclic polytope C^n(m) needs m > n");
  require(m <= kMaxVertices, "too many vertices");
  std::vector<Face> facets;
  // Gosper's hack over n-subsets of [m].
  Face::Mask subset = (Face::Mask{1} << n) - 1;
  const Face::Mask limit = Face::Mask{1} << m;
  while (subset < limit) {
    const Face candidate = Face::from_mask(subset);
    if (gale_evenness(candidate, m)) facets.push_back(candidate);
    const Face::Mask low = subset & (~subset + 1);
    const Face::Mask ripple = subset + low;
    subset = (((ripple ^ subset) >> 2) / low) | ripple;
  }
  return SimplicialComplex::from_facets(m, facets);
}

SimplicialComplex stellar_subdivide_facet(const SimplicialComplex& complex, Face facet) {
  const int apex = complex.num_vertices() + 1;
  std::vector<Face> facets;
  bool found = false;
  for (Face f : complex.facets()) {
    if (f == facet) {
      found = true;
      continue;
    }
    facets.push_back(f);
  }
  if (!found) throw PreconditionError("stellar subdivision: " + facet.to_string() + " is not a facet");
  for_each_vertex(facet, [&](int v) { facets.push_back(facet.without(v).with(apex)); });
  return SimplicialComplex::from_facets(apex, facets);
}

SimplicialComplex stacked_sphere(int n, int k, std::uint64_t seed) {
  require(n >= 2, "stacked sphere needs n >= 2");
  require(k >= 0, "number of subdivisions must be nonnegative");
  require(n + 1 + k <= kMaxVertices, "too many vertices");
  std::mt19937_64 rng(seed);
  SimplicialComplex current = simplex_boundary(n + 1);
  for (int step = 0; step < k; ++step) {
    const auto& facets = current.facets();
    const Face chosen = facets[rng() % facets.size()];
    current = stellar_subdivide_facet(current, chosen);
  }
  return current;
}

SimplicialComplex torus7() {
  std::vector<Face> facets;
  auto vertex = [](int i) { return (i % 7) + 1; };
  for (int i = 0; i < 7; ++i) {
    facets.push_back(Face{vertex(i), vertex(i + 1), vertex(i + 3)});
    facets.push_back(Face{vertex(i), vertex(i + 2), vertex(i + 3)});
  }
  return SimplicialComplex::from_facets(7, facets);
}

SimplicialComplex torus9() {
  auto vertex = [](int row, int col) { return 3 * (row % 3) + (col % 3) + 1; };
  std::vector<Face> facets;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      facets.push_back(Face{vertex(r, c), vertex(r + 1, c), vertex(r + 1, c + 1)});
      facets.push_back(Face{vertex(r, c), vertex(r, c + 1), vertex(r + 1, c + 1)});
    }
  }
  return SimplicialComplex::from_facets(9, facets);
}

SimplicialComplex rp2_6() {
  return SimplicialComplex::from_facets(
      6, std::vector<std::vector<int>>{{1, 2, 4}, {1, 2, 6}, {1, 3, 5}, {1, 3, 6}, {1, 4, 5},
                                       {2, 3, 4}, {2, 3, 5}, {2, 5, 6}, {3, 4, 6}, {4, 5, 6}});
}

SimplicialComplex two_triangles_two_edges() {
  return SimplicialComplex::from_facets(
      5, std::vector<std::vector<int>>{{1, 2, 4}, {2, 3, 5}, {1, 3}, {4, 5}});
}

}  // namespace frl
