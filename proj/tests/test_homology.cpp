#include "doctest.h"
#include "frl/complex.hpp"
#include "frl/generators.hpp"
#include "frl/homology.hpp"
#include "oracles.hpp"

using namespace frl;

namespace {

const auto Q = Coefficients::rationals();
const auto F2 = Coefficients::prime_field(2);

std::vector<long> dims(const HomologyProfile& p) {
  return {p.dims().begin(), p.dims().end()};
}

std::vector<SimplicialComplex> sample() {
  return {polygon(5),          torus7(),          torus9(),
          rp2_6(),             two_triangles_two_edges(), disjoint_points(4),
          cyclic_boundary(4, 7), stacked_sphere(3, 3, 5), full_simplex(4),
          SimplicialComplex::from_facets(4, std::vector<std::vector<int>>{{1, 2}, {3, 4}}),
          SimplicialComplex::from_facets(3, std::vector<Face>{})};
}

// Two triangles sharing the vertex 3.
SimplicialComplex bowtie() {
  return SimplicialComplex::from_facets(5, std::vector<std::vector<int>>{{1, 2, 3}, {3, 4, 5}});
}

}  // namespace

TEST_SUITE("homology") {

TEST_CASE("reduced homology of small spaces") {
  CHECK(dims(reduced_homology(simplex_boundary(3), Q)) == std::vector<long>{0, 0, 1});
  CHECK(dims(reduced_homology(torus7(), Q)) == std::vector<long>{0, 0, 2, 1});
  const auto empty = SimplicialComplex::from_facets(2, std::vector<Face>{});
  CHECK(reduced_homology(empty, Q)(-1) == 1);
  CHECK(reduced_homology(disjoint_points(3), Q)(0) == 2);
  CHECK(reduced_homology(full_simplex(5), Q).is_acyclic());
}

TEST_CASE("reduced homology matches brute-force boundary matrices") {
  for (const auto& k : sample()) {
    for (unsigned p : {0u, 2u, 3u}) {
      const auto field = p == 0 ? Q : Coefficients::prime_field(p);
      CHECK(dims(reduced_homology(k, field)) == oracle::reduced_homology(oracle::all_faces(k), p));
    }
  }
}

TEST_CASE("projective plane separates the coefficient fields") {
  CHECK(dims(reduced_homology(rp2_6(), Q)) == std::vector<long>{0, 0, 0, 0});
  CHECK(dims(reduced_homology(rp2_6(), F2)) == std::vector<long>{0, 0, 1, 1});
  CHECK(is_cohen_macaulay(rp2_6(), Q));
  CHECK_FALSE(is_cohen_macaulay(rp2_6(), F2));
}

TEST_CASE("Euler characteristic equals the alternating homology sum") {
  for (const auto& k : sample()) {
    for (const auto field : {Q, F2}) {
      const auto p = reduced_homology(k, field);
      Integer sum = 1;
      for (int d = -1; d <= p.top_degree(); ++d) sum += (d % 2 == 0 ? 1 : -1) * p(d);
      CHECK(sum == euler_characteristic(k));
    }
  }
}

TEST_CASE("cones are acyclic") {
  for (const auto& k : sample()) CHECK(reduced_homology(cone(k), Q).is_acyclic());
}

TEST_CASE("Cohen-Macaulay") {
  for (const auto& k : {polygon(6), cyclic_boundary(4, 8), stacked_sphere(3, 4, 2),
                        simplex_boundary(5), full_simplex(3)}) {
    CHECK(is_cohen_macaulay(k, Q));
    CHECK(is_cohen_macaulay(k, F2));
  }
  CHECK_FALSE(is_cohen_macaulay(torus7(), Q));
  CHECK_FALSE(is_cohen_macaulay(
      SimplicialComplex::from_facets(4, std::vector<std::vector<int>>{{1, 2}, {3, 4}}), Q));
  CHECK(is_cohen_macaulay(disjoint_points(4), Q));
}

TEST_CASE("Gorenstein* and homology spheres") {
  for (const auto& k : {polygon(6), cyclic_boundary(4, 8), stacked_sphere(3, 4, 2), simplex_boundary(5)}) {
    CHECK(is_gorenstein_star(k, Q));
    CHECK(is_homology_sphere(k, Q));
  }
  CHECK_FALSE(is_gorenstein_star(full_simplex(4), Q));
  CHECK_FALSE(is_gorenstein_star(torus7(), Q));
  CHECK_FALSE(is_homology_sphere(torus7(), Q));
  for (const auto& k : sample()) {
    if (is_gorenstein_star(k, Q)) CHECK(is_cohen_macaulay(k, Q));
  }
}

TEST_CASE("homology manifolds") {
  CHECK(is_homology_manifold(torus7(), Q));
  CHECK(is_homology_manifold(torus9(), F2));
  CHECK(is_homology_manifold(rp2_6(), F2));
  CHECK(is_homology_manifold(polygon(5), Q));
  CHECK_FALSE(is_homology_manifold(bowtie(), Q));
  CHECK_THROWS_AS(is_homology_manifold(two_triangles_two_edges(), Q), PreconditionError);
}

TEST_CASE("serial and parallel link sweeps agree") {
  for (const auto& k : sample()) {
    CHECK(is_cohen_macaulay(k, Q, Execution::serial) == is_cohen_macaulay(k, Q, Execution::parallel));
    CHECK(is_gorenstein_star(k, F2, Execution::serial) ==
          is_gorenstein_star(k, F2, Execution::parallel));
  }
}

}  // TEST_SUITE
