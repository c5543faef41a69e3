#include "doctest.h"
#include "frl/complex.hpp"
#include "frl/face_ring.hpp"
#include "frl/fvectors.hpp"
#include "frl/generators.hpp"
#include "frl/koszul.hpp"
#include "frl/moment_angle.hpp"
#include "oracles.hpp"

using namespace frl;

namespace {

const auto Q = Coefficients::rationals();
const auto F2 = Coefficients::prime_field(2);

std::vector<SimplicialComplex> sample() {
  return {polygon(4),         polygon(5),        two_triangles_two_edges(),     simplex_boundary(4),
          cyclic_boundary(3, 6), stacked_sphere(3, 2, 9), disjoint_points(3), torus7(),
          rp2_6(),            full_simplex(3),   cone(polygon(4)),
          SimplicialComplex::from_facets(5, std::vector<std::vector<int>>{{1, 2, 3}, {3, 4}}),
          SimplicialComplex::from_facets(2, std::vector<Face>{})};
}

Polynomial poly(std::initializer_list<long> coefficients) {
  IntegerSequence c;
  for (long x : coefficients) c.emplace_back(x);
  return Polynomial(c);
}

}  // namespace

TEST_SUITE("moment_angle") {

TEST_CASE("cell counts") {
  CHECK(cell_count(disjoint_points(2), 0, 1) == 2);
  CHECK(cell_count(polygon(5), 0, 0) == 1);
  for (const auto& k : sample()) {
    if (k.num_vertices() > 7) continue;
    const auto brute = oracle::cell_counts(k);
    const int m = k.num_vertices();
    long total = 0;
    for (int p = 0; p <= m; ++p) {
      for (int q = 0; q <= p; ++q) {
        const auto it = brute.find({q, p});
        CHECK(cell_count(k, q, p) == (it == brute.end() ? 0 : it->second));
        total += cell_count(k, q, p).get_si();
      }
    }
    const auto cells = enumerate_cells(k);
    CHECK(static_cast<long>(cells.size()) == total);
    std::map<std::pair<int, int>, long> counted;
    for (const auto& c : cells) {
      CHECK(k.contains(c.d));
      CHECK_FALSE(c.d.intersects(c.t));
      ++counted[{c.homological_degree(), c.internal_degree()}];
    }
    CHECK(counted == brute);
  }
}

TEST_CASE("cellular, Koszul and Hochster tables agree") {
  for (const auto& k : sample()) {
    for (const auto field : {Q, F2}) {
      const auto cells = zk_bigraded_betti(k, field);
      CHECK(cells == hochster_betti(k, field));
      CHECK(cells == koszul_betti(k, field));
      CHECK(cells == zk_bigraded_betti(k, field, Execution::serial));
    }
  }
}

TEST_CASE("ordinary Betti numbers of Z_K") {
  CHECK(zk_bigraded_betti(polygon(5), Q).total_degree_vector() ==
        std::vector<std::int64_t>{1, 0, 0, 5, 5, 0, 0, 1});
  CHECK(zk_bigraded_betti(polygon(4), Q).total_degree_vector() ==
        std::vector<std::int64_t>{1, 0, 0, 2, 0, 0, 1});
  for (int m = 2; m <= 6; ++m) {
    std::vector<std::int64_t> sphere(2 * m, 0);
    sphere.front() = 1;
    sphere.back() = 1;
    CHECK(zk_bigraded_betti(simplex_boundary(m), F2).total_degree_vector() == sphere);
  }
}

TEST_CASE("sphere top class sits in bidegree (-(m-n), 2m)") {
  for (const auto& k : {polygon(6), cyclic_boundary(4, 7), stacked_sphere(3, 3, 2), simplex_boundary(5)}) {
    const int m = k.num_vertices();
    const auto table = zk_bigraded_betti(k, Q);
    CHECK(table(m - k.rank(), m) == 1);
    CHECK(table.max_homological_degree() == m - k.rank());
  }
}

TEST_CASE("chi polynomials") {
  for (int m = 2; m <= 6; ++m) {
    IntegerSequence c(2 * m + 1, 0);
    c[0] = 1;
    c[2 * m] = -1;
    CHECK(chi_polynomial(simplex_boundary(m)) == Polynomial(c));
  }
  CHECK(chi_polynomial(full_simplex(4)) == poly({1}));
  for (const auto& k : sample()) {
    CHECK(chi_from_cells(k) == chi_closed_form(k));
    if (k.num_vertices() > k.rank()) CHECK(chi_polynomial(k).evaluate(1) == 0);
  }
}

TEST_CASE("chi of Z_K agrees with the Betti table") {
  for (const auto& k : sample()) {
    IntegerSequence c(2 * k.num_vertices() + 1, 0);
    const auto table = zk_bigraded_betti(k, Q);
    for (const auto& [key, beta] : table.entries()) {
      if (key.first % 2 == 0) {
        c[2 * key.second] += beta;
      } else {
        c[2 * key.second] -= beta;
      }
    }
    CHECK(Polynomial(c) == chi_polynomial(k));
  }
}

TEST_CASE("chi of the torus pair and the complement") {
  for (const auto& k : sample()) {
    const int m = k.num_vertices();
    const int n = k.rank();
    const auto pair = chi_pair_polynomials(k);
    const auto chi = chi_polynomial(k);
    CHECK(pair.relative == chi - Polynomial::one_minus_t2_power(m));
    const auto h = h_from_f(f_vector(k), n);
    if (h[n] == 0) CHECK(pair.complement == chi);
    if (h[n] == 1) {
      const auto torus = Polynomial::one_minus_t2_power(m);
      CHECK(pair.complement == (n % 2 == 1 ? chi + torus : chi - torus));
    }
  }
}

TEST_CASE("relative Poincare duality on manifolds") {
  CHECK(relative_pd_check(torus7()));
  CHECK(relative_pd_check(torus9(), F2));
  CHECK(relative_pd_check(rp2_6(), F2));
  for (const auto& k : {polygon(5), cyclic_boundary(4, 8), stacked_sphere(4, 2, 1), simplex_boundary(4)}) {
    CHECK(relative_pd_check(k));
  }
  CHECK_THROWS_AS(relative_pd_check(two_triangles_two_edges()), PreconditionError);
  CHECK_THROWS_AS(relative_pd_check(SimplicialComplex::from_facets(
                      5, std::vector<std::vector<int>>{{1, 2, 3}, {3, 4, 5}})),
                  PreconditionError);
}

TEST_CASE("bigraded Poincare duality") {
  CHECK(pd_symmetry_check(polygon(5), Q));
  CHECK(pd_symmetry_check(polygon(4), F2));
  CHECK(pd_symmetry_check(cyclic_boundary(3, 6), Q));
  CHECK_THROWS_AS(pd_symmetry_check(torus7(), Q), PreconditionError);
}

TEST_CASE("homotopy information") {
  const auto square = homotopy_info(polygon(4));
  CHECK(square.neighbourliness == 1);
  CHECK(square.connectivity == 2);
  CHECK(square.first_nontrivial_rank == 2);
  for (int m = 2; m <= 6; ++m) {
    const auto sphere = homotopy_info(simplex_boundary(m));
    CHECK(sphere.neighbourliness == m - 1);
    CHECK(sphere.connectivity + 1 == 2 * m - 1);
    CHECK(sphere.first_nontrivial_rank == 1);
    const auto points = homotopy_info(disjoint_points(m));
    CHECK(points.neighbourliness == 1);
    CHECK(points.first_nontrivial_rank == oracle::choose(m, 2));
  }
  CHECK_THROWS_AS(homotopy_info(full_simplex(3)), PreconditionError);
}

}  // TEST_SUITE
