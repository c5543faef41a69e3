#include <random>

#include "doctest.h"
#include "frl/complex.hpp"
#include "frl/face_ring.hpp"
#include "frl/generators.hpp"
#include "frl/koszul.hpp"

using namespace frl;

namespace {

const auto Q = Coefficients::rationals();
const auto F2 = Coefficients::prime_field(2);

int wrap5(int i) { return (i - 1) % 5 + 1; }

KoszulElement mono(const SimplicialComplex& k, std::vector<int> v, Face u, Coefficients field) {
  return KoszulElement::monomial(k, v, u, FieldScalar::one(field));
}

FieldScalar sign(int s, Coefficients field) { return FieldScalar(s, field); }

CohomologyClass scaled(const CohomologyClass& c, const FieldScalar& s) {
  CohomologyClass out = c;
  for (auto& x : out.coordinates) x = x * s;
  return out;
}

bool same(const CohomologyClass& a, const CohomologyClass& b) {
  return a.i == b.i && a.j == b.j && a.coordinates == b.coordinates;
}

}  // namespace

TEST_SUITE("koszul") {

TEST_CASE("monomials outside the face ring vanish") {
  const auto k = polygon(4);
  CHECK(mono(k, {1, 3}, Face{}, Q).is_zero());
  CHECK_FALSE(mono(k, {1, 1, 2}, Face{3, 4}, Q).is_zero());
  const auto x = mono(k, {1, 1, 2}, Face{3, 4}, Q);
  const auto& m = x.terms().begin()->first;
  CHECK(m.homological_degree() == 2);
  CHECK(m.internal_degree() == 5);
  CHECK(m.multidegree() == std::vector<int>{2, 1, 1, 1});
}

TEST_CASE("the differential squares to zero") {
  std::mt19937_64 rng(1);
  for (const auto& k : {polygon(5), torus7(), cyclic_boundary(4, 7)}) {
    const int m = k.num_vertices();
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<int> v;
      for (int e = 0; e < static_cast<int>(rng() % 3); ++e) v.push_back(1 + static_cast<int>(rng() % m));
      const Face u = Face::from_mask(rng() & ((Face::Mask{1} << m) - 1));
      const auto x = mono(k, v, u, Q);
      CHECK(koszul_differential(k, koszul_differential(k, x)).is_zero());
    }
  }
}

TEST_CASE("the differential is a derivation") {
  const auto k = full_simplex(4);
  const auto a = mono(k, {1}, Face{2, 3}, Q);
  const auto b = mono(k, {}, Face{4}, Q);
  // d(ab) = d(a) b + (-1)^{|a|} a d(b) with |a| = 2.
  auto lhs = koszul_differential(k, koszul_multiply(k, a, b));
  auto rhs = koszul_multiply(k, koszul_differential(k, a), b);
  const auto second = koszul_multiply(k, a, koszul_differential(k, b));
  for (const auto& [mono_term, c] : second.terms()) {
    rhs.add(k, mono_term, c);
  }
  CHECK(lhs == rhs);
}

TEST_CASE("multidegrees of a given total") {
  const auto alphas = multidegrees_of_total(3, 2);
  CHECK(alphas.size() == 6);
  CHECK(alphas.front() == std::vector<int>{2, 0, 0});
  CHECK(alphas.back() == std::vector<int>{0, 0, 2});
}

TEST_CASE("Koszul cohomology equals Hochster's formula") {
  for (const auto& k : {polygon(4), polygon(5), polygon(6), two_triangles_two_edges(), simplex_boundary(5),
                        cyclic_boundary(3, 6), cyclic_boundary(4, 7), stacked_sphere(3, 3, 1),
                        disjoint_points(4), torus7(), rp2_6(), full_simplex(3),
                        SimplicialComplex::from_facets(5, std::vector<std::vector<int>>{{1, 2, 3}, {3, 4}}),
                        SimplicialComplex::from_facets(2, std::vector<Face>{})}) {
    for (const auto field : {Q, F2}) {
      const auto table = koszul_betti(k, field);
      CHECK(table == hochster_betti(k, field));
      CHECK(table == koszul_betti(k, field, Execution::serial));
    }
  }
}

TEST_CASE("nothing survives beyond internal degree m") {
  for (const auto& k : {polygon(5), disjoint_points(3), rp2_6()}) {
    const int m = k.num_vertices();
    CHECK(koszul_betti(k, Q, Execution::parallel, m + 1) == koszul_betti(k, Q));
  }
}

TEST_CASE("simplex boundary cohomology is generated by 1 and one top class") {
  for (int m = 2; m <= 5; ++m) {
    const auto k = simplex_boundary(m);
    const TorAlgebra tor(k, Q);
    CHECK(tor.betti().entries().size() == 2);
    CHECK(tor.betti()(1, m) == 1);
    std::vector<int> v;
    for (int i = 1; i < m; ++i) v.push_back(i);
    const auto top = mono(k, v, Face{m}, Q);
    CHECK(tor.is_cocycle(top));
    CHECK_FALSE(tor.class_of(top).is_zero());
  }
  const TorAlgebra simplex(full_simplex(4), Q);
  CHECK(simplex.betti().entries().size() == 1);
}

TEST_CASE("class extraction rejects non-cocycles") {
  const auto k = polygon(5);
  const TorAlgebra tor(k, Q);
  CHECK_THROWS_AS(tor.class_of(mono(k, {}, Face{1}, Q)), std::invalid_argument);
  auto mixed = mono(k, {1}, Face{3}, Q);
  mixed.add(k, mono(k, {}, Face{2}, Q).terms().begin()->first, FieldScalar::one(Q));
  CHECK_THROWS_AS(tor.class_of(mixed), std::invalid_argument);
}

TEST_CASE("basis representatives are cocycles with the right coordinates") {
  for (const auto& k : {polygon(5), cyclic_boundary(3, 6), two_triangles_two_edges()}) {
    for (const auto field : {Q, F2}) {
      const TorAlgebra tor(k, field);
      for (const auto& [key, beta] : tor.betti().entries()) {
        const auto reps = tor.basis(key.first, key.second);
        CHECK(static_cast<std::int64_t>(reps.size()) == beta);
        for (std::size_t q = 0; q < reps.size(); ++q) {
          CHECK(tor.is_cocycle(reps[q]));
          CHECK(same(tor.class_of(reps[q]), tor.basis_class(key.first, key.second, q)));
        }
      }
    }
  }
}

TEST_CASE("pentagon products vanish exactly on shared indices") {
  const auto k = polygon(5);
  for (const auto field : {Q, F2}) {
    const TorAlgebra tor(k, field);
    int nonzero = 0;
    for (int i = 1; i <= 5; ++i) {
      for (int j = 1; j <= 5; ++j) {
        const auto a = tor.class_of(mono(k, {i}, Face{wrap5(i + 2)}, field));
        const auto b = tor.class_of(mono(k, {j}, Face{wrap5(j + 2), wrap5(j + 3)}, field));
        CHECK_FALSE(a.is_zero());
        CHECK_FALSE(b.is_zero());
        const Face indices{i, wrap5(i + 2), j, wrap5(j + 2), wrap5(j + 3)};
        const auto product = tor.product(a, b);
        CHECK(product.i == 3);
        CHECK(product.j == 5);
        CHECK(product.is_zero() == (indices.size() != 5));
        nonzero += !product.is_zero();
      }
    }
    CHECK(nonzero == 5);
  }
  const TorAlgebra tor(k, Q);
  const auto a = tor.class_of(mono(k, {1}, Face{3}, Q));
  CHECK_FALSE(tor.product(a, tor.class_of(mono(k, {2}, Face{4, 5}, Q))).is_zero());
  CHECK(tor.product(a, tor.class_of(mono(k, {4}, Face{1, 2}, Q))).is_zero());
}

TEST_CASE("unit and graded commutativity on the pentagon") {
  const auto k = polygon(5);
  for (const auto field : {Q, F2}) {
    const TorAlgebra tor(k, field);
    std::vector<CohomologyClass> basis;
    for (const auto& [key, beta] : tor.betti().entries()) {
      for (std::int64_t q = 0; q < beta; ++q) basis.push_back(tor.basis_class(key.first, key.second, q));
    }
    for (const auto& x : basis) {
      CHECK(same(tor.product(tor.unit(), x), x));
      CHECK(same(tor.product(x, tor.unit()), x));
    }
    for (const auto& a : basis) {
      for (const auto& b : basis) {
        const int total = (2 * a.j - a.i) * (2 * b.j - b.i);
        CHECK(same(tor.product(a, b), scaled(tor.product(b, a), sign(total % 2 == 0 ? 1 : -1, field))));
      }
    }
  }
}

TEST_CASE("serial and parallel Tor-algebras agree") {
  const auto k = cyclic_boundary(4, 7);
  const TorAlgebra a(k, Q, Execution::serial);
  const TorAlgebra b(k, Q, Execution::parallel);
  CHECK(a.betti() == b.betti());
  for (const auto& [key, beta] : a.betti().entries()) {
    const auto ra = a.basis(key.first, key.second);
    const auto rb = b.basis(key.first, key.second);
    CHECK(ra == rb);
  }
}

}  // TEST_SUITE
