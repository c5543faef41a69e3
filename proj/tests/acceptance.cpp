// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "frl/arrangements.hpp"
#include "frl/complex.hpp"
#include "frl/face_ring.hpp"
#include "frl/fvectors.hpp"
#include "frl/generators.hpp"
#include "frl/homology.hpp"
#include "frl/koszul.hpp"
#include "frl/moment_angle.hpp"
#include "frl/quotients.hpp"
#include "oracles.hpp"

using namespace frl;

namespace {

const auto Q = Coefficients::rationals();
const auto F2 = Coefficients::prime_field(2);
const std::vector<Coefficients> kFields = {Q, F2};

struct Named {
  std::string name;
  SimplicialComplex complex;
};

std::vector<Named> corpus() {
  std::vector<Named> out = {{"square", polygon(4)},
                            {"pentagon", polygon(5)},
                            {"hexagon", polygon(6)},
                            {"two triangles and two edges", two_triangles_two_edges()},
                            {"torus7", torus7()}};
  for (int n = 1; n <= 5; ++n) out.push_back({"boundary:" + std::to_string(n), simplex_boundary(n + 1)});
  for (int m = 4; m <= 8; ++m) out.push_back({"cyclic:3:" + std::to_string(m), cyclic_boundary(3, m)});
  for (int m = 5; m <= 8; ++m) out.push_back({"cyclic:4:" + std::to_string(m), cyclic_boundary(4, m)});
  for (int k = 0; k <= 4; ++k) out.push_back({"stacked:3:" + std::to_string(k), stacked_sphere(3, k, 2024)});
  for (int m = 1; m <= 5; ++m) out.push_back({"points:" + std::to_string(m), disjoint_points(m)});
  return out;
}

const std::vector<Named>& the_corpus() {
  static const auto c = corpus();
  return c;
}

bool is_full_simplex(const SimplicialComplex& k) {
  return k.facets().size() == 1 && k.facets().front() == Face::full(k.num_vertices());
}

IntegerSequence h_of(const SimplicialComplex& k) { return h_from_f(f_vector(k), k.rank()); }

std::string show(const std::vector<std::int64_t>& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ")";
  return out.str();
}

std::string show(const IntegerSequence& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i].get_str();
  out << ")";
  return out.str();
}

// Failing checks record a reason; the first one is printed.
class Report {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok && first_.empty()) first_ = what;
    failed_ = failed_ || !ok;
  }
  bool ok() const { return !failed_; }
  const std::string& reason() const { return first_; }

 private:
  bool failed_ = false;
  std::string first_;
};

using Criterion = std::function<void(Report&)>;

void betti_routes_agree(Report& r) {
  for (const auto& [name, k] : the_corpus()) {
    for (auto field : kFields) {
      const auto h = hochster_betti(k, field);
      r.require(h == koszul_betti(k, field), name + " over " + field.name() + ": Koszul differs");
      r.require(h == zk_bigraded_betti(k, field), name + " over " + field.name() + ": cells differ");
    }
  }
}

void square_table(Report& r) {
  const auto k = polygon(4);
  for (auto field : kFields) {
    for (const auto& table : {hochster_betti(k, field), koszul_betti(k, field), zk_bigraded_betti(k, field)}) {
      r.require(table.entries().size() == 3, "unexpected nonzero entries");
      r.require(table(0, 0) == 1 && table(1, 2) == 2 && table(2, 4) == 1, "wrong entries");
    }
  }
}

void pentagon_ring(Report& r) {
  const auto k = polygon(5);
  const auto wrap = [](int i) { return (i - 1) % 5 + 1; };
  for (auto field : kFields) {
    r.require(zk_bigraded_betti(k, field).total_degree_vector() ==
                  std::vector<std::int64_t>{1, 0, 0, 5, 5, 0, 0, 1},
              "Betti vector over " + field.name());
    const TorAlgebra tor(k, field);
    const auto one = FieldScalar::one(field);
    for (int i = 1; i <= 5; ++i) {
      for (int j = 1; j <= 5; ++j) {
        const auto a = tor.class_of(KoszulElement::monomial(k, {i}, Face{wrap(i + 2)}, one));
        const auto b = tor.class_of(KoszulElement::monomial(k, {j}, Face{wrap(j + 2), wrap(j + 3)}, one));
        const bool distinct = Face{i, wrap(i + 2), j, wrap(j + 2), wrap(j + 3)}.size() == 5;
        r.require(tor.product(a, b).is_zero() != distinct,
                  "product " + std::to_string(i) + "," + std::to_string(j) + " over " + field.name());
      }
    }
    r.require(poincare_algebra_check(k, field).holds(), "Poincare algebra over " + field.name());
  }
}

void small_betti_vectors(Report& r) {
  for (auto field : kFields) {
    r.require(zk_bigraded_betti(polygon(4), field).total_degree_vector() ==
                  std::vector<std::int64_t>{1, 0, 0, 2, 0, 0, 1},
              "square over " + field.name());
    for (int m = 2; m <= 5; ++m) {
      std::vector<std::int64_t> sphere(2 * m, 0);
      sphere.front() = 1;
      sphere.back() = 1;
      const auto got = zk_bigraded_betti(simplex_boundary(m), field).total_degree_vector();
      r.require(got == sphere, "boundary of the simplex on " + std::to_string(m) + " vertices: " + show(got));
    }
  }
}

void chi_identity(Report& r) {
  for (const auto& [name, k] : the_corpus()) {
    const auto closed = chi_closed_form(k);
    r.require(chi_from_cells(k) == closed, name + ": counted cells");
    // literal enumeration of sign vectors, independent of the count formula
    IntegerSequence c(2 * k.num_vertices() + 1, 0);
    for (const auto& cell : enumerate_cells(k)) {
      if (cell.homological_degree() % 2 == 0) {
        c[2 * cell.internal_degree()] += 1;
      } else {
        c[2 * cell.internal_degree()] -= 1;
      }
    }
    r.require(Polynomial(c) == closed, name + ": enumerated cells");
  }
}

void dehn_sommerville(Report& r) {
  const auto check_torus = [&](const SimplicialComplex& k, const IntegerSequence& expected, const char* name) {
    const auto h = h_of(k);
    r.require(h == expected, std::string(name) + " h = " + show(h));
    // h_{n-i} - h_i = (-1)^i C(n,i) (chi(K) - 2) with n = 3
    r.require(h[3] - h[0] == -2 && h[2] - h[1] == 6, std::string(name) + " differences");
    r.require(generalized_ds_check(f_vector(k), 3, euler_characteristic(k)), std::string(name) + " relations");
  };
  check_torus(torus7(), IntegerSequence{1, 4, 10, -1}, "torus7");
  check_torus(torus9(), IntegerSequence{1, 6, 12, -1}, "torus9");
  int spheres = 0;
  for (const auto& [name, k] : the_corpus()) {
    if (!is_homology_sphere(k, Q)) continue;
    ++spheres;
    const auto h = h_of(k);
    const int n = k.rank();
    for (int i = 0; i <= n; ++i) r.require(h[i] == h[n - i], name + " h not symmetric");
    r.require(ds_f_form_check(f_vector(k), n), name + " f-form");
  }
  r.require(spheres >= 20, "too few spheres recognised: " + std::to_string(spheres));
}

void arrangement_complements(Report& r) {
  for (int m = 3; m <= 5; ++m) {
    const auto dims = complement_cohomology(disjoint_points(m), Q);
    std::vector<std::int64_t> expected(m + 2, 0);
    expected[0] = 1;
    for (int k = 2; k <= m; ++k) expected[k + 1] = (k - 1) * oracle::choose(m, k).get_si();
    r.require(dims == expected, std::to_string(m) + " points: " + show(dims));
  }
  const auto three = complement_cohomology(disjoint_points(3), Q);
  r.require(three.size() == 5 && three[1] == 0 && three[2] == 0 && three[3] == 3 && three[4] == 2,
            "three points");
  for (const auto& [name, k] : the_corpus()) {
    if (is_full_simplex(k)) continue;  // empty arrangement, no dual complex
    for (auto field : kFields) {
      const auto dims = complement_cohomology(k, field);
      r.require(goresky_macpherson(k, field) == dims, name + " over " + field.name());
      r.require(dims.size() < 2 || dims[1] == 0, name + " has H^1");
      r.require(dims.size() < 3 || dims[2] == 0, name + " has H^2");
    }
  }
}

void m_vectors(Report& r) {
  r.require(pseudo_power(28, 4) == 40, "28 in degree 4");
  for (long a = 0; a <= 50; ++a) r.require(pseudo_power(a, 1) == oracle::choose(a + 1, 2), "a = " + std::to_string(a));
  int cm = 0;
  for (const auto& [name, k] : the_corpus()) {
    if (!is_cohen_macaulay(k, Q)) continue;
    ++cm;
    r.require(is_m_vector(h_of(k)), name + " h = " + show(h_of(k)));
  }
  r.require(cm >= 20, "too few Cohen-Macaulay complexes: " + std::to_string(cm));
}

void extremal_spheres(Report& r) {
  for (int n = 2; n <= 5; ++n) {
    for (int m = n + 1; m <= 9; ++m) {
      const auto k = cyclic_boundary(n, m);
      const auto tag = "cyclic " + std::to_string(n) + "," + std::to_string(m);
      r.require(f_vector(k) == cyclic_f_vector(n, m), tag + " f = " + show(f_vector(k)));
      std::set<oracle::Mask> facets;
      for (Face f : k.facets()) facets.insert(f.mask());
      r.require(facets == oracle::cyclic_facets_geometric(n, m), tag + " against the moment curve");
      const auto ubt = ubt_check(f_vector(k), n, m);
      r.require(ubt.holds && ubt.equality, tag + " upper bound equality");
    }
  }
  for (int n = 3; n <= 5; ++n) {
    for (int steps = 0; steps <= 4; ++steps) {
      const auto k = stacked_sphere(n, steps, 7 + steps);
      const auto lbt = lbt_check(f_vector(k), n);
      r.require(lbt.holds && lbt.equality, "stacked " + std::to_string(n) + "," + std::to_string(steps));
    }
  }
}

void reisner_and_betti(Report& r) {
  int gorenstein = 0;
  for (const auto& [name, k] : the_corpus()) {
    const int m = k.num_vertices();
    const int n = k.rank();
    for (auto field : kFields) {
      const auto table = hochster_betti(k, field);
      const bool short_resolution = table.max_homological_degree() <= m - n;
      r.require(is_cohen_macaulay(k, field) == short_resolution, name + " over " + field.name());
      if (!is_gorenstein_star(k, field)) continue;
      ++gorenstein;
      for (int i = 0; i <= m; ++i) {
        for (int j = 0; j <= m; ++j) {
          r.require(table(i, j) == table(m - n - i, m - j), name + " table not symmetric");
        }
      }
    }
  }
  r.require(gorenstein >= 40, "too few Gorenstein* cases: " + std::to_string(gorenstein));
}

void quotient_examples(Report& r) {
  const std::vector<std::tuple<std::string, SimplicialComplex, std::string, std::vector<std::int64_t>>> cases = {
      {"triangle", simplex_boundary(3), "1,0,-1;0,1,-1", {1, 1, 1}},
      {"square", polygon(4), "1,0,-1,0;0,1,0,-1", {1, 2, 1}}};
  for (const auto& [name, k, text, expected] : cases) {
    const auto lambda = CharMatrix::parse_inline(text);
    r.require(char_matrix_check(k, lambda).unimodular, name + " minors");
    for (auto field : kFields) {
      const auto dims = quotient_graded_dims(k, lambda, field);
      r.require(dims == expected, name + " quotient " + show(dims));
      std::vector<std::int64_t> h;
      for (const auto& x : h_of(k)) h.push_back(x.get_si());
      r.require(dims == h, name + " differs from h");
    }
  }
}

void resolution_identity(Report& r) {
  for (const auto& [name, k] : the_corpus()) {
    for (auto field : kFields) {
      const auto identity = euler_resolution_identity(k, field);
      r.require(identity.holds(), name + " over " + field.name());
      // rebuild the Betti side from the Koszul route
      const int m = k.num_vertices();
      IntegerSequence c(2 * m + 1, 0);
      const auto table = koszul_betti(k, field);
      for (const auto& [key, beta] : table.entries()) {
        if (key.first % 2 == 0) {
          c[2 * key.second] += beta;
        } else {
          c[2 * key.second] -= beta;
        }
      }
      r.require(Polynomial(c) == identity.series_side, name + " Koszul side");
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Criterion>> criteria = {
      {"bigraded Betti numbers agree across Hochster, Koszul and cellular routes", betti_routes_agree},
      {"square boundary Betti table", square_table},
      {"pentagon Betti vector, product rule and Poincare duality", pentagon_ring},
      {"Betti vectors of the square and simplex boundaries", small_betti_vectors},
      {"Euler polynomial of Z_K from cells matches the h-vector form", chi_identity},
      {"Dehn-Sommerville relations for tori and spheres", dehn_sommerville},
      {"arrangement complements and the Goresky-MacPherson formula", arrangement_complements},
      {"pseudo-powers and M-vectors", m_vectors},
      {"cyclic and stacked spheres are extremal", extremal_spheres},
      {"Cohen-Macaulay and Gorenstein* consistency with Betti tables", reisner_and_betti},
      {"characteristic matrices and quotient dimensions", quotient_examples},
      {"Euler identity of the minimal resolution", resolution_identity}};

  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Report report;
    const auto start = std::chrono::steady_clock::now();
    try {
      run(report);
    } catch (const std::exception& e) {
      report.require(false, std::string("exception: ") + e.what());
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    std::ostringstream line;
    line << (report.ok() ? "PASS  " : "FAIL  ") << name;
    if (!report.ok()) line << "  [" << report.reason() << "]";
    line.setf(std::ios::fixed);
    line.precision(2);
    line << "  (" << elapsed.count() << "s)";
    std::cout << line.str() << "\n";
    failures += !report.ok();
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
