#include "frl/face_ring.hpp"

#include <algorithm>
#include <stdexcept>

#include "frl/fvectors.hpp"
#include "frl/homology.hpp"
#include "frl/koszul.hpp"
#include "frl/linalg.hpp"

namespace frl {

std::vector<Face> ideal_generators(const SimplicialComplex& complex) {
  return missing_faces(complex);
}

Integer HilbertSeries::series_coefficient(int power) const {
  if (power < 0) return 0;
  const int e = denominator_exponent;
  Integer total = 0;
  // 1/(1-t^2)^e = Σ_r C(r+e-1, e-1) t^{2r}
  for (int r = 0; 2 * r <= power; ++r) {
    const Integer weight = e == 0 ? Integer(r == 0 ? 1 : 0) : binomial(r + e - 1, e - 1);
    total += numerator.coefficient(power - 2 * r) * weight;
  }
  return total;
}

HilbertSeries hilbert_series(const SimplicialComplex& complex) {
  const int n = complex.rank();
  return {Polynomial::in_t_squared(h_from_f(f_vector(complex), n)), n};
}

Integer graded_dimension(const SimplicialComplex& complex, int d) {
  if (d < 0) throw std::invalid_argument("graded_dimension: negative degree");
  if (d == 0) return 1;
  const auto f = f_vector(complex);
  Integer total = 0;
  for (int k = 1; k <= static_cast<int>(f.size()); ++k) total += f[k - 1] * binomial(d - 1, k - 1);
  return total;
}

BigradedBettiTable hochster_betti(const SimplicialComplex& complex, Coefficients field,
                                  HochsterOptions options) {
  const int m = complex.num_vertices();
  const auto subsets = static_cast<long>(Face::Mask{1} << m);
  // per ω: homology profile of K_ω, empty when skipped
  std::vector<HomologyProfile> profiles(static_cast<std::size_t>(subsets));
  auto term = [&](long mask) {
    const Face omega = Face::from_mask(static_cast<Face::Mask>(mask));
    if (options.skip_faces && !omega.empty() && complex.contains(omega)) return;
    profiles[mask] = reduced_cohomology(full_subcomplex(complex, omega), field);
  };
  if (options.exec == Execution::serial) {
    for (long mask = 0; mask < subsets; ++mask) term(mask);
  } else {
#pragma omp parallel for num_threads(thread_count()) schedule(dynamic, 8)
    for (long mask = 0; mask < subsets; ++mask) term(mask);
  }
  BigradedBettiTable table(m, complex.rank());
  for (long mask = 0; mask < subsets; ++mask) {
    const int j = Face::from_mask(static_cast<Face::Mask>(mask)).size();
    const auto& profile = profiles[mask];
    for (int q = -1; q <= profile.top_degree(); ++q) {
      table.add(j - q - 1, j, profile(q));
    }
  }
  return table;
}

bool lsop_check_field(const SimplicialComplex& complex,
                      const std::vector<std::vector<Integer>>& theta, Coefficients field) {
  const int n = complex.rank();
  const int m = complex.num_vertices();
  if (static_cast<int>(theta.size()) != n) {
    throw std::invalid_argument("lsop: expected " + std::to_string(n) + " rows, got " +
                                std::to_string(theta.size()));
  }
  for (const auto& row : theta) {
    if (static_cast<int>(row.size()) != m) {
      throw std::invalid_argument("lsop: every row needs " + std::to_string(m) + " entries");
    }
  }
  for (Face sigma : complex.facets()) {
    const auto columns = sigma.vertices();
    IntMatrix minor(static_cast<std::size_t>(n), columns.size());
    for (int r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < columns.size(); ++c) minor(r, c) = theta[r][columns[c] - 1];
    }
    if (rank(minor, field) != columns.size()) return false;
  }
  return true;
}

ResolutionIdentity euler_resolution_identity(const SimplicialComplex& complex,
                                             Coefficients field) {
  const auto series = hilbert_series(complex);
  const int m = complex.num_vertices();
  ResolutionIdentity out;
  out.series_side =
      Polynomial::one_minus_t2_power(m - series.denominator_exponent) * series.numerator;
  const auto table = hochster_betti(complex, field);
  for (const auto& [key, beta] : table.entries()) {
    const auto [i, j] = key;
    out.betti_side = out.betti_side + Polynomial::monomial(i % 2 == 0 ? beta : -beta, 2 * j);
  }
  return out;
}

MonomialPolynomial reduce_modulo_ideal(const SimplicialComplex& complex,
                                       const MonomialPolynomial& polynomial) {
  MonomialPolynomial out;
  for (const auto& [exponents, c] : polynomial) {
    if (c == 0) continue;
    Face support;
    for (std::size_t k = 0; k < exponents.size(); ++k) {
      if (exponents[k] > 0) support = support.with(static_cast<int>(k) + 1);
    }
    if (complex.contains(support)) out[exponents] += c;
  }
  std::erase_if(out, [](const auto& item) { return item.second == 0; });
  return out;
}

MonomialPolynomial InducedRingMap::image_of(Face target_monomial) const {
  const int m = source_.num_vertices();
  MonomialPolynomial product{{std::vector<int>(m, 0), Integer(1)}};
  bool ok = true;
  for_each_vertex(target_monomial, [&](int j) {
    if (!ok) return;
    if (j < 1 || j > static_cast<int>(preimages_.size())) {
      ok = false;
      return;
    }
    MonomialPolynomial next;
    for (const auto& [exponents, c] : product) {
      for_each_vertex(preimages_[j - 1], [&](int i) {
        auto e = exponents;
        ++e[i - 1];
        next[e] += c;
      });
    }
    product = std::move(next);
  });
  if (!ok) throw std::invalid_argument("monomial uses a vertex outside the target");
  return reduce_modulo_ideal(source_, product);
}

InducedRingMap induced_ring_map(const SimplicialComplex& source, const SimplicialComplex& target,
                                const std::vector<int>& map) {
  if (!validate_simplicial_map(source, target, map)) {
    throw PreconditionError("induced_ring_map: the vertex map is not simplicial");
  }
  std::vector<Face> preimages(target.num_vertices());
  for (std::size_t i = 0; i < map.size(); ++i) {
    preimages[map[i] - 1] = preimages[map[i] - 1].with(static_cast<int>(i) + 1);
  }
  InducedRingMap ring_map(source, std::move(preimages));
  for (Face generator : ideal_generators(target)) {
    if (!ring_map.image_of(generator).empty()) {
      throw CrossCheckError("induced_ring_map: image of " + generator.to_string() +
                            " is not in the source ideal");
    }
  }
  return ring_map;
}

bool stanley_m_vector_check(const SimplicialComplex& complex, Coefficients field) {
  if (!is_cohen_macaulay(complex, field)) {
    throw PreconditionError("M-vector check needs a Cohen-Macaulay complex");
  }
  return is_m_vector(h_from_f(f_vector(complex), complex.rank()));
}

GorensteinVerdict is_gorenstein(const SimplicialComplex& complex, Coefficients field) {
  GorensteinVerdict verdict;
  if (!is_cohen_macaulay(complex, field)) return verdict;
  const auto table = hochster_betti(complex, field);
  const int codim = complex.num_vertices() - complex.rank();
  verdict.gorenstein = table.row_total(codim) == 1;
  verdict.gorenstein_star = verdict.gorenstein && !is_cone(complex);
  return verdict;
}

PoincareVerdict poincare_algebra_check(const SimplicialComplex& complex, Coefficients field) {
  const int m = complex.num_vertices();
  const int codim = m - complex.rank();
  const TorAlgebra tor(complex, field);
  const auto& table = tor.betti();
  PoincareVerdict verdict;

  verdict.table_symmetric = true;
  for (int i = 0; i <= m; ++i) {
    for (int j = 0; j <= m; ++j) {
      if (table(i, j) != table(codim - i, m - j)) verdict.table_symmetric = false;
    }
  }
  // Entries outside 0..m on the mirrored side must vanish too.
  for (const auto& [key, beta] : table.entries()) {
    if (codim - key.first < 0 || m - key.second < 0) verdict.table_symmetric = false;
  }

  if (table(codim, m) != 1) return verdict;
  verdict.pairing_nondegenerate = verdict.table_symmetric;
  for (const auto& [key, beta] : table.entries()) {
    if (!verdict.pairing_nondegenerate) break;
    const auto [i, j] = key;
    const auto dual = table(codim - i, m - j);
    if (dual != beta) {
      verdict.pairing_nondegenerate = false;
      break;
    }
    FieldMatrix pairing(static_cast<std::size_t>(beta), static_cast<std::size_t>(beta));
    for (std::int64_t a = 0; a < beta; ++a) {
      for (std::int64_t b = 0; b < beta; ++b) {
        const auto product = tor.product(tor.basis_class(i, j, a), tor.basis_class(codim - i, m - j, b));
        pairing(a, b) = product.coordinates.at(0);
      }
    }
    if (row_reduce(pairing).size() != static_cast<std::size_t>(beta)) {
      verdict.pairing_nondegenerate = false;
    }
  }
  return verdict;
}

}  // namespace frl
