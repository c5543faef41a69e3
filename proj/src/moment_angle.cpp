#include "frl/moment_angle.hpp"

#include <unordered_map>

#include "frl/fvectors.hpp"
#include "frl/homology.hpp"
#include "frl/linalg.hpp"

namespace frl {

namespace {

// Cochain complex C^{*,2ω}(Z_K): cells T(D, ω∖D) with D ⊂ ω, D ∈ K, graded by |T|.
std::vector<std::int64_t> omega_cohomology(const SimplicialComplex& complex, Face omega,
                                           Coefficients field) {
  const int top = omega.size();
  std::vector<std::vector<Face>> discs(top + 1);  // indexed by |T|
  for_each_subset(omega, [&](Face d) {
    if (complex.contains(d)) discs[top - d.size()].push_back(d);
  });
  std::vector<std::unordered_map<Face, std::size_t>> index(top + 1);
  for (int q = 0; q <= top; ++q) {
    for (std::size_t k = 0; k < discs[q].size(); ++k) index[q].emplace(discs[q][k], k);
  }
  // ranks[q] = rank of δ: C^{-q} -> C^{-q+1}
  std::vector<std::int64_t> ranks(top + 2, 0);
  for (int q = 1; q <= top; ++q) {
    IntMatrix delta(discs[q - 1].size(), discs[q].size(), Integer(0));
    for (std::size_t c = 0; c < discs[q].size(); ++c) {
      const Face d = discs[q][c];
      const Face t = omega - d;
      for_each_vertex(t, [&](int k) {
        const auto it = index[q - 1].find(d.with(k));
        if (it == index[q - 1].end()) return;
        delta(it->second, c) = count_below(t, k) % 2 == 0 ? 1 : -1;
      });
    }
    ranks[q] = static_cast<std::int64_t>(rank(delta, field));
  }
  std::vector<std::int64_t> dims(top + 1, 0);
  for (int q = 0; q <= top; ++q) {
    dims[q] = static_cast<std::int64_t>(discs[q].size()) - ranks[q] - ranks[q + 1];
  }
  return dims;
}

Integer f_entry(const IntegerSequence& f, int k) {
  if (k == -1) return 1;
  if (k < -1 || k >= static_cast<int>(f.size())) return 0;
  return f[k];
}

}  // namespace

std::vector<BigradedCell> enumerate_cells(const SimplicialComplex& complex) {
  std::vector<BigradedCell> cells;
  const Face all = Face::full(complex.num_vertices());
  for (Face d : complex.faces()) {
    for_each_subset(all - d, [&](Face t) { cells.push_back({d, t}); });
  }
  return cells;
}

Integer cell_count(const SimplicialComplex& complex, int q, int p) {
  if (q < 0 || p < 0) return 0;
  const int m = complex.num_vertices();
  return f_entry(f_vector(complex), p - q - 1) * binomial(m - p + q, q);
}

BigradedBettiTable zk_bigraded_betti(const SimplicialComplex& complex, Coefficients field,
                                     Execution exec) {
  const int m = complex.num_vertices();
  const auto subsets = static_cast<long>(Face::Mask{1} << m);
  std::vector<std::vector<std::int64_t>> dims(static_cast<std::size_t>(subsets));
  auto term = [&](long mask) {
    dims[mask] = omega_cohomology(complex, Face::from_mask(static_cast<Face::Mask>(mask)), field);
  };
  if (exec == Execution::serial) {
    for (long mask = 0; mask < subsets; ++mask) term(mask);
  } else {
#pragma omp parallel for num_threads(thread_count()) schedule(dynamic, 8)
    for (long mask = 0; mask < subsets; ++mask) term(mask);
  }
  BigradedBettiTable table(m, complex.rank());
  for (long mask = 0; mask < subsets; ++mask) {
    const int j = Face::from_mask(static_cast<Face::Mask>(mask)).size();
    for (std::size_t q = 0; q < dims[mask].size(); ++q) {
      table.add(static_cast<int>(q), j, dims[mask][q]);
    }
  }
  return table;
}

Polynomial chi_from_cells(const SimplicialComplex& complex) {
  const int m = complex.num_vertices();
  IntegerSequence coefficients(2 * m + 1, 0);
  for (int p = 0; p <= m; ++p) {
    for (int q = 0; q <= p; ++q) {
      const Integer count = cell_count(complex, q, p);
      if (q % 2 == 0) {
        coefficients[2 * p] += count;
      } else {
        coefficients[2 * p] -= count;
      }
    }
  }
  return Polynomial(std::move(coefficients));
}

Polynomial chi_closed_form(const SimplicialComplex& complex) {
  const int n = complex.rank();
  const auto h = h_from_f(f_vector(complex), n);
  return Polynomial::one_minus_t2_power(complex.num_vertices() - n) * Polynomial::in_t_squared(h);
}

Polynomial chi_polynomial(const SimplicialComplex& complex) {
  auto cells = chi_from_cells(complex);
  if (cells != chi_closed_form(complex)) {
    throw CrossCheckError("chi polynomial: cell count route and h-vector route disagree");
  }
  return cells;
}

ChiPair chi_pair_polynomials(const SimplicialComplex& complex) {
  const int m = complex.num_vertices();
  const int n = complex.rank();
  const auto h = h_from_f(f_vector(complex), n);
  const Polynomial chi = chi_closed_form(complex);
  const Polynomial torus = Polynomial::one_minus_t2_power(m);
  const Integer top_h = (n - 1) % 2 == 0 ? h[n] : Integer(-h[n]);
  return {chi - torus, chi + Polynomial::monomial(top_h, 0) * torus};
}

bool relative_pd_check(const SimplicialComplex& complex, Coefficients field) {
  if (!complex.is_pure() || !is_homology_manifold(complex, field)) {
    throw PreconditionError("relative Poincare duality needs a homology manifold");
  }
  const int m = complex.num_vertices();
  const int n = complex.rank();
  const auto pair = chi_pair_polynomials(complex);
  Polynomial dual = pair.relative.reversed(2 * m);
  if ((m - n) % 2 != 0) dual = -dual;
  return pair.complement == dual;
}

bool pd_symmetry_check(const SimplicialComplex& complex, Coefficients field) {
  if (!is_gorenstein_star(complex, field)) {
    throw PreconditionError("bigraded Poincare duality needs a Gorenstein* complex");
  }
  const int m = complex.num_vertices();
  const int codim = m - complex.rank();
  const auto table = zk_bigraded_betti(complex, field);
  for (const auto& [key, value] : table.entries()) {
    if (table(codim - key.first, m - key.second) != value) return false;
  }
  return true;
}

HomotopyInfo homotopy_info(const SimplicialComplex& complex) {
  const auto missing = missing_faces(complex);
  if (missing.empty()) {
    throw PreconditionError("Z_K of the full simplex is a contractible polydisc");
  }
  HomotopyInfo info;
  info.neighbourliness = neighbourliness(complex);
  info.connectivity = 2 * info.neighbourliness;
  for (Face f : missing) {
    if (f.size() == info.neighbourliness + 1) ++info.first_nontrivial_rank;
  }
  return info;
}

}  // namespace frl
