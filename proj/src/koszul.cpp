#include "frl/koszul.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace frl {

namespace {

Face support(const std::vector<int>& exponents) {
  Face s;
  for (std::size_t k = 0; k < exponents.size(); ++k) {
    if (exponents[k] > 0) s = s.with(static_cast<int>(k) + 1);
  }
  return s;
}

Face repeated(const std::vector<int>& exponents) {
  Face s;
  for (std::size_t k = 0; k < exponents.size(); ++k) {
    if (exponents[k] > 1) s = s.with(static_cast<int>(k) + 1);
  }
  return s;
}

// Cochain basis of one multidegree block: for each homological degree i the
// sets τ (|τ| = i) with v^{α - 1_τ} nonzero in k[K].
struct BlockBasis {
  std::vector<std::vector<Face>> taus;
  std::vector<std::unordered_map<Face, std::size_t>> index;
};

BlockBasis block_basis(const SimplicialComplex& complex, const std::vector<int>& alpha) {
  const Face s = support(alpha);
  const Face r = repeated(alpha);
  BlockBasis out;
  out.taus.resize(s.size() + 1);
  out.index.resize(s.size() + 1);
  for_each_subset(s, [&](Face tau) {
    if (complex.contains((s - tau) | (tau & r))) out.taus[tau.size()].push_back(tau);
  });
  for (std::size_t i = 0; i < out.taus.size(); ++i) {
    std::sort(out.taus[i].begin(), out.taus[i].end(), lex_less);
    for (std::size_t k = 0; k < out.taus[i].size(); ++k) out.index[i].emplace(out.taus[i][k], k);
  }
  return out;
}

// d: C^{-i} -> C^{-i+1} of the block, rows indexed by taus[i-1].
IntMatrix block_differential(const BlockBasis& basis, std::size_t i) {
  if (i == 0 || i >= basis.taus.size()) {
    const std::size_t cols = i < basis.taus.size() ? basis.taus[i].size() : 0;
    return IntMatrix(0, cols);
  }
  const auto& rows = basis.taus[i - 1];
  const auto& cols = basis.taus[i];
  IntMatrix d(rows.size(), cols.size(), Integer(0));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    int position = 0;
    for_each_vertex(cols[c], [&](int l) {
      const auto it = basis.index[i - 1].find(cols[c].without(l));
      if (it != basis.index[i - 1].end()) d(it->second, c) = (position % 2 == 0) ? 1 : -1;
      ++position;
    });
  }
  return d;
}

std::vector<std::int64_t> block_cohomology_dims(const SimplicialComplex& complex,
                                                const std::vector<int>& alpha,
                                                Coefficients field) {
  const auto basis = block_basis(complex, alpha);
  const std::size_t top = basis.taus.size();
  std::vector<std::int64_t> ranks(top + 1, 0);  // ranks[i] = rank of d out of degree i
  for (std::size_t i = 1; i < top; ++i) {
    ranks[i] = static_cast<std::int64_t>(rank(block_differential(basis, i), field));
  }
  std::vector<std::int64_t> dims(top, 0);
  for (std::size_t i = 0; i < top; ++i) {
    dims[i] = static_cast<std::int64_t>(basis.taus[i].size()) - ranks[i] - ranks[i + 1];
  }
  return dims;
}

void enumerate_multidegrees(int m, int total, std::vector<int>& current, std::size_t position,
                            std::vector<std::vector<int>>& out) {
  if (position + 1 == static_cast<std::size_t>(m)) {
    current[position] = total;
    out.push_back(current);
    return;
  }
  for (int e = total; e >= 0; --e) {
    current[position] = e;
    enumerate_multidegrees(m, total - e, current, position + 1, out);
  }
}

// Sign of u_τ u_ρ = ± u_{τ∪ρ} for disjoint τ, ρ.
int shuffle_sign(Face tau, Face rho) {
  int inversions = 0;
  for_each_vertex(rho, [&](int y) { inversions += tau.size() - count_below(tau, y); });
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

int KoszulMonomial::internal_degree() const {
  return std::accumulate(v_exponents.begin(), v_exponents.end(), 0) + u.size();
}

std::vector<int> KoszulMonomial::multidegree() const {
  std::vector<int> alpha = v_exponents;
  for_each_vertex(u, [&](int k) { ++alpha[k - 1]; });
  return alpha;
}

KoszulElement KoszulElement::monomial(const SimplicialComplex& complex,
                                      const std::vector<int>& v_list, Face u,
                                      FieldScalar coefficient) {
  KoszulMonomial mono{std::vector<int>(complex.num_vertices(), 0), u};
  for (int v : v_list) {
    if (v < 1 || v > complex.num_vertices()) throw std::invalid_argument("v index out of range");
    ++mono.v_exponents[v - 1];
  }
  if (!u.is_subset_of(Face::full(complex.num_vertices()))) {
    throw std::invalid_argument("u index out of range");
  }
  KoszulElement out;
  out.add(complex, mono, coefficient);
  return out;
}

void KoszulElement::add(const SimplicialComplex& complex, const KoszulMonomial& monomial,
                        const FieldScalar& coefficient) {
  if (coefficient.is_zero() || !complex.contains(support(monomial.v_exponents))) return;
  auto it = terms_.find(monomial);
  if (it == terms_.end()) {
    terms_.emplace(monomial, coefficient);
    return;
  }
  it->second += coefficient;
  if (it->second.is_zero()) terms_.erase(it);
}

std::string KoszulElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << c.to_string() << ")";
    for (std::size_t k = 0; k < mono.v_exponents.size(); ++k) {
      if (mono.v_exponents[k] == 0) continue;
      out << "v" << k + 1;
      if (mono.v_exponents[k] > 1) out << "^" << mono.v_exponents[k];
    }
    for_each_vertex(mono.u, [&](int k) { out << "u" << k; });
  }
  return out.str();
}

KoszulElement koszul_differential(const SimplicialComplex& complex, const KoszulElement& x) {
  KoszulElement out;
  for (const auto& [mono, c] : x.terms()) {
    int position = 0;
    for_each_vertex(mono.u, [&](int l) {
      KoszulMonomial image{mono.v_exponents, mono.u.without(l)};
      ++image.v_exponents[l - 1];
      out.add(complex, image, position % 2 == 0 ? c : -c);
      ++position;
    });
  }
  return out;
}

KoszulElement koszul_multiply(const SimplicialComplex& complex, const KoszulElement& a,
                              const KoszulElement& b) {
  KoszulElement out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      if (ma.u.intersects(mb.u)) continue;
      KoszulMonomial product{ma.v_exponents, ma.u | mb.u};
      for (std::size_t k = 0; k < product.v_exponents.size(); ++k) {
        product.v_exponents[k] += mb.v_exponents[k];
      }
      const FieldScalar c = ca * cb;
      out.add(complex, product, shuffle_sign(ma.u, mb.u) > 0 ? c : -c);
    }
  }
  return out;
}

std::vector<std::vector<int>> multidegrees_of_total(int m, int total) {
  std::vector<std::vector<int>> out;
  std::vector<int> current(m, 0);
  enumerate_multidegrees(m, total, current, 0, out);
  return out;
}

BigradedBettiTable koszul_betti(const SimplicialComplex& complex, Coefficients field,
                                Execution exec, int max_internal_degree) {
  const int m = complex.num_vertices();
  const int top = max_internal_degree < 0 ? m : max_internal_degree;
  std::vector<std::vector<int>> alphas;
  for (int j = 0; j <= top; ++j) {
    auto level = multidegrees_of_total(m, j);
    alphas.insert(alphas.end(), level.begin(), level.end());
  }
  std::vector<std::vector<std::int64_t>> dims(alphas.size());
  const auto count = static_cast<long>(alphas.size());
  if (exec == Execution::serial) {
    for (long k = 0; k < count; ++k) dims[k] = block_cohomology_dims(complex, alphas[k], field);
  } else {
#pragma omp parallel for num_threads(thread_count()) schedule(dynamic, 16)
    for (long k = 0; k < count; ++k) dims[k] = block_cohomology_dims(complex, alphas[k], field);
  }
  BigradedBettiTable table(m, complex.rank());
  for (std::size_t k = 0; k < alphas.size(); ++k) {
    const int j = std::accumulate(alphas[k].begin(), alphas[k].end(), 0);
    for (std::size_t i = 0; i < dims[k].size(); ++i) table.add(static_cast<int>(i), j, dims[k][i]);
  }
  return table;
}

bool CohomologyClass::is_zero() const {
  return std::all_of(coordinates.begin(), coordinates.end(),
                     [](const FieldScalar& x) { return x.is_zero(); });
}

struct TorAlgebra::Block {
  std::vector<int> alpha;
  int i = 0;
  std::size_t offset = 0;            // position inside the H^{-i,2j} basis
  std::vector<Face> taus;            // cochain basis of degree i
  std::unordered_map<Face, std::size_t> index;
  std::vector<FieldVector> representatives;
  FieldMatrix extractor;             // rows: representative coordinates of a cocycle
};

namespace {

std::size_t column_rank(const std::vector<FieldVector>& columns, std::size_t rows) {
  FieldMatrix a(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (std::size_t r = 0; r < rows; ++r) a(r, c) = columns[c][r];
  }
  return row_reduce(a).size();
}

}  // namespace

TorAlgebra::TorAlgebra(const SimplicialComplex& complex, Coefficients field, Execution exec)
    : complex_(complex), field_(field), betti_(complex.num_vertices(), complex.rank()) {
  const int m = complex.num_vertices();
  std::vector<std::vector<int>> alphas;
  for (int j = 0; j <= m; ++j) {
    auto level = multidegrees_of_total(m, j);
    alphas.insert(alphas.end(), level.begin(), level.end());
  }
  const auto count = static_cast<long>(alphas.size());
  std::vector<std::vector<std::shared_ptr<Block>>> built(alphas.size());

  auto build = [&](long k) {
    const auto& alpha = alphas[k];
    const auto dims = block_cohomology_dims(complex_, alpha, field_);
    const auto basis = block_basis(complex_, alpha);
    const FieldScalar one = FieldScalar::one(field_);
    for (std::size_t i = 0; i < dims.size(); ++i) {
      if (dims[i] == 0) continue;
      auto block = std::make_shared<Block>();
      block->alpha = alpha;
      block->i = static_cast<int>(i);
      block->taus = basis.taus[i];
      block->index = basis.index[i];
      const std::size_t rows = block->taus.size();

      // Coboundaries: independent columns of the incoming differential.
      std::vector<FieldVector> columns;
      if (i + 1 < basis.taus.size()) {
        const FieldMatrix incoming = to_field(block_differential(basis, i + 1), field_);
        FieldMatrix reduced = incoming;
        for (auto c : row_reduce(reduced)) {
          FieldVector col(rows);
          for (std::size_t r = 0; r < rows; ++r) col[r] = incoming(r, c);
          columns.push_back(std::move(col));
        }
      }
      const std::size_t boundary_rank = columns.size();
      const FieldMatrix outgoing = to_field(block_differential(basis, i), field_);
      for (auto z : nullspace(outgoing)) {
        columns.push_back(z);
        if (column_rank(columns, rows) == columns.size()) {
          block->representatives.push_back(std::move(z));
        } else {
          columns.pop_back();
        }
        if (block->representatives.size() == static_cast<std::size_t>(dims[i])) break;
      }
      if (block->representatives.size() != static_cast<std::size_t>(dims[i])) {
        throw CrossCheckError("Koszul block: representative count differs from rank count");
      }
      // Left inverse of [coboundaries | representatives] via RREF of [M | I].
      const std::size_t width = columns.size();
      FieldMatrix augmented(rows, width + rows, FieldScalar::zero(field_));
      for (std::size_t c = 0; c < width; ++c) {
        for (std::size_t r = 0; r < rows; ++r) augmented(r, c) = columns[c][r];
      }
      for (std::size_t r = 0; r < rows; ++r) augmented(r, width + r) = one;
      row_reduce(augmented);
      block->extractor = FieldMatrix(static_cast<std::size_t>(dims[i]), rows);
      for (std::size_t q = 0; q < static_cast<std::size_t>(dims[i]); ++q) {
        for (std::size_t r = 0; r < rows; ++r) {
          block->extractor(q, r) = augmented(boundary_rank + q, width + r);
        }
      }
      built[k].push_back(std::move(block));
    }
  };

  if (exec == Execution::serial) {
    for (long k = 0; k < count; ++k) build(k);
  } else {
    std::vector<std::string> errors(alphas.size());
#pragma omp parallel for num_threads(thread_count()) schedule(dynamic, 16)
    for (long k = 0; k < count; ++k) {
      try {
        build(k);
      } catch (const std::exception& e) {
        errors[k] = e.what();
      }
    }
    for (const auto& e : errors) {
      if (!e.empty()) throw CrossCheckError(e);
    }
  }

  for (std::size_t k = 0; k < alphas.size(); ++k) {
    const int j = std::accumulate(alphas[k].begin(), alphas[k].end(), 0);
    for (auto& block : built[k]) {
      const int i = block->i;
      block->offset = static_cast<std::size_t>(betti_(i, j));
      betti_.add(i, j, static_cast<std::int64_t>(block->representatives.size()));
      block_order_[{i, j}].push_back(block->alpha);
      blocks_.emplace(std::make_pair(block->alpha, i), std::move(block));
    }
  }
}

const TorAlgebra::Block* TorAlgebra::find_block(const std::vector<int>& multidegree, int i) const {
  const auto it = blocks_.find({multidegree, i});
  return it == blocks_.end() ? nullptr : it->second.get();
}

std::vector<KoszulElement> TorAlgebra::basis(int i, int j) const {
  std::vector<KoszulElement> out;
  const auto order = block_order_.find({i, j});
  if (order == block_order_.end()) return out;
  for (const auto& alpha : order->second) {
    const Block* block = find_block(alpha, i);
    for (const auto& rep : block->representatives) {
      KoszulElement element;
      for (std::size_t r = 0; r < rep.size(); ++r) {
        if (rep[r].is_zero()) continue;
        KoszulMonomial mono{alpha, block->taus[r]};
        for_each_vertex(block->taus[r], [&](int l) { --mono.v_exponents[l - 1]; });
        element.add(complex_, mono, rep[r]);
      }
      out.push_back(std::move(element));
    }
  }
  return out;
}

CohomologyClass TorAlgebra::basis_class(int i, int j, std::size_t index) const {
  CohomologyClass cls{i, j, FieldVector(static_cast<std::size_t>(betti_(i, j)), FieldScalar::zero(field_))};
  if (index >= cls.coordinates.size()) throw std::out_of_range("basis index out of range");
  cls.coordinates[index] = FieldScalar::one(field_);
  return cls;
}

KoszulElement TorAlgebra::representative(const CohomologyClass& cls) const {
  const auto elements = basis(cls.i, cls.j);
  if (elements.size() != cls.coordinates.size()) {
    throw std::invalid_argument("class does not match the basis of its bidegree");
  }
  KoszulElement out;
  for (std::size_t k = 0; k < elements.size(); ++k) {
    if (cls.coordinates[k].is_zero()) continue;
    for (const auto& [mono, c] : elements[k].terms()) out.add(complex_, mono, c * cls.coordinates[k]);
  }
  return out;
}

bool TorAlgebra::is_cocycle(const KoszulElement& x) const {
  return koszul_differential(complex_, x).is_zero();
}

CohomologyClass TorAlgebra::class_of(const KoszulElement& x) const {
  if (x.is_zero()) throw std::invalid_argument("class_of: zero element has no bidegree");
  const auto& first = x.terms().begin()->first;
  const int i = first.homological_degree();
  const int j = first.internal_degree();
  std::map<std::vector<int>, std::vector<std::pair<Face, FieldScalar>>> by_block;
  for (const auto& [mono, c] : x.terms()) {
    if (mono.homological_degree() != i || mono.internal_degree() != j) {
      throw std::invalid_argument("class_of: element is not bihomogeneous");
    }
    by_block[mono.multidegree()].emplace_back(mono.u, c);
  }
  if (!is_cocycle(x)) throw std::invalid_argument("class_of: element is not a cocycle");
  CohomologyClass cls{i, j, FieldVector(static_cast<std::size_t>(betti_(i, j)), FieldScalar::zero(field_))};
  for (const auto& [alpha, entries] : by_block) {
    const Block* block = find_block(alpha, i);
    if (block == nullptr) continue;  // H vanishes in this multidegree
    FieldVector z(block->taus.size(), FieldScalar::zero(field_));
    for (const auto& [tau, c] : entries) z[block->index.at(tau)] = c;
    for (std::size_t q = 0; q < block->extractor.rows(); ++q) {
      FieldScalar value = FieldScalar::zero(field_);
      for (std::size_t r = 0; r < z.size(); ++r) {
        if (!z[r].is_zero()) value += block->extractor(q, r) * z[r];
      }
      cls.coordinates[block->offset + q] = value;
    }
  }
  return cls;
}

CohomologyClass TorAlgebra::product(const CohomologyClass& a, const CohomologyClass& b) const {
  const auto prod = koszul_multiply(complex_, representative(a), representative(b));
  if (prod.is_zero()) {
    const int i = a.i + b.i;
    const int j = a.j + b.j;
    return {i, j, FieldVector(static_cast<std::size_t>(betti_(i, j)), FieldScalar::zero(field_))};
  }
  return class_of(prod);
}

CohomologyClass TorAlgebra::unit() const { return basis_class(0, 0, 0); }

}  // namespace frl
