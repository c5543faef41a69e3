#include "frl/homology.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace frl {

std::int64_t HomologyProfile::operator()(int degree) const {
  const int index = degree + 1;
  if (index < 0 || index >= static_cast<int>(dims_.size())) return 0;
  return dims_[index];
}

std::int64_t HomologyProfile::total() const {
  return std::accumulate(dims_.begin(), dims_.end(), std::int64_t{0});
}

bool HomologyProfile::is_sphere_like(int d) const {
  for (int i = -1; i <= std::max(d, top_degree()); ++i) {
    if ((*this)(i) != (i == d ? 1 : 0)) return false;
  }
  return true;
}

namespace {

std::vector<std::vector<Face>> faces_by_size(const SimplicialComplex& complex) {
  std::vector<std::vector<Face>> out(complex.rank() + 1);
  for (Face f : complex.faces()) out[f.size()].push_back(f);
  return out;
}

IntMatrix boundary_from(const std::vector<Face>& lower, const std::vector<Face>& upper) {
  std::unordered_map<Face, std::size_t> row_of;
  for (std::size_t i = 0; i < lower.size(); ++i) row_of.emplace(lower[i], i);
  IntMatrix out(lower.size(), upper.size(), Integer(0));
  for (std::size_t col = 0; col < upper.size(); ++col) {
    int position = 0;
    for_each_vertex(upper[col], [&](int v) {
      out(row_of.at(upper[col].without(v)), col) = (position % 2 == 0) ? 1 : -1;
      ++position;
    });
  }
  return out;
}

bool links_satisfy(const SimplicialComplex& complex, Coefficients field, Execution exec,
                   bool require_top_class) {
  const auto faces = complex.faces();
  auto check = [&](Face sigma) {
    const auto lk = link(complex, sigma);
    const auto profile = reduced_homology(lk, field);
    const int top = lk.dimension();
    for (int i = -1; i < top; ++i) {
      if (profile(i) != 0) return false;
    }
    return !require_top_class || profile(top) == 1;
  };
  if (exec == Execution::serial) {
    return std::all_of(faces.begin(), faces.end(), check);
  }
  int ok = 1;
  const auto count = static_cast<long>(faces.size());
#pragma omp parallel for num_threads(thread_count()) reduction(&& : ok) schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    ok = ok && check(faces[i]);
  }
  return ok != 0;
}

}  // namespace

IntMatrix boundary_matrix(const SimplicialComplex& complex, int d) {
  return boundary_from(faces_of_dim(complex, d - 1), faces_of_dim(complex, d));
}

HomologyProfile reduced_homology(const SimplicialComplex& complex, Coefficients field) {
  const auto by_size = faces_by_size(complex);
  const int n = complex.rank();
  // ranks[s] = rank of the boundary from size-s faces to size-(s-1) faces.
  std::vector<std::int64_t> ranks(n + 2, 0);
  for (int s = 1; s <= n; ++s) {
    ranks[s] = static_cast<std::int64_t>(rank(boundary_from(by_size[s - 1], by_size[s]), field));
  }
  std::vector<std::int64_t> dims(n + 1, 0);
  for (int s = 0; s <= n; ++s) {
    dims[s] = static_cast<std::int64_t>(by_size[s].size()) - ranks[s] - ranks[s + 1];
  }
  return HomologyProfile(std::move(dims));
}

bool is_cohen_macaulay(const SimplicialComplex& complex, Coefficients field, Execution exec) {
  return links_satisfy(complex, field, exec, false);
}

bool is_gorenstein_star(const SimplicialComplex& complex, Coefficients field, Execution exec) {
  return links_satisfy(complex, field, exec, true);
}

bool is_homology_manifold(const SimplicialComplex& complex, Coefficients field) {
  if (!complex.is_pure()) throw PreconditionError("homology manifold test needs a pure complex");
  const int dim = complex.dimension();
  for (Face sigma : complex.faces()) {
    if (sigma.empty()) continue;
    if (!reduced_homology(link(complex, sigma), field).is_sphere_like(dim - sigma.size())) {
      return false;
    }
  }
  return true;
}

bool is_homology_sphere(const SimplicialComplex& complex, Coefficients field) {
  return complex.is_pure() && is_homology_manifold(complex, field) &&
         reduced_homology(complex, field).is_sphere_like(complex.dimension());
}

}  // namespace frl
