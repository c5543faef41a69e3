#include "frl/arrangements.hpp"

#include <algorithm>

#include "frl/face_ring.hpp"
#include "frl/homology.hpp"

namespace frl {

namespace {

void trim(GradedDimensions& dims) {
  while (!dims.empty() && dims.back() == 0) dims.pop_back();
}

}  // namespace

ArrangementDescription arrangement_of(const SimplicialComplex& complex) {
  return {complex.num_vertices(), missing_faces(complex)};
}

GradedDimensions complement_cohomology(const SimplicialComplex& complex, Coefficients field) {
  auto dims = hochster_betti(complex, field).total_degree_vector();
  trim(dims);
  return dims;
}

GradedDimensions goresky_macpherson(const SimplicialComplex& complex, Coefficients field) {
  const int m = complex.num_vertices();
  const auto dual = dual_complex(complex);
  GradedDimensions dims(2 * m + 1, 0);
  for (Face sigma : dual.faces()) {
    const auto profile = reduced_homology(link(dual, sigma), field);
    for (int d = -1; d <= profile.top_degree(); ++d) {
      if (profile(d) == 0) continue;
      const int p = 2 * m - 2 * sigma.size() - d - 2;
      if (p < 0 || p > 2 * m) throw CrossCheckError("Goresky-MacPherson degree out of range");
      dims[p] += profile(d);
    }
  }
  dims[0] += 1;
  trim(dims);
  return dims;
}

bool alexander_duality_check(const SimplicialComplex& complex, Coefficients field) {
  const int m = complex.num_vertices();
  const auto dual = dual_complex(complex);
  const Face all = Face::full(m);
  for (Face sigma : dual.faces()) {
    const auto lhs = reduced_cohomology(full_subcomplex(complex, all - sigma), field);
    const auto rhs = reduced_homology(link(dual, sigma), field);
    const int shift = m - 3 - sigma.size();
    for (int i = -1; i <= std::max(lhs.top_degree(), shift + 1); ++i) {
      if (lhs(i) != rhs(shift - i)) return false;
    }
    for (int d = -1; d <= rhs.top_degree(); ++d) {
      if (rhs(d) != lhs(shift - d)) return false;
    }
  }
  return true;
}

}  // namespace frl
