#include "frl/complex.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace frl {

namespace {

std::vector<Face> antichain(std::vector<Face> faces) {
  // Larger faces first so each face only needs checking against kept ones.
  std::sort(faces.begin(), faces.end(), [](Face a, Face b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.mask() < b.mask();
  });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<Face> kept;
  for (Face f : faces) {
    const bool covered = std::any_of(kept.begin(), kept.end(),
                                     [&](Face g) { return f.is_subset_of(g); });
    if (!covered) kept.push_back(f);
  }
  if (kept.empty()) kept.push_back(Face{});
  std::sort(kept.begin(), kept.end(), lex_less);
  return kept;
}

}  // namespace

SimplicialComplex::SimplicialComplex(int m, std::vector<Face> facets)
    : m_(m), facets_(std::move(facets)) {
  for (Face f : facets_) dimension_ = std::max(dimension_, f.size() - 1);
}

SimplicialComplex SimplicialComplex::from_facets(int m, const std::vector<Face>& faces) {
  if (m <= 0 || m > kMaxVertices) {
    throw std::invalid_argument("vertex count must be in 1.." +
                                std::to_string(kMaxVertices) + ", got " + std::to_string(m));
  }
  const Face all = Face::full(m);
  for (Face f : faces) {
    if (!f.is_subset_of(all)) {
      throw std::invalid_argument("face " + f.to_string() + " has a vertex outside [" +
                                  std::to_string(m) + "]");
    }
  }
  return SimplicialComplex(m, antichain(faces));
}

SimplicialComplex SimplicialComplex::from_facets(int m,
                                                 const std::vector<std::vector<int>>& faces) {
  std::vector<Face> converted;
  converted.reserve(faces.size());
  for (const auto& f : faces) {
    for (int v : f) {
      if (v < 1 || v > m) {
        throw std::invalid_argument("vertex " + std::to_string(v) + " outside [" +
                                    std::to_string(m) + "]");
      }
    }
    converted.emplace_back(f);
  }
  return from_facets(m, converted);
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](Face f) { return f.size() == dimension_ + 1; });
}

bool SimplicialComplex::contains(Face face) const {
  return std::any_of(facets_.begin(), facets_.end(),
                     [&](Face f) { return face.is_subset_of(f); });
}

Face SimplicialComplex::vertex_set() const {
  Face all;
  for (Face f : facets_) all = all | f;
  return all;
}

std::vector<Face> SimplicialComplex::faces() const {
  std::unordered_set<Face> seen;
  for (Face f : facets_) {
    for_each_subset(f, [&](Face s) { seen.insert(s); });
  }
  std::vector<Face> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](Face a, Face b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return lex_less(a, b);
  });
  return out;
}

std::vector<Face> faces_of_dim(const SimplicialComplex& complex, int d) {
  std::vector<Face> out;
  for (Face f : complex.faces()) {
    if (f.size() == d + 1) out.push_back(f);
  }
  return out;
}

IntegerSequence f_vector(const SimplicialComplex& complex) {
  IntegerSequence f(complex.rank(), 0);
  for (Face face : complex.faces()) {
    if (!face.empty()) ++f[face.size() - 1];
  }
  return f;
}

SimplicialComplex link(const SimplicialComplex& complex, Face sigma) {
  std::vector<Face> out;
  for (Face f : complex.facets()) {
    if (sigma.is_subset_of(f)) out.push_back(f - sigma);
  }
  if (out.empty()) {
    throw PreconditionError("link: " + sigma.to_string() + " is not a face");
  }
  return SimplicialComplex::from_facets(complex.num_vertices(), out);
}

SimplicialComplex star(const SimplicialComplex& complex, Face sigma) {
  std::vector<Face> out;
  for (Face f : complex.facets()) {
    if (sigma.is_subset_of(f)) out.push_back(f);
  }
  if (out.empty()) {
    throw PreconditionError("star: " + sigma.to_string() + " is not a face");
  }
  return SimplicialComplex::from_facets(complex.num_vertices(), out);
}

std::vector<Face> missing_faces(const SimplicialComplex& complex) {
  std::unordered_set<Face> found;
  const int m = complex.num_vertices();
  for (Face tau : complex.faces()) {
    for (int v = 1; v <= m; ++v) {
      if (tau.contains(v)) continue;
      const Face sigma = tau.with(v);
      if (found.count(sigma) != 0 || complex.contains(sigma)) continue;
      bool minimal = true;
      for_each_vertex(sigma, [&](int w) {
        if (minimal && !complex.contains(sigma.without(w))) minimal = false;
      });
      if (minimal) found.insert(sigma);
    }
  }
  std::vector<Face> out(found.begin(), found.end());
  // by degree, then lexicographically, the way generators of I_K are usually listed
  std::sort(out.begin(), out.end(), [](Face a, Face b) {
    return a.size() != b.size() ? a.size() < b.size() : lex_less(a, b);
  });
  return out;
}

bool is_flag(const SimplicialComplex& complex) {
  const auto missing = missing_faces(complex);
  return std::all_of(missing.begin(), missing.end(), [](Face f) { return f.size() == 2; });
}

int neighbourliness(const SimplicialComplex& complex) {
  const auto missing = missing_faces(complex);
  if (missing.empty()) return complex.num_vertices();
  int smallest = complex.num_vertices() + 1;
  for (Face f : missing) smallest = std::min(smallest, f.size());
  return smallest - 1;
}

SimplicialComplex dual_complex(const SimplicialComplex& complex) {
  const auto missing = missing_faces(complex);
  if (missing.empty()) {
    throw PreconditionError("dual complex of the full simplex is not a simplicial complex");
  }
  const Face all = Face::full(complex.num_vertices());
  std::vector<Face> facets;
  facets.reserve(missing.size());
  for (Face f : missing) facets.push_back(all - f);
  return SimplicialComplex::from_facets(complex.num_vertices(), facets);
}

SimplicialComplex full_subcomplex(const SimplicialComplex& complex, Face omega) {
  std::vector<Face> out;
  out.reserve(complex.facets().size());
  for (Face f : complex.facets()) out.push_back(f & omega);
  return SimplicialComplex::from_facets(complex.num_vertices(), out);
}

SimplicialComplex cone(const SimplicialComplex& complex) {
  const int apex = complex.num_vertices() + 1;
  std::vector<Face> out;
  for (Face f : complex.facets()) out.push_back(f.with(apex));
  return SimplicialComplex::from_facets(apex, out);
}

bool is_cone(const SimplicialComplex& complex) {
  Face common = Face::full(complex.num_vertices());
  for (Face f : complex.facets()) common = common & f;
  return !common.empty();
}

Integer euler_characteristic(const SimplicialComplex& complex) {
  const auto f = f_vector(complex);
  Integer chi = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i % 2 == 0) {
      chi += f[i];
    } else {
      chi -= f[i];
    }
  }
  return chi;
}

bool validate_simplicial_map(const SimplicialComplex& source, const SimplicialComplex& target,
                             const std::vector<int>& map) {
  if (static_cast<int>(map.size()) != source.num_vertices()) {
    throw std::invalid_argument("simplicial map must assign an image to every source vertex");
  }
  for (int image : map) {
    if (image < 1 || image > target.num_vertices()) {
      throw std::invalid_argument("simplicial map image " + std::to_string(image) +
                                  " outside the target vertex set");
    }
  }
  for (Face f : source.facets()) {
    Face image;
    for_each_vertex(f, [&](int v) { image = image.with(map[v - 1]); });
    if (!target.contains(image)) return false;
  }
  return true;
}

}  // namespace frl
