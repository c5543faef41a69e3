#include "frl/quotients.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "frl/face_ring.hpp"
#include "frl/koszul.hpp"
#include "frl/linalg.hpp"
#include "json.hpp"

namespace frl {

namespace {

void check_shape(const SimplicialComplex& complex, const CharMatrix& lambda) {
  const auto n = static_cast<std::size_t>(complex.rank());
  const auto m = static_cast<std::size_t>(complex.num_vertices());
  if (lambda.row_count() != n) {
    throw std::invalid_argument("characteristic matrix needs " + std::to_string(n) + " rows, got " +
                                std::to_string(lambda.row_count()));
  }
  for (const auto& row : lambda.rows) {
    if (row.size() != m) {
      throw std::invalid_argument("characteristic matrix needs " + std::to_string(m) + " columns");
    }
  }
}

Integer parse_integer(const std::string& token) {
  Integer value;
  if (token.empty() || value.set_str(token, 10) != 0) {
    throw ParseError("matrix entry '" + token + "' is not an integer");
  }
  return value;
}

std::string strip(const std::string& s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

// Monomials of degree d in k[K] (support a face), as exponent vectors.
std::vector<std::vector<int>> face_monomials(const SimplicialComplex& complex, int d) {
  std::vector<std::vector<int>> out;
  for (auto& alpha : multidegrees_of_total(complex.num_vertices(), d)) {
    Face support;
    for (std::size_t k = 0; k < alpha.size(); ++k) {
      if (alpha[k] > 0) support = support.with(static_cast<int>(k) + 1);
    }
    if (complex.contains(support)) out.push_back(std::move(alpha));
  }
  return out;
}

}  // namespace

CharMatrix CharMatrix::parse_inline(const std::string& text) {
  CharMatrix out;
  std::stringstream rows(text);
  std::string row;
  while (std::getline(rows, row, ';')) {
    std::stringstream entries(row);
    std::string entry;
    std::vector<Integer> values;
    while (std::getline(entries, entry, ',')) values.push_back(parse_integer(strip(entry)));
    if (values.empty()) throw ParseError("matrix row is empty");
    out.rows.push_back(std::move(values));
  }
  if (out.rows.empty()) throw ParseError("matrix is empty");
  for (const auto& r : out.rows) {
    if (r.size() != out.rows.front().size()) throw ParseError("matrix rows have different lengths");
  }
  return out;
}

CharMatrix CharMatrix::parse_json(const std::string& text) {
  CharMatrix out;
  try {
    const auto doc = nlohmann::json::parse(text);
    for (const auto& row : doc.at("rows")) {
      std::vector<Integer> values;
      for (const auto& e : row) values.emplace_back(e.get<long>());
      out.rows.push_back(std::move(values));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("matrix JSON: ") + e.what());
  }
  if (out.rows.empty()) throw ParseError("matrix is empty");
  for (const auto& r : out.rows) {
    if (r.size() != out.rows.front().size()) throw ParseError("matrix rows have different lengths");
  }
  return out;
}

CharMatrix CharMatrix::reduced_mod(std::uint32_t p) const {
  CharMatrix out = *this;
  for (auto& row : out.rows) {
    for (auto& x : row) mpz_fdiv_r_ui(x.get_mpz_t(), x.get_mpz_t(), p);
  }
  return out;
}

CharMatrixVerdict char_matrix_check(const SimplicialComplex& complex, const CharMatrix& lambda) {
  if (!complex.is_pure()) throw PreconditionError("characteristic matrix check needs a pure complex");
  check_shape(complex, lambda);
  const int n = complex.rank();
  CharMatrixVerdict verdict;
  verdict.unimodular = true;
  for (Face sigma : complex.facets()) {
    const auto columns = sigma.vertices();
    IntMatrix minor(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) minor(r, c) = lambda.rows[r][columns[c] - 1];
    }
    Integer det = determinant(minor);
    if (abs(det) != 1) {
      verdict.unimodular = false;
      verdict.failing_facets.push_back(sigma);
    }
    verdict.minors.push_back(std::move(det));
  }
  return verdict;
}

std::vector<std::int64_t> quotient_graded_dims(const SimplicialComplex& complex,
                                               const CharMatrix& lambda, Coefficients field) {
  check_shape(complex, lambda);
  if (!lsop_check_field(complex, lambda.rows, field)) {
    throw PreconditionError("Λ is not a linear system of parameters over " + field.name());
  }
  const int n = complex.rank();
  std::vector<std::int64_t> dims;
  auto lower = face_monomials(complex, 0);
  for (int d = 0; d <= n; ++d) {
    const auto upper = d == 0 ? lower : face_monomials(complex, d);
    if (d == 0) {
      dims.push_back(static_cast<std::int64_t>(upper.size()));
      continue;
    }
    std::map<std::vector<int>, std::size_t> row_of;
    for (std::size_t r = 0; r < upper.size(); ++r) row_of.emplace(upper[r], r);
    // Columns: θ_k · (monomial of degree d-1).
    IntMatrix image(upper.size(), lower.size() * static_cast<std::size_t>(n), Integer(0));
    for (std::size_t b = 0; b < lower.size(); ++b) {
      for (int k = 0; k < n; ++k) {
        const std::size_t col = b * static_cast<std::size_t>(n) + static_cast<std::size_t>(k);
        for (std::size_t v = 0; v < lambda.rows[k].size(); ++v) {
          if (lambda.rows[k][v] == 0) continue;
          auto product = lower[b];
          ++product[v];
          const auto it = row_of.find(product);
          if (it != row_of.end()) image(it->second, col) += lambda.rows[k][v];
        }
      }
    }
    dims.push_back(static_cast<std::int64_t>(upper.size()) -
                   static_cast<std::int64_t>(rank(image, field)));
    lower = upper;
  }
  return dims;
}

OddVanishingReport odd_vanishing_report(const SimplicialComplex& complex,
                                        const CharMatrix& lambda, Coefficients field) {
  return {true, quotient_graded_dims(complex, lambda, field)};
}

}  // namespace frl
