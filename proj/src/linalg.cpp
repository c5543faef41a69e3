#include "frl/linalg.hpp"

#include <stdexcept>

namespace frl {

namespace {

// Fraction-free forward elimination. Returns the rank and flips `sign` on
// every row swap. Entries below pivots are left stale.
std::size_t bareiss_eliminate(IntMatrix& a, int& sign) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  Integer previous = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      a.swap_rows(pivot, r);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer value = a(r, c) * a(i, j) - a(i, c) * a(r, j);
        mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), previous.get_mpz_t());
        a(i, j) = std::move(value);
      }
      a(i, c) = 0;
    }
    previous = a(r, c);
    ++r;
  }
  return r;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1;
  std::uint64_t exponent = p - 2;
  while (exponent != 0) {
    if (exponent & 1U) result = result * a % p;
    a = a * a % p;
    exponent >>= 1U;
  }
  return result;
}

}  // namespace

Integer determinant(IntMatrix matrix) {
  if (matrix.rows() != matrix.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = matrix.rows();
  if (n == 0) return 1;
  int sign = 1;
  if (bareiss_eliminate(matrix, sign) < n) return 0;
  return sign * matrix(n - 1, n - 1);
}

std::size_t rank_rational(IntMatrix matrix) {
  int sign = 1;
  return bareiss_eliminate(matrix, sign);
}

std::size_t rank_mod_p(const IntMatrix& matrix, std::uint32_t p) {
  const std::size_t rows = matrix.rows();
  const std::size_t cols = matrix.cols();
  std::vector<std::uint64_t> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      Integer r;
      mpz_fdiv_r_ui(r.get_mpz_t(), matrix(i, j).get_mpz_t(), p);
      a[i * cols + j] = r.get_ui();
    }
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(a[pivot * cols + j], a[r * cols + j]);
    }
    const std::uint64_t inv = inverse_mod(a[r * cols + c], p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const std::uint64_t factor = a[i * cols + c] * inv % p;
      if (factor == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        a[i * cols + j] = (a[i * cols + j] + (p - factor) * a[r * cols + j]) % p;
      }
    }
    ++r;
  }
  return r;
}

std::size_t rank(const IntMatrix& matrix, Coefficients field) {
  return field.is_rational() ? rank_rational(matrix) : rank_mod_p(matrix, field.characteristic());
}

FieldMatrix to_field(const IntMatrix& matrix, Coefficients field) {
  FieldMatrix out(matrix.rows(), matrix.cols(), FieldScalar::zero(field));
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    for (std::size_t j = 0; j < matrix.cols(); ++j) {
      if (matrix(i, j) != 0) {
        out(i, j) = FieldScalar::one(field) * FieldScalar(Rational(matrix(i, j)));
      }
    }
  }
  return out;
}

std::vector<std::size_t> row_reduce(FieldMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < a.rows() && a(pivot, c).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    a.swap_rows(pivot, r);
    const FieldScalar inv = a(r, c).inverse();
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const FieldScalar factor = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= factor * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<FieldVector> nullspace(const FieldMatrix& matrix) {
  FieldMatrix a = matrix;
  const auto pivots = row_reduce(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<FieldVector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    FieldVector v(a.cols());
    v[free] = FieldScalar(Rational(1));
    for (std::size_t row = 0; row < pivots.size(); ++row) v[pivots[row]] = -a(row, free);
    // Carry the field of the matrix onto the whole vector.
    if (a.rows() > 0 && a.cols() > 0) {
      const FieldScalar zero = a(0, 0) - a(0, 0);
      for (auto& x : v) x = x + zero;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<LinearSolution> solve_augmented(FieldMatrix a) {
  if (a.cols() == 0) throw std::invalid_argument("augmented matrix needs a right-hand side column");
  const std::size_t unknowns = a.cols() - 1;
  const auto pivots = row_reduce(a);
  if (!pivots.empty() && pivots.back() == unknowns) return std::nullopt;
  LinearSolution out;
  out.values.assign(unknowns, FieldScalar());
  for (std::size_t row = 0; row < pivots.size(); ++row) out.values[pivots[row]] = a(row, unknowns);
  out.free_columns = unknowns - pivots.size();
  return out;
}

std::optional<FieldVector> solve(const FieldMatrix& a, const FieldVector& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: right-hand side size mismatch");
  FieldMatrix augmented(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) augmented(i, j) = a(i, j);
    augmented(i, a.cols()) = b[i];
  }
  auto solution = solve_augmented(std::move(augmented));
  if (!solution) return std::nullopt;
  return std::move(solution->values);
}

}  // namespace frl
