#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "frl/coefficients.hpp"
#include "frl/types.hpp"

namespace frl {

/// Dense row-major matrix.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using FieldMatrix = Matrix<FieldScalar>;
using FieldVector = std::vector<FieldScalar>;

/// Fraction-free (Bareiss) determinant of a square integer matrix.
Integer determinant(IntMatrix matrix);

/// Rank over Q by fraction-free elimination.
std::size_t rank_rational(IntMatrix matrix);
/// Rank over F_p after reducing entries mod p.
std::size_t rank_mod_p(const IntMatrix& matrix, std::uint32_t p);
std::size_t rank(const IntMatrix& matrix, Coefficients field);

FieldMatrix to_field(const IntMatrix& matrix, Coefficients field);

/// Brings `matrix` to reduced row echelon form in place; returns the pivot
/// column of each nonzero row.
std::vector<std::size_t> row_reduce(FieldMatrix& matrix);

/// Basis of {x : A x = 0}, one vector per free column in increasing column
/// order, with a 1 in that free column.
std::vector<FieldVector> nullspace(const FieldMatrix& matrix);

struct LinearSolution {
  FieldVector values;  // free variables set to zero
  std::size_t free_columns = 0;
};

/// Solves [A | b] given as one augmented matrix. nullopt if inconsistent.
std::optional<LinearSolution> solve_augmented(FieldMatrix augmented);
std::optional<FieldVector> solve(const FieldMatrix& a, const FieldVector& b);

}  // namespace frl
