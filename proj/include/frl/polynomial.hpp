#pragma once

#include <string>
#include <vector>

#include "frl/types.hpp"

namespace frl {

/// Integer polynomial in t, coefficients by ascending power, kept trimmed
/// (no trailing zero coefficients; the zero polynomial is empty).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(IntegerSequence coefficients);
  static Polynomial monomial(const Integer& coefficient, int degree);
  /// (1 - t^2)^e
  static Polynomial one_minus_t2_power(int exponent);
  /// Σ a_i t^{2i}
  static Polynomial in_t_squared(const IntegerSequence& coefficients);

  const IntegerSequence& coefficients() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Integer coefficient(int power) const;
  Integer evaluate(const Integer& t) const;
  /// t^d P(1/t) for d >= degree().
  Polynomial reversed(int d) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string to_string() const;

 private:
  void trim();
  IntegerSequence coeffs_;
};

}  // namespace frl
