#include "frl/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace frl {

Polynomial::Polynomial(IntegerSequence coefficients) : coeffs_(std::move(coefficients)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::monomial(const Integer& coefficient, int degree) {
  IntegerSequence c(degree + 1, 0);
  c[degree] = coefficient;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::one_minus_t2_power(int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  IntegerSequence c(2 * exponent + 1, 0);
  for (int k = 0; k <= exponent; ++k) {
    c[2 * k] = binomial(exponent, k);
    if (k % 2 != 0) c[2 * k] = -c[2 * k];
  }
  return Polynomial(std::move(c));
}

Polynomial Polynomial::in_t_squared(const IntegerSequence& coefficients) {
  IntegerSequence c(coefficients.empty() ? 0 : 2 * coefficients.size() - 1, 0);
  for (std::size_t i = 0; i < coefficients.size(); ++i) c[2 * i] = coefficients[i];
  return Polynomial(std::move(c));
}

Integer Polynomial::coefficient(int power) const {
  if (power < 0 || power > degree()) return 0;
  return coeffs_[power];
}

Integer Polynomial::evaluate(const Integer& t) const {
  Integer value = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) value = value * t + *it;
  return value;
}

Polynomial Polynomial::reversed(int d) const {
  if (d < degree()) throw std::invalid_argument("reversal degree below polynomial degree");
  IntegerSequence c(d + 1, 0);
  for (int i = 0; i <= degree(); ++i) c[d - i] = coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-() const {
  IntegerSequence c = coeffs_;
  for (auto& x : c) x = -x;
  return Polynomial(std::move(c));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  IntegerSequence c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  IntegerSequence c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(c));
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = 0; i <= degree(); ++i) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    const Integer magnitude = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    if (magnitude != 1 || i == 0) out += magnitude.get_str();
    if (i >= 1) out += "t";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace frl
