#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "frl/types.hpp"

namespace frl {

/// Coefficient field: the rationals or a prime field F_p.
class Coefficients {
 public:
  static Coefficients rationals() { return Coefficients(0); }
  /// Throws std::invalid_argument unless p is prime.
  static Coefficients prime_field(std::uint32_t p);
  /// "q" or "Q" for the rationals, "f<p>" / "F<p>" for F_p. Throws ParseError.
  static Coefficients parse(std::string_view name);

  bool is_rational() const { return p_ == 0; }
  /// 0 for the rationals.
  std::uint32_t characteristic() const { return p_; }
  std::string name() const;

  friend bool operator==(Coefficients, Coefficients) = default;

 private:
  explicit Coefficients(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

/// Exact element of Q or of F_p. Residues are kept in [0, p).
///
/// A default-constructed or rational-constructed scalar combines with an
/// F_p scalar by reduction mod p, so zero-initialized matrices work for any
/// field.
class FieldScalar {
 public:
  FieldScalar() = default;
  explicit FieldScalar(Rational value) : value_(std::move(value)) {}
  FieldScalar(long value, Coefficients field);

  static FieldScalar zero(Coefficients field) { return FieldScalar(0, field); }
  static FieldScalar one(Coefficients field) { return FieldScalar(1, field); }

  bool is_zero() const { return value_ == 0; }
  std::uint32_t characteristic() const { return p_; }
  /// The rational value, or the residue in [0, p) as an integer.
  const Rational& rational() const { return value_; }
  std::string to_string() const;

  FieldScalar operator-() const;
  FieldScalar inverse() const;

  friend FieldScalar operator+(const FieldScalar& a, const FieldScalar& b);
  friend FieldScalar operator-(const FieldScalar& a, const FieldScalar& b);
  friend FieldScalar operator*(const FieldScalar& a, const FieldScalar& b);
  friend FieldScalar operator/(const FieldScalar& a, const FieldScalar& b) { return a * b.inverse(); }
  FieldScalar& operator+=(const FieldScalar& b) { return *this = *this + b; }
  FieldScalar& operator-=(const FieldScalar& b) { return *this = *this - b; }
  FieldScalar& operator*=(const FieldScalar& b) { return *this = *this * b; }

  friend bool operator==(const FieldScalar& a, const FieldScalar& b);

 private:
  void reduce();
  Rational value_ = 0;
  std::uint32_t p_ = 0;
};

}  // namespace frl
