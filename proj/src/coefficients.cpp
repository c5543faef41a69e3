#include "frl/coefficients.hpp"

#include <charconv>
#include <stdexcept>

namespace frl {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

Integer mod_p(const Integer& value, std::uint32_t p) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), p);
  return r;
}

std::uint32_t common_characteristic(const FieldScalar& a, const FieldScalar& b) {
  if (a.characteristic() != 0 && b.characteristic() != 0 &&
      a.characteristic() != b.characteristic()) {
    throw std::logic_error("mixing scalars of different prime fields");
  }
  return a.characteristic() != 0 ? a.characteristic() : b.characteristic();
}

}  // namespace

Coefficients Coefficients::prime_field(std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  return Coefficients(p);
}

Coefficients Coefficients::parse(std::string_view name) {
  if (name == "q" || name == "Q") return rationals();
  if (name.size() >= 2 && (name[0] == 'f' || name[0] == 'F')) {
    std::uint32_t p = 0;
    const auto* first = name.data() + 1;
    const auto* last = name.data() + name.size();
    const auto [ptr, ec] = std::from_chars(first, last, p);
    if (ec == std::errc() && ptr == last) {
      if (!is_prime(p)) throw ParseError("coefficient field F_" + std::to_string(p) + ": not prime");
      return Coefficients(p);
    }
  }
  throw ParseError("unknown coefficient field '" + std::string(name) + "' (use q, f2, f3, ...)");
}

std::string Coefficients::name() const {
  return p_ == 0 ? "Q" : "F" + std::to_string(p_);
}

FieldScalar::FieldScalar(long value, Coefficients field)
    : value_(value), p_(field.characteristic()) {
  reduce();
}

void FieldScalar::reduce() {
  if (p_ == 0) return;
  value_.canonicalize();
  const Integer den = mod_p(value_.get_den(), p_);
  if (den == 0) throw std::domain_error("denominator divisible by the characteristic");
  Integer inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), Integer(p_).get_mpz_t());
  value_ = Rational(mod_p(value_.get_num() * inv, p_));
}

std::string FieldScalar::to_string() const { return value_.get_str(); }

FieldScalar FieldScalar::operator-() const {
  FieldScalar out = *this;
  out.value_ = -out.value_;
  out.reduce();
  return out;
}

FieldScalar FieldScalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  FieldScalar out = *this;
  out.value_ = 1 / out.value_;
  out.reduce();
  return out;
}

FieldScalar operator+(const FieldScalar& a, const FieldScalar& b) {
  FieldScalar out(a.value_ + b.value_);
  out.p_ = common_characteristic(a, b);
  out.reduce();
  return out;
}

FieldScalar operator-(const FieldScalar& a, const FieldScalar& b) {
  FieldScalar out(a.value_ - b.value_);
  out.p_ = common_characteristic(a, b);
  out.reduce();
  return out;
}

FieldScalar operator*(const FieldScalar& a, const FieldScalar& b) {
  FieldScalar out(a.value_ * b.value_);
  out.p_ = common_characteristic(a, b);
  out.reduce();
  return out;
}

bool operator==(const FieldScalar& a, const FieldScalar& b) {
  if (a.p_ == b.p_) return a.value_ == b.value_;
  return (a - b).is_zero();
}

}  // namespace frl
