#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace frl {

using Integer = mpz_class;
using Rational = mpq_class;
using IntegerSequence = std::vector<Integer>;

/// A mathematical precondition of an operation does not hold
/// (wrong complex type, singular minor, gate failure...).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: unparsable file, bad coefficient name, bad matrix string.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent computations of the same quantity disagree.
class CrossCheckError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Binomial coefficient C(n, k); zero for k < 0, generalized for n < 0.
Integer binomial(long n, long k);

}  // namespace frl
