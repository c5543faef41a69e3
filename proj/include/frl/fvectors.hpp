#pragma once

#include <utility>
#include <vector>

#include "frl/types.hpp"

namespace frl {

/// h-vector (h_0..h_n) from (f_0..f_{n-1}) through
///   Σ h_i t^{n-i} = Σ_{i=0}^{n} f_{i-1} (t-1)^{n-i},  f_{-1} = 1.
/// Throws std::invalid_argument when f.size() != n.
IntegerSequence h_from_f(const IntegerSequence& f, int n);
/// Inverse of h_from_f. Requires h.size() == n + 1.
IntegerSequence f_from_h(const IntegerSequence& h, int n);
/// (1, h_1-h_0, ..., h_{⌊n/2⌋}-h_{⌊n/2⌋-1})
IntegerSequence g_from_h(const IntegerSequence& h);

struct BinomialTerm {
  Integer top;
  int bottom;
  friend bool operator==(const BinomialTerm&, const BinomialTerm&) = default;
};

/// Greedy binomial i-expansion a = C(a_i, i) + C(a_{i-1}, i-1) + ... + C(a_j, j)
/// with a_i > a_{i-1} > ... > a_j >= j >= 1. Requires a >= 1, i >= 1.
std::vector<BinomialTerm> binomial_expansion(const Integer& a, int i);

/// Macaulay pseudo-power a^<i>; 0^<i> = 0.
Integer pseudo_power(const Integer& a, int i);

/// k_0 = 1, every entry nonnegative and k_{i+1} <= k_i^<i> for i >= 1.
bool is_m_vector(const IntegerSequence& k);

struct GTheoremVerdict {
  bool ds_holds = false;       // h_i = h_{n-i}
  bool g_nonnegative = false;  // h_0 <= h_1 <= ... <= h_{⌊n/2⌋}
  bool g_is_m_vector = false;  // g is an M-vector
  bool passes() const { return ds_holds && g_nonnegative && g_is_m_vector; }
};

/// Necessary conditions of the g-theorem. Not a polytopality certificate.
GTheoremVerdict g_theorem_check(const IntegerSequence& f, int n);

/// f_{k-1} = Σ_{j=k}^{n} (-1)^{n-j} C(j,k) f_{j-1} for k = 0..n.
bool ds_f_form_check(const IntegerSequence& f, int n);

struct BoundCheck {
  bool holds = false;
  bool equality = false;
  /// bound - value per checked index (UBT) or value - bound (LBT).
  IntegerSequence slack;
};

/// h_i <= C(m-n+i-1, i) for 0 <= i <= ⌊n/2⌋.
BoundCheck ubt_check(const IntegerSequence& f, int n, int m);

/// f_i >= C(n,i) f_0 - C(n+1,i+1) i for 1 <= i <= n-2 and
/// f_{n-1} >= (n-1) f_0 - (n+1)(n-2). Throws std::invalid_argument for n < 3.
/// slack[k] belongs to f_{k+1}.
BoundCheck lbt_check(const IntegerSequence& f, int n);

/// f-vector of the boundary of the cyclic polytope C^n(m): C(m, i+1) for
/// i < ⌊n/2⌋, remaining entries from the f-form Dehn-Sommerville system
/// solved over the rationals.
IntegerSequence cyclic_f_vector(int n, int m);

/// h_{n-i} - h_i = (-1)^i (chi - χ(S^{n-1})) C(n,i) for all i.
bool generalized_ds_check(const IntegerSequence& f, int n, const Integer& chi);

}  // namespace frl
