#include "frl/fvectors.hpp"

#include <stdexcept>
#include <string>

#include "frl/linalg.hpp"

namespace frl {

Integer binomial(long n, long k) {
  if (k < 0) return 0;
  Integer out;
  mpz_bin_ui(out.get_mpz_t(), Integer(n).get_mpz_t(), static_cast<unsigned long>(k));
  return out;
}

namespace {

// f_{k-1} with f_{-1} = 1.
const Integer& f_shifted(const IntegerSequence& f, int k, const Integer& one) {
  return k == 0 ? one : f[k - 1];
}

long to_long(const Integer& value) {
  if (!value.fits_slong_p()) throw std::overflow_error("integer does not fit a long");
  return value.get_si();
}

}  // namespace

IntegerSequence h_from_f(const IntegerSequence& f, int n) {
  if (n < 0 || static_cast<int>(f.size()) != n) {
    throw std::invalid_argument("h_from_f: f has " + std::to_string(f.size()) +
                                " entries, expected n = " + std::to_string(n));
  }
  const Integer one = 1;
  IntegerSequence h(n + 1, 0);
  for (int k = 0; k <= n; ++k) {
    for (int i = 0; i <= k; ++i) {
      Integer term = binomial(n - i, k - i) * f_shifted(f, i, one);
      if ((k - i) % 2 == 0) {
        h[k] += term;
      } else {
        h[k] -= term;
      }
    }
  }
  return h;
}

IntegerSequence f_from_h(const IntegerSequence& h, int n) {
  if (n < 0 || static_cast<int>(h.size()) != n + 1) {
    throw std::invalid_argument("f_from_h: h must have n + 1 entries");
  }
  IntegerSequence f(n, 0);
  for (int k = 1; k <= n; ++k) {
    for (int i = 0; i <= k; ++i) f[k - 1] += binomial(n - i, k - i) * h[i];
  }
  return f;
}

IntegerSequence g_from_h(const IntegerSequence& h) {
  if (h.empty()) return {};
  const int n = static_cast<int>(h.size()) - 1;
  IntegerSequence g{1};
  for (int i = 1; i <= n / 2; ++i) g.push_back(h[i] - h[i - 1]);
  return g;
}

std::vector<BinomialTerm> binomial_expansion(const Integer& a, int i) {
  if (a < 1 || i < 1) throw std::invalid_argument("binomial_expansion needs a >= 1 and i >= 1");
  std::vector<BinomialTerm> terms;
  Integer rest = a;
  Integer top = 0;
  for (int k = i; k >= 1 && rest > 0; --k) {
    // Largest x with C(x, k) <= rest; x >= k since C(k, k) = 1 <= rest.
    long x = k;
    while (binomial(x + 1, k) <= rest) ++x;
    terms.push_back({x, k});
    rest -= binomial(x, k);
  }
  return terms;
}

Integer pseudo_power(const Integer& a, int i) {
  if (a == 0) return 0;
  if (a < 0) throw std::invalid_argument("pseudo_power of a negative integer");
  Integer out = 0;
  for (const auto& term : binomial_expansion(a, i)) {
    out += binomial(to_long(term.top) + 1, term.bottom + 1);
  }
  return out;
}

bool is_m_vector(const IntegerSequence& k) {
  if (k.empty()) return true;
  if (k[0] != 1) return false;
  for (const auto& entry : k) {
    if (entry < 0) return false;
  }
  for (std::size_t i = 1; i + 1 < k.size(); ++i) {
    if (k[i + 1] > pseudo_power(k[i], static_cast<int>(i))) return false;
  }
  return true;
}

GTheoremVerdict g_theorem_check(const IntegerSequence& f, int n) {
  const auto h = h_from_f(f, n);
  GTheoremVerdict verdict;
  verdict.ds_holds = true;
  for (int i = 0; i <= n; ++i) {
    if (h[i] != h[n - i]) verdict.ds_holds = false;
  }
  const auto g = g_from_h(h);
  verdict.g_nonnegative = true;
  for (std::size_t i = 1; i < g.size(); ++i) {
    if (g[i] < 0) verdict.g_nonnegative = false;
  }
  verdict.g_is_m_vector = is_m_vector(g);
  return verdict;
}

bool ds_f_form_check(const IntegerSequence& f, int n) {
  if (static_cast<int>(f.size()) != n) throw std::invalid_argument("ds_f_form_check: f length != n");
  const Integer one = 1;
  for (int k = 0; k <= n; ++k) {
    Integer rhs = 0;
    for (int j = k; j <= n; ++j) {
      Integer term = binomial(j, k) * f_shifted(f, j, one);
      if ((n - j) % 2 == 0) {
        rhs += term;
      } else {
        rhs -= term;
      }
    }
    if (rhs != f_shifted(f, k, one)) return false;
  }
  return true;
}

BoundCheck ubt_check(const IntegerSequence& f, int n, int m) {
  const auto h = h_from_f(f, n);
  BoundCheck out;
  out.holds = true;
  out.equality = true;
  for (int i = 0; i <= n / 2; ++i) {
    Integer slack = binomial(m - n + i - 1, i) - h[i];
    if (slack < 0) out.holds = false;
    if (slack != 0) out.equality = false;
    out.slack.push_back(std::move(slack));
  }
  return out;
}

BoundCheck lbt_check(const IntegerSequence& f, int n) {
  if (n < 3) throw std::invalid_argument("lower bound theorem needs n >= 3");
  if (static_cast<int>(f.size()) != n) throw std::invalid_argument("lbt_check: f length != n");
  BoundCheck out;
  out.holds = true;
  out.equality = true;
  auto record = [&](Integer slack) {
    if (slack < 0) out.holds = false;
    if (slack != 0) out.equality = false;
    out.slack.push_back(std::move(slack));
  };
  for (int i = 1; i <= n - 2; ++i) {
    record(f[i] - (binomial(n, i) * f[0] - binomial(n + 1, i + 1) * i));
  }
  record(f[n - 1] - (Integer(n - 1) * f[0] - Integer((n + 1) * (n - 2))));
  return out;
}

IntegerSequence cyclic_f_vector(int n, int m) {
  if (n < 1 || m <= n) throw std::invalid_argument("cyclic_f_vector needs m > n >= 1");
  const int known = n / 2;  // f_0 .. f_{known-1} fixed by neighbourliness
  const int unknowns = n - known;
  // Equations: Σ_{j} coeff(k, j) f_{j-1} = 0 with coeff = [j==k] - (-1)^{n-j} C(j,k).
  FieldMatrix system(n + 1, unknowns + 1, FieldScalar(Rational(0)));
  for (int k = 0; k <= n; ++k) {
    Rational constant = 0;
    for (int j = 0; j <= n; ++j) {
      Integer coeff = (j == k ? 1 : 0);
      if (j >= k) {
        const Integer c = binomial(j, k);
        coeff -= ((n - j) % 2 == 0) ? c : Integer(-c);
      }
      if (coeff == 0) continue;
      if (j == 0) {
        constant += Rational(coeff);
      } else if (j - 1 < known) {
        constant += Rational(coeff * binomial(m, j));
      } else {
        system(k, j - 1 - known) = FieldScalar(Rational(coeff));
      }
    }
    system(k, unknowns) = FieldScalar(Rational(-constant));
  }
  const auto solution = solve_augmented(system);
  if (!solution || solution->free_columns != 0) {
    throw CrossCheckError("cyclic_f_vector: Dehn-Sommerville system is not uniquely solvable");
  }
  IntegerSequence f;
  for (int i = 0; i < known; ++i) f.push_back(binomial(m, i + 1));
  for (const auto& value : solution->values) {
    const Rational& q = value.rational();
    if (q.get_den() != 1) throw CrossCheckError("cyclic_f_vector: non-integral solution");
    f.push_back(q.get_num());
  }
  return f;
}

bool generalized_ds_check(const IntegerSequence& f, int n, const Integer& chi) {
  const auto h = h_from_f(f, n);
  const Integer sphere_chi = (n - 1) % 2 == 0 ? 2 : 0;
  const Integer defect = chi - sphere_chi;
  for (int i = 0; i <= n; ++i) {
    Integer rhs = defect * binomial(n, i);
    if (i % 2 != 0) rhs = -rhs;
    if (h[n - i] - h[i] != rhs) return false;
  }
  return true;
}

}  // namespace frl
