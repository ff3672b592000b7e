#pragma once

/**
 * @file modular_form.hpp
 * @brief q-expansion of the weight-4 eta product η(2z)^4 η(4z)^4.
 *
 *     η(2z)^4 η(4z)^4 = q prod_{n>=1} (1 - q^{2n})^4 (1 - q^{4n})^4
 *
 * The product is q times a series in u = q^2, so only the u-series
 * prod (1-u^n)^4 (1-u^{2n})^4 is multiplied out, up to u^{(N-1)/2}.
 */

#include <cstdlib>
#include <string>
#include <vector>

#include "error.hpp"
#include "rational.hpp"
#include "valuation.hpp"

namespace supercong {

inline constexpr long kDefaultEtaBudget = 10000;

/// Coefficients a_1..a_N of the eta product.
class QExpansion {
 public:
  QExpansion() = default;
  QExpansion(long bound, std::vector<Integer> coeffs) : bound_(bound), coeffs_(std::move(coeffs)) {}

  long bound() const { return bound_; }

  const Integer& at(long n) const {
    if (n < 1 || n > bound_) {
      throw Error(ErrorKind::OutOfRange,
                  "index " + std::to_string(n) + " outside 1.." + std::to_string(bound_));
    }
    return coeffs_[static_cast<std::size_t>(n)];
  }

 private:
  long bound_ = 0;
  std::vector<Integer> coeffs_;  // index 0 unused
};

namespace detail {

// In place: c <- c * (1 - u^m)^4 truncated at c.size() - 1.
inline void mul_one_minus_power_4th(std::vector<Integer>& c, long m) {
  const long top = static_cast<long>(c.size()) - 1;
  for (long i = top; i >= m; --i) {
    Integer acc = c[i] - 4 * c[i - m];
    if (i >= 2 * m) acc += 6 * c[i - 2 * m];
    if (i >= 3 * m) acc -= 4 * c[i - 3 * m];
    if (i >= 4 * m) acc += c[i - 4 * m];
    c[i] = std::move(acc);
  }
}

}  // namespace detail

inline QExpansion eta_product_expansion(long bound) {
  if (bound < 1) throw Error(ErrorKind::InvalidArgument, "expansion bound must be >= 1");
  const long top = (bound - 1) / 2;  // highest power of u needed
  std::vector<Integer> u(static_cast<std::size_t>(top) + 1, Integer(0));
  u[0] = 1;
  for (long n = 1; n <= top; ++n) detail::mul_one_minus_power_4th(u, n);       // (1 - q^{2n})^4
  for (long n = 1; 2 * n <= top; ++n) detail::mul_one_minus_power_4th(u, 2 * n);  // (1 - q^{4n})^4
  std::vector<Integer> a(static_cast<std::size_t>(bound) + 1, Integer(0));
  for (long j = 0; j <= top; ++j) a[static_cast<std::size_t>(2 * j + 1)] = u[static_cast<std::size_t>(j)];
  return QExpansion(bound, std::move(a));
}

inline const Integer& coefficient_at(const QExpansion& e, long n) { return e.at(n); }

/// Budget from SUPERCONG_BUDGET, falling back to the default.
inline long eta_budget_from_env() {
  const char* raw = std::getenv("SUPERCONG_BUDGET");
  if (raw == nullptr || *raw == '\0') return kDefaultEtaBudget;
  char* end = nullptr;
  long v = std::strtol(raw, &end, 10);
  if (*end != '\0' || v < 1) {
    throw Error(ErrorKind::InvalidArgument, std::string("bad SUPERCONG_BUDGET '") + raw + "'");
  }
  return v;
}

inline long checked_prime_power(long p, long r, long budget) {
  long value = 1;
  for (long i = 0; i < r; ++i) {
    if (value > budget / p) {
      throw Error(ErrorKind::BudgetExceeded, std::to_string(p) + "^" + std::to_string(r) +
                                                 " exceeds expansion budget " + std::to_string(budget));
    }
    value *= p;
  }
  return value;
}

/// Hecke recursion for a weight-4 eigenform: a_{p^2} = a_p^2 - p^3.
/// This is a fact external to the expansion and only used as a cross-check.
inline Integer hecke_square_coefficient(const Integer& a_p, long p) {
  Integer p3 = Integer(p) * p * p;
  return a_p * a_p - p3;
}

inline constexpr long kHeckeCrossCheckMaxPrime = 31;

struct PrimePowerCoefficient {
  Integer value;
  bool hecke_checked = false;
};

/// a_{p^r} read from the expansion (ground truth). For r = 2 and
/// p <= 31 the value is also compared with the Hecke recursion.
inline PrimePowerCoefficient prime_power_coefficient(const QExpansion& e, long p, long r) {
  if (p <= 2) throw Error(ErrorKind::InvalidArgument, "p must be an odd prime");
  require_prime(p);
  if (r < 1) throw Error(ErrorKind::InvalidArgument, "r must be >= 1");
  long index = checked_prime_power(p, r, e.bound());
  PrimePowerCoefficient out{e.at(index), false};
  if (r == 2 && p <= kHeckeCrossCheckMaxPrime) {
    Integer expected = hecke_square_coefficient(e.at(p), p);
    if (expected != out.value) {
      throw Error(ErrorKind::InvalidArgument, "Hecke cross-check failed at p = " + std::to_string(p));
    }
    out.hecke_checked = true;
  }
  return out;
}

inline PrimePowerCoefficient prime_power_coefficient(long p, long r, long budget = kDefaultEtaBudget) {
  if (p <= 2) throw Error(ErrorKind::InvalidArgument, "p must be an odd prime");
  long index = checked_prime_power(p, r < 1 ? 1 : r, budget);
  return prime_power_coefficient(eta_product_expansion(index), p, r);
}

}  // namespace supercong
