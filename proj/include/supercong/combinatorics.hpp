#pragma once

// Rising factorials, binomials and the second-order harmonic sums.

#include "error.hpp"
#include "rational.hpp"

namespace supercong {

/// (a)_k = a (a+1) ... (a+k-1); (a)_0 = 1.
inline Rational rising_factorial(const Rational& a, long k) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "rising factorial needs k >= 0");
  Rational result(1);
  Rational factor = a;
  for (long i = 0; i < k; ++i) {
    result *= factor;
    if (result.is_zero()) return result;
    factor += Rational(1);
  }
  return result;
}

inline Integer factorial(long n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "factorial needs n >= 0");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

/// binom(n, k) for integer n >= 0; zero outside 0 <= k <= n.
inline Integer binomial(long n, long k) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "binomial needs n >= 0");
  if (k < 0 || k > n) return Integer(0);
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

/// (1/2)_k / k!, which equals 4^{-k} binom(2k, k).
inline Rational central_half_ratio(long k) {
  return rising_factorial(Rational(1, 2), k) / Rational(factorial(k));
}

/// H_k^(2) = sum_{j=1}^k 1/j^2.
inline Rational harmonic2(long k) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "harmonic2 needs k >= 0");
  Rational sum;
  for (long j = 1; j <= k; ++j) sum += Rational(Integer(1), Integer(j) * Integer(j));
  return sum;
}

/// sum_{j=1}^k 1/(2j-1)^2.
inline Rational odd_harmonic2(long k) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "odd_harmonic2 needs k >= 0");
  Rational sum;
  for (long j = 1; j <= k; ++j) {
    Integer odd(2 * j - 1);
    sum += Rational(Integer(1), odd * odd);
  }
  return sum;
}

}  // namespace supercong
