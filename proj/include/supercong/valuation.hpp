#pragma once

// p-adic valuation and the "congruent modulo p^n" relation on rationals.

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "error.hpp"
#include "rational.hpp"

namespace supercong {

/// Exponent of p in a rational, or INFINITY for zero.
class Valuation {
 public:
  static Valuation infinity() { return Valuation(); }
  static Valuation finite(long v) { return Valuation(v); }

  bool is_infinite() const { return !value_.has_value(); }

  long value() const {
    if (!value_) throw Error(ErrorKind::InvalidArgument, "valuation is infinite");
    return *value_;
  }

  // v(xy) = v(x) + v(y); infinity absorbs.
  friend Valuation operator+(const Valuation& a, const Valuation& b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return finite(*a.value_ + *b.value_);
  }

  friend bool operator==(const Valuation& a, const Valuation& b) = default;

  friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (a.is_infinite() || b.is_infinite()) {
      return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
    }
    return *a.value_ <=> *b.value_;
  }

  bool at_least(long n) const { return is_infinite() || *value_ >= n; }

  std::string str() const { return value_ ? std::to_string(*value_) : "inf"; }

  friend std::ostream& operator<<(std::ostream& os, const Valuation& v) { return os << v.str(); }

 private:
  Valuation() = default;
  explicit Valuation(long v) : value_(v) {}

  std::optional<long> value_;
};

// Deterministic trial division; complete for every p < 10^12.
inline bool is_prime(long n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  if (n >= 1'000'000'000'000L) {
    throw Error(ErrorKind::InvalidArgument, "primality by trial division limited to n < 10^12");
  }
  for (long d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

inline void require_prime(long p) {
  if (p < 2) throw Error(ErrorKind::InvalidArgument, "p must be >= 2, got " + std::to_string(p));
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is composite");
}

/// Number of times p divides n (n != 0); n is not modified.
inline long count_factor(const Integer& n, long p) {
  Integer rest;
  Integer prime(p);
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t()));
}

inline Valuation padic_valuation(const Rational& x, long p) {
  require_prime(p);
  if (x.is_zero()) return Valuation::infinity();
  return Valuation::finite(count_factor(x.numerator(), p) - count_factor(x.denominator(), p));
}

/// v_p(a - b) >= n. Operands need not be p-integral.
inline bool congruent_mod_power(const Rational& a, const Rational& b, long p, long n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "modulus exponent must be >= 1");
  return padic_valuation(a - b, p).at_least(n);
}

}  // namespace supercong
