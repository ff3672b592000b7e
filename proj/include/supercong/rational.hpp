#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational numbers on top of GMP.
 *
 * Values are always normalized: gcd(|num|, den) = 1, den > 0, and zero is 0/1.
 * Equality is therefore structural. GMP's mpq_class keeps this invariant after
 * every arithmetic operation; the wrapper only adds checked construction,
 * division-by-zero errors and a stable textual form.
 */

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "error.hpp"

namespace supercong {

using Integer = mpz_class;

class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT: implicit from integer literals
  Rational(int value) : q_(static_cast<long>(value)) {}  // NOLINT
  Rational(const Integer& value) : q_(value) {}  // NOLINT
  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}
  Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
    q_.get_num() = num;
    q_.get_den() = den;
    q_.canonicalize();
  }

  // Parses "n" or "n/d" (decimal, optional leading '-').
  static Rational parse(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    Integer num, den(1);
    try {
      if (slash == std::string::npos) {
        num = Integer(s, 10);
      } else {
        num = Integer(s.substr(0, slash), 10);
        den = Integer(s.substr(slash + 1), 10);
      }
    } catch (const std::invalid_argument&) {
      throw Error(ErrorKind::InvalidArgument, "cannot parse rational '" + s + "'");
    }
    return Rational(num, den);
  }

  const Integer& numerator() const { return q_.get_num(); }
  const Integer& denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  // Integer part rounded toward negative infinity.
  Integer floor() const {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
  }

  // x - floor(x), always in [0, 1).
  Rational fractional_part() const { return *this - Rational(floor()); }

  Rational reciprocal() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "reciprocal of zero");
    Rational r;
    mpq_inv(r.q_.get_mpq_t(), q_.get_mpq_t());
    return r;
  }

  // Canonical text: "n" for integers, "n/d" otherwise.
  std::string str() const { return q_.get_str(10); }

  Rational operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
  }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

  const mpq_class& raw() const { return q_; }

 private:
  mpq_class q_;
};

inline Rational pow(Rational base, unsigned long exponent) {
  Rational result(1);
  while (exponent != 0) {
    if (exponent & 1UL) result *= base;
    exponent >>= 1;
    if (exponent != 0) base *= base;
  }
  return result;
}

// (-1)^e for a possibly negative exponent.
inline int minus_one_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace supercong

template <>
struct std::hash<supercong::Rational> {
  std::size_t operator()(const supercong::Rational& r) const {
    return std::hash<std::string>{}(r.str());
  }
};
