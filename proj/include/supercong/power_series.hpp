#pragma once

/**
 * @file power_series.hpp
 * @brief Truncated univariate power series over the rationals.
 *
 * A TruncSeries of order D stores c_0..c_D exactly. Binary operations truncate
 * at the smaller of the two orders. These carry the x-deformations of the
 * hypergeometric parameters: a sum evaluated with parameters a + s x becomes a
 * series whose low coefficients are then tested for p-divisibility.
 */

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "rational.hpp"
#include "valuation.hpp"

namespace supercong {

inline constexpr int kDefaultSeriesOrder = 4;

class TruncSeries {
 public:
  /// Zero series of the given order.
  explicit TruncSeries(int order = kDefaultSeriesOrder) : coeffs_(checked_size(order)) {}

  /// Coefficients c_0..c_D; the order is size - 1.
  explicit TruncSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw Error(ErrorKind::InvalidArgument, "series needs at least c_0");
  }

  static TruncSeries constant(const Rational& c, int order = kDefaultSeriesOrder) {
    TruncSeries s(order);
    s.coeffs_[0] = c;
    return s;
  }

  /// base + slope * x.
  static TruncSeries linear(const Rational& base, const Rational& slope,
                            int order = kDefaultSeriesOrder) {
    TruncSeries s(order);
    s.coeffs_[0] = base;
    if (order >= 1) s.coeffs_[1] = slope;
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  const Rational& operator[](int d) const { return coeffs_[static_cast<std::size_t>(d)]; }
  Rational& operator[](int d) { return coeffs_[static_cast<std::size_t>(d)]; }

  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_constant() const {
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
  }

  /// All odd-degree coefficients are exactly zero (a series in x^2).
  bool is_even() const {
    for (int d = 1; d <= order(); d += 2) {
      if (!(*this)[d].is_zero()) return false;
    }
    return true;
  }

  TruncSeries truncated(int order) const {
    TruncSeries s(order);
    for (int d = 0; d <= std::min(order, this->order()); ++d) s[d] = (*this)[d];
    return s;
  }

  TruncSeries operator-() const {
    TruncSeries s = *this;
    for (auto& c : s.coeffs_) c = -c;
    return s;
  }

  TruncSeries& operator*=(const Rational& k) {
    for (auto& c : coeffs_) c *= k;
    return *this;
  }

  /// Multiplication by (base + slope x), in place; cheaper than a full Cauchy product.
  TruncSeries& mul_linear(const Rational& base, const Rational& slope) {
    for (int d = order(); d >= 0; --d) {
      Rational c = (*this)[d] * base;
      if (d > 0 && !slope.is_zero()) c += (*this)[d - 1] * slope;
      (*this)[d] = std::move(c);
    }
    return *this;
  }

  /// Division by (base + slope x); base must be nonzero.
  TruncSeries& div_linear(const Rational& base, const Rational& slope) {
    if (base.is_zero()) throw Error(ErrorKind::NonInvertible, "linear factor has zero constant term");
    Rational inv = base.reciprocal();
    for (int d = 0; d <= order(); ++d) {
      Rational c = (*this)[d];
      if (d > 0 && !slope.is_zero()) c -= slope * (*this)[d - 1];
      (*this)[d] = c * inv;
    }
    return *this;
  }

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries s(std::min(a.order(), b.order()));
    for (int d = 0; d <= s.order(); ++d) s[d] = a[d] + b[d];
    return s;
  }

  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return a + (-b); }

  friend TruncSeries operator*(TruncSeries a, const Rational& k) { return a *= k; }
  friend TruncSeries operator*(const Rational& k, TruncSeries a) { return a *= k; }

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) = default;

  std::string str() const {
    std::string out;
    for (int d = 0; d <= order(); ++d) {
      if (d) out += " + ";
      out += "(" + (*this)[d].str() + ")";
      if (d) out += d == 1 ? "x" : "x^" + std::to_string(d);
    }
    return out + " + O(x^" + std::to_string(order() + 1) + ")";
  }

  friend std::ostream& operator<<(std::ostream& os, const TruncSeries& s) { return os << s.str(); }

 private:
  static std::size_t checked_size(int order) {
    if (order < 0) throw Error(ErrorKind::InvalidArgument, "series order must be >= 0");
    return static_cast<std::size_t>(order) + 1;
  }

  std::vector<Rational> coeffs_;
};

/// Cauchy product truncated at min(order(a), order(b)).
inline TruncSeries ps_mul(const TruncSeries& a, const TruncSeries& b) {
  TruncSeries s(std::min(a.order(), b.order()));
  for (int i = 0; i <= s.order(); ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= s.order(); ++j) s[i + j] += a[i] * b[j];
  }
  return s;
}

inline TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) { return ps_mul(a, b); }

/// Multiplicative inverse up to the same order; requires c_0 != 0.
inline TruncSeries ps_invert(const TruncSeries& a) {
  if (a[0].is_zero()) throw Error(ErrorKind::NonInvertible, "constant term is zero");
  TruncSeries b(a.order());
  Rational inv0 = a[0].reciprocal();
  b[0] = inv0;
  for (int d = 1; d <= a.order(); ++d) {
    Rational acc;
    for (int i = 1; i <= d; ++i) acc += a[i] * b[d - i];
    b[d] = -acc * inv0;
  }
  return b;
}

inline TruncSeries operator/(const TruncSeries& a, const TruncSeries& b) { return a * ps_invert(b); }

/// (a0 + slope x)_k = prod_{i<k} (a0 + i + slope x), truncated at order D.
inline TruncSeries pochhammer_series(const Rational& a0, const Rational& slope, long k,
                                     int order = kDefaultSeriesOrder) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "pochhammer_series needs k >= 0");
  TruncSeries s = TruncSeries::constant(Rational(1), order);
  Rational base = a0;
  for (long i = 0; i < k; ++i) {
    s.mul_linear(base, slope);
    base += Rational(1);
  }
  return s;
}

inline const Rational& coefficient(const TruncSeries& s, int d) {
  if (d < 0 || d > s.order()) {
    throw Error(ErrorKind::OutOfRange, "degree " + std::to_string(d) + " beyond order " +
                                           std::to_string(s.order()));
  }
  return s[d];
}

/// s(i x) for an even series s: c_{2j} picks up (-1)^j. Odd terms must vanish.
inline TruncSeries substitute_imaginary(const TruncSeries& s) {
  if (!s.is_even()) throw Error(ErrorKind::InvalidArgument, "s(ix) is not real for a non-even series");
  TruncSeries r = s;
  for (int d = 2; d <= r.order(); d += 4) r[d] = -r[d];
  return r;
}

/// Minimum p-adic valuation over all coefficients (infinity for the zero series).
inline Valuation series_valuation(const TruncSeries& s, long p) {
  Valuation best = Valuation::infinity();
  for (const auto& c : s.coefficients()) best = std::min(best, padic_valuation(c, p));
  return best;
}

}  // namespace supercong
