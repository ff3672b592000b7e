#pragma once

/**
 * @file hypergeometric.hpp
 * @brief Weighted truncated hypergeometric sums, scalar and x-deformed.
 *
 * A HypSum describes
 *
 *     sum_{k=0}^{K} (w1 k + w0) * prod_i (u_i)_k / (k! prod_j (l_j)_k) * z^k
 *
 * where every parameter is affine in a formal variable x (base + slope x).
 * The k! is always present, so a p+1 F p series is written with p lower
 * parameters. Scalar evaluation sets x = 0; series evaluation expands in x.
 */

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "power_series.hpp"
#include "rational.hpp"

namespace supercong {

struct AffineParam {
  Rational base;
  Rational slope;

  AffineParam() = default;
  AffineParam(Rational b) : base(std::move(b)) {}  // NOLINT: plain rationals are undeformed
  AffineParam(long b) : base(b) {}                 // NOLINT
  AffineParam(Rational b, Rational s) : base(std::move(b)), slope(std::move(s)) {}

  friend bool operator==(const AffineParam&, const AffineParam&) = default;
};

/// Term weight w1 * k + w0.
struct Weight {
  Rational w1;
  Rational w0{1};

  Rational at(long k) const { return w1 * Rational(k) + w0; }

  friend bool operator==(const Weight&, const Weight&) = default;
};

struct HypSum {
  std::vector<AffineParam> upper;
  std::vector<AffineParam> lower;
  Rational z{1};
  long truncation = 0;  // K, inclusive
  Weight weight;

  /// Same sum with every slope dropped (x = 0).
  HypSum scalarized() const {
    HypSum s = *this;
    for (auto& a : s.upper) a.slope = Rational();
    for (auto& b : s.lower) b.slope = Rational();
    return s;
  }

  friend bool operator==(const HypSum&, const HypSum&) = default;
};

namespace detail {

inline bool is_nonpositive_integer(const Rational& r) { return r.is_integer() && r.sign() <= 0; }

inline void check_truncation(const HypSum& s) {
  if (s.truncation < 0) throw Error(ErrorKind::InvalidArgument, "truncation K must be >= 0");
}

// (b)_k vanishes for some k <= K exactly when b = -m with m <= K - 1.
inline void check_lower_poles(const HypSum& s) {
  for (const auto& b : s.lower) {
    if (is_nonpositive_integer(b.base) && -b.base.floor() <= Integer(s.truncation - 1)) {
      throw Error(ErrorKind::Pole, "lower parameter " + b.base.str() + " vanishes before K = " +
                                       std::to_string(s.truncation));
    }
  }
}

}  // namespace detail

/// Exact value of the truncated weighted sum. Terms are built incrementally
/// from the ratio term_{k+1}/term_k, so the cost is linear in K.
inline Rational eval_hyp_sum(const HypSum& s) {
  detail::check_truncation(s);
  detail::check_lower_poles(s);
  Rational sum;
  Rational ratio_product(1);  // prod (u)_k / (k! prod (l)_k) z^k
  for (long k = 0; k <= s.truncation; ++k) {
    if (ratio_product.is_zero()) break;
    sum += s.weight.at(k) * ratio_product;
    if (k == s.truncation) break;
    Rational shift(k);
    for (const auto& a : s.upper) ratio_product *= a.base + shift;
    for (const auto& b : s.lower) ratio_product /= b.base + shift;
    ratio_product *= s.z;
    ratio_product /= Rational(k + 1);
  }
  return sum;
}

/// The sum as a truncated series in x. Upper parameters multiply in their
/// linear factors (a + k + s x); lower ones divide, which needs a nonzero
/// value at x = 0.
inline TruncSeries eval_hyp_sum_series(const HypSum& s, int order = kDefaultSeriesOrder) {
  detail::check_truncation(s);
  for (const auto& b : s.lower) {
    if (!detail::is_nonpositive_integer(b.base)) continue;
    if (-b.base.floor() > Integer(s.truncation - 1)) continue;
    if (b.slope.is_zero()) {
      throw Error(ErrorKind::Pole, "lower parameter " + b.base.str() + " vanishes before K");
    }
    throw Error(ErrorKind::NonInvertible,
                "lower parameter " + b.base.str() + " + " + b.slope.str() + "x has zero constant term");
  }
  TruncSeries sum(order);
  TruncSeries term = TruncSeries::constant(Rational(1), order);
  for (long k = 0; k <= s.truncation; ++k) {
    if (term.is_constant() && term[0].is_zero()) break;
    sum = sum + term * s.weight.at(k);
    if (k == s.truncation) break;
    Rational shift(k);
    for (const auto& a : s.upper) term.mul_linear(a.base + shift, a.slope);
    for (const auto& b : s.lower) term.div_linear(b.base + shift, b.slope);
    term *= s.z / Rational(k + 1);
  }
  return sum;
}

/// Smallest n such that some undeformed upper parameter equals -n.
inline std::optional<long> termination_index(const HypSum& s) {
  std::optional<long> best;
  for (const auto& a : s.upper) {
    if (!a.slope.is_zero() || !detail::is_nonpositive_integer(a.base)) continue;
    long n = -a.base.floor().get_si();
    if (!best || n < *best) best = n;
  }
  return best;
}

}  // namespace supercong
