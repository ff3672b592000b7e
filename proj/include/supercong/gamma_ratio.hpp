#pragma once

// Products of Gamma values that telescope to rationals via Γ(x+1) = xΓ(x).

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "combinatorics.hpp"
#include "error.hpp"
#include "rational.hpp"

namespace supercong {

/// prod Γ(numerator_args) / prod Γ(denominator_args).
struct GammaRatioExpr {
  std::vector<Rational> numerator_args;
  std::vector<Rational> denominator_args;
};

/// Reduces a Gamma ratio to an exact rational.
///
/// Arguments are grouped by fractional part; inside a group both sides are
/// sorted and paired in order. Each pair Γ(α+m)/Γ(α) becomes (α)_m, or the
/// reciprocal of a Pochhammer product when m < 0. Any consistent pairing gives
/// the same product, so the sorted order only makes the work deterministic.
inline Rational gamma_ratio_value(const GammaRatioExpr& g) {
  auto check_pole = [](const Rational& x) {
    if (x.is_integer() && x.sign() <= 0) throw Error(ErrorKind::Pole, "Gamma pole at " + x.str());
  };
  std::map<Rational, std::pair<std::vector<Rational>, std::vector<Rational>>> groups;
  for (const auto& x : g.numerator_args) {
    check_pole(x);
    groups[x.fractional_part()].first.push_back(x);
  }
  for (const auto& x : g.denominator_args) {
    check_pole(x);
    groups[x.fractional_part()].second.push_back(x);
  }
  Rational value(1);
  for (auto& [frac, sides] : groups) {
    auto& [num, den] = sides;
    if (num.size() != den.size()) {
      throw Error(ErrorKind::Unpairable, "fractional part " + frac.str() + " occurs " +
                                             std::to_string(num.size()) + " times above and " +
                                             std::to_string(den.size()) + " times below");
    }
    std::sort(num.begin(), num.end());
    std::sort(den.begin(), den.end());
    for (std::size_t i = 0; i < num.size(); ++i) {
      long shift = (num[i] - den[i]).floor().get_si();
      if (shift >= 0) {
        value *= rising_factorial(den[i], shift);
      } else {
        value /= rising_factorial(num[i], -shift);
      }
    }
  }
  return value;
}

}  // namespace supercong
