#pragma once

/**
 * @file identities.hpp
 * @brief Terminating hypergeometric evaluation identities, checked exactly.
 *
 * Each identity is evaluated at a rational parameter point: the left side as a
 * HypSum, the right side as a Gamma ratio (times a second HypSum for the
 * Whipple 6F5 and 7F6 transformations). Equality is exact rational equality.
 */

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "gamma_ratio.hpp"
#include "hypergeometric.hpp"
#include "rational.hpp"

namespace supercong {

enum class IdentityId {
  Whipple4F3,     // well-poised 4F3 at -1
  Whipple6F5,     // well-poised 6F5 at -1 -> 3F2 at 1
  Whipple7F6,     // very-well-poised 7F6 at 1 -> balanced 4F3
  Gessel31_1,     // 5F4 at 1/4
  GosperStrange,  // 5F4 at 1/4 (strange evaluation)
  GesselP544,     // 4F3 at -1/8
};

inline constexpr std::array<IdentityId, 6> kAllIdentities = {
    IdentityId::Whipple4F3, IdentityId::Whipple6F5,    IdentityId::Whipple7F6,
    IdentityId::Gessel31_1, IdentityId::GosperStrange, IdentityId::GesselP544,
};

inline std::string_view identity_name(IdentityId id) {
  switch (id) {
    case IdentityId::Whipple4F3: return "WHIPPLE_4F3";
    case IdentityId::Whipple6F5: return "WHIPPLE_6F5";
    case IdentityId::Whipple7F6: return "WHIPPLE_7F6";
    case IdentityId::Gessel31_1: return "GESSEL_31_1";
    case IdentityId::GosperStrange: return "GOSPER_STRANGE";
    case IdentityId::GesselP544: return "GESSEL_P544";
  }
  return "?";
}

/// Free parameters of an identity. Which fields are read depends on the id:
///
///   Whipple4F3      a, c, d          (c or d a nonpositive integer)
///   Whipple6F5      a, b, c, d, e    (d or e a nonpositive integer)
///   Whipple7F6      a, c, d, e, f, g (one of e, f, g a nonpositive integer)
///   Gessel31_1      a, c, n
///   GosperStrange   a, b, n
///   GesselP544      a, n
struct IdentityParams {
  Rational a, b, c, d, e, f, g;
  long n = 0;
};

struct IdentitySides {
  Rational lhs;
  Rational rhs;
  bool holds() const { return lhs == rhs; }
};

namespace detail {

// Smallest m with one of the candidates equal to -m.
inline long terminating_index(std::initializer_list<const Rational*> candidates, IdentityId id) {
  std::optional<long> best;
  for (const Rational* r : candidates) {
    if (r->is_integer() && r->sign() <= 0) {
      long m = -r->floor().get_si();
      if (!best || m < *best) best = m;
    }
  }
  if (!best) {
    throw Error(ErrorKind::NotTerminating,
                std::string(identity_name(id)) + " needs a nonpositive-integer terminating parameter");
  }
  return *best;
}

inline void require_nonnegative_n(long n, IdentityId id) {
  if (n < 0) throw Error(ErrorKind::NotTerminating, std::string(identity_name(id)) + " needs n >= 0");
}

// (x)_n as a Gamma ratio Γ(x+n)/Γ(x).
inline void push_pochhammer(GammaRatioExpr& g, const Rational& x, long n, bool in_numerator) {
  auto& top = in_numerator ? g.numerator_args : g.denominator_args;
  auto& bottom = in_numerator ? g.denominator_args : g.numerator_args;
  top.push_back(x + Rational(n));
  bottom.push_back(x);
}

}  // namespace detail

inline IdentitySides evaluate_identity(IdentityId id, const IdentityParams& q) {
  const Rational one(1);
  const Rational half(1, 2);
  const auto& a = q.a;
  switch (id) {
    case IdentityId::Whipple4F3: {
      long n = detail::terminating_index({&q.c, &q.d}, id);
      HypSum lhs{{a, one + a / 2, q.c, q.d}, {a / 2, one + a - q.c, one + a - q.d}, Rational(-1), n, {}};
      GammaRatioExpr rhs{{one + a - q.c, one + a - q.d}, {one + a, one + a - q.c - q.d}};
      return {eval_hyp_sum(lhs), gamma_ratio_value(rhs)};
    }
    case IdentityId::Whipple6F5: {
      long n = detail::terminating_index({&q.d, &q.e}, id);
      HypSum lhs{{a, one + a / 2, q.b, q.c, q.d, q.e},
                 {a / 2, one + a - q.b, one + a - q.c, one + a - q.d, one + a - q.e},
                 Rational(-1), n, {}};
      GammaRatioExpr prefactor{{one + a - q.d, one + a - q.e}, {one + a, one + a - q.d - q.e}};
      HypSum tail{{one + a - q.b - q.c, q.d, q.e}, {one + a - q.b, one + a - q.c}, one, n, {}};
      return {eval_hyp_sum(lhs), gamma_ratio_value(prefactor) * eval_hyp_sum(tail)};
    }
    case IdentityId::Whipple7F6: {
      long n = detail::terminating_index({&q.e, &q.f, &q.g}, id);
      HypSum lhs{{a, one + a / 2, q.c, q.d, q.e, q.f, q.g},
                 {a / 2, one + a - q.c, one + a - q.d, one + a - q.e, one + a - q.f, one + a - q.g},
                 one, n, {}};
      GammaRatioExpr prefactor{
          {one + a - q.e, one + a - q.f, one + a - q.g, one + a - q.e - q.f - q.g},
          {one + a, one + a - q.f - q.g, one + a - q.e - q.f, one + a - q.e - q.g}};
      HypSum tail{{one + a - q.c - q.d, q.e, q.f, q.g},
                  {q.e + q.f + q.g - a, one + a - q.c, one + a - q.d},
                  one, n, {}};
      return {eval_hyp_sum(lhs), gamma_ratio_value(prefactor) * eval_hyp_sum(tail)};
    }
    case IdentityId::Gessel31_1: {
      detail::require_nonnegative_n(q.n, id);
      const Rational n(q.n);
      const auto& c = q.c;
      HypSum lhs{{half + a - c, -n, n + one, Rational(2) - Rational(2) * c + n,
                  Rational(5, 3) - Rational(2, 3) * c + n / 3},
                 {Rational(2) - c + n, Rational(2, 3) - Rational(2, 3) * c + n / 3,
                  n - Rational(2) * a + Rational(2), Rational(3, 2) - c},
                 Rational(1, 4), q.n, {}};
      GammaRatioExpr rhs;
      detail::push_pochhammer(rhs, Rational(2) - c, q.n, true);
      detail::push_pochhammer(rhs, Rational(2) - Rational(2) * a, q.n, true);
      detail::push_pochhammer(rhs, Rational(3) - Rational(2) * c, q.n, false);
      detail::push_pochhammer(rhs, Rational(3, 2) - a, q.n, false);
      return {eval_hyp_sum(lhs), gamma_ratio_value(rhs)};
    }
    case IdentityId::GosperStrange: {
      detail::require_nonnegative_n(q.n, id);
      const Rational n(q.n);
      const auto& b = q.b;
      HypSum lhs{{Rational(2) * a, Rational(2) * b, one - Rational(2) * b, one + Rational(2, 3) * a, -n},
                 {a - b + one, a + b + half, Rational(2, 3) * a, one + Rational(2) * a + Rational(2) * n},
                 Rational(1, 4), q.n, {}};
      GammaRatioExpr rhs;
      detail::push_pochhammer(rhs, a + half, q.n, true);
      detail::push_pochhammer(rhs, a + one, q.n, true);
      detail::push_pochhammer(rhs, a + b + half, q.n, false);
      detail::push_pochhammer(rhs, a - b + one, q.n, false);
      return {eval_hyp_sum(lhs), gamma_ratio_value(rhs)};
    }
    case IdentityId::GesselP544: {
      detail::require_nonnegative_n(q.n, id);
      const Rational n(q.n);
      HypSum lhs{{Rational(2) * a + n + one, n + one, Rational(2, 3) * a + n / 3 + Rational(4, 3), -n},
                 {a + Rational(3, 2) + n, Rational(2, 3) * a + n / 3 + Rational(1, 3), one + a},
                 Rational(-1, 8), q.n, {}};
      GammaRatioExpr rhs;
      detail::push_pochhammer(rhs, a + Rational(3, 2), q.n, true);
      detail::push_pochhammer(rhs, Rational(2) * a + Rational(2), q.n, false);
      return {eval_hyp_sum(lhs), gamma_ratio_value(rhs) * pow(Rational(2), static_cast<unsigned long>(q.n))};
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unknown identity");
}

inline bool check_identity(IdentityId id, const IdentityParams& params) {
  return evaluate_identity(id, params).holds();
}

// ---------------------------------------------------------------------------
// Randomized parameter draws

inline constexpr std::uint64_t kIdentitySeed = 20100917;
inline constexpr int kIdentityDraws = 50;
inline constexpr long kMaxDrawTerm = 20;
inline constexpr long kMaxDrawN = 8;

/// Reproducible draws independent of the standard library's distributions.
class ParamSampler {
 public:
  explicit ParamSampler(std::uint64_t seed) : engine_(seed) {}

  long uniform(long lo, long hi) {
    auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(engine_() % span);
  }

  /// numerator in [-20, 20], denominator in [1, 20].
  Rational rational() {
    long num = uniform(-kMaxDrawTerm, kMaxDrawTerm);
    long den = uniform(1, kMaxDrawTerm);
    return Rational(num, den);
  }

  IdentityParams draw(IdentityId id) {
    IdentityParams q;
    q.a = rational();
    q.b = rational();
    q.c = rational();
    q.d = rational();
    q.e = rational();
    q.f = rational();
    q.g = rational();
    q.n = uniform(0, kMaxDrawN);
    const Rational terminator(-q.n);
    switch (id) {
      case IdentityId::Whipple4F3: q.d = terminator; break;
      case IdentityId::Whipple6F5: q.e = terminator; break;
      case IdentityId::Whipple7F6: q.g = terminator; break;
      default: break;
    }
    return q;
  }

 private:
  std::mt19937_64 engine_;
};

struct IdentityTrial {
  IdentityParams params;
  IdentitySides sides;
  int rejected_before = 0;  // draws discarded for poles before this one
};

/// `count` pole-free draws for one identity. A draw whose evaluation hits a
/// pole (or a non-invertible factor) is discarded and redrawn; any other error
/// propagates, since it signals a malformed identity rather than a bad point.
inline std::vector<IdentityTrial> random_identity_trials(IdentityId id, int count = kIdentityDraws,
                                                         std::uint64_t seed = kIdentitySeed) {
  ParamSampler sampler(seed + static_cast<std::uint64_t>(id));
  std::vector<IdentityTrial> trials;
  int rejected = 0;
  constexpr int kMaxRejections = 100000;
  while (static_cast<int>(trials.size()) < count) {
    IdentityParams q = sampler.draw(id);
    try {
      trials.push_back({q, evaluate_identity(id, q), rejected});
      rejected = 0;
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::Pole && err.kind() != ErrorKind::NonInvertible &&
          err.kind() != ErrorKind::DivisionByZero) {
        throw;
      }
      if (++rejected > kMaxRejections) throw Error(ErrorKind::InvalidArgument, "too many rejected draws");
    }
  }
  return trials;
}

}  // namespace supercong
