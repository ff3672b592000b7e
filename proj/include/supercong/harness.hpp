#pragma once

/**
 * @file harness.hpp
 * @brief Registry of every verified claim and the machinery that runs it.
 *
 * Three kinds of case exist:
 *
 *  - congruence cases compare a truncated sum (lhs) with a closed form (rhs)
 *    and report v_p(lhs - rhs) against a required exponent;
 *  - exact cases demand lhs == rhs as rationals;
 *  - series cases deform the parameters of a sum by x and check the
 *    p-divisibility of selected coefficients.
 *
 * Throughout, h(k) = (1/2)_k / k! and n = (p^r - 1)/2 is the truncation point.
 * Every sum that has a hypergeometric shape is written below as HypSum data.
 */

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "combinatorics.hpp"
#include "error.hpp"
#include "gamma_ratio.hpp"
#include "hypergeometric.hpp"
#include "identities.hpp"
#include "modular_form.hpp"
#include "power_series.hpp"
#include "rational.hpp"
#include "valuation.hpp"

namespace supercong {

enum class CaseKind {
  // congruences
  Eq0,
  Thm1,
  Thm2,
  Kilbourn,
  Conj1,
  Thm3,
  Thm4,
  Thm4Strong,
  ComConj2,
  Cai,
  BinomNeg,
  BinomPos,
  BinomProd,
  H2Half,
  OddH2Half,
  H2Reflect,
  ThmKey,
  // exact
  ComIden0,
  ComIden1,
  ComIden2,
  Lemma10,
  Lemma12,
  Whipple4F3,
  Whipple6F5,
  Whipple7F6,
  Gessel31_1,
  GosperStrange,
  GesselP544,
  // series
  Eq10A2,
  SixFFiveCoeffs,
  LemThm1B2k,
  Thm3QuotientX2,
  ExactDivP,
};

enum class CaseClass { Congruence, Exact, Series };

/// What the integer parameter of a case means.
enum class ParamRole { None, R, S, N, Draw };

struct CaseInfo {
  CaseKind kind = CaseKind::Eq0;
  std::string_view name;
  CaseClass cls;
  long required;  // valuation exponent (congruence/series); unused for exact
  bool conjectural;
  ParamRole role;
  long min_prime;  // 0 for prime-free cases
  std::string_view claim;
};

// Registry order is the canonical report order.
inline constexpr std::array<CaseInfo, 33> kCases = {{
    {CaseKind::Eq0, "EQ0", CaseClass::Congruence, 3, false, ParamRole::None, 5,
     "sum (4k+1) h^3 (-1)^k == (-1)^((p-1)/2) p mod p^3"},
    {CaseKind::Thm1, "THM1", CaseClass::Congruence, 4, false, ParamRole::R, 5,
     "sum_{k<=(p^r-1)/2} (4k+1) h^4 == p^r mod p^(3+r)"},
    {CaseKind::Thm2, "THM2", CaseClass::Congruence, 4, false, ParamRole::None, 5,
     "sum (4k+1) h^6 == p a_p mod p^4"},
    {CaseKind::Kilbourn, "KILBOURN", CaseClass::Congruence, 3, false, ParamRole::None, 3,
     "sum h^4 == a_p mod p^3"},
    {CaseKind::Conj1, "CONJ1", CaseClass::Congruence, 4, true, ParamRole::R, 5,
     "sum_{k<=(p^r-1)/2} (4k+1) h^6 == p^r a_{p^r} mod p^(3+r)"},
    {CaseKind::Thm3, "THM3", CaseClass::Congruence, 4, false, ParamRole::None, 5,
     "sum (6k+1) h^3 4^-k == (-1)^((p-1)/2) p mod p^4"},
    {CaseKind::Thm4, "THM4", CaseClass::Congruence, 2, false, ParamRole::None, 5,
     "sum (6k+1) h^3 (-1/8)^k == (-1)^((p^2-1)/8+(p-1)/2) p mod p^2"},
    {CaseKind::Thm4Strong, "THM4_STRONG", CaseClass::Congruence, 3, true, ParamRole::None, 5,
     "sum (6k+1) h^3 (-1/8)^k == (-1)^((p^2-1)/8+(p-1)/2) p mod p^3"},
    {CaseKind::ComConj2, "COMCONJ2", CaseClass::Congruence, 1, true, ParamRole::None, 5,
     "sum (6k+1) h^3 (oddH2(k) - H2(k)/16) (-1/8)^k == 0 mod p"},
    {CaseKind::Cai, "CAI", CaseClass::Congruence, 3, false, ParamRole::R, 5,
     "(-1)^n binom(p^r-1, n) == h(n)^2 mod p^3"},
    {CaseKind::BinomNeg, "BINOM_NEG", CaseClass::Congruence, 1, false, ParamRole::R, 5,
     "(-1)^k binom(n, k) == h(k) mod p for 1 <= k <= n"},
    {CaseKind::BinomPos, "BINOM_POS", CaseClass::Congruence, 1, false, ParamRole::R, 5,
     "binom(n+k, k) == h(k) mod p for 1 <= k <= n"},
    {CaseKind::BinomProd, "BINOM_PROD", CaseClass::Congruence, 2, false, ParamRole::R, 5,
     "(-1)^k binom(n, k) binom(n+k, k) == h(k)^2 mod p^2 for 1 <= k <= n"},
    {CaseKind::H2Half, "H2_HALF", CaseClass::Congruence, 1, false, ParamRole::None, 5,
     "H2((p-1)/2) == 0 mod p"},
    {CaseKind::OddH2Half, "ODDH2_HALF", CaseClass::Congruence, 1, false, ParamRole::None, 5,
     "sum_{j<=(p-1)/2} 1/(2j-1)^2 == 0 mod p"},
    {CaseKind::H2Reflect, "H2_REFLECT", CaseClass::Congruence, 1, false, ParamRole::None, 5,
     "H2(k) + H2(p-1-k) == 0 mod p for 1 <= k <= p-2"},
    {CaseKind::ThmKey, "THMKEY", CaseClass::Congruence, 1, false, ParamRole::S, 5,
     "sum h^(2s) H2(2k) == 0 mod p"},
    {CaseKind::ComIden0, "COMIDEN0", CaseClass::Exact, 0, false, ParamRole::N, 0,
     "(2n+1) sum_{k<=n} (-1)^k/(2k+1) binom(n,k) binom(n+k,k) = 1"},
    {CaseKind::ComIden1, "COMIDEN1", CaseClass::Exact, 0, false, ParamRole::N, 0,
     "(3/2-n/4)_m (1-n/2)_m / ((2-n/2)_m (1-n/4)_m) = (-1)^m n, m = (n-1)/2"},
    {CaseKind::ComIden2, "COMIDEN2", CaseClass::Exact, 0, false, ParamRole::N, 0,
     "(3/2-n/4)_m / (2-n/2)_m 2^m = (-1)^((n^2-1)/8+m) n, m = (n-1)/2"},
    {CaseKind::Lemma10, "LEMMA10", CaseClass::Exact, 0, false, ParamRole::None, 5,
     "sum (6k+1) (1/2)_k (1/2-p/2)_k (1/2+p/2)_k / (k! (1+p/4)_k (1-p/4)_k) 4^-k = (-1)^((p-1)/2) p"},
    {CaseKind::Lemma12, "LEMMA12", CaseClass::Exact, 0, false, ParamRole::None, 5,
     "same sum with (-1/8)^k = (-1)^((p^2-1)/8+(p-1)/2) p"},
    {CaseKind::Whipple4F3, "WHIPPLE_4F3", CaseClass::Exact, 0, false, ParamRole::Draw, 0,
     "well-poised 4F3(-1) evaluation"},
    {CaseKind::Whipple6F5, "WHIPPLE_6F5", CaseClass::Exact, 0, false, ParamRole::Draw, 0,
     "well-poised 6F5(-1) -> 3F2(1) transformation"},
    {CaseKind::Whipple7F6, "WHIPPLE_7F6", CaseClass::Exact, 0, false, ParamRole::Draw, 0,
     "very-well-poised 7F6(1) -> balanced 4F3(1) transformation"},
    {CaseKind::Gessel31_1, "GESSEL_31_1", CaseClass::Exact, 0, false, ParamRole::Draw, 0,
     "5F4(1/4) evaluation"},
    {CaseKind::GosperStrange, "GOSPER_STRANGE", CaseClass::Exact, 0, false, ParamRole::Draw, 0,
     "strange 5F4(1/4) evaluation"},
    {CaseKind::GesselP544, "GESSEL_P544", CaseClass::Exact, 0, false, ParamRole::Draw, 0,
     "4F3(-1/8) evaluation"},
    {CaseKind::Eq10A2, "EQ10_A2", CaseClass::Series, 1, false, ParamRole::None, 5,
     "x^2 coefficient of the x-deformed (4k+1) h^3 (-1)^k sum is divisible by p"},
    {CaseKind::SixFFiveCoeffs, "SIX_F_FIVE_COEFFS", CaseClass::Series, 1, false, ParamRole::None, 5,
     "every coefficient of the deformed 6F5 is in pZ_p and agrees mod p with the deformed 4F3"},
    {CaseKind::LemThm1B2k, "LEM_THM1_B2K", CaseClass::Series, 1, false, ParamRole::None, 5,
     "x^2 coefficient of the deformed sixth-power inner sum is -sum h^4 H2(2k), divisible by p"},
    {CaseKind::Thm3QuotientX2, "THM3_QUOTIENT_X2", CaseClass::Series, 1, false, ParamRole::None, 5,
     "deformed (6k+1) sum over its x=0 value is p-integral, even, with x^2 coefficient in pZ_p"},
    {CaseKind::ExactDivP, "EXACT_DIV_P", CaseClass::Series, 1, false, ParamRole::None, 5,
     "v_p((3/4)_n (5/4)_n / n!^2) == 1, n = (p-1)/2"},
}};

inline const CaseInfo& case_info(CaseKind kind) {
  for (const auto& info : kCases) {
    if (info.kind == kind) return info;
  }
  throw Error(ErrorKind::InvalidArgument, "unregistered case");
}

inline std::optional<CaseKind> case_from_name(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
  for (const auto& info : kCases) {
    if (info.name == upper) return info.kind;
  }
  return std::nullopt;
}

inline std::optional<IdentityId> identity_for_case(CaseKind kind) {
  switch (kind) {
    case CaseKind::Whipple4F3: return IdentityId::Whipple4F3;
    case CaseKind::Whipple6F5: return IdentityId::Whipple6F5;
    case CaseKind::Whipple7F6: return IdentityId::Whipple7F6;
    case CaseKind::Gessel31_1: return IdentityId::Gessel31_1;
    case CaseKind::GosperStrange: return IdentityId::GosperStrange;
    case CaseKind::GesselP544: return IdentityId::GesselP544;
    default: return std::nullopt;
  }
}

struct CaseId {
  CaseKind kind = CaseKind::Eq0;
  long param = 0;
};

/// "v>=k", "v==k" or "exact".
struct Requirement {
  enum class Kind { AtLeast, Exactly, Exact };
  Kind kind = Kind::Exact;
  long valuation = 0;

  std::string str() const {
    switch (kind) {
      case Kind::AtLeast: return "v>=" + std::to_string(valuation);
      case Kind::Exactly: return "v==" + std::to_string(valuation);
      case Kind::Exact: return "exact";
    }
    return "?";
  }
};

struct VerificationRecord {
  CaseKind kind = CaseKind::Eq0;
  long p = 0;
  long param = 0;
  Requirement required;
  std::optional<Valuation> achieved;  // congruence and series cases
  std::optional<bool> equal;          // exact cases
  std::string error;                  // nonempty when the computation failed
  Rational lhs;
  Rational rhs;
  bool pass = false;
  bool conjectural = false;

  std::string_view case_name() const { return case_info(kind).name; }

  std::string achieved_str() const {
    if (!error.empty()) return "error: " + error;
    if (equal) return *equal ? "equal" : "unequal";
    if (achieved) return achieved->str();
    return "";
  }
};

/// Lazily grown expansion of the eta product, capped by a budget.
class EtaTable {
 public:
  explicit EtaTable(long budget = eta_budget_from_env()) : budget_(budget) {}

  long budget() const { return budget_; }

  const QExpansion& ensure(long bound) {
    if (bound > budget_) {
      throw Error(ErrorKind::BudgetExceeded,
                  "coefficient " + std::to_string(bound) + " beyond budget " + std::to_string(budget_));
    }
    if (bound > expansion_.bound()) expansion_ = eta_product_expansion(bound);
    return expansion_;
  }

  const Integer& coefficient(long n) { return ensure(n).at(n); }

  PrimePowerCoefficient prime_power(long p, long r) {
    return prime_power_coefficient(ensure(checked_prime_power(p, r, budget_)), p, r);
  }

 private:
  long budget_;
  QExpansion expansion_;
};

// ---------------------------------------------------------------------------
// Sums as data

namespace sums {

inline const Rational kHalf(1, 2);

inline long half_index(long p, long r = 1) {
  Integer q;
  mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(r));
  if (!q.fits_slong_p()) throw Error(ErrorKind::BudgetExceeded, "p^r too large");
  return (q.get_si() - 1) / 2;
}

/// sum (w1 k + w0) h(k)^power z^k for k <= K.
inline HypSum central_power(int power, Weight weight, Rational z, long truncation) {
  HypSum s;
  s.upper.assign(static_cast<std::size_t>(power), AffineParam(kHalf));
  s.lower.assign(static_cast<std::size_t>(power - 1), AffineParam(1));
  s.z = std::move(z);
  s.truncation = truncation;
  s.weight = std::move(weight);
  return s;
}

inline HypSum eq0(long p) { return central_power(3, {4, 1}, Rational(-1), half_index(p)); }
inline HypSum thm1(long p, long r) { return central_power(4, {4, 1}, Rational(1), half_index(p, r)); }
inline HypSum sixth_power(long p, long r) { return central_power(6, {4, 1}, Rational(1), half_index(p, r)); }
inline HypSum kilbourn(long p) { return central_power(4, {0, 1}, Rational(1), half_index(p)); }
inline HypSum thm3(long p) { return central_power(3, {6, 1}, Rational(1, 4), half_index(p)); }
inline HypSum thm4(long p) { return central_power(3, {6, 1}, Rational(-1, 8), half_index(p)); }

/// (6k+1) (1/2)_k (1/2-p/2)_k (1/2+p/2)_k / (k! (1+p/4)_k (1-p/4)_k) z^k.
inline HypSum gessel_lemma(long p, Rational z) {
  const Rational P(p);
  return HypSum{{kHalf, kHalf - P / 2, kHalf + P / 2},
                {Rational(1) + P / 4, Rational(1) - P / 4},
                std::move(z), half_index(p), {6, 1}};
}

/// The (4k+1) h^3 (-1)^k sum with (1/2)^2 deformed to (1/2 -+ x/2) over (1 -+ x/2).
inline HypSum eq10_deformed(long p) {
  return HypSum{{kHalf, {kHalf, -kHalf}, {kHalf, kHalf}},
                {{Rational(1), kHalf}, {Rational(1), -kHalf}},
                Rational(-1), half_index(p), {4, 1}};
}

/// Left side of the well-poised 6F5 at a = 1/2, b,c = (1 -+ x)/2, d = 1, e = (1-p)/2.
inline HypSum six_f_five_deformed(long p) {
  const Rational P(p);
  return HypSum{{kHalf, Rational(5, 4), {kHalf, -kHalf}, {kHalf, kHalf}, (Rational(1) - P) / 2, Rational(1)},
                {Rational(1, 4), {Rational(1), kHalf}, {Rational(1), -kHalf}, kHalf, Rational(1) + P / 2},
                Rational(-1), half_index(p), {}};
}

/// The 3F2 factor on the right of the same 6F5 specialisation.
inline HypSum six_f_five_tail(long p) {
  const Rational P(p);
  return HypSum{{kHalf, Rational(1), kHalf - P / 2},
                {{Rational(1), kHalf}, {Rational(1), -kHalf}},
                Rational(1), half_index(p), {}};
}

/// Γ(1/2) Γ(1 + p/2) / (Γ(3/2) Γ(p/2)), equal to p.
inline GammaRatioExpr six_f_five_prefactor(long p) {
  const Rational P(p);
  return {{kHalf, Rational(1) + P / 2}, {Rational(3, 2), P / 2}};
}

/// (6k+1) (1/2)_k (1/2 - x/2)_k (1/2 + x/2)_k / (k! (1 + x/4)_k (1 - x/4)_k) 4^-k.
inline HypSum thm3_deformed(long p) {
  return HypSum{{kHalf, {kHalf, -kHalf}, {kHalf, kHalf}},
                {{Rational(1), Rational(1, 4)}, {Rational(1), Rational(-1, 4)}},
                Rational(1, 4), half_index(p), {6, 1}};
}

}  // namespace sums

// ---------------------------------------------------------------------------
// Congruence cases

namespace detail {

inline long sign_quarter(long p) { return minus_one_pow((p - 1) / 2); }
inline long sign_eighth(long p) { return minus_one_pow((p * p - 1) / 8 + (p - 1) / 2); }

/// h(0..n) by h(k+1) = h(k) (2k+1)/(2k+2).
inline std::vector<Rational> central_ratios(long n) {
  std::vector<Rational> h;
  h.reserve(static_cast<std::size_t>(n) + 1);
  h.emplace_back(1);
  for (long k = 0; k < n; ++k) h.push_back(h.back() * Rational(2 * k + 1, 2 * k + 2));
  return h;
}

inline std::vector<Rational> harmonic2_table(long n) {
  std::vector<Rational> t;
  t.reserve(static_cast<std::size_t>(n) + 1);
  t.emplace_back(0);
  for (long j = 1; j <= n; ++j) t.push_back(t.back() + Rational(Integer(1), Integer(j) * Integer(j)));
  return t;
}

inline std::vector<Rational> odd_harmonic2_table(long n) {
  std::vector<Rational> t;
  t.reserve(static_cast<std::size_t>(n) + 1);
  t.emplace_back(0);
  for (long j = 1; j <= n; ++j) {
    Integer odd(2 * j - 1);
    t.push_back(t.back() + Rational(Integer(1), odd * odd));
  }
  return t;
}

inline void require_prime_above(long p, long min_prime, std::string_view name) {
  require_prime(p);
  if (p < min_prime) {
    throw Error(ErrorKind::InvalidArgument,
                std::string(name) + " needs p >= " + std::to_string(min_prime) + ", got " + std::to_string(p));
  }
}

inline VerificationRecord congruence_record(CaseKind kind, long p, long param, long required, Rational lhs,
                                            Rational rhs) {
  VerificationRecord rec;
  rec.kind = kind;
  rec.p = p;
  rec.param = param;
  rec.required = {Requirement::Kind::AtLeast, required};
  rec.achieved = padic_valuation(lhs - rhs, p);
  rec.pass = rec.achieved->at_least(required);
  rec.lhs = std::move(lhs);
  rec.rhs = std::move(rhs);
  rec.conjectural = case_info(kind).conjectural;
  return rec;
}

/// Family of per-k congruences; the record keeps the worst k.
struct WorstTerm {
  bool seen = false;
  Valuation valuation = Valuation::infinity();
  Rational lhs, rhs;

  void consider(long p, Rational l, Rational r) {
    Valuation v = padic_valuation(l - r, p);
    if (!seen || v < valuation) {
      seen = true;
      valuation = v;
      lhs = std::move(l);
      rhs = std::move(r);
    }
  }
};

inline long binom_k_cap(long p, long r) {
  long n = sums::half_index(p, r);
  return r >= 2 ? std::min(n, sums::half_index(p, 2)) : n;
}

}  // namespace detail

inline constexpr long kHigherPowerMaxPrime = 31;
inline constexpr std::array<long, 3> kThmKeyPowers = {1, 2, 3};

/// Runs one congruence case. `param` is r for THM1/CONJ1/CAI/BINOM_*, s for
/// THMKEY and ignored otherwise. The eta table is only touched by THM2,
/// KILBOURN and CONJ1.
inline VerificationRecord verify_congruence_case(CaseId id, long p, EtaTable& eta) {
  const CaseInfo& info = case_info(id.kind);
  if (info.cls != CaseClass::Congruence) throw Error(ErrorKind::InvalidArgument, "not a congruence case");
  detail::require_prime_above(p, info.min_prime, info.name);
  const long r = id.param;
  if ((info.role == ParamRole::R || info.role == ParamRole::S) && r < 1) {
    throw Error(ErrorKind::InvalidArgument, std::string(info.name) + " needs a parameter >= 1");
  }
  const Rational P(p);
  using detail::congruence_record;
  switch (id.kind) {
    case CaseKind::Eq0:
      return congruence_record(id.kind, p, 0, 3, eval_hyp_sum(sums::eq0(p)), P * detail::sign_quarter(p));
    case CaseKind::Thm1:
      return congruence_record(id.kind, p, r, 3 + r, eval_hyp_sum(sums::thm1(p, r)),
                               pow(P, static_cast<unsigned long>(r)));
    case CaseKind::Thm2:
      return congruence_record(id.kind, p, 0, 4, eval_hyp_sum(sums::sixth_power(p, 1)),
                               P * Rational(eta.coefficient(p)));
    case CaseKind::Kilbourn:
      return congruence_record(id.kind, p, 0, 3, eval_hyp_sum(sums::kilbourn(p)), Rational(eta.coefficient(p)));
    case CaseKind::Conj1: {
      Integer a = eta.prime_power(p, r).value;
      return congruence_record(id.kind, p, r, 3 + r, eval_hyp_sum(sums::sixth_power(p, r)),
                               pow(P, static_cast<unsigned long>(r)) * Rational(a));
    }
    case CaseKind::Thm3:
      return congruence_record(id.kind, p, 0, 4, eval_hyp_sum(sums::thm3(p)), P * detail::sign_quarter(p));
    case CaseKind::Thm4:
    case CaseKind::Thm4Strong:
      return congruence_record(id.kind, p, 0, info.required, eval_hyp_sum(sums::thm4(p)),
                               P * detail::sign_eighth(p));
    case CaseKind::ComConj2: {
      const long n = sums::half_index(p);
      auto h = detail::central_ratios(n);
      auto h2 = detail::harmonic2_table(n);
      auto odd = detail::odd_harmonic2_table(n);
      Rational sum;
      Rational z_pow(1);
      for (long k = 0; k <= n; ++k) {
        const auto i = static_cast<std::size_t>(k);
        sum += Rational(6 * k + 1) * pow(h[i], 3) * (odd[i] - h2[i] / Rational(16)) * z_pow;
        z_pow *= Rational(-1, 8);
      }
      return congruence_record(id.kind, p, 0, 1, sum, Rational(0));
    }
    case CaseKind::Cai: {
      const long n = sums::half_index(p, r);
      Rational lhs = Rational(binomial(2 * n, n)) * minus_one_pow(n);
      Rational h = central_half_ratio(n);
      return congruence_record(id.kind, p, r, 3, lhs, h * h);
    }
    case CaseKind::BinomNeg:
    case CaseKind::BinomPos:
    case CaseKind::BinomProd: {
      const long n = sums::half_index(p, r);
      const long cap = detail::binom_k_cap(p, r);
      Integer below(1);  // binom(n, k)
      Integer above(1);  // binom(n + k, k)
      Rational h(1);
      detail::WorstTerm worst;
      for (long k = 1; k <= cap; ++k) {
        below = below * (n - k + 1);
        mpz_divexact_ui(below.get_mpz_t(), below.get_mpz_t(), static_cast<unsigned long>(k));
        above = above * (n + k);
        mpz_divexact_ui(above.get_mpz_t(), above.get_mpz_t(), static_cast<unsigned long>(k));
        h *= Rational(2 * k - 1, 2 * k);
        const int sign = minus_one_pow(k);
        if (id.kind == CaseKind::BinomNeg) {
          worst.consider(p, Rational(below) * sign, h);
        } else if (id.kind == CaseKind::BinomPos) {
          worst.consider(p, Rational(above), h);
        } else {
          worst.consider(p, Rational(below * above) * sign, h * h);
        }
      }
      return congruence_record(id.kind, p, r, info.required, worst.lhs, worst.rhs);
    }
    case CaseKind::H2Half:
      return congruence_record(id.kind, p, 0, 1, harmonic2(sums::half_index(p)), Rational(0));
    case CaseKind::OddH2Half:
      return congruence_record(id.kind, p, 0, 1, odd_harmonic2(sums::half_index(p)), Rational(0));
    case CaseKind::H2Reflect: {
      auto h2 = detail::harmonic2_table(p - 1);
      detail::WorstTerm worst;
      for (long k = 1; k <= p - 2; ++k) {
        worst.consider(p, h2[static_cast<std::size_t>(k)] + h2[static_cast<std::size_t>(p - 1 - k)], Rational(0));
      }
      return congruence_record(id.kind, p, 0, 1, worst.lhs, worst.rhs);
    }
    case CaseKind::ThmKey: {
      const long n = sums::half_index(p);
      auto h = detail::central_ratios(n);
      auto h2 = detail::harmonic2_table(2 * n);
      Rational sum;
      for (long k = 0; k <= n; ++k) {
        sum += pow(h[static_cast<std::size_t>(k)], static_cast<unsigned long>(2 * r)) *
               h2[static_cast<std::size_t>(2 * k)];
      }
      return congruence_record(id.kind, p, r, 1, sum, Rational(0));
    }
    default:
      break;
  }
  throw Error(ErrorKind::InvalidArgument, "unhandled congruence case");
}

inline VerificationRecord verify_congruence_case(CaseId id, long p) {
  EtaTable eta;
  return verify_congruence_case(id, p, eta);
}

// ---------------------------------------------------------------------------
// Exact cases

namespace detail {

inline VerificationRecord exact_record(CaseKind kind, long p, long param, Rational lhs, Rational rhs) {
  VerificationRecord rec;
  rec.kind = kind;
  rec.p = p;
  rec.param = param;
  rec.required = {Requirement::Kind::Exact, 0};
  rec.equal = lhs == rhs;
  rec.pass = *rec.equal;
  rec.lhs = std::move(lhs);
  rec.rhs = std::move(rhs);
  rec.conjectural = case_info(kind).conjectural;
  return rec;
}

inline long require_odd_positive(long n, std::string_view name) {
  if (n < 1 || n % 2 == 0) {
    throw Error(ErrorKind::InvalidArgument, std::string(name) + " needs odd n >= 1, got " + std::to_string(n));
  }
  return (n - 1) / 2;
}

}  // namespace detail

/// Exact identity check at one parameter point; `tag` becomes the record param.
inline VerificationRecord verify_identity_case(IdentityId id, const IdentityParams& params, long tag = 0) {
  CaseKind kind{};
  for (const auto& info : kCases) {
    if (identity_for_case(info.kind) == id) kind = info.kind;
  }
  IdentitySides sides = evaluate_identity(id, params);
  return detail::exact_record(kind, 0, tag, sides.lhs, sides.rhs);
}

/// `arg` is n for COMIDEN0/1/2 and p for LEMMA10/12. Identity tags run the
/// fixed-seed random draw with index `arg`.
inline VerificationRecord verify_exact_case(CaseId id, long arg) {
  const CaseInfo& info = case_info(id.kind);
  if (info.cls != CaseClass::Exact) throw Error(ErrorKind::InvalidArgument, "not an exact case");
  const Rational one(1);
  switch (id.kind) {
    case CaseKind::ComIden0: {
      const long n = arg;
      if (n < 2) throw Error(ErrorKind::InvalidArgument, "COMIDEN0 needs n > 1");
      Rational sum;
      Integer below(1), above(1);
      for (long k = 0; k <= n; ++k) {
        if (k > 0) {
          below = below * (n - k + 1);
          mpz_divexact_ui(below.get_mpz_t(), below.get_mpz_t(), static_cast<unsigned long>(k));
          above = above * (n + k);
          mpz_divexact_ui(above.get_mpz_t(), above.get_mpz_t(), static_cast<unsigned long>(k));
        }
        sum += Rational(below * above * minus_one_pow(k), Integer(2 * k + 1));
      }
      return detail::exact_record(id.kind, 0, n, Rational(2 * n + 1) * sum, one);
    }
    case CaseKind::ComIden1: {
      const long m = detail::require_odd_positive(arg, info.name);
      const Rational N(arg);
      Rational lhs = rising_factorial(Rational(3, 2) - N / 4, m) * rising_factorial(one - N / 2, m) /
                     (rising_factorial(Rational(2) - N / 2, m) * rising_factorial(one - N / 4, m));
      return detail::exact_record(id.kind, 0, arg, lhs, N * minus_one_pow(m));
    }
    case CaseKind::ComIden2: {
      const long m = detail::require_odd_positive(arg, info.name);
      const Rational N(arg);
      Rational lhs = rising_factorial(Rational(3, 2) - N / 4, m) / rising_factorial(Rational(2) - N / 2, m) *
                     pow(Rational(2), static_cast<unsigned long>(m));
      return detail::exact_record(id.kind, 0, arg, lhs, N * minus_one_pow((arg * arg - 1) / 8 + m));
    }
    case CaseKind::Lemma10:
    case CaseKind::Lemma12: {
      const long p = arg;
      detail::require_prime_above(p, info.min_prime, info.name);
      const bool ten = id.kind == CaseKind::Lemma10;
      Rational lhs = eval_hyp_sum(sums::gessel_lemma(p, ten ? Rational(1, 4) : Rational(-1, 8)));
      Rational rhs = Rational(p) * (ten ? detail::sign_quarter(p) : detail::sign_eighth(p));
      return detail::exact_record(id.kind, p, 0, lhs, rhs);
    }
    default: {
      auto identity = identity_for_case(id.kind);
      if (!identity) break;
      if (arg < 0) throw Error(ErrorKind::InvalidArgument, "draw index must be >= 0");
      auto trials = random_identity_trials(*identity, static_cast<int>(arg) + 1);
      return verify_identity_case(*identity, trials.back().params, arg);
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unhandled exact case");
}

/// All fixed-seed draws for one identity, one record per draw.
inline std::vector<VerificationRecord> verify_identity_suite(IdentityId id, int draws = kIdentityDraws) {
  std::vector<VerificationRecord> out;
  auto trials = random_identity_trials(id, draws);
  for (std::size_t i = 0; i < trials.size(); ++i) {
    out.push_back(verify_identity_case(id, trials[i].params, static_cast<long>(i)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Series cases

namespace detail {

inline VerificationRecord series_record(CaseKind kind, long p, Valuation achieved, Rational lhs, Rational rhs) {
  const CaseInfo& info = case_info(kind);
  VerificationRecord rec;
  rec.kind = kind;
  rec.p = p;
  rec.required = {Requirement::Kind::AtLeast, info.required};
  rec.achieved = achieved;
  rec.pass = achieved.at_least(info.required);
  rec.lhs = std::move(lhs);
  rec.rhs = std::move(rhs);
  rec.conjectural = info.conjectural;
  return rec;
}

inline void require(bool condition, const std::string& what) {
  if (!condition) throw Error(ErrorKind::InvalidArgument, "structural check failed: " + what);
}

}  // namespace detail

inline TruncSeries lem_thm1_inner_series(long p, int order = kDefaultSeriesOrder) {
  const Rational half(1, 2);
  const long n = sums::half_index(p);
  TruncSeries sum(order);
  Rational h(1);
  for (long k = 0; k <= n; ++k) {
    if (k > 0) h *= Rational(2 * k - 1, 2 * k);
    TruncSeries numer = pochhammer_series(half, half, k, order) * pochhammer_series(half, -half, k, order);
    // (1 + ix/2)_k (1 - ix/2)_k: the real even series P(y) = (1 + y/2)_k (1 - y/2)_k at y = ix.
    TruncSeries denom = substitute_imaginary(pochhammer_series(Rational(1), half, k, order) *
                                             pochhammer_series(Rational(1), -half, k, order));
    TruncSeries term = numer / denom;
    term *= h * h;
    const Rational expected_b2 = -pow(h, 4) * harmonic2(2 * k);
    detail::require(coefficient(term, 2) == expected_b2, "x^2 coefficient of term " + std::to_string(k));
    sum = sum + term;
  }
  return sum;
}

inline VerificationRecord verify_series_case(CaseKind kind, long p, int order = kDefaultSeriesOrder) {
  const CaseInfo& info = case_info(kind);
  if (info.cls != CaseClass::Series) throw Error(ErrorKind::InvalidArgument, "not a series case");
  detail::require_prime_above(p, info.min_prime, info.name);
  if (order < 2) throw Error(ErrorKind::InvalidArgument, "series cases need order >= 2");
  switch (kind) {
    case CaseKind::Eq10A2: {
      TruncSeries s = eval_hyp_sum_series(sums::eq10_deformed(p), order);
      detail::require(s.is_even(), "deformed sum is even in x");
      detail::require(s[0] == eval_hyp_sum(sums::eq0(p)), "constant term equals the undeformed sum");
      return detail::series_record(kind, p, padic_valuation(s[2], p), s[2], Rational(0));
    }
    case CaseKind::SixFFiveCoeffs: {
      TruncSeries lhs = eval_hyp_sum_series(sums::six_f_five_deformed(p), order);
      TruncSeries rhs = eval_hyp_sum_series(sums::six_f_five_tail(p), order) *
                        gamma_ratio_value(sums::six_f_five_prefactor(p));
      detail::require(lhs == rhs, "6F5 transformation holds coefficientwise");
      detail::require(lhs.is_even(), "deformed 6F5 is even in x");
      TruncSeries eq10 = eval_hyp_sum_series(sums::eq10_deformed(p), order);
      Valuation achieved = std::min(series_valuation(lhs, p), series_valuation(eq10 - lhs, p));
      return detail::series_record(kind, p, achieved, eq10[0], lhs[0]);
    }
    case CaseKind::LemThm1B2k: {
      TruncSeries s = lem_thm1_inner_series(p, order);
      detail::require(s.is_even(), "inner sum is even in x");
      detail::require(s[0] == eval_hyp_sum(sums::kilbourn(p)), "constant term equals sum h^4");
      const long n = sums::half_index(p);
      auto h = detail::central_ratios(n);
      auto h2 = detail::harmonic2_table(2 * n);
      Rational key;
      for (long k = 0; k <= n; ++k) key += pow(h[static_cast<std::size_t>(k)], 4) * h2[static_cast<std::size_t>(2 * k)];
      detail::require(s[2] == -key, "x^2 coefficient equals -sum h^4 H2(2k)");
      return detail::series_record(kind, p, padic_valuation(s[2], p), s[2], Rational(0));
    }
    case CaseKind::Thm3QuotientX2: {
      TruncSeries f = eval_hyp_sum_series(sums::thm3_deformed(p), order);
      Rational f0 = eval_hyp_sum(sums::thm3(p));
      detail::require(f[0] == f0, "constant term equals the undeformed sum");
      TruncSeries q = f / TruncSeries::constant(f0, order);
      detail::require(q.is_even(), "quotient is even in x");
      detail::require(series_valuation(q, p).at_least(0), "quotient is p-integral");
      return detail::series_record(kind, p, padic_valuation(q[2], p), q[2], Rational(0));
    }
    case CaseKind::ExactDivP: {
      const long n = sums::half_index(p);
      Rational value = rising_factorial(Rational(3, 4), n) * rising_factorial(Rational(5, 4), n) /
                       pow(Rational(factorial(n)), 2);
      VerificationRecord rec = detail::series_record(kind, p, padic_valuation(value, p), value, Rational(0));
      rec.required = {Requirement::Kind::Exactly, 1};
      rec.pass = *rec.achieved == Valuation::finite(1);
      return rec;
    }
    default:
      break;
  }
  throw Error(ErrorKind::InvalidArgument, "unhandled series case");
}

// ---------------------------------------------------------------------------
// Suites

struct SuiteConfig {
  long pmin = 5;
  long pmax = 97;
  std::set<long> rs = {1};
  long budget = kDefaultEtaBudget;
  std::vector<CaseKind> cases;  // empty selects every registered case
};

inline std::vector<long> primes_in(long lo, long hi) {
  std::vector<long> out;
  for (long q = std::max(lo, 2L); q <= hi; ++q) {
    if (is_prime(q)) out.push_back(q);
  }
  return out;
}

namespace detail {

inline VerificationRecord failed_record(CaseKind kind, long p, long param, const std::string& what) {
  const CaseInfo& info = case_info(kind);
  VerificationRecord rec;
  rec.kind = kind;
  rec.p = p;
  rec.param = param;
  if (info.cls == CaseClass::Exact) {
    rec.required = {Requirement::Kind::Exact, 0};
  } else if (kind == CaseKind::ExactDivP) {
    rec.required = {Requirement::Kind::Exactly, 1};
  } else {
    long req = info.required;
    if (kind == CaseKind::Thm1 || kind == CaseKind::Conj1) req = 3 + param;
    rec.required = {Requirement::Kind::AtLeast, req};
  }
  rec.error = what.empty() ? "unknown failure" : what;
  rec.pass = false;
  rec.conjectural = info.conjectural;
  return rec;
}

template <typename Fn>
VerificationRecord guarded(CaseKind kind, long p, long param, Fn&& fn) {
  try {
    return fn();
  } catch (const std::exception& ex) {
    return failed_record(kind, p, param, ex.what());
  }
}

// r >= 2 instances of THM1/CAI/BINOM_* are limited to small primes; CONJ1 only
// by the expansion budget, which surfaces as a failed record.
inline bool r_applies(CaseKind kind, long p, long r) {
  if (r <= 1) return true;
  if (kind == CaseKind::Conj1) return true;
  return p <= kHigherPowerMaxPrime;
}

}  // namespace detail

/// Runs every selected case over the primes in [pmin, pmax]. Records are
/// ordered by (registry order, p, param); per-case failures become failed
/// records instead of aborting the run.
inline std::vector<VerificationRecord> run_suite(const SuiteConfig& config) {
  std::vector<VerificationRecord> out;
  const std::vector<long> primes = primes_in(config.pmin, config.pmax);
  if (primes.empty()) return out;
  const bool have_large_prime = std::any_of(primes.begin(), primes.end(), [](long q) { return q >= 5; });
  EtaTable eta(config.budget);
  auto selected = [&](CaseKind kind) {
    return config.cases.empty() || std::find(config.cases.begin(), config.cases.end(), kind) != config.cases.end();
  };
  // Size the expansion once for every coefficient the run will read.
  long eta_bound = 0;
  if (selected(CaseKind::Thm2) || selected(CaseKind::Kilbourn)) eta_bound = primes.back();
  if (selected(CaseKind::Conj1)) {
    for (long p : primes) {
      for (long r : config.rs) {
        if (p < 5 || r < 1) continue;
        try {
          eta_bound = std::max(eta_bound, checked_prime_power(p, r, config.budget));
        } catch (const Error&) {
          // reported per record
        }
      }
    }
  }
  if (eta_bound > 0) eta.ensure(std::min(eta_bound, config.budget));

  for (const auto& info : kCases) {
    if (!selected(info.kind)) continue;
    if (auto identity = identity_for_case(info.kind)) {
      if (!have_large_prime) continue;
      try {
        auto recs = verify_identity_suite(*identity);
        out.insert(out.end(), recs.begin(), recs.end());
      } catch (const std::exception& ex) {
        out.push_back(detail::failed_record(info.kind, 0, 0, ex.what()));
      }
      continue;
    }
    for (long p : primes) {
      if (p < std::max(info.min_prime, 5L) && !(info.kind == CaseKind::Kilbourn && p >= 3)) continue;
      switch (info.cls) {
        case CaseClass::Congruence: {
          std::vector<long> params = {0};
          if (info.role == ParamRole::R) params.assign(config.rs.begin(), config.rs.end());
          if (info.role == ParamRole::S) params.assign(kThmKeyPowers.begin(), kThmKeyPowers.end());
          for (long param : params) {
            if (info.role == ParamRole::R && !detail::r_applies(info.kind, p, param)) continue;
            out.push_back(detail::guarded(info.kind, p, param, [&] {
              return verify_congruence_case({info.kind, param}, p, eta);
            }));
          }
          break;
        }
        case CaseClass::Exact:
          out.push_back(detail::guarded(info.kind, info.role == ParamRole::N ? 0 : p,
                                        info.role == ParamRole::N ? p : 0,
                                        [&] { return verify_exact_case({info.kind, 0}, p); }));
          break;
        case CaseClass::Series:
          out.push_back(detail::guarded(info.kind, p, 0, [&] { return verify_series_case(info.kind, p); }));
          break;
      }
    }
  }
  return out;
}

/// True when no non-conjectural record failed.
inline bool all_required_pass(const std::vector<VerificationRecord>& records) {
  return std::all_of(records.begin(), records.end(),
                     [](const VerificationRecord& r) { return r.pass || r.conjectural; });
}

}  // namespace supercong
