#pragma once

// Numerical evaluation of multiple zeta values
//   zeta(s1,...,sk) = sum_{n1 > ... > nk >= 1} 1 / (n1^s1 ... nk^sk)
// by Hölder convolution at 1/2: the iterated integral over [0,1] is split at
// 1/2 into products of multiple polylogarithms evaluated at 1/2, each a
// nested series whose tail is bounded geometrically.

#include <cmath>
#include <cstddef>
#include <iomanip>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "mzv/identities.hpp"
#include "mzv/lincomb.hpp"
#include "mzv/memo.hpp"
#include "mzv/words.hpp"

namespace mzv {

/// Working precision: 50 decimal digits.
using Real = boost::multiprecision::cpp_bin_float_50;

/// Smallest tolerance honoured; keeps at least 15 guard digits.
inline constexpr double kMinTolerance = 1e-35;

class NotAdmissible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ToleranceUnreachable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value with an absolute error bound covering truncation and rounding.
struct NumericValue {
  Real value = 0;
  Real err = 0;
};

struct EvalOptions {
  /// Most series terms one polylogarithm may consume.
  std::size_t max_terms = 100000;
};

inline std::string format_value(const NumericValue& v, int digits = 30) {
  std::ostringstream os;
  os << std::setprecision(digits) << v.value << " +/- " << std::setprecision(2) << std::scientific
     << static_cast<double>(v.err);
  return os.str();
}

namespace detail {

inline Real unit_roundoff() { return std::numeric_limits<Real>::epsilon(); }

/// Li_m(1/2) = sum_{n1 > ... > nr >= 1} 2^{-n1} / (n1^m1 ... nr^mr) for any
/// m with parts >= 1, to within `target`.
inline NumericValue polylog_half(const Composition& m, const Real& target, const EvalOptions& options) {
  if (m.empty()) return {Real(1), Real(0)};
  const std::size_t r = m.depth();
  const int m0 = m[0];
  // inner[j] = sum over n > n_j > ... > n_{r-1} of prod n_i^{-m_i}; inner[r] = 1.
  std::vector<Real> inner(r + 1, Real(0));
  inner[r] = 1;
  Real sum = 0;
  Real half_pow = 1;
  const double target_d = static_cast<double>(target);
  int max_part = 0;
  for (int p : m.parts()) max_part = std::max(max_part, p);
  for (std::size_t n = 1;; ++n) {
    if (n > options.max_terms) {
      throw ToleranceUnreachable("polylogarithm series exceeded the term budget of " +
                                 std::to_string(options.max_terms));
    }
    half_pow /= 2;
    const Real inv_n = Real(1) / Real(n);
    Real term = half_pow * inner[1];
    for (int e = 0; e < m0; ++e) term *= inv_n;
    sum += term;
    for (std::size_t j = 1; j < r; ++j) {
      Real step = inner[j + 1];
      for (int e = 0; e < m[j]; ++e) step *= inv_n;
      inner[j] += step;
    }
    // Terms beyond n are at most g(q) = 2^{-q} q^{-m0} (1 + ln q)^{r-1},
    // and g(q+1)/g(q) <= rho = (1 + 1/(n+1))^{r-1} / 2 for q > n.
    const double q = static_cast<double>(n + 1);
    const double rho = 0.5 * std::pow(1.0 + 1.0 / q, static_cast<double>(r - 1));
    if (rho < 0.75) {
      const double g = std::exp2(-q) * std::pow(q, -static_cast<double>(m0)) *
                       std::pow(1.0 + std::log(q), static_cast<double>(r - 1));
      const double tail = 1.01 * g / (1.0 - rho);
      // Each term costs O(r + max part) roundings on positive quantities.
      const Real rounding = Real(4) * Real(n) * Real(r + static_cast<std::size_t>(max_part) + 4) *
                            unit_roundoff() * sum;
      if (tail + static_cast<double>(rounding) <= target_d) return {sum, Real(tail) + rounding};
    }
  }
}

// Reverses a word and swaps x0 <-> x1: the image of the segment [p, 1] under
// t -> 1 - t.
inline BinaryWord dual_reversed(const BinaryWord& w) {
  std::vector<Letter> out(w.letters().rbegin(), w.letters().rend());
  for (auto& a : out) a = a == Letter::X0 ? Letter::X1 : Letter::X0;
  return BinaryWord(std::move(out));
}

inline NumericValue evaluate(const Composition& s, const Real& tol, const EvalOptions& options) {
  const BinaryWord w = composition_to_word(s);
  const std::size_t len = w.size();
  // Every polylogarithm at 1/2 lies in [0, ln 2], so a product's error is at
  // most e_a + e_b + e_a e_b.
  const Real part_target = tol / Real(4 * (len + 1));
  NumericValue total;
  for (std::size_t j = 0; j <= len; ++j) {
    const NumericValue head = polylog_half(word_to_composition(dual_reversed(w.prefix(j))), part_target, options);
    const NumericValue tail = polylog_half(word_to_composition(w.tail(j)), part_target, options);
    total.value += head.value * tail.value;
    total.err += head.err * tail.value + tail.err * head.value + head.err * tail.err;
  }
  total.err += Real(4 * (len + 1)) * unit_roundoff() * total.value;
  return total;
}

using EvalKey = std::pair<Composition, int>;

struct EvalKeyHash {
  std::size_t operator()(const EvalKey& k) const noexcept {
    return std::hash<Composition>{}(k.first) * 31u + static_cast<std::size_t>(k.second + 1000);
  }
};

inline ConcurrentCache<EvalKey, NumericValue, EvalKeyHash>& value_cache() {
  static ConcurrentCache<EvalKey, NumericValue, EvalKeyHash> cache(1u << 16);
  return cache;
}

}  // namespace detail

/// zeta(s) with |value - zeta(s)| <= err <= tol. Results are cached per
/// decade of tolerance: a request is served at 10^floor(log10 tol).
inline NumericValue mzv(const Composition& s, double tol, const EvalOptions& options = {}) {
  if (!s.admissible()) {
    throw NotAdmissible("zeta" + to_string(s).substr(1) + " diverges: the first part must be >= 2");
  }
  if (!(tol > 0)) throw DomainError("tolerance must be positive");
  if (tol < kMinTolerance) {
    throw ToleranceUnreachable("tolerance below the working-precision floor of 1e-35");
  }
  const int bucket = static_cast<int>(std::floor(std::log10(tol)));
  const Real bucket_tol = pow(Real(10), bucket);
  auto key = std::pair(s, bucket);
  if (options.max_terms != EvalOptions{}.max_terms) return detail::evaluate(s, bucket_tol, options);
  return *detail::value_cache().get_or_compute(key, [&] { return detail::evaluate(s, bucket_tol, options); });
}

/// Outcome of a numeric identity check: `lhs - rhs` against the propagated
/// error bound. Passes when |residual| <= err_bound + tol.
struct NumericCheck {
  bool pass = false;
  Real lhs = 0;
  Real rhs = 0;
  Real residual = 0;
  Real err_bound = 0;
};

namespace detail {

using WeightedTerms = std::vector<std::pair<Composition, BigInt>>;

inline NumericCheck check_weighted(const WeightedTerms& lhs_terms, const WeightedTerms& rhs_terms, double tol) {
  BigInt total_weight = 0;
  for (const auto& [c, w] : lhs_terms) total_weight += abs(w);
  for (const auto& [c, w] : rhs_terms) total_weight += abs(w);
  const double term_tol = tol / (4.0 * static_cast<double>(total_weight));
  NumericCheck out;
  auto accumulate = [&](const WeightedTerms& terms, Real& side) {
    for (const auto& [c, w] : terms) {
      const NumericValue v = mzv(c, term_tol);
      const Real weight = w.convert_to<Real>();
      side += weight * v.value;
      out.err_bound += abs(weight) * v.err;
    }
  };
  accumulate(lhs_terms, out.lhs);
  accumulate(rhs_terms, out.rhs);
  out.residual = out.lhs - out.rhs;
  out.pass = abs(out.residual) <= out.err_bound + Real(tol);
  return out;
}

}  // namespace detail

/// sum over admissible (s1,...,sk) of weight n of zeta(s) against zeta(n).
inline NumericCheck check_sum_formula(int k, int n, double tol) {
  if (k < 1 || n < k + 1) throw DomainError("sum formula requires k >= 1 and n >= k+1");
  detail::WeightedTerms lhs;
  for (const auto& s : compositions_of(n, k, true)) lhs.emplace_back(s, BigInt(1));
  return detail::check_weighted(lhs, {{Composition{n}, BigInt(1)}}, tol);
}

/// sum_{i=2}^{n-1} 2^i zeta(i, n-i) against (n+1) zeta(n).
inline NumericCheck check_weighted_euler(int n, double tol) {
  if (n < 3) throw DomainError("weighted Euler sum formula needs n >= 3 (the sum is empty for n = 2)");
  detail::WeightedTerms lhs;
  for (int i = 2; i <= n - 1; ++i) lhs.emplace_back(Composition{i, n - i}, pow2(i));
  return detail::check_weighted(lhs, {{Composition{n}, BigInt(n + 1)}}, tol);
}

/// sum over admissible s of depth k and weight n of main_theorem_weight(s)
/// zeta(s) against n zeta(n).
inline NumericCheck check_weighted_sum_formula(int k, int n, double tol) {
  if (k < 2 || n < k + 1) throw DomainError("weighted sum formula requires k >= 2 and n >= k+1");
  detail::WeightedTerms lhs;
  for (const auto& s : compositions_of(n, k, true)) lhs.emplace_back(s, main_theorem_weight(s));
  return detail::check_weighted(lhs, {{Composition{n}, BigInt(n)}}, tol);
}

}  // namespace mzv
