#pragma once

// The quasi-shuffle (stuffle) product on H* and the sum builders for the
// stuffle sum formulas.

#include <utility>
#include <vector>

#include "mzv/lincomb.hpp"
#include "mzv/memo.hpp"
#include "mzv/oracle.hpp"
#include "mzv/words.hpp"

namespace mzv {

namespace detail {

using CompositionPair = std::pair<Composition, Composition>;

inline ConcurrentCache<CompositionPair, LinComb<Composition>, PairHash<Composition>>& stuffle_cache() {
  static ConcurrentCache<CompositionPair, LinComb<Composition>, PairHash<Composition>> cache;
  return cache;
}

// Adds factor * z_head * x into out for every term x of `rest`.
inline void add_prepended(LinComb<Composition>& out, int head, const LinComb<Composition>& rest) {
  for (const auto& [w, c] : rest) out.add_term(w.prepended(head), c);
}

}  // namespace detail

/// (z_a u) * (z_b v) = z_a (u * z_b v) + z_b (z_a u * v) + z_{a+b} (u * v),
/// with 1 * u = u * 1 = u.
inline LinComb<Composition> stuffle(const Composition& u, const Composition& v) {
  if (u.empty()) return LinComb<Composition>(v);
  if (v.empty()) return LinComb<Composition>(u);
  // Commutative, so the memo key is ordered.
  const bool swap = v < u;
  detail::CompositionPair key = swap ? std::pair(v, u) : std::pair(u, v);
  auto cached = detail::stuffle_cache().get_or_compute(key, [&] {
    const Composition& x = key.first;
    const Composition& y = key.second;
    const Composition xt = x.tail();
    const Composition yt = y.tail();
    LinComb<Composition> out;
    detail::add_prepended(out, x.front(), stuffle(xt, y));
    detail::add_prepended(out, y.front(), stuffle(x, yt));
    detail::add_prepended(out, x.front() + y.front(), stuffle(xt, yt));
    return out;
  });
  return *cached;
}

/// Bilinear extension of stuffle.
inline LinComb<Composition> stuffle_lincomb(const LinComb<Composition>& a, const LinComb<Composition>& b,
                                            ProductEngine engine = ProductEngine::recursive) {
  LinComb<Composition> out;
  for (const auto& [u, cu] : a) {
    for (const auto& [v, cv] : b) {
      auto prod = engine == ProductEngine::oracle ? oracle::quasi_shuffle(u, v) : stuffle(u, v);
      out.add_scaled(prod, cu * cv);
    }
  }
  return out;
}

namespace detail {

inline void require_sum_domain(int k, int n, bool require_s1_ge2) {
  if (k < 2) throw DomainError("sum formulas require k >= 2");
  if (require_s1_ge2 ? n < k + 1 : n < k) {
    throw DomainError("sum formulas require n >= " + std::string(require_s1_ge2 ? "k+1" : "k") +
                      " (k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")");
  }
  require_weight_within_limit(n);
}

// Calls f(r, s) for all r >= 1 and compositions s of n - r of depth k - 1,
// restricted to s1 >= 2 when flagged.
template <typename F>
void for_each_split(int k, int n, bool require_s1_ge2, F&& f) {
  for (int r = 1; r <= n - (k - 1); ++r) {
    for (const auto& s : compositions_of(n - r, k - 1, require_s1_ge2)) f(r, s);
  }
}

}  // namespace detail

/// Sum over r >= 1 and (s1,...,s_{k-1}) of weight n - r of z_r * z_s
/// (with s1 >= 2 when require_s1_ge2).
inline LinComb<Composition> stuffle_sum_lhs(int k, int n, bool require_s1_ge2,
                                             ProductEngine engine = ProductEngine::recursive) {
  detail::require_sum_domain(k, n, require_s1_ge2);
  LinComb<Composition> out;
  detail::for_each_split(k, n, require_s1_ge2, [&](int r, const Composition& s) {
    out += engine == ProductEngine::oracle ? oracle::quasi_shuffle(Composition{r}, s) : stuffle(Composition{r}, s);
  });
  return out;
}

/// k * (all depth-k words of weight n) + (n - k + 1) * (all depth-(k-1) words).
inline LinComb<Composition> stuffle_sum_rhs_thm31(int k, int n) {
  detail::require_sum_domain(k, n, false);
  LinComb<Composition> out;
  for (const auto& t : compositions_of(n, k)) out.add_term(t, BigInt(k));
  for (const auto& u : compositions_of(n, k - 1)) out.add_term(u, BigInt(n - k + 1));
  return out;
}

/// The admissible-s1 variant: depth-k words weighted by the shape of their
/// first two parts, plus (n - k) times the admissible depth-(k-1) words.
inline LinComb<Composition> stuffle_sum_rhs_thm32(int k, int n) {
  detail::require_sum_domain(k, n, true);
  LinComb<Composition> out;
  for (const auto& t : compositions_of(n, k)) {
    const bool first_is_one = t[0] == 1;
    const bool second_is_one = t[1] == 1;
    if (first_is_one && !second_is_one) out.add_term(t, BigInt(1));
    else if (!first_is_one && second_is_one) out.add_term(t, BigInt(k - 1));
    else if (!first_is_one && !second_is_one) out.add_term(t, BigInt(k));
  }
  for (const auto& u : compositions_of(n, k - 1, true)) out.add_term(u, BigInt(n - k));
  return out;
}

}  // namespace mzv
