#pragma once

// The shuffle product on binary words, its transport to compositions, the
// operators P and Q, Euler's decomposition and the shuffle sum builders.

#include <utility>

#include "mzv/coefficients.hpp"
#include "mzv/lincomb.hpp"
#include "mzv/memo.hpp"
#include "mzv/oracle.hpp"
#include "mzv/stuffle.hpp"
#include "mzv/words.hpp"

namespace mzv {

namespace detail {

using WordPair = std::pair<BinaryWord, BinaryWord>;

inline ConcurrentCache<WordPair, LinComb<BinaryWord>, PairHash<BinaryWord>>& shuffle_cache() {
  static ConcurrentCache<WordPair, LinComb<BinaryWord>, PairHash<BinaryWord>> cache;
  return cache;
}

inline void add_prepended(LinComb<BinaryWord>& out, Letter head, const LinComb<BinaryWord>& rest) {
  for (const auto& [w, c] : rest) out.add_term(w.prepended(head), c);
}

}  // namespace detail

/// (a u) ⧢ (b v) = a (u ⧢ b v) + b (a u ⧢ v), with 1 ⧢ u = u ⧢ 1 = u.
inline LinComb<BinaryWord> shuffle_words(const BinaryWord& u, const BinaryWord& v) {
  if (u.empty()) return LinComb<BinaryWord>(v);
  if (v.empty()) return LinComb<BinaryWord>(u);
  const bool swap = v < u;
  detail::WordPair key = swap ? std::pair(v, u) : std::pair(u, v);
  auto cached = detail::shuffle_cache().get_or_compute(key, [&] {
    const BinaryWord& x = key.first;
    const BinaryWord& y = key.second;
    LinComb<BinaryWord> out;
    detail::add_prepended(out, x.front(), shuffle_words(x.tail(), y));
    detail::add_prepended(out, y.front(), shuffle_words(x, y.tail()));
    return out;
  });
  return *cached;
}

/// w1 ⧢~ w2 := sigma(sigma^{-1}(w1) ⧢ sigma^{-1}(w2)), computed through the
/// binary-word shuffle.
inline LinComb<Composition> transported_shuffle(const Composition& u, const Composition& v,
                                                ProductEngine engine = ProductEngine::recursive) {
  if (engine == ProductEngine::oracle) return oracle::transported_shuffle(u, v);
  return map_words(shuffle_words(composition_to_word(u), composition_to_word(v)),
                   [](const BinaryWord& w) { return word_to_composition(w); });
}

inline LinComb<Composition> transported_shuffle(const LinComb<Composition>& a, const LinComb<Composition>& b,
                                                ProductEngine engine = ProductEngine::recursive) {
  LinComb<Composition> out;
  for (const auto& [u, cu] : a) {
    for (const auto& [v, cv] : b) out.add_scaled(transported_shuffle(u, v, engine), cu * cv);
  }
  return out;
}

/// P is undefined on the unit.
class POnUnit : public std::invalid_argument {
 public:
  POnUnit() : std::invalid_argument("P is not defined on the empty word") {}
};

/// P(z_{s1,s2,...}) = z_{s1+1,s2,...}.
inline Composition opP(const Composition& w) {
  if (w.empty()) throw POnUnit();
  std::vector<int> parts = w.parts();
  ++parts.front();
  return Composition(std::move(parts));
}

/// Q(w) = z1 w; Q(1) = z1.
inline Composition opQ(const Composition& w) { return w.prepended(1); }

inline LinComb<Composition> opP(const LinComb<Composition>& a) {
  return map_words(a, [](const Composition& w) { return opP(w); });
}

inline LinComb<Composition> opQ(const LinComb<Composition>& a) {
  return map_words(a, [](const Composition& w) { return opQ(w); });
}

/// Binary-word counterparts of P and Q: prepend x0, prepend x1.
inline BinaryWord opI0(const BinaryWord& w) {
  if (w.empty()) throw POnUnit();
  return w.prepended(Letter::X0);
}
inline BinaryWord opI1(const BinaryWord& w) { return w.prepended(Letter::X1); }

/// z_r ⧢~ z_s = sum_{t1+t2=r+s} (binom(t1-1, r-1) + binom(t1-1, s-1)) z_{t1,t2}.
inline LinComb<Composition> euler_decomposition(int r, int s) {
  if (r < 1 || s < 1) throw DomainError("euler_decomposition requires r, s >= 1");
  const int n = r + s;
  LinComb<Composition> out;
  for (int t1 = 1; t1 < n; ++t1) {
    out.add_term(Composition{t1, n - t1}, binomial(t1 - 1, r - 1) + binomial(t1 - 1, s - 1));
  }
  return out;
}

namespace detail {

inline void require_z1_sum_domain(int k, int n) {
  if (k < 2 || n < k) throw DomainError("z1 shuffle builders require k >= 2 and n >= k");
  require_weight_within_limit(n);
}

}  // namespace detail

/// z1 ⧢~ (sum of depth-(k-1) words of weight n-1), admissible ones only when
/// flagged.
inline LinComb<Composition> z1_shuffle_lhs(int k, int n, bool admissible_only,
                                           ProductEngine engine = ProductEngine::recursive) {
  detail::require_z1_sum_domain(k, n);
  LinComb<Composition> out;
  if (n - 1 < 1) return out;
  for (const auto& s : compositions_of(n - 1, k - 1, admissible_only)) {
    out += transported_shuffle(Composition{1}, s, engine);
  }
  return out;
}

/// Right side for z1 against the admissible words: words (1, >=2, ...) once,
/// then k or k-1 times the admissible words by whether the last part is 1.
inline LinComb<Composition> z1_shuffle_rhs_admissible(int k, int n) {
  detail::require_z1_sum_domain(k, n);
  LinComb<Composition> out;
  for (const auto& t : compositions_of(n, k)) {
    if (t[0] == 1) {
      if (t[1] >= 2) out.add_term(t, BigInt(1));
    } else {
      out.add_term(t, BigInt(t.back() == 1 ? k : k - 1));
    }
  }
  return out;
}

/// Right side for z1 against all words: k or k-1 times each depth-k word by
/// whether its last part is 1.
inline LinComb<Composition> z1_shuffle_rhs_all(int k, int n) {
  detail::require_z1_sum_domain(k, n);
  LinComb<Composition> out;
  for (const auto& t : compositions_of(n, k)) out.add_term(t, BigInt(t.back() == 1 ? k : k - 1));
  return out;
}

/// Sum over r >= 1 and (s1,...,s_{k-1}) of weight n - r of z_r ⧢~ z_s.
inline LinComb<Composition> shuffle_sum_lhs(int k, int n, bool require_s1_ge2,
                                            ProductEngine engine = ProductEngine::recursive) {
  detail::require_sum_domain(k, n, require_s1_ge2);
  LinComb<Composition> out;
  detail::for_each_split(k, n, require_s1_ge2, [&](int r, const Composition& s) {
    out += transported_shuffle(Composition{r}, s, engine);
  });
  return out;
}

/// sum_t C(t1,...,t_{k-1}) z_t over depth-k words of weight n.
inline LinComb<Composition> shuffle_sum_rhs_thm25(int k, int n) {
  detail::require_sum_domain(k, n, false);
  LinComb<Composition> out;
  for (const auto& t : compositions_of(n, k)) {
    out.add_term(t, calc_C(t.prefix(static_cast<std::size_t>(k - 1)).parts()));
  }
  return out;
}

/// sum_t [C(t1,...,t_{k-1}) - C(t2,...,t_{k-1})] z_t - sum_{t2=1} z_t.
inline LinComb<Composition> shuffle_sum_rhs_thm26(int k, int n) {
  detail::require_sum_domain(k, n, true);
  LinComb<Composition> out;
  for (const auto& t : compositions_of(n, k)) {
    const auto head = t.prefix(static_cast<std::size_t>(k - 1));
    BigInt c = calc_C(head.parts()) - calc_C(head.tail().parts());
    if (t[1] == 1) c -= 1;
    out.add_term(t, c);
  }
  return out;
}

}  // namespace mzv
