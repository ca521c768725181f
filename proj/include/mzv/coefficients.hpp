#pragma once

#include <span>
#include <vector>

#include "mzv/lincomb.hpp"

namespace mzv {

/// 2^e as a big integer.
inline BigInt pow2(long e) {
  if (e < 0) throw DomainError("negative power of two");
  BigInt out = 1;
  out <<= static_cast<unsigned>(e);
  return out;
}

/// binom(a, b), zero when b < 0 or b > a.
inline BigInt binomial(long a, long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  BigInt out = 1;
  for (long i = 1; i <= b; ++i) {
    out *= a - b + i;
    out /= i;
  }
  return out;
}

/// The weight coefficient of a prefix (t1, ..., t_{k-1}):
///   sum_{j=1}^{k-1} 2^{t1+...+tj - j} + 2^{t1+...+t_{k-1} - (k-1)},
/// with C() = 1 for the empty prefix.
inline BigInt calc_C(std::span<const int> prefix) {
  if (prefix.empty()) return 1;
  BigInt out = 0;
  long partial = 0;
  long j = 0;
  for (int t : prefix) {
    if (t < 1) throw DomainError("calc_C entries must be >= 1");
    partial += t;
    ++j;
    out += pow2(partial - j);
  }
  out += pow2(partial - j);
  return out;
}

inline BigInt calc_C(const std::vector<int>& prefix) { return calc_C(std::span<const int>(prefix)); }
inline BigInt calc_C(std::initializer_list<int> prefix) {
  return calc_C(std::span<const int>(prefix.begin(), prefix.size()));
}

}  // namespace mzv
