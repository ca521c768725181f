#pragma once

// Brute-force product enumerators. Each quasi-shuffle or shuffle is listed
// individually as a placement of the factors' letters into output slots and
// counted once; no recursion over the algebra is involved. These serve as the
// independent witness for the recursive products and as the source of the
// golden files.

#include <bit>
#include <cstdint>
#include <vector>

#include "mzv/lincomb.hpp"
#include "mzv/words.hpp"

namespace mzv {

/// Which implementation computes products inside the sum builders.
enum class ProductEngine { recursive, oracle };

namespace oracle {

namespace detail {

// Calls f(mask) for every mask over `bits` positions with `ones` bits set,
// in increasing numeric order (Gosper's hack).
template <typename F>
void for_each_mask(unsigned bits, unsigned ones, F&& f) {
  if (ones > bits) return;
  if (ones == 0) {
    f(std::uint32_t{0});
    return;
  }
  const std::uint64_t limit = std::uint64_t{1} << bits;
  std::uint64_t m = (std::uint64_t{1} << ones) - 1;
  while (m < limit) {
    f(static_cast<std::uint32_t>(m));
    const std::uint64_t c = m & (~m + 1);
    const std::uint64_t r = m + c;
    m = (((r ^ m) >> 2) / c) | r;
  }
}

// Calls f(sub) for every sub-mask of `mask` with exactly `ones` bits set.
template <typename F>
void for_each_submask(std::uint32_t mask, unsigned ones, F&& f) {
  std::vector<unsigned> positions;
  for (unsigned p = 0; p < 32; ++p) {
    if (mask & (1u << p)) positions.push_back(p);
  }
  for_each_mask(static_cast<unsigned>(positions.size()), ones, [&](std::uint32_t pick) {
    std::uint32_t sub = 0;
    for (unsigned i = 0; i < positions.size(); ++i) {
      if (pick & (1u << i)) sub |= 1u << positions[i];
    }
    f(sub);
  });
}

}  // namespace detail

/// u * v as the sum over all pairs of order-preserving placements of u's and
/// v's parts into L output slots covering every slot; a slot holding one part
/// from each factor receives their sum.
inline LinComb<Composition> quasi_shuffle(const Composition& u, const Composition& v) {
  const unsigned a = static_cast<unsigned>(u.depth());
  const unsigned b = static_cast<unsigned>(v.depth());
  if (a + b > 30) throw DomainError("oracle quasi-shuffle limited to total depth 30");
  LinComb<Composition> out;
  for (unsigned len = std::max(a, b); len <= a + b; ++len) {
    const std::uint32_t full = len == 32 ? ~0u : ((1u << len) - 1);
    const unsigned overlap = a + b - len;
    detail::for_each_mask(len, a, [&](std::uint32_t umask) {
      // v must fill every slot u leaves empty, plus `overlap` of u's slots.
      const std::uint32_t forced = full & ~umask;
      detail::for_each_submask(umask, overlap, [&](std::uint32_t shared) {
        const std::uint32_t vmask = forced | shared;
        std::vector<int> parts(len, 0);
        unsigned iu = 0;
        unsigned iv = 0;
        for (unsigned p = 0; p < len; ++p) {
          if (umask & (1u << p)) parts[p] += u[iu++];
          if (vmask & (1u << p)) parts[p] += v[iv++];
        }
        out.add_term(Composition(std::move(parts)), BigInt(1));
      });
    });
  }
  return out;
}

/// u ⧢ v as the sum over all C(|u|+|v|, |u|) choices of the slots holding u.
inline LinComb<BinaryWord> shuffle(const BinaryWord& u, const BinaryWord& v) {
  const unsigned len = static_cast<unsigned>(u.size() + v.size());
  if (len > 30) throw DomainError("oracle shuffle limited to total length 30");
  LinComb<BinaryWord> out;
  detail::for_each_mask(len, static_cast<unsigned>(u.size()), [&](std::uint32_t umask) {
    std::vector<Letter> letters(len);
    std::size_t iu = 0;
    std::size_t iv = 0;
    for (unsigned p = 0; p < len; ++p) {
      letters[p] = (umask & (1u << p)) ? u[iu++] : v[iv++];
    }
    out.add_term(BinaryWord(std::move(letters)), BigInt(1));
  });
  return out;
}

/// Transported shuffle of two compositions via the brute-force word shuffle.
inline LinComb<Composition> transported_shuffle(const Composition& u, const Composition& v) {
  return map_words(shuffle(composition_to_word(u), composition_to_word(v)),
                   [](const BinaryWord& w) { return word_to_composition(w); });
}

}  // namespace oracle
}  // namespace mzv
