#pragma once

// Hand-rolled generators for property tests. Seeds are fixed so failures
// reproduce.

#include <random>
#include <vector>

#include "mzv/words.hpp"

namespace mzv::proptest {

class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  /// Random composition of weight exactly n (n = 0 gives the unit).
  Composition composition_of_weight(int n) {
    std::vector<int> parts;
    int left = n;
    while (left > 0) {
      const int p = uniform(1, left);
      parts.push_back(p);
      left -= p;
    }
    return Composition(std::move(parts));
  }

  /// Random composition of weight in [0, max_weight].
  Composition composition(int max_weight) { return composition_of_weight(uniform(0, max_weight)); }

  BinaryWord word(int max_len) {
    std::vector<Letter> letters(static_cast<std::size_t>(uniform(0, max_len)));
    for (auto& a : letters) a = uniform(0, 1) ? Letter::X1 : Letter::X0;
    return BinaryWord(std::move(letters));
  }

 private:
  std::mt19937 rng_;
};

}  // namespace mzv::proptest
