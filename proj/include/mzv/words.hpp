#pragma once

// Compositions (indices z_{s1,...,sk}) and binary words over {x0, x1}, the
// two word languages of the quasi-shuffle and shuffle algebras, together with
// the bijection between them and their textual formats.

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mzv {

/// Raised when a textual word cannot be parsed. `position` is the 0-based
/// offset of the offending character in the input.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Parameters outside an operation's domain (n < k, nonpositive parts, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A binary word that does not end in x1 has no composition counterpart.
class NotInH1 : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Enumeration was asked for a weight above the configured ceiling.
class WeightLimitExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr int kDefaultMaxWeight = 24;

/// Weight ceiling for enumerators; MZV_MAX_WEIGHT overrides the default.
inline int max_weight() {
  static const int value = [] {
    if (const char* env = std::getenv("MZV_MAX_WEIGHT")) {
      int parsed = 0;
      std::string_view text(env);
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), parsed);
      if (ec == std::errc() && ptr == text.data() + text.size() && parsed > 0) return parsed;
    }
    return kDefaultMaxWeight;
  }();
  return value;
}

inline void require_weight_within_limit(long weight) {
  if (weight > max_weight()) {
    throw WeightLimitExceeded("weight " + std::to_string(weight) + " exceeds the ceiling " +
                              std::to_string(max_weight()) + " (set MZV_MAX_WEIGHT to raise it)");
  }
}

/// Index (s1,...,sk) of the monomial z_{s1}...z_{sk}; empty means the unit 1.
class Composition {
 public:
  using value_type = int;

  Composition() = default;
  Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}
  explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
      if (p < 1) throw DomainError("composition parts must be >= 1, got " + std::to_string(p));
    }
  }

  const std::vector<int>& parts() const noexcept { return parts_; }
  bool empty() const noexcept { return parts_.empty(); }
  std::size_t depth() const noexcept { return parts_.size(); }
  int weight() const noexcept {
    int total = 0;
    for (int p : parts_) total += p;
    return total;
  }
  int operator[](std::size_t i) const { return parts_[i]; }
  int front() const { return parts_.front(); }
  int back() const { return parts_.back(); }

  /// Nonempty with first part >= 2; these index convergent MZVs (H^0).
  bool admissible() const noexcept { return !parts_.empty() && parts_.front() >= 2; }

  /// Parts [from, depth()).
  Composition tail(std::size_t from = 1) const {
    Composition out;
    if (from < parts_.size()) out.parts_.assign(parts_.begin() + static_cast<std::ptrdiff_t>(from), parts_.end());
    return out;
  }
  /// Parts [0, count).
  Composition prefix(std::size_t count) const {
    Composition out;
    out.parts_.assign(parts_.begin(), parts_.begin() + static_cast<std::ptrdiff_t>(std::min(count, parts_.size())));
    return out;
  }
  Composition prepended(int part) const {
    std::vector<int> p;
    p.reserve(parts_.size() + 1);
    p.push_back(part);
    p.insert(p.end(), parts_.begin(), parts_.end());
    return Composition(std::move(p));
  }
  Composition concat(const Composition& other) const {
    Composition out = *this;
    out.parts_.insert(out.parts_.end(), other.parts_.begin(), other.parts_.end());
    return out;
  }

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition& a, const Composition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
};

inline int weight(const Composition& c) noexcept { return c.weight(); }
inline std::size_t depth(const Composition& c) noexcept { return c.depth(); }

enum class Letter : std::uint8_t { X0 = 0, X1 = 1 };

/// Word in the free monoid M(x0, x1); empty means the unit 1.
class BinaryWord {
 public:
  using value_type = Letter;

  BinaryWord() = default;
  BinaryWord(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit BinaryWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  bool empty() const noexcept { return letters_.empty(); }
  std::size_t size() const noexcept { return letters_.size(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  /// Empty or ending in x1.
  bool in_h1() const noexcept { return letters_.empty() || letters_.back() == Letter::X1; }
  /// Empty, or starting with x0 and ending in x1.
  bool in_h0() const noexcept {
    return letters_.empty() || (letters_.front() == Letter::X0 && letters_.back() == Letter::X1);
  }

  BinaryWord tail(std::size_t from = 1) const {
    BinaryWord out;
    if (from < letters_.size()) out.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(from), letters_.end());
    return out;
  }
  BinaryWord prefix(std::size_t count) const {
    BinaryWord out;
    out.letters_.assign(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(std::min(count, letters_.size())));
    return out;
  }
  BinaryWord prepended(Letter a) const {
    BinaryWord out;
    out.letters_.reserve(letters_.size() + 1);
    out.letters_.push_back(a);
    out.letters_.insert(out.letters_.end(), letters_.begin(), letters_.end());
    return out;
  }
  std::size_t count(Letter a) const {
    return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), a));
  }

  friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
  friend auto operator<=>(const BinaryWord& a, const BinaryWord& b) { return a.letters_ <=> b.letters_; }

 private:
  std::vector<Letter> letters_;
};

/// z_{s1,...,sk} -> x0^{s1-1} x1 ... x0^{sk-1} x1.
inline BinaryWord composition_to_word(const Composition& c) {
  std::vector<Letter> letters;
  letters.reserve(static_cast<std::size_t>(c.weight()));
  for (int s : c.parts()) {
    letters.insert(letters.end(), static_cast<std::size_t>(s - 1), Letter::X0);
    letters.push_back(Letter::X1);
  }
  return BinaryWord(std::move(letters));
}

/// Inverse of composition_to_word on H^1.
inline Composition word_to_composition(const BinaryWord& w) {
  if (!w.in_h1()) throw NotInH1("binary word does not end in x1");
  std::vector<int> parts;
  int run = 1;
  for (Letter a : w.letters()) {
    if (a == Letter::X0) {
      ++run;
    } else {
      parts.push_back(run);
      run = 1;
    }
  }
  return Composition(std::move(parts));
}

/// Compositions of n into exactly k positive parts accepted by `keep`, in
/// lexicographic order. Admissible-only keeps those with first part >= 2.
inline std::vector<Composition> compositions_of(int n, int k, bool admissible_only = false,
                                                const std::function<bool(const Composition&)>& keep = {}) {
  if (n < 1 || k < 1) throw DomainError("compositions_of requires n >= 1 and k >= 1");
  require_weight_within_limit(n);
  std::vector<Composition> out;
  if (k > n) return out;
  std::vector<int> parts(static_cast<std::size_t>(k));
  // Depth-first fill: parts[i] ranges so that the remaining parts can be >= 1.
  std::function<void(std::size_t, int)> fill = [&](std::size_t i, int remaining) {
    const int left = k - static_cast<int>(i) - 1;
    if (left == 0) {
      parts[i] = remaining;
      Composition c{std::vector<int>(parts)};
      if ((!admissible_only || c.admissible()) && (!keep || keep(c))) out.push_back(std::move(c));
      return;
    }
    const int lo = (i == 0 && admissible_only) ? 2 : 1;
    for (int p = lo; p <= remaining - left; ++p) {
      parts[i] = p;
      fill(i + 1, remaining - p);
    }
  };
  fill(0, n);
  return out;
}

/// Every composition of weight exactly n (all depths), lexicographic order.
inline std::vector<Composition> all_compositions_of_weight(int n) {
  if (n == 0) return {Composition{}};
  std::vector<Composition> out;
  for (int k = 1; k <= n; ++k) {
    auto part = compositions_of(n, k);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Text formats: compositions as "z(2,1,3)" or "2,1,3", the unit as "z()";
// binary words over {x, y} with x = x0, y = x1, the unit as "1".

inline std::string to_string(const Composition& c) {
  std::string out = "z(";
  for (std::size_t i = 0; i < c.depth(); ++i) {
    if (i) out += ',';
    out += std::to_string(c[i]);
  }
  out += ')';
  return out;
}

inline std::string to_string(const BinaryWord& w) {
  if (w.empty()) return "1";
  std::string out;
  out.reserve(w.size());
  for (Letter a : w.letters()) out += (a == Letter::X0 ? 'x' : 'y');
  return out;
}

namespace detail {

inline bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Parses "a,b,c" starting at text[pos] up to `end`; offsets are reported
// relative to the full input via `base`.
inline std::vector<int> parse_parts(std::string_view text, std::size_t begin, std::size_t end) {
  std::vector<int> parts;
  std::size_t i = begin;
  if (i == end) return parts;
  while (true) {
    if (i >= end || !is_digit(text[i])) {
      if (i < end && text[i] == '-') throw ParseError("negative part", i);
      throw ParseError("expected a positive integer", i);
    }
    const std::size_t start = i;
    long value = 0;
    while (i < end && is_digit(text[i])) {
      value = value * 10 + (text[i] - '0');
      if (value > 1'000'000) throw ParseError("part too large", start);
      ++i;
    }
    if (value == 0) throw ParseError("parts must be >= 1", start);
    parts.push_back(static_cast<int>(value));
    if (i == end) break;
    if (text[i] != ',') throw ParseError(std::string("unexpected character '") + text[i] + "'", i);
    ++i;
  }
  return parts;
}

}  // namespace detail

/// Strict parser for "z(2,1,3)", "2,1,3" and "z()".
inline Composition parse_composition(std::string_view text) {
  if (text.size() >= 2 && text[0] == 'z' && text[1] == '(') {
    if (text.back() != ')') throw ParseError("missing ')'", text.size());
    auto close = text.find(')');
    if (close != text.size() - 1) throw ParseError("unexpected character after ')'", close + 1);
    return Composition(detail::parse_parts(text, 2, text.size() - 1));
  }
  if (text.empty()) throw ParseError("empty composition text", 0);
  return Composition(detail::parse_parts(text, 0, text.size()));
}

/// Strict parser for words over {x, y}; "1" is the empty word.
inline BinaryWord parse_binary_word(std::string_view text) {
  if (text == "1") return BinaryWord{};
  if (text.empty()) throw ParseError("empty word text", 0);
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == 'x') letters.push_back(Letter::X0);
    else if (text[i] == 'y') letters.push_back(Letter::X1);
    else throw ParseError(std::string("unexpected character '") + text[i] + "' in binary word", i);
  }
  return BinaryWord(std::move(letters));
}

/// True when the text is in the binary-word notation rather than a composition.
inline bool looks_like_binary_word(std::string_view text) {
  return !text.empty() && (text[0] == 'x' || text[0] == 'y');
}

}  // namespace mzv

template <>
struct std::hash<mzv::Composition> {
  std::size_t operator()(const mzv::Composition& c) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull ^ c.depth();
    for (int p : c.parts()) h = (h ^ static_cast<std::size_t>(p)) * 0x100000001b3ull;
    return h;
  }
};

template <>
struct std::hash<mzv::BinaryWord> {
  std::size_t operator()(const mzv::BinaryWord& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull ^ w.size();
    for (auto a : w.letters()) h = (h ^ static_cast<std::size_t>(a)) * 0x100000001b3ull;
    return h;
  }
};
