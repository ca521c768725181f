#pragma once

// Formal Z-linear combinations of words with arbitrary-size coefficients.

#include <cstddef>
#include <functional>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "mzv/words.hpp"

namespace mzv {

using BigInt = boost::multiprecision::cpp_int;

/// Sum of c_w * w over finitely many words w. Zero coefficients are never
/// stored, so equality is plain map equality and the zero element is empty.
template <typename W>
class LinComb {
 public:
  using word_type = W;
  using map_type = std::map<W, BigInt>;
  using const_iterator = typename map_type::const_iterator;

  LinComb() = default;
  /// The single term 1 * w.
  explicit LinComb(W w) { terms_.emplace(std::move(w), BigInt(1)); }
  LinComb(W w, BigInt coeff) { add_term(std::move(w), std::move(coeff)); }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const_iterator begin() const noexcept { return terms_.begin(); }
  const_iterator end() const noexcept { return terms_.end(); }
  const map_type& terms() const noexcept { return terms_; }

  BigInt coeff(const W& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  void add_term(const W& w, const BigInt& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  void add_term(W&& w, BigInt&& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      terms_.emplace(std::move(w), std::move(c));
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  LinComb& operator+=(const LinComb& other) {
    for (const auto& [w, c] : other.terms_) add_term(w, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& other) {
    for (const auto& [w, c] : other.terms_) add_term(w, BigInt(-c));
    return *this;
  }
  /// this += factor * other
  LinComb& add_scaled(const LinComb& other, const BigInt& factor) {
    if (factor.is_zero()) return *this;
    for (const auto& [w, c] : other.terms_) add_term(w, BigInt(c * factor));
    return *this;
  }
  LinComb& operator*=(const BigInt& m) {
    if (m.is_zero()) {
      terms_.clear();
    } else {
      for (auto& [w, c] : terms_) c *= m;
    }
    return *this;
  }

  /// Sum of all coefficients.
  BigInt mass() const {
    BigInt total = 0;
    for (const auto& [w, c] : terms_) total += c;
    return total;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator-(LinComb a) { return a *= BigInt(-1); }
  friend LinComb operator*(LinComb a, const BigInt& m) { return a *= m; }
  friend LinComb operator*(const BigInt& m, LinComb a) { return a *= m; }
  friend bool operator==(const LinComb&, const LinComb&) = default;

 private:
  map_type terms_;
};

template <typename W>
LinComb<W> add(const LinComb<W>& a, const LinComb<W>& b) {
  return a + b;
}

template <typename W>
LinComb<W> scale(const LinComb<W>& a, const BigInt& m) {
  return a * m;
}

template <typename W, typename Pred>
LinComb<W> filter_terms(const LinComb<W>& a, Pred&& keep) {
  LinComb<W> out;
  for (const auto& [w, c] : a) {
    if (keep(w)) out.add_term(w, c);
  }
  return out;
}

/// Pushes every word through f, summing coefficients of colliding images.
template <typename W, typename F>
auto map_words(const LinComb<W>& a, F&& f) -> LinComb<std::decay_t<std::invoke_result_t<F, const W&>>> {
  LinComb<std::decay_t<std::invoke_result_t<F, const W&>>> out;
  for (const auto& [w, c] : a) out.add_term(f(w), c);
  return out;
}

/// Sum of 1 * w over a range of words.
template <typename Range>
auto sum_of(const Range& words) {
  LinComb<std::decay_t<decltype(*std::begin(words))>> out;
  for (const auto& w : words) out.add_term(w, BigInt(1));
  return out;
}

// ---------------------------------------------------------------------------
// Serialization: "3*z(2,1) + -1*z(3)", terms in ascending word order; the
// zero combination is "0".

template <typename W>
std::string to_string(const LinComb<W>& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : a) {
    if (!first) out += " + ";
    first = false;
    out += c.str();
    out += '*';
    out += to_string(w);
  }
  return out;
}

template <typename W>
std::ostream& operator<<(std::ostream& os, const LinComb<W>& a) {
  return os << to_string(a);
}

namespace detail {

template <typename W>
W parse_word(std::string_view text);

template <>
inline Composition parse_word<Composition>(std::string_view text) {
  return parse_composition(text);
}

template <>
inline BinaryWord parse_word<BinaryWord>(std::string_view text) {
  return parse_binary_word(text);
}

}  // namespace detail

/// Inverse of to_string. Accepts any term order and merges repeated words.
template <typename W>
LinComb<W> parse_lincomb(std::string_view text) {
  LinComb<W> out;
  if (text == "0") return out;
  std::size_t pos = 0;
  while (true) {
    std::size_t star = text.find('*', pos);
    if (star == std::string_view::npos) throw ParseError("expected 'coeff*word'", pos);
    std::size_t sep = text.find(" + ", star);
    std::size_t stop = sep == std::string_view::npos ? text.size() : sep;
    std::string_view coeff_text = text.substr(pos, star - pos);
    std::size_t digits = (!coeff_text.empty() && coeff_text[0] == '-') ? 1 : 0;
    if (coeff_text.size() == digits) throw ParseError("missing coefficient", pos);
    for (std::size_t i = digits; i < coeff_text.size(); ++i) {
      if (!detail::is_digit(coeff_text[i])) throw ParseError("bad coefficient", pos + i);
    }
    BigInt coeff{std::string(coeff_text)};
    W word;
    try {
      word = detail::parse_word<W>(text.substr(star + 1, stop - star - 1));
    } catch (const ParseError& e) {
      throw ParseError("bad word", star + 1 + e.position());
    }
    out.add_term(std::move(word), std::move(coeff));
    if (sep == std::string_view::npos) break;
    pos = sep + 3;
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSON: [{"word": [2,1], "coeff": "3"}, ...]; binary words appear as "xyy".

inline nlohmann::json word_to_json(const Composition& c) { return c.parts(); }
inline nlohmann::json word_to_json(const BinaryWord& w) { return to_string(w); }

template <typename W>
nlohmann::json to_json(const LinComb<W>& a) {
  auto out = nlohmann::json::array();
  for (const auto& [w, c] : a) {
    out.push_back({{"word", word_to_json(w)}, {"coeff", c.str()}});
  }
  return out;
}

template <typename W>
LinComb<W> lincomb_from_json(const nlohmann::json& j) {
  LinComb<W> out;
  for (const auto& term : j) {
    W w;
    if constexpr (std::is_same_v<W, Composition>) {
      w = Composition(term.at("word").get<std::vector<int>>());
    } else {
      w = parse_binary_word(term.at("word").get<std::string>());
    }
    out.add_term(std::move(w), BigInt(term.at("coeff").get<std::string>()));
  }
  return out;
}

}  // namespace mzv
