#pragma once

// Finite digit words, their weights and values, and the relation
// x ~ y  <=>  value(x) = beta^k value(y) for some integer k.

#include "minweight/algebra.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace minweight {

/// Digits x_1 ... x_n, most significant first. With a point k the value is
/// x_1...x_k . x_{k+1}...x_n; without one, the word is read as an integer
/// x_1...x_n . (the last digit has weight beta^0).
struct DigitWord {
  std::vector<int> digits;
  std::optional<int> point;

  DigitWord() = default;
  DigitWord(std::vector<int> d, std::optional<int> p = std::nullopt) : digits(std::move(d)), point(p) {}

  std::size_t size() const { return digits.size(); }
  bool empty() const { return digits.empty(); }
  bool operator==(const DigitWord&) const = default;
};

/// Sum of absolute digit values.
int weight(const DigitWord& w);
int weight(std::span<const int> digits);

/// Drops leading and trailing zeros and the point.
DigitWord strip(const DigitWord& w);
DigitWord negate(const DigitWord& w);
bool is_factor(std::span<const int> needle, std::span<const int> hay);
bool avoids(std::span<const int> word, const std::vector<DigitWord>& forbidden);

/// Exact value in the field (see DigitWord for the reading convention).
FieldElem value_beta(const DigitWord& w, const BetaField& f);
FieldElem value_beta(std::span<const int> digits, const BetaField& f);

/// Canonical representative of the class {beta^k v}: v = beta^exponent * canonical
/// with 1 <= |canonical| < beta. Zero maps to (0, 0).
struct ValueClass {
  FieldElem canonical;
  int exponent;
};
ValueClass value_class(const FieldElem& v);

/// The k with value(x) = beta^k value(y), searched in [-max_shift, max_shift].
std::optional<int> equivalent_beta(const DigitWord& x, const DigitWord& y, const BetaField& f, int max_shift);

/// sum x_j U_{n-j} with terms[i] = U_i. Throws if the word carries a point.
Int value_u(const DigitWord& w, std::span<const Int> terms);

/// Word grammar: '0'-'9' for 0..9, 'T','U','V','W','X' for -1..-5, '[n]' for any
/// other integer, and at most one '.' marking the point.
DigitWord parse_word(std::string_view text);
std::string render_word(const DigitWord& w);
std::string render_digits(std::span<const int> digits);

}  // namespace minweight
