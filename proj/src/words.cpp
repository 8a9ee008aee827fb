#include "minweight/words.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace minweight {

int weight(std::span<const int> digits) {
  int w = 0;
  for (int d : digits) w += std::abs(d);
  return w;
}

int weight(const DigitWord& w) { return weight(std::span<const int>(w.digits)); }

DigitWord strip(const DigitWord& w) {
  auto first = std::find_if(w.digits.begin(), w.digits.end(), [](int d) { return d != 0; });
  if (first == w.digits.end()) return {};
  auto last = std::find_if(w.digits.rbegin(), w.digits.rend(), [](int d) { return d != 0; }).base();
  return DigitWord(std::vector<int>(first, last));
}

DigitWord negate(const DigitWord& w) {
  DigitWord r = w;
  for (int& d : r.digits) d = -d;
  return r;
}

bool is_factor(std::span<const int> needle, std::span<const int> hay) {
  if (needle.size() > hay.size()) return false;
  return std::search(hay.begin(), hay.end(), needle.begin(), needle.end()) != hay.end();
}

bool avoids(std::span<const int> word, const std::vector<DigitWord>& forbidden) {
  return std::none_of(forbidden.begin(), forbidden.end(),
                      [&](const DigitWord& x) { return is_factor(x.digits, word); });
}

FieldElem value_beta(std::span<const int> digits, const BetaField& f) {
  FieldElem acc = f.zero();
  for (int d : digits) acc = acc.times_beta_pow(1) + d;
  return acc;
}

FieldElem value_beta(const DigitWord& w, const BetaField& f) {
  FieldElem v = value_beta(std::span<const int>(w.digits), f);
  if (w.point) v = v.times_beta_pow(*w.point - static_cast<int>(w.size()));
  return v;
}

ValueClass value_class(const FieldElem& v) {
  if (v.is_zero()) return {v, 0};
  const BetaField f = v.field();
  const long double lb = std::log(f.approx());
  int k = static_cast<int>(std::floor(std::log(std::fabs(v.approx())) / lb));
  FieldElem u = abs(v).times_beta_pow(-k);
  const FieldElem beta = f.beta();
  while (compare(u, f.one()) < 0) {
    u = u.times_beta_pow(1);
    --k;
  }
  while (compare(u, beta) >= 0) {
    u = u.times_beta_pow(-1);
    ++k;
  }
  if (sign(v) < 0) u = -u;
  return {u, k};
}

std::optional<int> equivalent_beta(const DigitWord& x, const DigitWord& y, const BetaField& f, int max_shift) {
  const FieldElem vx = value_beta(x, f), vy = value_beta(y, f);
  if (vx.is_zero() || vy.is_zero()) {
    if (vx.is_zero() && vy.is_zero()) return 0;
    return std::nullopt;
  }
  const ValueClass cx = value_class(vx), cy = value_class(vy);
  if (cx.canonical != cy.canonical) return std::nullopt;
  const int k = cx.exponent - cy.exponent;
  if (std::abs(k) > max_shift) return std::nullopt;
  return k;
}

Int value_u(const DigitWord& w, std::span<const Int> terms) {
  if (w.point) throw std::invalid_argument("integer value of a word with a point");
  const std::size_t n = w.size();
  if (n > terms.size()) throw std::out_of_range("word longer than available system terms");
  Int acc = 0;
  for (std::size_t j = 0; j < n; ++j) {
    Int t;
    if (__builtin_mul_overflow(static_cast<Int>(w.digits[j]), terms[n - 1 - j], &t) ||
        __builtin_add_overflow(acc, t, &acc))
      throw std::overflow_error("integer value overflow");
  }
  return acc;
}

DigitWord parse_word(std::string_view text) {
  DigitWord w;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c >= '0' && c <= '9') {
      w.digits.push_back(c - '0');
      ++i;
    } else if (c >= 'T' && c <= 'X') {
      w.digits.push_back(-(c - 'T' + 1));
      ++i;
    } else if (c == '.') {
      if (w.point) throw std::invalid_argument("more than one point in word");
      w.point = static_cast<int>(w.digits.size());
      ++i;
    } else if (c == '[') {
      const auto close = text.find(']', i);
      if (close == std::string_view::npos) throw std::invalid_argument("unterminated '[' in word");
      std::string inner(text.substr(i + 1, close - i - 1));
      // Accept the typographic minus sign U+2212.
      if (inner.rfind("\xE2\x88\x92", 0) == 0) inner = "-" + inner.substr(3);
      long long value = 0;
      const auto [ptr, ec] = std::from_chars(inner.data(), inner.data() + inner.size(), value);
      if (ec == std::errc::result_out_of_range || value > (1 << 30) || value < -(1 << 30))
        throw std::out_of_range("digit overflow in word");
      if (ec != std::errc() || ptr != inner.data() + inner.size() || inner.empty())
        throw std::invalid_argument("malformed digit escape '[" + inner + "]'");
      w.digits.push_back(static_cast<int>(value));
      i = close + 1;
    } else {
      throw std::invalid_argument(std::string("unexpected character '") + c + "' in word");
    }
  }
  return w;
}

std::string render_digits(std::span<const int> digits) {
  std::string s;
  for (int d : digits) {
    if (d >= 0 && d <= 9)
      s += static_cast<char>('0' + d);
    else if (d >= -5 && d <= -1)
      s += static_cast<char>('T' - d - 1);
    else
      s += "[" + std::to_string(d) + "]";
  }
  return s;
}

std::string render_word(const DigitWord& w) {
  if (!w.point) return render_digits(w.digits);
  const auto k = static_cast<std::size_t>(std::clamp(*w.point, 0, static_cast<int>(w.size())));
  return render_digits(std::span<const int>(w.digits).subspan(0, k)) + "." +
         render_digits(std::span<const int>(w.digits).subspan(k));
}

}  // namespace minweight
