#include "minweight/expand.hpp"

#include "minweight/minweight.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace minweight {

BetaField field_of(Base b) {
  // Fields are immutable and cheap to share; build each once.
  static const std::array<BetaField, 3> fields = {BetaField::golden(), BetaField::tribonacci(),
                                                  BetaField::smallest_pisot()};
  return fields[static_cast<int>(b)];
}

std::string base_name(Base b) {
  switch (b) {
    case Base::golden:
      return "golden";
    case Base::tribonacci:
      return "tribonacci";
    case Base::smallest_pisot:
      return "smallest-pisot";
  }
  return "?";
}

std::optional<Base> parse_base(std::string_view name) {
  if (name == "golden") return Base::golden;
  if (name == "tribonacci") return Base::tribonacci;
  if (name == "smallest-pisot" || name == "smallest_pisot") return Base::smallest_pisot;
  return std::nullopt;
}

namespace {

// Pads so that the point lies inside the word.
DigitWord with_point(std::vector<int> digits, int point) {
  if (static_cast<int>(digits.size()) < point) digits.resize(point, 0);
  return DigitWord(std::move(digits), point);
}

}  // namespace

Expansion greedy_expand(const FieldElem& z, int max_len) {
  const int s = sign(z);
  if (s < 0) throw std::domain_error("greedy expansion of a negative value");
  if (s == 0) return {};
  const BetaField f = z.field();
  FieldElem r = z;
  int k = 0;
  while (compare(r, f.one()) >= 0) {
    r = r.times_beta_pow(-1);
    ++k;
  }
  std::vector<int> digits;
  while (!r.is_zero() && static_cast<int>(digits.size()) < max_len) {
    const FieldElem t = r.times_beta_pow(1);
    const Int d = floor_of(t);
    digits.push_back(static_cast<int>(d));
    r = t - d;
  }
  return {with_point(std::move(digits), k), !r.is_zero()};
}

// ---- tau specs

namespace {

std::vector<DigitWord> with_opposites(std::initializer_list<const char*> words) {
  std::vector<DigitWord> out;
  for (const char* w : words) out.push_back(parse_word(w));
  const std::size_t n = out.size();
  for (std::size_t i = 0; i < n; ++i) out.push_back(negate(out[i]));
  return out;
}

std::vector<DigitWord> smallest_pisot_forbidden(int long_last) {
  std::vector<DigitWord> out;
  std::vector<int> w{1, 0, 0, 0, 0, 0, 0, long_last};
  out.emplace_back(w);
  for (int k = 0; k <= 5; ++k)
    for (int last : {1, -1}) {
      std::vector<int> v(k + 2, 0);
      v.front() = 1;
      v.back() = last;
      out.emplace_back(v);
    }
  const std::size_t n = out.size();
  for (std::size_t i = 0; i < n; ++i) out.push_back(negate(out[i]));
  return out;
}

std::vector<TauSpec> make_specs() {
  std::vector<TauSpec> specs;
  {
    const BetaField f = field_of(Base::golden);
    const FieldElem b = f.beta(), b2 = b * b;
    specs.push_back({"golden", f, Ratio(b2, b2 + 1), Ratio(b2 + 1, b * 2),
                     with_opposites({"11", "101", "1001", "1T", "10T"})});
    specs.push_back({"golden-remark", f, Ratio(b, f.integer(2)), Ratio(f.one()),
                     with_opposites({"11", "101", "1T", "10T", "100T"})});
  }
  {
    const BetaField f = field_of(Base::tribonacci);
    const FieldElem b = f.beta(), b2 = b * b;
    specs.push_back({"tribonacci", f, Ratio(b, b + 1), Ratio(b + 1, f.integer(2)),
                     with_opposites({"11", "101", "1T"})});
    specs.push_back({"tribonacci-remark", f, Ratio(b, b2 - 1), Ratio(b2 - 1, f.integer(2)),
                     with_opposites({"11", "1T", "10T"})});
  }
  {
    const BetaField f = field_of(Base::smallest_pisot);
    const FieldElem b = f.beta(), b2 = b * b;
    specs.push_back({"smallest-pisot", f, Ratio(b2 * b, b2 + 1), Ratio(b2 + 1, b2 * 2), smallest_pisot_forbidden(1)});
    specs.push_back({"smallest-pisot-remark", f, Ratio(b2, f.integer(2)), Ratio(f.one(), b),
                     smallest_pisot_forbidden(-1)});
  }
  return specs;
}

}  // namespace

const std::vector<TauSpec>& builtin_tau_specs() {
  static const std::vector<TauSpec> specs = make_specs();
  return specs;
}

const TauSpec& main_tau_spec(Base b) { return builtin_tau_specs()[2 * static_cast<int>(b)]; }

const TauSpec* find_tau_spec(std::string_view name) {
  for (const auto& s : builtin_tau_specs())
    if (s.name == name) return &s;
  return nullptr;
}

DigitWord tau_expand(const FieldElem& z, const TauSpec& spec, int max_len, int extra_scale) {
  if (!(z.field() == spec.field)) throw std::invalid_argument("value and spec belong to different fields");
  if (z.is_zero()) return {};
  const Ratio lo = -spec.bound;
  FieldElem r = z;
  int k = 0;
  while (compare(r, lo) < 0 || compare(r, spec.bound) >= 0) {
    r = r.times_beta_pow(-1);
    ++k;
  }
  r = r.times_beta_pow(-extra_scale);
  k += extra_scale;
  std::vector<int> digits;
  while (!r.is_zero()) {
    if (static_cast<int>(digits.size()) >= max_len)
      throw std::runtime_error("tau orbit did not reach 0 within " + std::to_string(max_len) + " steps");
    const Int y = round_half_up(spec.slope, r);
    digits.push_back(static_cast<int>(y));
    r = r.times_beta_pow(1) - y;
  }
  return with_point(std::move(digits), k);
}

// ---- minimal words

const Dfa& base_minweight_automaton(Base b) {
  static std::mutex mu;
  static std::array<std::optional<Dfa>, 3> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[static_cast<int>(b)];
  if (!slot) slot = build_minweight_automaton(field_of(b), 2);
  return *slot;
}

DigitWord normalize_minweight(const DigitWord& x, Base b) {
  if (std::any_of(x.digits.begin(), x.digits.end(), [](int d) { return d < -1 || d > 1; }))
    throw std::invalid_argument("normalization expects digits in {-1,0,1}");
  if (!base_minweight_automaton(b).accepts(x.digits))
    throw std::invalid_argument("word " + render_word(x) + " is not of minimal weight");
  const BetaField f = field_of(b);
  const FieldElem z = value_beta(x, f);
  DigitWord y = tau_expand(z, main_tau_spec(b));
  if (weight(y) != weight(x) || value_beta(y, f) != z)
    throw std::logic_error("normalization changed the weight or the value of " + render_word(x));
  return y;
}

Ratio representable_bound(Base b) {
  const BetaField f = field_of(b);
  const FieldElem be = f.beta(), b2 = be * be;
  switch (b) {
    case Base::golden:  // .1(0100)^w
      return Ratio(be * 2, b2 + 1);
    case Base::tribonacci:  // .1(100)^w
      return Ratio(be * 2 + 1, b2 + be);
    case Base::smallest_pisot:  // .1(0^5 1 0^2)^w
      return Ratio(b2 + f.beta_pow(-1), b2 + 1);
  }
  throw std::logic_error("unknown base");
}

std::vector<int> golden_branching_digits(const FieldElem& r) {
  const BetaField f = r.field();
  const FieldElem b = f.beta(), den = b * b + 1;
  const Ratio c1(b, den), c2(f.integer(2), den), c3(b * 2, den);
  const int s = sign(r);
  const FieldElem a = abs(r);
  std::vector<int> out;
  if (compare(a, c3) >= 0) return out;
  if (compare(a, c2) > 0) {
    out = {s};
  } else if (compare(a, c2) == 0) {
    return out;
  } else if (compare(a, c1) > 0) {
    out = {0, s};
  } else if (compare(a, c1) == 0) {
    return out;
  } else {
    out = {0};
  }
  return out;
}

std::vector<DigitWord> enumerate_minimal(const FieldElem& z, Base b) {
  const BetaField f = field_of(b);
  if (!(z.field() == f)) throw std::invalid_argument("value belongs to a different field");
  if (z.is_zero()) return {DigitWord{}};
  const Ratio R = representable_bound(b);
  const Ratio negR = -R;
  auto inside = [&](const FieldElem& r) { return compare(r, R) < 0 && compare(r, negR) > 0; };

  // Scale into the representable interval, then leave room for words whose
  // leading digit sits a few positions higher.
  constexpr int kHeadroom = 8;
  FieldElem r0 = z;
  int k = 0;
  while (!inside(r0)) {
    r0 = r0.times_beta_pow(-1);
    ++k;
  }
  r0 = r0.times_beta_pow(-kHeadroom);
  k += kHeadroom;

  const Dfa& m = base_minweight_automaton(b);
  if (m.initial() < 0) return {};

  // Product of the automaton with the exact remainder r -> beta r - y.
  struct Node {
    int q;
    FieldElem r;
    std::vector<std::pair<int, int>> out;  // (digit, node)
  };
  std::vector<Node> nodes;
  std::unordered_map<FieldElem, std::unordered_map<int, int>> index;
  auto intern = [&](int q, const FieldElem& r) {
    auto [it, fresh] = index[r].try_emplace(q, static_cast<int>(nodes.size()));
    if (fresh) nodes.push_back({q, r, {}});
    return it->second;
  };
  intern(m.initial(), r0);
  const std::size_t cap = max_states_from_env();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].r.is_zero()) continue;  // a finished word; continuing can only add heavy tails
    if (nodes.size() > cap) throw std::runtime_error("enumeration product exceeds the state cap");
    const FieldElem br = nodes[i].r.times_beta_pow(1);
    for (int y : {0, 1, -1}) {
      const int q = m.next(nodes[i].q, y);
      if (q < 0) continue;
      FieldElem r = br - y;
      if (!inside(r)) continue;
      const int j = intern(q, r);
      nodes[i].out.emplace_back(y, j);
    }
  }

  const int n = static_cast<int>(nodes.size());
  std::vector<std::vector<int>> rev(n);
  for (int i = 0; i < n; ++i)
    for (auto [y, j] : nodes[i].out) rev[j].push_back(i);
  std::vector<char> good(n, 0);
  std::vector<int> stack;
  for (int i = 0; i < n; ++i)
    if (nodes[i].r.is_zero()) {
      good[i] = 1;
      stack.push_back(i);
    }
  while (!stack.empty()) {
    const int i = stack.back();
    stack.pop_back();
    for (int p : rev[i])
      if (!good[p]) {
        good[p] = 1;
        stack.push_back(p);
      }
  }

  std::vector<DigitWord> result;
  std::vector<int> path;
  std::vector<char> on_path(n, 0);
  std::function<void(int)> dfs = [&](int i) {
    if (nodes[i].r.is_zero()) {
      DigitWord w = with_point(path, k);
      while (w.point && *w.point > 0 && !w.digits.empty() && w.digits.front() == 0) {
        w.digits.erase(w.digits.begin());
        --*w.point;
      }
      while (w.digits.size() > static_cast<std::size_t>(*w.point) && w.digits.back() == 0) w.digits.pop_back();
      result.push_back(std::move(w));
      return;
    }
    if (on_path[i]) throw std::logic_error("infinitely many minimal expansions (cycle in enumeration)");
    on_path[i] = 1;
    for (auto [y, j] : nodes[i].out) {
      if (!good[j]) continue;
      path.push_back(y);
      dfs(j);
      path.pop_back();
    }
    on_path[i] = 0;
  };
  if (good[0]) dfs(0);
  std::sort(result.begin(), result.end(), [](const DigitWord& a, const DigitWord& c) {
    if (a.size() != c.size()) return a.size() < c.size();
    return std::lexicographical_compare(a.digits.begin(), a.digits.end(), c.digits.begin(), c.digits.end(),
                                        [](int x, int y) { return digit_order_key(x) < digit_order_key(y); });
  });
  return result;
}

}  // namespace minweight
