#include "minweight/minweight.hpp"

#include "minweight/expand.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>

namespace minweight {

namespace {

int sgn(long v) { return (v > 0) - (v < 0); }

Alphabet digit_alphabet(int B) { return Alphabet::range(1 - B, B - 1); }

// Word whose digit at index j (weight beta^-j) is digits[j]; covers indices 0 and 1
// so the point lands inside the word.
DigitWord from_indexed(const std::map<long, long>& digits) {
  if (digits.empty()) return {};
  long a = std::min(digits.begin()->first, 1L);
  long c = std::max(digits.rbegin()->first, 0L);
  DigitWord w;
  for (long j = a; j <= c; ++j) {
    auto it = digits.find(j);
    w.digits.push_back(it == digits.end() ? 0 : static_cast<int>(it->second));
  }
  w.point = static_cast<int>(1 - a);
  return w;
}

}  // namespace

// ---- witness and digit reduction

std::optional<DigitSetWitness> find_witness(const BetaField& f, int B, int max_len) {
  if (B < 2) throw std::invalid_argument("find_witness needs B >= 2");
  const Alphabet a = digit_alphabet(B);
  const ValueClass target = value_class(f.integer(B));
  std::vector<int> word;
  std::optional<DigitSetWitness> found;

  std::function<void(int, int, const FieldElem&)> rec = [&](int len, int wt, const FieldElem& v) {
    if (found) return;
    if (static_cast<int>(word.size()) == len) {
      if (word.back() == 0) return;
      const ValueClass c = value_class(v);
      if (c.canonical != target.canonical) return;
      // value(word) = B beta^m, so the point goes m digits left of the end.
      const int m = c.exponent - target.exponent;
      int p = len - m;
      DigitWord b(word);
      if (p < 1) {
        b.digits.insert(b.digits.begin(), 1 - p, 0);
        p = 1;
      }
      if (p > static_cast<int>(b.size())) b.digits.resize(p, 0);
      b.point = p;
      found = DigitSetWitness{B, b, p - 1};
      return;
    }
    for (int d : a.letters) {
      if (word.empty() && d == 0) continue;
      if (wt + std::abs(d) > B) continue;
      word.push_back(d);
      rec(len, wt + std::abs(d), v.times_beta_pow(1) + d);
      word.pop_back();
      if (found) return;
    }
  };
  for (int len = 1; len <= max_len && !found; ++len) rec(len, 0, f.zero());
  return found;
}

DigitWord reduce_digits(const DigitWord& x, const BetaField& f, const DigitSetWitness& w, long max_iterations) {
  (void)f;
  const int B = w.B;
  if (std::all_of(x.digits.begin(), x.digits.end(), [&](int d) { return std::abs(d) < B; })) return x;

  std::map<long, long> digits;
  const long p = x.point.value_or(static_cast<int>(x.size()));
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x.digits[i] != 0) digits[static_cast<long>(i) + 1 - p] = x.digits[i];
  std::vector<std::pair<long, long>> rel;  // index offset j -> b_j, with b_0 - B at offset 0
  for (std::size_t t = 0; t < w.b.size(); ++t) {
    const long j = static_cast<long>(t) - w.k;
    const long bj = w.b.digits[t] - (j == 0 ? B : 0);
    if (bj != 0) rel.emplace_back(j, bj);
  }

  for (long it = 0;; ++it) {
    auto h = std::find_if(digits.rbegin(), digits.rend(), [&](const auto& e) { return std::labs(e.second) >= B; });
    if (h == digits.rend()) break;
    if (it >= max_iterations) throw std::runtime_error("digit reduction did not terminate");
    const long hi = h->first;
    const long s = sgn(h->second);
    for (auto [j, bj] : rel) {
      long& d = digits[hi + j];
      d += s * bj;
      if (d == 0) digits.erase(hi + j);
    }
  }
  return from_indexed(digits);
}

// ---- zero automaton

std::size_t max_states_from_env() {
  if (const char* env = std::getenv("MINWEIGHT_MAX_STATES")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 100000;
}

ZeroAutomaton build_zero_automaton(const BetaField& f, int B, std::size_t max_states) {
  if (B < 2) throw std::invalid_argument("zero automaton needs B >= 2");
  const Alphabet diffs = Alphabet::range(2 * (1 - B), 2 * (B - 1));
  const Ratio bound(f.integer(2 * (B - 1)), f.beta() - 1);
  const Ratio neg_bound = -bound;

  std::vector<FieldElem> values{f.zero()};
  std::unordered_map<FieldElem, int> index{{f.zero(), 0}};
  std::vector<std::vector<std::pair<int, int>>> edges(1);  // (letter, target)
  for (std::size_t i = 0; i < values.size(); ++i) {
    const FieldElem bs = values[i].times_beta_pow(1);
    for (int e : diffs.letters) {
      FieldElem t = bs + e;
      if (compare(t, bound) >= 0 || compare(t, neg_bound) <= 0) continue;
      auto [it, fresh] = index.try_emplace(t, static_cast<int>(values.size()));
      if (fresh) {
        if (values.size() >= max_states)
          throw std::runtime_error("zero automaton exceeds " + std::to_string(max_states) + " states");
        values.push_back(t);
        edges.emplace_back();
      }
      edges[i].emplace_back(e, it->second);
    }
  }

  // Keep the states from which 0 is reachable.
  const int n = static_cast<int>(values.size());
  std::vector<std::vector<int>> rev(n);
  for (int i = 0; i < n; ++i)
    for (auto [e, t] : edges[i]) rev[t].push_back(i);
  std::vector<char> live(n, 0);
  std::vector<int> stack{0};
  live[0] = 1;
  while (!stack.empty()) {
    const int s = stack.back();
    stack.pop_back();
    for (int p : rev[s])
      if (!live[p]) {
        live[p] = 1;
        stack.push_back(p);
      }
  }
  std::vector<int> order(n, -1), queue{0};
  order[0] = 0;
  for (std::size_t qi = 0; qi < queue.size(); ++qi)
    for (auto [e, t] : edges[queue[qi]])
      if (live[t] && order[t] < 0) {
        order[t] = static_cast<int>(queue.size());
        queue.push_back(t);
      }

  ZeroAutomaton z{B, Dfa(diffs), {}};
  for (int s : queue) {
    z.dfa.add_state(s == 0, values[s].to_string());
    z.states.push_back(values[s]);
  }
  z.dfa.set_initial(0);
  for (int s : queue)
    for (auto [e, t] : edges[s])
      if (live[t]) z.dfa.set_edge(order[s], e, order[t]);
  return z;
}

int state_weight(const FieldElem& s, int max_len) {
  if (s.is_zero()) return 0;
  const Expansion e = greedy_expand(abs(s), max_len);
  if (e.truncated) throw std::runtime_error("greedy expansion of a zero-automaton state is not finite");
  return weight(e.word);
}

// ---- weight transducer

WeightTransducer build_weight_transducer(const BetaField& f, int B, std::size_t max_states,
                                         StateExpansion expansion) {
  WeightTransducer out;
  out.zero = build_zero_automaton(f, B, max_states);
  const ZeroAutomaton& z = out.zero;
  const int ns = static_cast<int>(z.states.size());
  if (expansion == StateExpansion::tau) {
    const auto& specs = builtin_tau_specs();
    auto spec = std::find_if(specs.begin(), specs.end(), [&](const TauSpec& t) { return t.field == f; });
    if (spec == specs.end() || B != 2) throw std::invalid_argument("tau state weights need a built-in base and B = 2");
    for (const auto& s : z.states) out.w.push_back(weight(tau_expand(s, *spec)));
  } else {
    for (const auto& s : z.states) out.w.push_back(state_weight(s));
  }
  out.W = *std::max_element(out.w.begin(), out.w.end());

  // Full window graph: delta in [lo, w_s].
  const int lo = -out.W - B + 1;
  std::vector<int> offset(ns + 1, 0);
  for (int i = 0; i < ns; ++i) offset[i + 1] = offset[i] + (out.w[i] - lo + 1);
  const int total = offset[ns];
  if (static_cast<std::size_t>(total) > max_states)
    throw std::runtime_error("weight transducer exceeds " + std::to_string(max_states) + " states");
  auto id = [&](int s, int delta) { return offset[s] + (delta - lo); };

  const Alphabet a = digit_alphabet(B);
  struct Edge {
    int in, out, to;
  };
  std::vector<std::vector<Edge>> g(total);
  std::vector<WeightState> ws(total);
  for (int s = 0; s < ns; ++s)
    for (int delta = lo; delta <= out.w[s]; ++delta) {
      const int from = id(s, delta);
      ws[from] = {s, delta};
      for (int x : a.letters)
        for (int y : a.letters) {
          const int t = z.dfa.next(s, x - y);
          if (t < 0) continue;
          const int nd = delta + std::abs(y) - std::abs(x);
          if (nd < lo || nd > out.w[t]) continue;
          g[from].push_back({x, y, id(t, nd)});
        }
    }

  // Extra initial states: 0*-input paths from (0,0). Extra terminal states:
  // 0*-input paths to (0, delta < 0).
  std::vector<char> initial(total, 0), terminal(total, 0);
  std::vector<int> init_order{id(0, 0)};
  initial[id(0, 0)] = 1;
  for (std::size_t qi = 0; qi < init_order.size(); ++qi)
    for (const auto& e : g[init_order[qi]])
      if (e.in == 0 && !initial[e.to]) {
        initial[e.to] = 1;
        init_order.push_back(e.to);
      }
  std::vector<std::vector<int>> rev(total), rev0(total);
  for (int u = 0; u < total; ++u)
    for (const auto& e : g[u]) {
      rev[e.to].push_back(u);
      if (e.in == 0) rev0[e.to].push_back(u);
    }
  std::vector<int> stack;
  for (int delta = lo; delta < 0; ++delta) {
    terminal[id(0, delta)] = 1;
    stack.push_back(id(0, delta));
  }
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int p : rev0[u])
      if (!terminal[p]) {
        terminal[p] = 1;
        stack.push_back(p);
      }
  }

  // Trim, numbering states breadth-first from the initial ones.
  std::vector<char> coacc(terminal);
  for (int u = 0; u < total; ++u)
    if (terminal[u]) stack.push_back(u);
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int p : rev[u])
      if (!coacc[p]) {
        coacc[p] = 1;
        stack.push_back(p);
      }
  }
  out.window_states = total;
  {
    std::vector<char> acc(total, 0);
    std::vector<int> q(init_order);
    for (int u : q) acc[u] = 1;
    for (std::size_t qi = 0; qi < q.size(); ++qi)
      for (const auto& e : g[q[qi]])
        if (!acc[e.to]) {
          acc[e.to] = 1;
          q.push_back(e.to);
        }
    out.accessible_states = static_cast<int>(q.size());
    out.coaccessible_states = static_cast<int>(std::count(coacc.begin(), coacc.end(), 1));
  }
  std::vector<int> order(total, -1), queue;
  for (int u : init_order)
    if (coacc[u]) {
      order[u] = static_cast<int>(queue.size());
      queue.push_back(u);
    }
  for (std::size_t qi = 0; qi < queue.size(); ++qi)
    for (const auto& e : g[queue[qi]])
      if (coacc[e.to] && order[e.to] < 0) {
        order[e.to] = static_cast<int>(queue.size());
        queue.push_back(e.to);
      }

  out.transducer = LetterTransducer(a, a);
  for (int u : queue) {
    const int q = out.transducer.add_state("(" + z.dfa.label(ws[u].s) + ", " + std::to_string(ws[u].delta) + ")");
    if (initial[u]) out.transducer.add_initial(q);
    if (terminal[u]) out.transducer.add_terminal(q);
    out.states.push_back(ws[u]);
  }
  for (int u : queue)
    for (const auto& e : g[u])
      if (order[e.to] >= 0) out.transducer.add_edge(order[u], e.in, e.out, order[e.to]);
  return out;
}

Dfa build_minweight_automaton(const BetaField& f, int B, std::size_t max_states) {
  const WeightTransducer t = build_weight_transducer(f, B, max_states);
  return factor_complement(t.transducer.input_automaton());
}

// ---- explicit golden-ratio construction

Nfa star_patterns_nfa(const Alphabet& a, const std::vector<StarPattern>& parts) {
  Nfa n(a);
  for (const auto& p : parts) {
    int cur = n.add_state(false);
    n.add_initial(cur);
    for (int d : p.prefix) {
      const int nx = n.add_state(false);
      n.add_edge(cur, d, nx);
      cur = nx;
    }
    const int hub = cur;
    for (std::size_t i = 0; i < p.period.size(); ++i) {
      const int nx = i + 1 == p.period.size() ? hub : n.add_state(false);
      n.add_edge(cur, p.period[i], nx);
      cur = nx;
    }
    cur = hub;
    for (int d : p.suffix) {
      const int nx = n.add_state(false);
      n.add_edge(cur, d, nx);
      cur = nx;
    }
    n.set_terminal(cur, true);
  }
  return n;
}

Nfa golden_heavy_patterns() {
  std::vector<StarPattern> parts = {
      {{1}, {0, 1, 0, 0}, {1}},
      {{1}, {0, 1, 0, 0}, {0, 1, 0, 1}},
      {{1}, {0, 0, -1, 0}, {-1}},
      {{1}, {0, 0, -1, 0}, {0, -1}},
  };
  const std::size_t n = parts.size();
  for (std::size_t i = 0; i < n; ++i) {
    StarPattern p = parts[i];
    for (auto* v : {&p.prefix, &p.period, &p.suffix})
      for (int& d : *v) d = -d;
    parts.push_back(p);
  }
  return star_patterns_nfa(Alphabet::range(-1, 1), parts);
}

Dfa golden_explicit_M() { return factor_complement(golden_heavy_patterns()); }

// ---- exhaustive oracle

ClassTable::ClassTable(const BetaField& f, int B, int max_len, int max_weight)
    : field_(f), B_(B), max_len_(max_len), max_weight_(max_weight) {
  const Alphabet a = digit_alphabet(B);
  std::vector<int> word;
  auto record = [&](const FieldElem& v) {
    const int len = static_cast<int>(word.size());
    const int wt = weight(std::span<const int>(word));
    auto& items = table_[value_class(v).canonical];
    for (const auto& it : items)
      if (it.len <= len && it.weight <= wt) return;
    std::erase_if(items, [&](const Item& it) { return it.len >= len && it.weight >= wt; });
    auto pos = std::find_if(items.begin(), items.end(), [&](const Item& it) { return it.len > len; });
    items.insert(pos, Item{len, wt, word});
  };
  std::function<void(int, const FieldElem&)> rec = [&](int wt, const FieldElem& v) {
    if (word.back() != 0) record(v);
    if (static_cast<int>(word.size()) == max_len) return;
    const FieldElem bv = v.times_beta_pow(1);
    for (int d : a.letters) {
      if (wt + std::abs(d) > max_weight) continue;
      word.push_back(d);
      rec(wt + std::abs(d), bv + d);
      word.pop_back();
    }
  };
  for (int d : a.letters) {
    if (d == 0 || std::abs(d) > max_weight) continue;
    word.assign(1, d);
    rec(std::abs(d), f.integer(d));
  }
}

const ClassTable::Item* ClassTable::best(const FieldElem& v, int len) const {
  auto it = table_.find(value_class(v).canonical);
  if (it == table_.end()) return nullptr;
  const Item* r = nullptr;
  for (const auto& item : it->second) {
    if (item.len > len) break;
    r = &item;
  }
  return r;
}

namespace {

struct TableCache {
  std::mutex mu;
  std::map<std::tuple<std::vector<Int>, int, int, int>, std::shared_ptr<const ClassTable>> tables;
};

TableCache& table_cache() {
  static TableCache c;
  return c;
}

}  // namespace

std::shared_ptr<const ClassTable> class_table(const BetaField& f, int B, int max_len, int max_weight) {
  auto& c = table_cache();
  std::lock_guard lock(c.mu);
  auto& slot = c.tables[{f.min_poly(), B, max_len, max_weight}];
  if (!slot) slot = std::make_shared<const ClassTable>(f, B, max_len, max_weight);
  return slot;
}

std::optional<DigitWord> is_heavy_oracle(const DigitWord& x, const BetaField& f, int B, int slack) {
  if (slack < 0) throw std::invalid_argument("slack must be non-negative");
  const DigitWord sx = strip(x);
  const int wt = weight(sx);
  const FieldElem v = value_beta(std::span<const int>(sx.digits), f);
  if (v.is_zero()) return wt > 0 ? std::optional<DigitWord>(DigitWord{}) : std::nullopt;
  if (wt <= 1) return std::nullopt;
  const int horizon = static_cast<int>(sx.size()) + slack;
  if (horizon > 40) throw std::invalid_argument("oracle horizon too large");

  // Any cached table with a long enough horizon can answer a positive query; a
  // negative answer needs every word of weight < wt to have been enumerated.
  std::vector<std::shared_ptr<const ClassTable>> candidates;
  {
    auto& c = table_cache();
    std::lock_guard lock(c.mu);
    for (const auto& [key, t] : c.tables)
      if (std::get<0>(key) == f.min_poly() && std::get<1>(key) == B && std::get<2>(key) >= horizon)
        candidates.push_back(t);
  }
  for (const auto& t : candidates) {
    const ClassTable::Item* it = t->best(v, horizon);
    if (it && it->weight < wt) return DigitWord(it->witness);
    if (t->max_weight() >= wt - 1) return std::nullopt;
  }
  const auto t = class_table(f, B, horizon, wt - 1);
  const ClassTable::Item* it = t->best(v, horizon);
  if (it && it->weight < wt) return DigitWord(it->witness);
  return std::nullopt;
}

}  // namespace minweight
