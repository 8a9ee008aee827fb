#include "minweight/intsys.hpp"

#include <Eigen/Dense>

#include "minweight/minweight.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace minweight {

namespace {

using Wide = __int128;

DigitWord w(std::string_view s) { return parse_word(s); }

// Adds the opposites of every word.
std::vector<DigitWord> with_opposites(std::vector<DigitWord> ws) {
  const std::size_t n = ws.size();
  for (std::size_t i = 0; i < n; ++i) ws.push_back(negate(ws[i]));
  return ws;
}

std::vector<DigitWord> zeros_between(int kmax, bool both_signs) {
  std::vector<DigitWord> out;
  for (int k = 0; k <= kmax; ++k) {
    std::vector<int> d(k + 2, 0);
    d.front() = 1;
    d.back() = 1;
    out.emplace_back(d);
    if (both_signs) {
      d.back() = -1;
      out.emplace_back(d);
    }
  }
  return out;
}

std::string pow_str(char c, int k) { return std::string(static_cast<std::size_t>(k), c); }

// (y_1 ... y_k)^{j/k}: floor(j/k) copies followed by the first j mod k letters.
std::string frac_power(const std::string& period, int j) {
  const int k = static_cast<int>(period.size());
  std::string out;
  for (int i = 0; i < j / k; ++i) out += period;
  out += period.substr(0, static_cast<std::size_t>(j % k));
  return out;
}

std::string repeat(const std::string& s, int times) {
  std::string out;
  for (int i = 0; i < times; ++i) out += s;
  return out;
}

// Extremal words (g_{n+1}, G_n).
std::pair<std::string, std::string> extremal_words(int n, SystemKind k) {
  switch (k) {
    case SystemKind::F:
      return {"1" + frac_power("00T0", n), frac_power("1000", n)};
    case SystemKind::T:
      return {"1" + frac_power("0T0", n), frac_power("100", n)};
    case SystemKind::S: {
      const std::string gp = pow_str('0', 6) + "T0", Gp = "1" + pow_str('0', 7);
      switch (n % 8) {
        case 5:
          return {"1" + repeat(gp, n / 8) + "0000T", repeat(Gp, n / 8) + "10000"};
        case 6:
          return {"1" + repeat(gp, n / 8) + "00000T", repeat(Gp, n / 8) + "100000"};
        case 7:
          return {"1" + repeat(gp, n / 8) + "000000T", repeat(Gp, n / 8) + "1000001"};
        case 0:
          return {"1" + repeat(gp, n / 8), repeat(Gp, n / 8 - 1) + "10000001"};
        default:
          return {"1" + frac_power(gp, n), frac_power(Gp, n)};
      }
    }
  }
  throw std::logic_error("unknown system");
}

int index_of_system(SystemKind k) { return static_cast<int>(k); }

}  // namespace

NumerationSystem::NumerationSystem(SystemKind k, std::vector<Int> initial, std::vector<int> rec, int start)
    : kind_(k), start_(start), terms_(std::move(initial)) {
  for (;;) {
    const std::size_t n = terms_.size();
    Int next = 0;
    bool overflow = false;
    for (std::size_t i = 0; i < rec.size(); ++i) {
      Int t;
      overflow |= __builtin_mul_overflow(static_cast<Int>(rec[i]), terms_[n - 1 - i], &t);
      overflow |= __builtin_add_overflow(next, t, &next);
    }
    if (overflow) break;
    terms_.push_back(next);
  }
  switch (k) {
    case SystemKind::F:
      forbidden_ = with_opposites({w("11"), w("101"), w("1001"), w("1T"), w("10T")});
      break;
    case SystemKind::T:
      forbidden_ = with_opposites({w("11"), w("101"), w("1T")});
      break;
    case SystemKind::S:
      forbidden_ = zeros_between(5, true);
      forbidden_.push_back(w("10000001"));
      forbidden_ = with_opposites(forbidden_);
      exceptions_ = with_opposites({w("10000001"), w("1000001"), w("100000T"), w("10000T")});
      break;
  }
}

NumerationSystem NumerationSystem::fibonacci() { return {SystemKind::F, {1, 2}, {1, 1}, 2}; }
NumerationSystem NumerationSystem::tribonacci() { return {SystemKind::T, {1, 2, 4}, {1, 1, 1}, 3}; }
NumerationSystem NumerationSystem::smallest_pisot() { return {SystemKind::S, {1, 2, 3, 4}, {0, 1, 1}, 4}; }

NumerationSystem NumerationSystem::of(SystemKind k) {
  switch (k) {
    case SystemKind::F: return fibonacci();
    case SystemKind::T: return tribonacci();
    case SystemKind::S: return smallest_pisot();
  }
  throw std::logic_error("unknown system");
}

std::string NumerationSystem::name() const {
  switch (kind_) {
    case SystemKind::F: return "F";
    case SystemKind::T: return "T";
    case SystemKind::S: return "S";
  }
  return "?";
}

Base NumerationSystem::base() const {
  switch (kind_) {
    case SystemKind::F: return Base::golden;
    case SystemKind::T: return Base::tribonacci;
    case SystemKind::S: return Base::smallest_pisot;
  }
  throw std::logic_error("unknown system");
}

Int NumerationSystem::term(int n) const {
  if (n < 0 || n >= static_cast<int>(terms_.size())) throw std::out_of_range("system term index " + std::to_string(n));
  return terms_[n];
}

std::optional<SystemKind> parse_system(std::string_view name) {
  if (name == "F" || name == "f" || name == "fibonacci") return SystemKind::F;
  if (name == "T" || name == "t" || name == "tribonacci") return SystemKind::T;
  if (name == "S" || name == "s" || name == "smallest-pisot") return SystemKind::S;
  return std::nullopt;
}

DigitWord greedy_int(Int N, const NumerationSystem& sys) {
  if (N < 0) throw std::invalid_argument("greedy_int needs N >= 0");
  if (N == 0) return {};
  const auto t = sys.terms();
  int n = 0;
  while (n < static_cast<int>(t.size()) && t[n] <= N) ++n;
  if (n == static_cast<int>(t.size())) throw std::out_of_range("N beyond the available system terms");
  std::vector<int> d;
  for (int i = n - 1; i >= 0; --i) {
    if (t[i] <= N) {
      d.push_back(1);
      N -= t[i];
    } else {
      d.push_back(0);
    }
  }
  return DigitWord(std::move(d));
}

namespace {

// Dfa over {-1,0,1} following the last max|X|-1 letters. A state records
// whether a suffix exception ended on the previous letter, in which case no
// further letter may be read.
Dfa build_compliance(const NumerationSystem& sys) {
  std::size_t longest = 1;
  for (const auto& x : sys.forbidden()) longest = std::max(longest, x.size());
  const std::size_t keep = longest - 1;
  auto in_list = [](const std::vector<DigitWord>& list, std::span<const int> s) {
    return std::any_of(list.begin(), list.end(),
                       [&](const DigitWord& x) { return std::equal(x.digits.begin(), x.digits.end(), s.begin(), s.end()); });
  };

  const Alphabet a = Alphabet::range(-1, 1);
  using Key = std::pair<std::vector<int>, bool>;
  std::map<Key, int> index;
  std::vector<Key> keys;
  Dfa d(a);
  auto intern = [&](const Key& k) {
    auto [it, fresh] = index.try_emplace(k, static_cast<int>(keys.size()));
    if (fresh) {
      keys.push_back(k);
      d.add_state(true);
    }
    return it->second;
  };
  d.set_initial(intern({{}, false}));
  for (std::size_t i = 0; i < keys.size(); ++i) {
    const Key cur = keys[i];
    if (cur.second) continue;
    for (int x : a.letters) {
      std::vector<int> seq = cur.first;
      seq.push_back(x);
      bool dead = false, flagged = false;
      for (std::size_t len = 1; len <= seq.size() && !dead; ++len) {
        std::span<const int> suffix(seq.data() + seq.size() - len, len);
        if (!in_list(sys.forbidden(), suffix)) continue;
        if (in_list(sys.suffix_exceptions(), suffix))
          flagged = true;
        else
          dead = true;
      }
      if (dead) continue;
      if (seq.size() > keep) seq.erase(seq.begin(), seq.begin() + static_cast<long>(seq.size() - keep));
      d.set_edge(static_cast<int>(i), x, intern({seq, flagged}));
    }
  }
  return minimize(d);
}

// Value ranges of compliant completions: lo/hi[q][m] bound the values of the
// words v of length m with q.v terminal.
struct Ranges {
  std::vector<std::vector<Wide>> lo, hi;
  std::vector<std::vector<char>> ok;
};

Ranges build_ranges(const Dfa& c, std::span<const Int> terms) {
  const int nq = c.num_states();
  const int maxm = static_cast<int>(terms.size());
  Ranges r;
  r.lo.assign(maxm + 1, std::vector<Wide>(nq, 0));
  r.hi = r.lo;
  r.ok.assign(maxm + 1, std::vector<char>(nq, 0));
  for (int q = 0; q < nq; ++q) r.ok[0][q] = c.is_terminal(q);
  for (int m = 1; m <= maxm; ++m)
    for (int q = 0; q < nq; ++q)
      for (int x : c.alphabet().letters) {
        const int t = c.next(q, x);
        if (t < 0 || !r.ok[m - 1][t]) continue;
        const Wide base = static_cast<Wide>(x) * terms[m - 1];
        const Wide lo = base + r.lo[m - 1][t], hi = base + r.hi[m - 1][t];
        if (!r.ok[m][q]) {
          r.ok[m][q] = 1;
          r.lo[m][q] = lo;
          r.hi[m][q] = hi;
        } else {
          r.lo[m][q] = std::min(r.lo[m][q], lo);
          r.hi[m][q] = std::max(r.hi[m][q], hi);
        }
      }
  return r;
}

struct SystemCache {
  std::once_flag once;
  Dfa compliance;
  Ranges ranges;
};

SystemCache& cache_for(const NumerationSystem& sys) {
  static SystemCache caches[3];
  SystemCache& c = caches[index_of_system(sys.kind())];
  std::call_once(c.once, [&] {
    c.compliance = build_compliance(sys);
    c.ranges = build_ranges(c.compliance, sys.terms());
  });
  return c;
}

bool search(const Dfa& c, const Ranges& r, std::span<const Int> terms, int q, int m, Wide target,
            std::vector<int>& out) {
  if (m == 0) return target == 0 && c.is_terminal(q);
  for (int x : c.alphabet().letters) {
    const int t = c.next(q, x);
    if (t < 0 || !r.ok[m - 1][t]) continue;
    const Wide rest = target - static_cast<Wide>(x) * terms[m - 1];
    if (rest < r.lo[m - 1][t] || rest > r.hi[m - 1][t]) continue;
    out.push_back(x);
    if (search(c, r, terms, t, m - 1, rest, out)) return true;
    out.pop_back();
  }
  return false;
}

}  // namespace

const Dfa& compliance_automaton(const NumerationSystem& sys) { return cache_for(sys).compliance; }

BoundPair bounds_gG(int n, const NumerationSystem& sys) {
  if (n < 1) throw std::invalid_argument("bounds_gG needs n >= 1");
  BoundPair b;
  b.n = n;
  auto [gw, Gw] = extremal_words(n, sys.kind());
  b.g_next_word = parse_word(gw);
  b.G_word = parse_word(Gw);
  b.g_next = value_u(b.g_next_word, sys.terms());
  b.G = value_u(b.G_word, sys.terms());
  b.g = n == 1 ? 1 : value_u(parse_word(extremal_words(n - 1, sys.kind()).first), sys.terms());
  return b;
}

DigitWord unique_minform(Int N, const NumerationSystem& sys) {
  if (N == 0) return {};
  if (N < 0) return negate(unique_minform(-N, sys));
  const auto terms = sys.terms();
  int n = 1;
  while (bounds_gG(n, sys).G < N) ++n;
  if (n > 1 && bounds_gG(n - 1, sys).G >= N) throw std::logic_error("non-monotone G_n");
  const SystemCache& c = cache_for(sys);
  const int q0 = c.compliance.initial();
  const int q1 = c.compliance.next(q0, 1);
  std::vector<int> out{1};
  if (q1 < 0 || !search(c.compliance, c.ranges, terms, q1, n - 1, static_cast<Wide>(N) - terms[n - 1], out))
    throw std::logic_error("no compliant form of length " + std::to_string(n) + " for " + std::to_string(N));
  return DigitWord(std::move(out));
}

int int_min_weight(Int N, const NumerationSystem& sys) { return weight(unique_minform(N, sys)); }

IntValueTable::IntValueTable(const NumerationSystem& sys, int len) : len_(len) {
  if (len < 0) throw std::invalid_argument("negative length");
  if (len > static_cast<int>(sys.terms().size())) throw std::out_of_range("length beyond system terms");
  terms_.assign(sys.terms().begin(), sys.terms().begin() + len);
  best_.resize(len + 1);
  best_[0][0] = 0;
  for (int m = 1; m <= len; ++m) {
    auto& cur = best_[m];
    cur.reserve(best_[m - 1].size() * 3);
    for (const auto& [v, wt] : best_[m - 1])
      for (int x : {0, 1, -1}) {
        const Int nv = v + x * terms_[m - 1];
        const int nw = wt + (x != 0);
        auto [it, fresh] = cur.try_emplace(nv, nw);
        if (!fresh && nw < it->second) it->second = nw;
      }
    if (cur.size() > 50'000'000) throw std::runtime_error("integer value table too large");
  }
}

std::optional<IntValueTable::Entry> IntValueTable::find(Int value) const {
  auto it = best_[len_].find(value);
  if (it == best_[len_].end()) return std::nullopt;
  Entry e{it->second, {}};
  Int v = value;
  int wt = e.weight;
  for (int m = len_; m >= 1; --m)
    for (int x : {0, 1, -1}) {
      const Int rest = v - x * terms_[m - 1];
      auto jt = best_[m - 1].find(rest);
      if (jt == best_[m - 1].end() || jt->second + (x != 0) != wt) continue;
      if (x != 0 || !e.witness.empty()) e.witness.push_back(x);
      v = rest;
      wt = jt->second;
      break;
    }
  return e;
}

std::shared_ptr<const IntValueTable> int_value_table(const NumerationSystem& sys, int len) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const IntValueTable>> tables;
  std::lock_guard lock(mu);
  auto& slot = tables[{index_of_system(sys.kind()), len}];
  if (!slot) slot = std::make_shared<IntValueTable>(sys, len);
  return slot;
}

std::optional<DigitWord> int_heavy_oracle(const DigitWord& x, const NumerationSystem& sys, int slack) {
  if (slack < 0) throw std::invalid_argument("negative slack");
  const int len = static_cast<int>(x.size()) + slack;
  const Int v = value_u(x, sys.terms());
  const auto e = int_value_table(sys, len)->find(v);
  if (!e || e->weight >= weight(x)) return std::nullopt;
  return DigitWord(e->witness);
}

Dfa build_int_minweight_automaton_generic(const NumerationSystem& sys, int window, IntPipelineStats* stats) {
  const BetaField f = sys.field();
  const int d = f.degree();
  constexpr int B = 2;
  const auto terms = sys.terms();
  // V_i = U_{i+o} obeys the minimal-polynomial recurrence for every i >= 0, so
  // phi(sum c_i beta^i) = sum c_i V_i is well defined on Z[beta]. A word of length
  // n splits into a prefix of length n-o, tracked by its value t, and the last o
  // letters w: its integer value is phi(t) + sum w_i U_{o-i}.
  const int o = std::max(0, sys.recurrence_start() - d);
  auto phi = [&](const FieldElem& t) -> Wide {
    if (t.is_zero()) return 0;
    if (t.shift() != 0) throw std::logic_error("prefix value outside Z[beta]");
    Wide acc = 0;
    for (int i = 0; i < d; ++i) acc += static_cast<Wide>(t.coeffs()[i]) * terms[i + o];
    return acc;
  };

  // Bound on |t| for states that can still reach a zero integer value:
  // phi(t) = sum_r lambda_r t^(r) over the embeddings, the conjugates of t are
  // bounded, so lambda_1 t is too.
  const long double b = f.approx();
  Eigen::MatrixXcd V(d, d);
  Eigen::VectorXcd rhs(d);
  std::vector<std::complex<double>> roots{static_cast<double>(b)};
  for (const auto& c : f.conjugates()) roots.emplace_back(static_cast<double>(c.real()), static_cast<double>(c.imag()));
  for (int i = 0; i < d; ++i) {
    rhs(i) = static_cast<double>(terms[i + o]);
    for (int k = 0; k < d; ++k) V(i, k) = std::pow(roots[k], i);
  }
  const Eigen::VectorXcd lambda = V.fullPivLu().solve(rhs);
  long double tail = 0;
  for (int i = 0; i < o; ++i) tail += 2.0L * (B - 1) * terms[i];
  for (int k = 1; k < d; ++k)
    tail += std::abs(lambda(k)) * 2.0L * (B - 1) / (1.0L - f.conjugate_moduli_bounds()[k - 1]);
  const long double bound =
      std::max(2.0L * (B - 1) / (b - 1), tail / std::abs(lambda(0))) + 1.0L;

  // Prefix values reachable from 0 within the bound.
  std::vector<FieldElem> tv{f.zero()};
  std::unordered_map<FieldElem, int> tindex{{f.zero(), 0}};
  std::vector<std::array<int, 5>> tnext;
  const std::size_t max_states = max_states_from_env();
  for (std::size_t i = 0; i < tv.size(); ++i) {
    std::array<int, 5> nx{};
    const FieldElem bt = tv[i].times_beta_pow(1);
    for (int e = -2; e <= 2; ++e) {
      FieldElem t = bt + e;
      if (std::fabs(t.approx()) >= bound) {
        nx[e + 2] = -1;
        continue;
      }
      auto [it, fresh] = tindex.try_emplace(t, static_cast<int>(tv.size()));
      if (fresh) {
        if (tv.size() >= max_states) throw std::runtime_error("integer zero automaton exceeds the state limit");
        tv.push_back(t);
      }
      nx[e + 2] = it->second;
    }
    tnext.push_back(nx);
  }

  // Nodes (t, w), w holding up to o letters.
  using Node = std::pair<int, std::vector<int>>;
  std::map<Node, int> nindex;
  std::vector<Node> nodes;
  std::vector<std::array<int, 5>> nnext;
  auto intern = [&](const Node& n) {
    auto [it, fresh] = nindex.try_emplace(n, static_cast<int>(nodes.size()));
    if (fresh) nodes.push_back(n);
    return it->second;
  };
  intern({0, {}});
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    std::array<int, 5> nx{};
    for (int e = -2; e <= 2; ++e) {
      Node cur = nodes[i];
      if (static_cast<int>(cur.second.size()) < o) {
        cur.second.push_back(e);
      } else if (o == 0) {
        cur.first = tnext[cur.first][e + 2];
      } else {
        cur.first = tnext[cur.first][cur.second.front() + 2];
        cur.second.erase(cur.second.begin());
        cur.second.push_back(e);
      }
      nx[e + 2] = cur.first < 0 ? -1 : intern(cur);
    }
    nnext.push_back(nx);
  }
  const int nn = static_cast<int>(nodes.size());
  std::vector<char> zero(nn);
  for (int i = 0; i < nn; ++i) {
    Wide v = phi(tv[nodes[i].first]);
    const auto& ws = nodes[i].second;
    for (std::size_t j = 0; j < ws.size(); ++j) v += static_cast<Wide>(ws[j]) * terms[ws.size() - 1 - j];
    zero[i] = v == 0;
  }
  // Nodes from which a zero-valued node is reachable.
  std::vector<std::vector<int>> nrev(nn);
  for (int i = 0; i < nn; ++i)
    for (int t : nnext[i])
      if (t >= 0) nrev[t].push_back(i);
  std::vector<char> live(zero);
  {
    std::vector<int> st;
    for (int i = 0; i < nn; ++i)
      if (zero[i]) st.push_back(i);
    while (!st.empty()) {
      const int s = st.back();
      st.pop_back();
      for (int p : nrev[s])
        if (!live[p]) live[p] = 1, st.push_back(p);
    }
  }
  if (stats) stats->zero_states = static_cast<int>(std::count(live.begin(), live.end(), 1));

  // Product with the weight difference delta = ||y prefix|| - ||x prefix||.
  const int lo = -window - 2, hi = window, span_d = hi - lo + 1;
  auto pid = [&](int node, int delta) { return node * span_d + (delta - lo); };
  const int np = nn * span_d;
  auto step = [&](int p, int a, int bb) -> int {
    const int node = p / span_d, delta = p % span_d + lo;
    if (!live[node]) return -1;
    const int t = nnext[node][a - bb + 2];
    if (t < 0 || !live[t]) return -1;
    const int nd = std::max(lo, delta + std::abs(bb) - std::abs(a));
    return nd > hi ? -1 : pid(t, nd);
  };
  // Initial states: the input padded with leading zeros.
  std::vector<char> initial(np, 0);
  std::vector<int> init{pid(0, 0)};
  initial[init[0]] = 1;
  for (std::size_t i = 0; i < init.size(); ++i)
    for (int bb = -1; bb <= 1; ++bb) {
      const int t = step(init[i], 0, bb);
      if (t >= 0 && !initial[t]) initial[t] = 1, init.push_back(t);
    }

  // Inputs whose prefix x_1 ... x_{n-o} is not beta-minimal are heavy outright,
  // so the subset construction runs in product with M_beta. A state is the M_beta
  // state (or -1 once the input left M_beta), the number of letters read since
  // leaving, and the least delta of each live node (a smaller delta reaches every
  // terminal state a larger one does).
  const Alphabet digits = Alphabet::range(-1, 1);
  const Dfa& mb = base_minweight_automaton(sys.base());
  int product_states = 0;
  for (int p = 0; p < np; ++p) product_states += live[p / span_d] ? 1 : 0;
  if (stats) stats->transducer_states = product_states;

  struct State {
    int q;      // M_beta state, -1 after leaving
    int extra;  // letters read since leaving
    std::vector<std::pair<int, int>> nodes;  // (node, least delta), sorted
    bool operator<(const State& o) const { return std::tie(q, extra, nodes) < std::tie(o.q, o.extra, o.nodes); }
  };
  auto reduce = [&](const std::vector<int>& ps) {
    std::map<int, int> least;
    for (int p : ps) {
      auto [it, fresh] = least.try_emplace(p / span_d, p % span_d + lo);
      if (!fresh) it->second = std::min(it->second, p % span_d + lo);
    }
    return std::vector<std::pair<int, int>>(least.begin(), least.end());
  };
  Dfa h(digits);
  const int sink = h.add_state(true);
  for (int a : digits.letters) h.set_edge(sink, a, sink);
  std::map<State, int> sindex;
  std::vector<State> states;
  auto intern_state = [&](State st) {
    auto [it, fresh] = sindex.try_emplace(st, h.num_states());
    if (fresh) {
      if (states.size() >= max_states) throw std::runtime_error("heavy-word automaton exceeds the state limit");
      const bool acc = std::any_of(st.nodes.begin(), st.nodes.end(),
                                   [&](const auto& nd) { return zero[nd.first] && nd.second < 0; });
      h.add_state(acc);
      states.push_back(std::move(st));
    }
    return it->second;
  };
  h.set_initial(intern_state({mb.initial(), 0, reduce(init)}));
  for (std::size_t i = 0; i < states.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    for (int a : digits.letters) {
      State next;
      next.q = states[i].q < 0 ? -1 : mb.next(states[i].q, a);
      next.extra = states[i].q < 0 ? states[i].extra + 1 : 0;
      if (next.q < 0 && next.extra >= o) {
        h.set_edge(id, a, sink);
        continue;
      }
      std::vector<int> targets;
      for (auto [node, delta] : states[i].nodes)
        for (int bb = -1; bb <= 1; ++bb)
          if (const int t = step(pid(node, delta), a, bb); t >= 0) targets.push_back(t);
      next.nodes = reduce(targets);
      h.set_edge(id, a, intern_state(std::move(next)));
    }
  }
  const Dfa hm = minimize(h);
  if (stats) stats->heavy_states = hm.num_states();
  return minimize(complement(hm));
}

const Dfa& int_minweight_automaton(const NumerationSystem& sys) {
  if (sys.kind() == SystemKind::F) return base_minweight_automaton(Base::golden);
  static std::once_flag once[3];
  static Dfa built[3];
  const int i = index_of_system(sys.kind());
  std::call_once(once[i], [&] { built[i] = build_int_minweight_automaton_generic(sys); });
  return built[i];
}

}  // namespace minweight
