#include "minweight/automata.hpp"

#include "minweight/words.hpp"

#include <boost/container_hash/hash.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace minweight {

int digit_order_key(int d) { return d > 0 ? 2 * d - 1 : -2 * d; }

Alphabet::Alphabet(std::vector<int> ls) : letters(std::move(ls)) {
  std::sort(letters.begin(), letters.end(),
            [](int a, int b) { return digit_order_key(a) < digit_order_key(b); });
  letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
}

Alphabet Alphabet::range(int lo, int hi) {
  std::vector<int> ls;
  for (int d = lo; d <= hi; ++d) ls.push_back(d);
  return Alphabet(std::move(ls));
}

int Alphabet::index_of(int letter) const {
  // Alphabets are tiny; a scan beats a map here.
  for (std::size_t i = 0; i < letters.size(); ++i)
    if (letters[i] == letter) return static_cast<int>(i);
  return -1;
}

// ---- Dfa

Dfa::Dfa(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

int Dfa::add_state(bool terminal, std::string label) {
  table_.insert(table_.end(), alphabet_.size(), -1);
  terminal_.push_back(terminal);
  labels_.push_back(std::move(label));
  return num_states() - 1;
}

void Dfa::set_edge(int from, int letter, int to) {
  const int li = alphabet_.index_of(letter);
  if (li < 0) throw std::invalid_argument("letter " + std::to_string(letter) + " outside alphabet");
  table_[from * alphabet_.size() + li] = to;
}

int Dfa::next(int state, int letter) const {
  const int li = alphabet_.index_of(letter);
  if (li < 0 || state < 0) return -1;
  return next_index(state, li);
}

int Dfa::run(std::span<const int> word) const {
  int s = initial_;
  for (int d : word) {
    if (s < 0) return -1;
    s = next(s, d);
  }
  return s;
}

bool Dfa::accepts(std::span<const int> word) const {
  const int s = run(word);
  return s >= 0 && is_terminal(s);
}

// ---- Nfa

int Nfa::add_state(bool terminal, std::string label) {
  edges_.emplace_back();
  terminal_.push_back(terminal);
  labels_.push_back(std::move(label));
  return num_states() - 1;
}

void Nfa::add_edge(int from, int letter, int to) {
  const int li = alphabet_.index_of(letter);
  if (li < 0) throw std::invalid_argument("letter " + std::to_string(letter) + " outside alphabet");
  edges_[from].emplace_back(li, to);
}

namespace {

using StateSet = std::vector<int>;

struct SetHash {
  std::size_t operator()(const StateSet& s) const { return boost::hash_range(s.begin(), s.end()); }
};

void normalize_set(StateSet& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

StateSet nfa_step(const Nfa& n, const StateSet& from, int li) {
  StateSet out;
  for (int s : from)
    for (auto [l, t] : n.edges(s))
      if (l == li) out.push_back(t);
  normalize_set(out);
  return out;
}

}  // namespace

bool Nfa::accepts(std::span<const int> word) const {
  StateSet cur = initial_;
  normalize_set(cur);
  for (int d : word) {
    const int li = alphabet_.index_of(d);
    if (li < 0) return false;
    cur = nfa_step(*this, cur, li);
    if (cur.empty()) return false;
  }
  return std::any_of(cur.begin(), cur.end(), [&](int s) { return terminal_[s]; });
}

// ---- LetterTransducer

int LetterTransducer::add_state(std::string label) {
  labels_.push_back(std::move(label));
  initial_.push_back(false);
  terminal_.push_back(false);
  return num_states() - 1;
}

Nfa LetterTransducer::input_automaton() const {
  Nfa n(in_);
  for (int s = 0; s < num_states(); ++s) {
    n.add_state(terminal_[s], labels_[s]);
    if (initial_[s]) n.add_initial(s);
  }
  for (const auto& e : edges_) n.add_edge(e.from, e.in, e.to);
  return n;
}

bool LetterTransducer::accepts(std::span<const int> in, std::span<const int> out) const {
  if (in.size() != out.size()) return false;
  std::vector<char> cur(initial_.begin(), initial_.end());
  for (std::size_t i = 0; i < in.size(); ++i) {
    std::vector<char> nxt(num_states(), 0);
    bool any = false;
    for (const auto& e : edges_)
      if (cur[e.from] && e.in == in[i] && e.out == out[i]) nxt[e.to] = any = true;
    if (!any) return false;
    cur = std::move(nxt);
  }
  for (int s = 0; s < num_states(); ++s)
    if (cur[s] && terminal_[s]) return true;
  return false;
}

// ---- algorithms

Dfa determinize(const Nfa& n) {
  Dfa d(n.alphabet());
  StateSet start = n.initial();
  normalize_set(start);
  if (start.empty()) return d;
  std::unordered_map<StateSet, int, SetHash> index;
  std::vector<StateSet> sets;
  auto intern = [&](StateSet s) {
    auto [it, fresh] = index.try_emplace(s, static_cast<int>(sets.size()));
    if (fresh) {
      const bool term = std::any_of(s.begin(), s.end(), [&](int q) { return n.is_terminal(q); });
      d.add_state(term);
      sets.push_back(std::move(s));
    }
    return it->second;
  };
  d.set_initial(intern(start));
  const int k = static_cast<int>(n.alphabet().size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (int li = 0; li < k; ++li) {
      StateSet t = nfa_step(n, sets[i], li);
      if (t.empty()) continue;
      const int ti = intern(std::move(t));
      d.set_edge(static_cast<int>(i), n.alphabet().letters[li], ti);
    }
  }
  return d;
}

Nfa to_nfa(const Dfa& d) {
  Nfa n(d.alphabet());
  for (int s = 0; s < d.num_states(); ++s) n.add_state(d.is_terminal(s), d.label(s));
  if (d.initial() >= 0) n.add_initial(d.initial());
  for (int s = 0; s < d.num_states(); ++s)
    for (std::size_t li = 0; li < d.alphabet().size(); ++li)
      if (int t = d.next_index(s, static_cast<int>(li)); t >= 0) n.add_edge(s, d.alphabet().letters[li], t);
  return n;
}

Dfa minimize(const Dfa& d) {
  const int n = d.num_states();
  const int k = static_cast<int>(d.alphabet().size());
  Dfa empty(d.alphabet());
  if (d.initial() < 0) return empty;

  // Trim: keep states both accessible and co-accessible.
  std::vector<char> acc(n, 0), coacc(n, 0);
  std::vector<int> stack{d.initial()};
  acc[d.initial()] = 1;
  std::vector<std::vector<int>> rev(n);
  while (!stack.empty()) {
    const int s = stack.back();
    stack.pop_back();
    for (int li = 0; li < k; ++li) {
      const int t = d.next_index(s, li);
      if (t < 0) continue;
      rev[t].push_back(s);
      if (!acc[t]) {
        acc[t] = 1;
        stack.push_back(t);
      }
    }
  }
  for (int s = 0; s < n; ++s)
    if (acc[s] && d.is_terminal(s)) {
      coacc[s] = 1;
      stack.push_back(s);
    }
  while (!stack.empty()) {
    const int s = stack.back();
    stack.pop_back();
    for (int p : rev[s])
      if (!coacc[p]) {
        coacc[p] = 1;
        stack.push_back(p);
      }
  }
  if (!coacc[d.initial()]) return empty;
  auto live = [&](int s) { return s >= 0 && acc[s] && coacc[s]; };

  // Moore refinement; the implicit dead state is class -1.
  std::vector<int> cls(n, -1);
  for (int s = 0; s < n; ++s)
    if (live(s)) cls[s] = d.is_terminal(s) ? 1 : 0;
  int num_classes = 0;
  for (;;) {
    std::unordered_map<std::vector<int>, int, SetHash> sig_index;
    std::vector<int> next_cls(n, -1);
    std::vector<int> sig(k + 1);
    for (int s = 0; s < n; ++s) {
      if (!live(s)) continue;
      sig[0] = cls[s];
      for (int li = 0; li < k; ++li) {
        const int t = d.next_index(s, li);
        sig[li + 1] = live(t) ? cls[t] : -1;
      }
      auto [it, fresh] = sig_index.try_emplace(sig, static_cast<int>(sig_index.size()));
      next_cls[s] = it->second;
    }
    const int count = static_cast<int>(sig_index.size());
    cls.swap(next_cls);
    if (count == num_classes) break;
    num_classes = count;
  }

  // Renumber classes breadth-first from the initial state, letters in digit order.
  std::vector<int> rep(num_classes, -1);
  for (int s = 0; s < n; ++s)
    if (live(s) && rep[cls[s]] < 0) rep[cls[s]] = s;
  std::vector<int> order(num_classes, -1);
  std::vector<int> queue{cls[d.initial()]};
  order[cls[d.initial()]] = 0;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const int s = rep[queue[qi]];
    for (int li = 0; li < k; ++li) {
      const int t = d.next_index(s, li);
      if (!live(t) || order[cls[t]] >= 0) continue;
      order[cls[t]] = static_cast<int>(queue.size());
      queue.push_back(cls[t]);
    }
  }
  Dfa m(d.alphabet());
  for (int c : queue) m.add_state(d.is_terminal(rep[c]), d.label(rep[c]));
  m.set_initial(0);
  for (int c : queue) {
    const int s = rep[c];
    for (int li = 0; li < k; ++li) {
      const int t = d.next_index(s, li);
      if (live(t)) m.set_edge(order[c], d.alphabet().letters[li], order[cls[t]]);
    }
  }
  return m;
}

Dfa all_words(const Alphabet& a) {
  Dfa d(a);
  d.add_state(true);
  d.set_initial(0);
  for (int l : a.letters) d.set_edge(0, l, 0);
  return d;
}

namespace {

// Same language with every transition defined (adds a sink if needed).
Dfa totalize(const Dfa& d) {
  Dfa t(d.alphabet());
  const int n = d.num_states();
  for (int s = 0; s < n; ++s) t.add_state(d.is_terminal(s), d.label(s));
  const int sink = t.add_state(false);
  t.set_initial(d.initial() >= 0 ? d.initial() : sink);
  for (int s = 0; s <= n; ++s)
    for (std::size_t li = 0; li < d.alphabet().size(); ++li) {
      const int to = s < n ? d.next_index(s, static_cast<int>(li)) : -1;
      t.set_edge(s, d.alphabet().letters[li], to >= 0 ? to : sink);
    }
  return t;
}

template <class Accept>
Dfa product(const Dfa& a, const Dfa& b, Accept accept) {
  if (!(a.alphabet() == b.alphabet())) throw std::invalid_argument("product of automata over different alphabets");
  const Dfa ta = totalize(a), tb = totalize(b);
  Dfa p(a.alphabet());
  std::map<std::pair<int, int>, int> index;
  std::vector<std::pair<int, int>> pairs;
  auto intern = [&](int x, int y) {
    auto [it, fresh] = index.try_emplace({x, y}, static_cast<int>(pairs.size()));
    if (fresh) {
      pairs.emplace_back(x, y);
      p.add_state(accept(ta.is_terminal(x), tb.is_terminal(y)));
    }
    return it->second;
  };
  p.set_initial(intern(ta.initial(), tb.initial()));
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t li = 0; li < a.alphabet().size(); ++li) {
      const auto [x, y] = pairs[i];
      const int to = intern(ta.next_index(x, static_cast<int>(li)), tb.next_index(y, static_cast<int>(li)));
      p.set_edge(static_cast<int>(i), a.alphabet().letters[li], to);
    }
  return p;
}

// Shortest accepted word, letters in digit order.
std::optional<std::vector<int>> shortest_word(const Dfa& d) {
  if (d.initial() < 0) return std::nullopt;
  const int n = d.num_states();
  std::vector<int> parent(n, -2), via(n, 0);
  std::deque<int> q{d.initial()};
  parent[d.initial()] = -1;
  while (!q.empty()) {
    const int s = q.front();
    q.pop_front();
    if (d.is_terminal(s)) {
      std::vector<int> w;
      for (int c = s; parent[c] >= 0; c = parent[c]) w.push_back(via[c]);
      std::reverse(w.begin(), w.end());
      return w;
    }
    for (std::size_t li = 0; li < d.alphabet().size(); ++li) {
      const int t = d.next_index(s, static_cast<int>(li));
      if (t < 0 || parent[t] != -2) continue;
      parent[t] = s;
      via[t] = d.alphabet().letters[li];
      q.push_back(t);
    }
  }
  return std::nullopt;
}

}  // namespace

Dfa complement(const Dfa& d) {
  Dfa t = totalize(d);
  for (int s = 0; s < t.num_states(); ++s) t.set_terminal(s, !t.is_terminal(s));
  return minimize(t);
}

Dfa intersect(const Dfa& a, const Dfa& b) {
  return minimize(product(a, b, [](bool x, bool y) { return x && y; }));
}

LanguageComparison language_equal(const Dfa& a, const Dfa& b) {
  auto w = shortest_word(product(a, b, [](bool x, bool y) { return x != y; }));
  return {!w.has_value(), w};
}

LanguageComparison language_included(const Dfa& a, const Dfa& b) {
  auto w = shortest_word(product(a, b, [](bool x, bool y) { return x && !y; }));
  return {!w.has_value(), w};
}

Dfa finite_language(const Alphabet& a, const std::vector<std::vector<int>>& words) {
  Dfa d(a);
  d.set_initial(d.add_state(false));
  for (const auto& w : words) {
    int s = 0;
    for (int l : w) {
      int t = d.next(s, l);
      if (t < 0) {
        t = d.add_state(false);
        d.set_edge(s, l, t);
      }
      s = t;
    }
    d.set_terminal(s, true);
  }
  return minimize(d);
}

Dfa factor_complement(const Nfa& h) {
  const Alphabet& a = h.alphabet();
  StateSet start = h.initial();
  normalize_set(start);
  auto hits = [&](const StateSet& s) {
    return std::any_of(s.begin(), s.end(), [&](int q) { return h.is_terminal(q); });
  };
  Dfa d(a);
  if (hits(start)) return d;
  // Subsets track every suffix that could still complete a factor in H.
  std::unordered_map<StateSet, int, SetHash> index;
  std::vector<StateSet> sets;
  auto intern = [&](StateSet s) {
    auto [it, fresh] = index.try_emplace(s, static_cast<int>(sets.size()));
    if (fresh) {
      d.add_state(true);
      sets.push_back(std::move(s));
    }
    return it->second;
  };
  d.set_initial(intern(start));
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t li = 0; li < a.size(); ++li) {
      StateSet t = nfa_step(h, sets[i], static_cast<int>(li));
      t.insert(t.end(), start.begin(), start.end());
      normalize_set(t);
      if (hits(t)) continue;
      const int ti = intern(std::move(t));
      d.set_edge(static_cast<int>(i), a.letters[li], ti);
    }
  }
  return minimize(d);
}

Dfa factor_complement(const Dfa& h) { return factor_complement(to_nfa(h)); }

// ---- output

namespace {

std::string dot_escape(const std::string& s) {
  std::string r;
  for (char c : s) {
    if (c == '"' || c == '\\') r += '\\';
    r += c;
  }
  return r;
}

std::string letter_text(int l) { return render_digits(std::span<const int>(&l, 1)); }

}  // namespace

std::string to_dot(const Dfa& d, const std::string& name) {
  std::ostringstream o;
  o << "digraph " << name << " {\n  rankdir=LR;\n";
  if (d.initial() >= 0) o << "  init [shape=point];\n  init -> " << d.initial() << ";\n";
  for (int s = 0; s < d.num_states(); ++s) {
    o << "  " << s << " [shape=" << (d.is_terminal(s) ? "doublecircle" : "circle");
    if (!d.label(s).empty()) o << " label=\"" << dot_escape(d.label(s)) << "\"";
    o << "];\n";
  }
  for (int s = 0; s < d.num_states(); ++s)
    for (std::size_t li = 0; li < d.alphabet().size(); ++li)
      if (int t = d.next_index(s, static_cast<int>(li)); t >= 0)
        o << "  " << s << " -> " << t << " [label=\"" << letter_text(d.alphabet().letters[li]) << "\"];\n";
  o << "}\n";
  return o.str();
}

std::string to_dot(const LetterTransducer& t, const std::string& name) {
  std::ostringstream o;
  o << "digraph " << name << " {\n  rankdir=LR;\n";
  for (int s = 0; s < t.num_states(); ++s) {
    if (t.is_initial(s)) o << "  init" << s << " [shape=point];\n  init" << s << " -> " << s << ";\n";
    o << "  " << s << " [shape=" << (t.is_terminal(s) ? "doublecircle" : "circle");
    if (!t.label(s).empty()) o << " label=\"" << dot_escape(t.label(s)) << "\"";
    o << "];\n";
  }
  for (const auto& e : t.edges())
    o << "  " << e.from << " -> " << e.to << " [label=\"" << letter_text(e.in) << "|" << letter_text(e.out)
      << "\"];\n";
  o << "}\n";
  return o.str();
}

nlohmann::json to_json(const Dfa& d) {
  nlohmann::json j;
  j["alphabet"] = d.alphabet().letters;
  j["initial"] = d.initial() >= 0 ? nlohmann::json(d.initial()) : nlohmann::json(nullptr);
  auto& states = j["states"] = nlohmann::json::array();
  for (int s = 0; s < d.num_states(); ++s)
    states.push_back({{"id", s}, {"terminal", d.is_terminal(s)}, {"label", d.label(s)}});
  auto& edges = j["edges"] = nlohmann::json::array();
  for (int s = 0; s < d.num_states(); ++s)
    for (std::size_t li = 0; li < d.alphabet().size(); ++li)
      if (int t = d.next_index(s, static_cast<int>(li)); t >= 0)
        edges.push_back({s, d.alphabet().letters[li], t});
  return j;
}

nlohmann::json to_json(const LetterTransducer& t) {
  nlohmann::json j;
  j["input_alphabet"] = t.input_alphabet().letters;
  j["output_alphabet"] = t.output_alphabet().letters;
  auto& states = j["states"] = nlohmann::json::array();
  for (int s = 0; s < t.num_states(); ++s)
    states.push_back(
        {{"id", s}, {"initial", t.is_initial(s)}, {"terminal", t.is_terminal(s)}, {"label", t.label(s)}});
  auto& edges = j["edges"] = nlohmann::json::array();
  for (const auto& e : t.edges()) edges.push_back({e.from, e.in, e.out, e.to});
  return j;
}

Dfa dfa_from_json(const nlohmann::json& j) {
  Dfa d(Alphabet(j.at("alphabet").get<std::vector<int>>()));
  const auto& states = j.at("states");
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (states[i].at("id").get<std::size_t>() != i) throw std::invalid_argument("state ids must be 0..n-1 in order");
    d.add_state(states[i].at("terminal").get<bool>(), states[i].value("label", std::string{}));
  }
  if (!j.at("initial").is_null()) d.set_initial(j.at("initial").get<int>());
  for (const auto& e : j.at("edges")) d.set_edge(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>());
  return d;
}

std::vector<std::vector<int>> enumerate_words(const Alphabet& a, int max_len) {
  std::vector<std::vector<int>> out{{}};
  std::size_t layer_begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    const std::size_t layer_end = out.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i)
      for (int l : a.letters) {
        auto w = out[i];
        w.push_back(l);
        out.push_back(std::move(w));
      }
    layer_begin = layer_end;
  }
  return out;
}

}  // namespace minweight
