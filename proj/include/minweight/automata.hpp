#pragma once

// Finite automata and letter-to-letter transducers over integer digit alphabets.
// Automata read words most significant digit first. Dfas are partial: a missing
// edge leads to an implicit dead state.

#include "json.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace minweight {

/// Digits ordered 0, 1, -1, 2, -2, ...; every traversal in this module follows
/// this order so outputs and counterexamples are deterministic.
int digit_order_key(int d);

struct Alphabet {
  std::vector<int> letters;

  Alphabet() = default;
  explicit Alphabet(std::vector<int> ls);
  /// All integers in [lo, hi].
  static Alphabet range(int lo, int hi);

  std::size_t size() const { return letters.size(); }
  int index_of(int letter) const;
  bool contains(int letter) const { return index_of(letter) >= 0; }
  bool operator==(const Alphabet&) const = default;
};

class Dfa {
 public:
  Dfa() = default;
  explicit Dfa(Alphabet alphabet);

  int add_state(bool terminal, std::string label = {});
  void set_initial(int s) { initial_ = s; }
  /// Letters are digits, not alphabet indices.
  void set_edge(int from, int letter, int to);
  int next(int state, int letter) const;
  int next_index(int state, int letter_index) const { return table_[state * alphabet_.size() + letter_index]; }

  int initial() const { return initial_; }
  int num_states() const { return static_cast<int>(terminal_.size()); }
  bool is_terminal(int s) const { return terminal_[s]; }
  void set_terminal(int s, bool t) { terminal_[s] = t; }
  const std::string& label(int s) const { return labels_[s]; }
  const Alphabet& alphabet() const { return alphabet_; }
  bool empty_language() const { return initial_ < 0; }

  /// State reached after `word`, or -1.
  int run(std::span<const int> word) const;
  bool accepts(std::span<const int> word) const;

 private:
  Alphabet alphabet_;
  std::vector<int> table_;
  std::vector<char> terminal_;
  std::vector<std::string> labels_;
  int initial_ = -1;
};

class Nfa {
 public:
  Nfa() = default;
  explicit Nfa(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

  int add_state(bool terminal, std::string label = {});
  void add_initial(int s) { initial_.push_back(s); }
  void add_edge(int from, int letter, int to);
  void set_terminal(int s, bool t) { terminal_[s] = t; }

  int num_states() const { return static_cast<int>(terminal_.size()); }
  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<int>& initial() const { return initial_; }
  bool is_terminal(int s) const { return terminal_[s]; }
  const std::string& label(int s) const { return labels_[s]; }
  /// (letter index, target) pairs.
  const std::vector<std::pair<int, int>>& edges(int s) const { return edges_[s]; }
  bool accepts(std::span<const int> word) const;

 private:
  Alphabet alphabet_;
  std::vector<std::vector<std::pair<int, int>>> edges_;
  std::vector<char> terminal_;
  std::vector<std::string> labels_;
  std::vector<int> initial_;
};

struct TransducerEdge {
  int from;
  int in;
  int out;
  int to;
  auto operator<=>(const TransducerEdge&) const = default;
};

class LetterTransducer {
 public:
  LetterTransducer() = default;
  LetterTransducer(Alphabet in, Alphabet out) : in_(std::move(in)), out_(std::move(out)) {}

  int add_state(std::string label = {});
  void add_edge(int from, int in, int out, int to) { edges_.push_back({from, in, out, to}); }
  void add_initial(int s) { initial_[s] = true; }
  void add_terminal(int s) { terminal_[s] = true; }

  int num_states() const { return static_cast<int>(labels_.size()); }
  const std::vector<TransducerEdge>& edges() const { return edges_; }
  bool is_initial(int s) const { return initial_[s]; }
  bool is_terminal(int s) const { return terminal_[s]; }
  const std::string& label(int s) const { return labels_[s]; }
  const Alphabet& input_alphabet() const { return in_; }
  const Alphabet& output_alphabet() const { return out_; }

  /// Projection of the edges on their input letters.
  Nfa input_automaton() const;
  /// Whether some path labelled (in|out) joins an initial and a terminal state.
  bool accepts(std::span<const int> in, std::span<const int> out) const;

 private:
  Alphabet in_, out_;
  std::vector<TransducerEdge> edges_;
  std::vector<char> initial_, terminal_;
  std::vector<std::string> labels_;
};

Dfa determinize(const Nfa& n);
/// Unique minimal trim Dfa, states numbered in breadth-first order.
Dfa minimize(const Dfa& d);
Dfa complement(const Dfa& d);
Dfa intersect(const Dfa& a, const Dfa& b);
Dfa all_words(const Alphabet& a);
/// Trie automaton of a finite word set.
Dfa finite_language(const Alphabet& a, const std::vector<std::vector<int>>& words);
Nfa to_nfa(const Dfa& d);

/// Minimal Dfa of A* \ A* H A*. Every state is terminal. If H holds the empty
/// word the result has no states (empty language).
Dfa factor_complement(const Nfa& h);
Dfa factor_complement(const Dfa& h);

struct LanguageComparison {
  bool holds = true;
  /// Shortest witness (in digit order) when the relation fails.
  std::optional<std::vector<int>> counterexample;
};
LanguageComparison language_equal(const Dfa& a, const Dfa& b);
/// L(a) subset of L(b).
LanguageComparison language_included(const Dfa& a, const Dfa& b);

std::string to_dot(const Dfa& d, const std::string& name = "M");
std::string to_dot(const LetterTransducer& t, const std::string& name = "T");
nlohmann::json to_json(const Dfa& d);
nlohmann::json to_json(const LetterTransducer& t);
Dfa dfa_from_json(const nlohmann::json& j);

/// All words of length <= max_len over the alphabet, shortest first.
std::vector<std::vector<int>> enumerate_words(const Alphabet& a, int max_len);

}  // namespace minweight
