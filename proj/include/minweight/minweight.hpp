#pragma once

// Minimal-weight recognizers for Pisot bases: the digit-set witness, the digit
// reduction algorithm, the zero automaton, the delta-bounded weight transducer
// and the resulting automaton of minimal-weight words. Also an exhaustive oracle
// that decides heaviness by grouping words into value classes.

#include "minweight/automata.hpp"
#include "minweight/words.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

namespace minweight {

/// B ~ b with ||b|| <= B and b over {1-B, ..., B-1}. The word carries its point:
/// b = b_{-k} ... b_0 . b_1 ... b_d with value_beta(b) == B exactly.
struct DigitSetWitness {
  int B = 0;
  DigitWord b;
  int k = 0;
};

/// Shortest witness (ties broken by digit order) among words of length <= max_len.
std::optional<DigitSetWitness> find_witness(const BetaField& f, int B, int max_len);

/// Rewrites the rightmost digit with |x_j| >= B using the witness until every digit
/// lies in {1-B, ..., B-1}. The result has the same value as x (point included)
/// and no larger weight. Throws std::runtime_error past max_iterations.
DigitWord reduce_digits(const DigitWord& x, const BetaField& f, const DigitSetWitness& w,
                        long max_iterations = 1'000'000);

/// MINWEIGHT_MAX_STATES if set, otherwise 100000.
std::size_t max_states_from_env();

/// Automaton of the words over {2(1-B), ..., 2(B-1)} with value 0.
struct ZeroAutomaton {
  int B = 0;
  Dfa dfa;
  std::vector<FieldElem> states;  // value s of each Dfa state; state 0 is s = 0
};
ZeroAutomaton build_zero_automaton(const BetaField& f, int B, std::size_t max_states = max_states_from_env());

/// Weight of the greedy expansion of |s|. Throws std::runtime_error when the
/// expansion is not finite within max_len digits.
int state_weight(const FieldElem& s, int max_len = 256);

struct WeightState {
  int s;  // index into ZeroAutomaton::states
  int delta;
};

/// How w_s is chosen: the greedy expansion of |s|, or the forbidden-factor-free
/// expansion of s from the base's tau transformation (signed digits, B = 2, the
/// three built-in fields only).
enum class StateExpansion { greedy, tau };

struct WeightTransducer {
  ZeroAutomaton zero;
  std::vector<int> w;  // w_s per zero-automaton state
  int W = 0;
  LetterTransducer transducer;      // trimmed
  std::vector<WeightState> states;  // per transducer state
  // Sizes before trimming: the whole delta window, the part reachable from the
  // initial states, and the part that reaches a terminal state.
  int window_states = 0, accessible_states = 0, coaccessible_states = 0;
};
WeightTransducer build_weight_transducer(const BetaField& f, int B, std::size_t max_states = max_states_from_env(),
                                         StateExpansion expansion = StateExpansion::greedy);

/// Minimal-weight words over {1-B, ..., B-1}.
Dfa build_minweight_automaton(const BetaField& f, int B, std::size_t max_states = max_states_from_env());

/// Union of the languages prefix (period)* suffix, as an Nfa.
struct StarPattern {
  std::vector<int> prefix, period, suffix;
};
Nfa star_patterns_nfa(const Alphabet& a, const std::vector<StarPattern>& parts);

/// The golden-ratio heavy set
///   1(0100)*1, 1(0100)*0101, 1(00T0)*T, 1(00T0)*0T and their opposites.
Nfa golden_heavy_patterns();
Dfa golden_explicit_M();

/// Lightest known representatives of the value classes of stripped words of
/// length <= max_len and weight <= max_weight over {1-B, ..., B-1}. Each class
/// keeps its length/weight Pareto frontier so that shorter horizons can be
/// queried from the same table.
class ClassTable {
 public:
  struct Item {
    int len;
    int weight;
    std::vector<int> witness;
  };

  ClassTable(const BetaField& f, int B, int max_len, int max_weight);

  /// Lightest item of the class of v (v != 0) among words of length <= len, or nullptr.
  const Item* best(const FieldElem& v, int len) const;
  const Item* best(const FieldElem& v) const { return best(v, max_len_); }
  std::size_t num_classes() const { return table_.size(); }
  int B() const { return B_; }
  int max_len() const { return max_len_; }
  int max_weight() const { return max_weight_; }
  const BetaField& field() const { return field_; }

 private:
  BetaField field_;
  int B_, max_len_, max_weight_;
  std::unordered_map<FieldElem, std::vector<Item>> table_;
};

/// Shared, memoized table (thread-safe).
std::shared_ptr<const ClassTable> class_table(const BetaField& f, int B, int max_len, int max_weight);

/// A stripped word y over {1-B, ..., B-1} with y ~ x, len(y) <= len(strip(x)) + slack
/// and ||y|| < ||x||, or nothing when no such word exists within that horizon.
std::optional<DigitWord> is_heavy_oracle(const DigitWord& x, const BetaField& f, int B, int slack);

}  // namespace minweight
