#pragma once

// Integer numeration systems tied to the three bases:
//   F: 1, 2, 3, 5, 8, ...         U_n = U_{n-1} + U_{n-2}           (n >= 2)
//   T: 1, 2, 4, 7, 13, ...        U_n = U_{n-1} + U_{n-2} + U_{n-3} (n >= 3)
//   S: 1, 2, 3, 4, 5, 7, 9, ...   U_n = U_{n-2} + U_{n-3}           (n >= 4)
// A word x_1 ... x_n has the integer value sum x_j U_{n-j}.

#include "minweight/automata.hpp"
#include "minweight/expand.hpp"
#include "minweight/words.hpp"

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace minweight {

enum class SystemKind { F, T, S };

class NumerationSystem {
 public:
  static NumerationSystem fibonacci();
  static NumerationSystem tribonacci();
  static NumerationSystem smallest_pisot();
  static NumerationSystem of(SystemKind k);

  SystemKind kind() const { return kind_; }
  std::string name() const;
  Base base() const;
  BetaField field() const { return field_of(base()); }
  /// First index from which the recurrence holds.
  int recurrence_start() const { return start_; }

  /// U_n; throws std::out_of_range past the last term that fits in 64 bits.
  Int term(int n) const;
  /// Every term that fits in 64 bits.
  std::span<const Int> terms() const { return terms_; }

  /// Forbidden factors of the unique minimal forms.
  const std::vector<DigitWord>& forbidden() const { return forbidden_; }
  /// Forbidden factors that are nevertheless allowed as a suffix (S only).
  const std::vector<DigitWord>& suffix_exceptions() const { return exceptions_; }

 private:
  NumerationSystem(SystemKind k, std::vector<Int> initial, std::vector<int> rec, int start);
  SystemKind kind_;
  int start_;
  std::vector<Int> terms_;
  std::vector<DigitWord> forbidden_, exceptions_;
};

std::optional<SystemKind> parse_system(std::string_view name);

/// Greedy representation of N >= 0 over {0,1}; empty for N = 0.
DigitWord greedy_int(Int N, const NumerationSystem& sys);

/// Words over {-1,0,1} that avoid the forbidden factors, the suffix exceptions
/// being allowed only at the very end.
const Dfa& compliance_automaton(const NumerationSystem& sys);

/// The unique compliant word with nonzero first digit and value N (empty for 0).
DigitWord unique_minform(Int N, const NumerationSystem& sys);

/// g = g_n and g_next = g_{n+1}: smallest positive values of compliant words of
/// length n (resp. n+1) starting with 1; G = G_n: the largest value of length n.
struct BoundPair {
  int n = 0;
  Int g = 0, g_next = 0, G = 0;
  DigitWord g_next_word, G_word;
};
/// Evaluates the closed-form extremal words; n >= 1.
BoundPair bounds_gG(int n, const NumerationSystem& sys);

int int_min_weight(Int N, const NumerationSystem& sys);

/// Lightest word over {-1,0,1} of each value among all words of length <= len.
class IntValueTable {
 public:
  struct Entry {
    int weight;
    std::vector<int> witness;  // no leading zeros
  };
  IntValueTable(const NumerationSystem& sys, int len);
  std::optional<Entry> find(Int value) const;
  int len() const { return len_; }
  std::size_t num_values() const { return best_.back().size(); }

 private:
  int len_;
  std::vector<Int> terms_;
  // best_[m][v]: least weight of a word of length exactly m (leading zeros
  // allowed) with value v.
  std::vector<std::unordered_map<Int, int>> best_;
};
std::shared_ptr<const IntValueTable> int_value_table(const NumerationSystem& sys, int len);

/// A word over {-1,0,1} of length <= len(x) + slack with the same value and a
/// smaller weight than x, or nothing.
std::optional<DigitWord> int_heavy_oracle(const DigitWord& x, const NumerationSystem& sys, int slack);

/// Minimal-weight words over {-1,0,1} for the system. F reuses the golden-ratio
/// automaton; T and S come from build_int_minweight_automaton_generic.
const Dfa& int_minweight_automaton(const NumerationSystem& sys);

struct IntPipelineStats {
  int zero_states = 0;        // integer-zero automaton after trimming
  int transducer_states = 0;  // delta-annotated, after trimming
  int heavy_states = 0;       // minimal Dfa of the heavy words
};

/// Redundancy-transducer pipeline for integer values: a pair (x, y) of words of
/// equal length is accepted when the digit differences have integer value 0 and
/// y is lighter, the running weight difference being kept in [-window-2, window]
/// (clamped from below, dropped above). Inputs may be padded with leading zeros
/// only. Inputs x whose prefix without its last o letters is not beta-minimal
/// count as heavy, o being the shift after which the terms follow the minimal
/// polynomial (0 for F and T, 1 for S). The result is the complement of the
/// heavy inputs.
Dfa build_int_minweight_automaton_generic(const NumerationSystem& sys, int window = 4,
                                          IntPipelineStats* stats = nullptr);

}  // namespace minweight
