#pragma once

// Expansion generators: greedy beta-expansions, the NAF-like tau transformations
// of the three studied bases, normalization of minimal-weight words to their
// forbidden-factor-free form, and enumeration of all minimal expansions of a value.

#include "minweight/automata.hpp"
#include "minweight/words.hpp"

#include <optional>
#include <string>
#include <vector>

namespace minweight {

enum class Base { golden, tribonacci, smallest_pisot };

BetaField field_of(Base b);
std::string base_name(Base b);
std::optional<Base> parse_base(std::string_view name);

struct Expansion {
  DigitWord word;          // with point; value_beta(word) == input
  bool truncated = false;  // length cap hit before the remainder vanished
};

/// Greedy expansion of z >= 0 over {0, ..., floor(beta)}.
Expansion greedy_expand(const FieldElem& z, int max_len = 256);

/// tau(z) = beta z - floor(slope z + 1/2) on [-bound, bound).
struct TauSpec {
  std::string name;
  BetaField field;
  Ratio bound;
  Ratio slope;
  std::vector<DigitWord> forbidden;
};

/// Main transformation of each base followed by its variant:
/// golden, golden-remark, tribonacci, tribonacci-remark, smallest-pisot, smallest-pisot-remark.
const std::vector<TauSpec>& builtin_tau_specs();
const TauSpec& main_tau_spec(Base b);
const TauSpec* find_tau_spec(std::string_view name);

/// Digits y_j = floor(slope tau^{j-1}(z') + 1/2) where z' = beta^{-k} z for the
/// smallest k >= 0 placing z in the domain, plus `extra_scale` further steps.
/// The returned word has point k + extra_scale. Throws std::runtime_error if the
/// orbit does not reach 0 within max_len steps.
DigitWord tau_expand(const FieldElem& z, const TauSpec& spec, int max_len = 512, int extra_scale = 0);

/// Minimal-weight automaton over {-1,0,1} of a base (built once, cached).
const Dfa& base_minweight_automaton(Base b);

/// The forbidden-factor-free word of the same value and weight as a minimal word x.
/// Throws std::invalid_argument if x is not of minimal weight.
DigitWord normalize_minweight(const DigitWord& x, Base b);

/// sup |.y_1 y_2 ...| over minimal-weight words of the base.
Ratio representable_bound(Base b);

/// Every minimal-weight word over {-1,0,1} whose value (point included) is z,
/// up to leading and trailing zeros. Words are returned with the point placed so
/// that value_beta(word) == z, shortest first, then in digit order.
std::vector<DigitWord> enumerate_minimal(const FieldElem& z, Base b);

/// Digit choices allowed at remainder r by the golden-ratio branching rule:
/// with c1 = b/(b^2+1), c2 = 2/(b^2+1), c3 = 2b/(b^2+1),
///   -c3 < r < -c2: {-1};  -c2 < r < -c1: {-1, 0};  |r| < c1: {0};
///   c1 < r < c2: {0, 1};  c2 < r < c3: {1}.
/// Empty outside (-c3, c3) and on the (never attained) boundaries.
std::vector<int> golden_branching_digits(const FieldElem& r);

}  // namespace minweight
