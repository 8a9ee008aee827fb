#include "doctest.h"
#include "minweight/expand.hpp"
#include "minweight/minweight.hpp"
#include "oracles.hpp"

#include <random>

using namespace minweight;

namespace {

const std::vector<int> kSigned{-1, 0, 1};

std::vector<int> negated(std::vector<int> w) {
  for (int& x : w) x = -x;
  return w;
}

const oracle::Ring& golden_ring() {
  static const oracle::Ring r({1, -1, -1});
  return r;
}

}  // namespace

TEST_CASE("find_witness for the three bases") {
  struct Case {
    BetaField f;
    const char* word;
  };
  for (const Case& c : {Case{BetaField::golden(), "10.01"}, Case{BetaField::tribonacci(), "10.001"},
                        Case{BetaField::smallest_pisot(), "100.00001"}}) {
    const auto w = find_witness(c.f, 2, 10);
    REQUIRE(w.has_value());
    CHECK(w->B == 2);
    CHECK(weight(w->b) <= 2);
    CHECK(value_beta(w->b, c.f) == c.f.integer(2));
    CHECK(equivalent_beta(w->b, parse_word(c.word), c.f, 20).has_value());
  }
  CHECK(render_word(find_witness(BetaField::golden(), 2, 10)->b) == "10.01");
}

TEST_CASE("reduce_digits examples") {
  const BetaField g = BetaField::golden();
  const auto wit = *find_witness(g, 2, 10);
  const DigitWord two = reduce_digits(parse_word("2"), g, wit);
  CHECK(weight(two) <= 2);
  CHECK(value_beta(two, g) == g.integer(2));
  for (int d : two.digits) CHECK(std::abs(d) <= 1);

  const DigitWord small = parse_word("10T01");
  CHECK(reduce_digits(small, g, wit) == small);

  const DigitWord three = reduce_digits(parse_word("3"), g, wit);
  CHECK(weight(three) <= 3);
  CHECK(value_beta(three, g) == g.integer(3));
  CHECK(equivalent_beta(three, parse_word("100.01"), g, 20).has_value());
}

TEST_CASE("reduce_digits on random words") {
  std::mt19937 rng(31);
  for (const BetaField& f : {BetaField::golden(), BetaField::tribonacci(), BetaField::smallest_pisot()}) {
    const auto wit = *find_witness(f, 2, 10);
    for (int it = 0; it < 500; ++it) {
      std::vector<int> d(1 + rng() % 8);
      for (int& x : d) x = static_cast<int>(rng() % 13) - 6;
      const DigitWord x(d, static_cast<int>(rng() % (d.size() + 1)));
      const DigitWord y = reduce_digits(x, f, wit);
      CHECK(weight(y) <= weight(x));
      for (int v : y.digits) CHECK(std::abs(v) <= 1);
      CHECK(value_beta(y, f) == value_beta(x, f));
    }
  }
}

TEST_CASE("golden zero automaton") {
  const BetaField g = BetaField::golden();
  const ZeroAutomaton z = build_zero_automaton(g, 2);
  CHECK(z.dfa.num_states() == 29);
  CHECK(z.states[0].is_zero());
  CHECK(z.dfa.is_terminal(z.dfa.initial()));
  CHECK(z.dfa.accepts(std::vector<int>{}));
  // 1 = .11: the difference word of 100 and 011 is 1,-1,-1.
  CHECK(z.dfa.accepts(std::vector<int>{1, -1, -1}));
  CHECK_FALSE(z.dfa.accepts(std::vector<int>{1, -1}));

  const FieldElem b = g.beta();
  const FieldElem bound_num = g.integer(2);
  for (const FieldElem& s : z.states) {
    // |s| < 2(B-1)/(beta-1)
    CHECK(compare(abs(s) * (b - 1), bound_num) < 0);
    CHECK(std::find(z.states.begin(), z.states.end(), -s) != z.states.end());
  }
  // Symmetry of the edges.
  for (int i = 0; i < z.dfa.num_states(); ++i)
    for (int e = -2; e <= 2; ++e) {
      const int t = z.dfa.next(i, e);
      if (t < 0) continue;
      const int ni = static_cast<int>(std::find(z.states.begin(), z.states.end(), -z.states[i]) - z.states.begin());
      const int nt = z.dfa.next(ni, -e);
      REQUIRE(nt >= 0);
      CHECK(z.states[nt] == -z.states[t]);
      CHECK(z.states[t] == z.states[i] * b + e);
    }
}

TEST_CASE("state weights") {
  const BetaField g = BetaField::golden();
  CHECK(state_weight(g.zero()) == 0);
  CHECK(state_weight(g.one()) == 1);
  const auto greedy = build_weight_transducer(g, 2);
  const auto tau = build_weight_transducer(g, 2, max_states_from_env(), StateExpansion::tau);
  CHECK(tau.W == 2);
  CHECK(tau.window_states == 160);
  CHECK(greedy.W == 3);
  CHECK(greedy.window_states == 191);
  for (const auto& t : {greedy, tau})
    for (const auto& st : t.states) {
      CHECK(st.delta > -t.W - 2);
      CHECK(st.delta <= t.w[st.s]);
    }
}

TEST_CASE("weight transducer input examples") {
  const BetaField g = BetaField::golden();
  const auto t = build_weight_transducer(g, 2);
  const Nfa h = t.transducer.input_automaton();
  CHECK(h.accepts(std::vector<int>{1, 1}));
  CHECK_FALSE(h.accepts(std::vector<int>{1}));
  CHECK_FALSE(h.accepts(std::vector<int>{1, 0, 0, 1}));
}

TEST_CASE("input words of the golden transducer are heavy") {
  const BetaField g = BetaField::golden();
  const auto t = build_weight_transducer(g, 2);
  const Dfa h = minimize(determinize(t.transducer.input_automaton()));
  const oracle::ClassMin cm(golden_ring(), 12);
  int accepted = 0;
  for (int n = 1; n <= 10; ++n)
    oracle::for_each_word(n, [&](const std::vector<int>& w) {
      if (!h.accepts(w)) return;
      ++accepted;
      CHECK_FALSE(cm.minimal(w));
    });
  CHECK(accepted > 0);
}

TEST_CASE("golden explicit M examples") {
  const Dfa m = golden_explicit_M();
  for (const char* w : {"10101", "11", "1T", "10T"}) CHECK_FALSE(m.accepts(parse_word(w).digits));
  for (const char* w : {"1000T", "100T", "1001", ""}) CHECK(m.accepts(parse_word(w).digits));
  for (int s = 0; s < m.num_states(); ++s) CHECK(m.is_terminal(s));
}

TEST_CASE("generic and explicit M agree and match the class oracle") {
  const BetaField g = BetaField::golden();
  const Dfa m = build_minweight_automaton(g, 2);
  CHECK(language_equal(m, golden_explicit_M()).holds);
  CHECK(language_equal(m, base_minweight_automaton(Base::golden)).holds);
  CHECK(m.accepts(std::vector<int>{}));
  CHECK(m.accepts(parse_word("1001").digits));
  CHECK_FALSE(m.accepts(parse_word("11").digits));

  const oracle::ClassMin cm(golden_ring(), 11);
  int disagreements = 0;
  for (int n = 0; n <= 9; ++n)
    oracle::for_each_word(n, [&](const std::vector<int>& w) {
      const bool acc = m.accepts(w);
      if (acc != cm.minimal(w)) ++disagreements;
      CHECK(acc == m.accepts(negated(w)));
      if (acc && !w.empty()) {
        CHECK(m.accepts(std::vector<int>(w.begin() + 1, w.end())));
        CHECK(m.accepts(std::vector<int>(w.begin(), w.end() - 1)));
      }
    });
  CHECK(disagreements == 0);
}

TEST_CASE("M_beta for the other bases is symmetric and factor-closed") {
  for (Base b : {Base::tribonacci, Base::smallest_pisot}) {
    const Dfa& m = base_minweight_automaton(b);
    oracle::for_each_word(8, [&](const std::vector<int>& w) {
      const bool acc = m.accepts(w);
      CHECK(acc == m.accepts(negated(w)));
      if (acc) {
        CHECK(m.accepts(std::vector<int>(w.begin() + 1, w.end())));
        CHECK(m.accepts(std::vector<int>(w.begin(), w.end() - 1)));
      }
    });
  }
}

TEST_CASE("M_beta agrees with the class oracle for tribonacci and smallest Pisot") {
  struct Case {
    Base b;
    std::vector<oracle::I> poly;
    int len, universe;
  };
  for (const Case& c : {Case{Base::tribonacci, {1, -1, -1, -1}, 8, 12}, Case{Base::smallest_pisot, {1, 0, -1, -1}, 7, 13}}) {
    const oracle::Ring ring(c.poly);
    const oracle::ClassMin cm(ring, c.universe);
    const Dfa& m = base_minweight_automaton(c.b);
    int disagreements = 0;
    for (int n = 0; n <= c.len; ++n)
      oracle::for_each_word(n, [&](const std::vector<int>& w) { disagreements += m.accepts(w) != cm.minimal(w); });
    CHECK(disagreements == 0);
  }
}

TEST_CASE("is_heavy_oracle examples") {
  const BetaField g = BetaField::golden();
  const auto w11 = is_heavy_oracle(parse_word("11"), g, 2, 4);
  REQUIRE(w11.has_value());
  CHECK(weight(*w11) == 1);
  CHECK(equivalent_beta(*w11, parse_word("11"), g, 20).has_value());
  CHECK_FALSE(is_heavy_oracle(parse_word("1"), g, 2, 6).has_value());
  const auto w = is_heavy_oracle(parse_word("10101"), g, 2, 4);
  REQUIRE(w.has_value());
  CHECK(weight(*w) <= 2);
  CHECK(equivalent_beta(*w, parse_word("10101"), g, 20).has_value());
  CHECK_THROWS(is_heavy_oracle(parse_word("1"), g, 2, -1));
}

TEST_CASE("state cap fails loudly") {
  CHECK_THROWS_AS(build_zero_automaton(BetaField::golden(), 2, 5), std::runtime_error);
}
