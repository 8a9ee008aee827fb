// Acceptance run: one PASS/FAIL line per criterion.

#include "minweight/analysis.hpp"
#include "minweight/expand.hpp"
#include "minweight/intsys.hpp"
#include "minweight/minweight.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

using namespace minweight;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(double x, int prec = 6) {
  std::ostringstream os;
  os.precision(prec);
  os << x;
  return os.str();
}

bool avoids_all(const std::vector<int>& w, const std::vector<DigitWord>& xs) {
  for (const auto& x : xs)
    if (std::search(w.begin(), w.end(), x.digits.begin(), x.digits.end()) != w.end()) return false;
  return true;
}

// Digit of beta^-k in w.
int digit_at(const DigitWord& w, int k) {
  const int p = w.point.value_or(static_cast<int>(w.size()));
  const int idx = p + k - 1;
  return idx >= 0 && idx < static_cast<int>(w.size()) ? w.digits[idx] : 0;
}

const oracle::Ring& ring_of(Base b) {
  static const oracle::Ring g({1, -1, -1}), t({1, -1, -1, -1}), s({1, 0, -1, -1});
  return b == Base::golden ? g : b == Base::tribonacci ? t : s;
}

// 1. Golden recognizer: both constructions equal, and both agree with the
// class-minimum oracle on every word of length <= 12.
Outcome criterion1() {
  const BetaField g = BetaField::golden();
  const Dfa generic = build_minweight_automaton(g, 2);
  const Dfa explicit_m = golden_explicit_M();
  const auto eq = language_equal(generic, explicit_m);
  // Lighter forms of a length-12 word can need a digit or two more (11 = 100.1),
  // so the full universe runs to length 14, and light words to length 22.
  const oracle::ClassMin full(ring_of(Base::golden), 14), sparse(ring_of(Base::golden), 22, 2, 5);
  long words = 0, bad = 0;
  std::string example;
  for (int n = 0; n <= 12; ++n)
    oracle::for_each_word(n, [&](const std::vector<int>& w) {
      ++words;
      int wt = 0;
      for (int x : w) wt += std::abs(x);
      int least = full.class_min(w);
      const int s = sparse.lookup(w);
      if (s >= 0) least = std::min(least, s);
      const bool minimal = wt == least;
      if (generic.accepts(w) != minimal || explicit_m.accepts(w) != minimal) {
        if (bad++ == 0) example = render_digits(w);
      }
    });
  Outcome o;
  o.pass = eq.holds && bad == 0;
  o.detail = std::string(eq.holds ? "generic == explicit" : "generic != explicit") + ", " + std::to_string(words) +
             " words, " + std::to_string(bad) + " disagreements" + (bad ? " (e.g. " + example + ")" : "") + ", M has " +
             std::to_string(minimize(generic).num_states()) + " states";
  return o;
}

// 2. Golden A_beta states: exactly the listed elements.
Outcome criterion2() {
  const BetaField g = BetaField::golden();
  const ZeroAutomaton z = build_zero_automaton(g, 2);
  std::vector<FieldElem> listed{g.zero()};
  auto pm = [&](const FieldElem& x) {
    listed.push_back(x);
    listed.push_back(-x);
  };
  for (int k : {-3, -2, -1, 0, 1, 2}) pm(g.beta_pow(k));
  for (int a : {1, 2})
    for (int c : {-2, -3}) {
      pm(g.beta_pow(a) + g.beta_pow(c));
      pm(g.beta_pow(a) - g.beta_pow(c));
    }
  std::set<std::string> want, got;
  for (const auto& x : listed) want.insert(x.to_string());
  for (const auto& x : z.states) got.insert(x.to_string());
  Outcome o;
  o.pass = want == got && want.size() == listed.size();
  o.detail = std::to_string(got.size()) + " states, listed elements " + std::to_string(want.size()) +
             (want == got ? ", sets equal (exact)" : ", sets differ") +
             "; the list 0, +-b^-3, ..., +-b^2+-b^-3 has 29 members";
  return o;
}

// 3. S_beta size: a diagnostic.
Outcome criterion3() {
  const BetaField g = BetaField::golden();
  const auto greedy = build_weight_transducer(g, 2);
  const auto tau = build_weight_transducer(g, 2, max_states_from_env(), StateExpansion::tau);
  const bool same_m = language_equal(factor_complement(determinize(greedy.transducer.input_automaton())),
                                     factor_complement(determinize(tau.transducer.input_automaton())))
                          .holds;
  Outcome o;
  o.pass = true;
  o.detail = "greedy w_s: W=" + std::to_string(greedy.W) + ", " + std::to_string(greedy.window_states) + " window states (" +
             std::to_string(greedy.transducer.num_states()) + " trimmed); tau w_s: W=" + std::to_string(tau.W) + ", " +
             std::to_string(tau.window_states) + " window states (" + std::to_string(tau.transducer.num_states()) +
             " trimmed); M equal under both: " + (same_m ? "yes" : "no") + " (reference count: 160)";
  return o;
}

// 4. Tau expansions for all value classes of words of length <= 10.
Outcome criterion4() {
  long classes = 0, violations = 0, beyond = 0;
  std::string example;
  for (Base b : {Base::golden, Base::tribonacci, Base::smallest_pisot}) {
    const BetaField f = field_of(b);
    const oracle::Ring& ring = ring_of(b);
    const oracle::ClassMin full(ring, 10), sparse(ring, 22, 2, 6);
    std::set<std::vector<oracle::I>> seen;
    for (int n = 1; n <= 10; ++n)
      oracle::for_each_word(n, [&](const std::vector<int>& w) {
        if (w[0] == 0 || w.back() == 0) return;
        if (!seen.insert(ring.canonical(ring.value(w))).second) return;
        const FieldElem z = value_beta(DigitWord(w), f);
        if (z.is_zero()) return;
        ++classes;
        int least = full.class_min(w);
        const int s = sparse.lookup(w);
        if (s >= 0) least = std::min(least, s);
        for (const TauSpec& spec : builtin_tau_specs()) {
          if (!(spec.field == f)) continue;
          const DigitWord y = tau_expand(z, spec);
          const int wy = weight(y);
          // No word of the universe (every word up to length 10, and words of weight
          // <= 6 up to length 22) may be lighter than y.
          bool ok = value_beta(y, f) == z && avoids_all(y.digits, spec.forbidden) && wy <= least;
          if (wy < least) ++beyond;
          for (int extra = 1; extra <= 3 && ok; ++extra) ok = strip(tau_expand(z, spec, 512, extra)).digits == strip(y).digits;
          if (!ok && violations++ == 0) example = spec.name + " " + render_digits(w);
        }
      });
  }
  Outcome o;
  o.pass = violations == 0;
  o.detail = std::to_string(classes) + " value classes x 2 transformations, " + std::to_string(violations) + " violations" +
             (violations ? " (e.g. " + example + ")" : "") + ", " + std::to_string(beyond) + " outputs lighter than any word of the universe";
  return o;
}

// 5. Golden branching: enumerate_minimal equals the oracle's minimal set, and every
// step follows the five-interval rule.
Outcome criterion5() {
  const BetaField g = BetaField::golden();
  const FieldElem b = g.beta();
  const std::vector<int> none;
  // Thresholds as periodic expansions: .(0010)^w = 1/(b^2+1), .1(0100)^w = 2b/(b^2+1).
  const bool thresholds =
      compare(eventually_periodic_value(g, none, std::vector<int>{0, 0, 1, 0}), Ratio(g.one(), b * b + 1)) == 0 &&
      compare(eventually_periodic_value(g, std::vector<int>{1}, std::vector<int>{0, 1, 0, 0}), Ratio(b * 2, b * b + 1)) == 0;

  const int L = 12;
  const oracle::Ring& ring = ring_of(Base::golden);
  const oracle::ClassMin cm(ring, L);
  std::map<std::vector<oracle::I>, std::set<std::vector<int>>> minimal_by_class;
  for (int n = 1; n <= L; ++n)
    oracle::for_each_word(n, [&](const std::vector<int>& w) {
      if (w[0] != 0 && w.back() != 0 && cm.minimal(w)) minimal_by_class[ring.canonical(ring.value(w))].insert(w);
    });
  long classes = 0, violations = 0, steps = 0;
  std::string example;
  std::set<std::vector<oracle::I>> seen;
  for (int n = 1; n <= 8; ++n)
    oracle::for_each_word(n, [&](const std::vector<int>& w) {
      if (w[0] == 0 || w.back() == 0) return;
      const auto key = ring.canonical(ring.value(w));
      if (key.empty() || !seen.insert(key).second) return;
      ++classes;
      const FieldElem z = value_beta(DigitWord(w), g);
      std::set<std::vector<int>> got;
      bool ok = true;
      for (const auto& y : enumerate_minimal(z, Base::golden)) {
        ok = ok && value_beta(y, g) == z;
        const auto s = strip(y).digits;
        if (static_cast<int>(s.size()) <= L) got.insert(s);
        FieldElem r = value_beta(DigitWord(y.digits, 0), g);
        for (int d : y.digits) {
          const auto allowed = golden_branching_digits(r);
          ok = ok && std::find(allowed.begin(), allowed.end(), d) != allowed.end();
          r = r * b - d;
          ++steps;
        }
        ok = ok && r.is_zero();
      }
      ok = ok && got == minimal_by_class[key];
      if (!ok && violations++ == 0) example = render_digits(w);
    });
  Outcome o;
  o.pass = thresholds && violations == 0;
  o.detail = std::to_string(classes) + " classes, " + std::to_string(steps) + " branching steps, " +
             std::to_string(violations) + " violations" + (violations ? " (e.g. " + example + ")" : "") +
             (thresholds ? ", thresholds exact" : ", threshold mismatch");
  return o;
}

// 6. Fibonacci system.
Outcome criterion6() {
  const auto F = NumerationSystem::fibonacci();
  int gap_bad = 0;
  for (int n = 1; n <= 30; ++n) {
    const BoundPair p = bounds_gG(n, F);
    gap_bad += p.g_next - p.G != 1;
  }
  const auto rules = oracle::rules('F');
  const int max_len = static_cast<int>(unique_minform(5000, F).size()) + 4;
  const auto u = oracle::fibonacci_terms(max_len + 8);
  std::map<oracle::I, int> count;
  oracle::for_each_compliant(rules, max_len, [&](const std::vector<int>& w) {
    const auto v = oracle::int_value(w, u);
    if (std::llabs(v) <= 5000) ++count[v];
  });
  oracle::IntMin dp(u);
  int unique_bad = 0, minimal_bad = 0;
  for (Int N = -5000; N <= 5000; ++N) {
    if (N == 0) continue;
    const DigitWord m = unique_minform(N, F);
    unique_bad += count[N] != 1 || !oracle::compliant(m.digits, rules) || value_u(m, F.terms()) != N;
    minimal_bad += weight(m) != dp(N, static_cast<int>(m.size()) + 6);
  }
  const bool equal = language_equal(int_minweight_automaton(F), base_minweight_automaton(Base::golden)).holds;
  Outcome o;
  o.pass = gap_bad == 0 && unique_bad == 0 && minimal_bad == 0 && equal;
  o.detail = "g_{n+1}-G_n=1 for n<=30: " + std::string(gap_bad ? "no" : "yes") + "; |N|<=5000: " + std::to_string(unique_bad) +
             " uniqueness and " + std::to_string(minimal_bad) + " minimality failures; M_F == M_golden: " + (equal ? "yes" : "no");
  return o;
}

// 7. Tribonacci branching counterexample.
Outcome criterion7() {
  const BetaField t = BetaField::tribonacci();
  bool ok = true;
  std::string detail;
  for (int n = 1; n <= 2; ++n) {
    std::vector<int> d{0, 1};
    for (int i = 0; i < n; ++i) d.insert(d.end(), {0, 0, 1});
    const auto ws = enumerate_minimal(value_beta(DigitWord(d, 0), t), Base::tribonacci);
    bool lead = false;
    for (const auto& w : ws) lead = lead || digit_at(w, 1) == 1 || digit_at(w, 0) != 0;
    ok = ok && !ws.empty() && !lead;
    detail += "n=" + std::to_string(n) + ": " + std::to_string(ws.size()) + " expansions, none with leading 1; ";
  }
  const auto ws = enumerate_minimal(value_beta(parse_word(".0011"), t), Base::tribonacci);
  bool lead = false;
  for (const auto& w : ws) lead = lead || (digit_at(w, 1) == 1 && strip(w).digits == std::vector<int>{1, -1});
  ok = ok && lead;
  detail += std::string(".0011 has .1T: ") + (lead ? "yes" : "no");
  return {ok, detail};
}

// 8. Stationary vectors.
Outcome criterion8() {
  auto q = [](const BetaField& f, long a, long b = 1) { return QElem(f, Rational(a, b)); };
  const BetaField g = field_of(Base::golden), t = field_of(Base::tribonacci), s = field_of(Base::smallest_pisot);
  const std::vector<QElem> ef{q(g, 1, 10), q(g, 1, 10), q(g, 1, 10), q(g, 2, 5), q(g, 1, 10), q(g, 1, 10), q(g, 1, 10)};
  const QElem tb = QElem::beta(t), tden = tb.pow(5) + q(t, 1), half = tb.pow(3) / q(t, 2) / tden;
  const std::vector<QElem> et{half, half, (tb.pow(3) + tb.pow(2)) / tden, half, half};
  const QElem sb = QElem::beta(s), sden = q(s, 14) + q(s, 4) * sb * sb;
  std::vector<QElem> es(15, q(s, 1) / sden);
  es[7] = q(s, 4) * sb * sb / sden;
  const bool f_ok = stationary(markov_model(Base::golden)) == ef;
  const bool t_ok = stationary(markov_model(Base::tribonacci)) == et;
  const bool s_ok = stationary(markov_model(Base::smallest_pisot)) == es;
  return {f_ok && t_ok && s_ok, std::string("F ") + (f_ok ? "equal" : "differs") + ", T " + (t_ok ? "equal" : "differs") + ", S " +
                                    (s_ok ? "equal" : "differs") + " (exact)"};
}

// 9. Average weights at M = 10^4.
Outcome criterion9() {
  Outcome o;
  for (const auto& sys : {NumerationSystem::fibonacci(), NumerationSystem::tribonacci(), NumerationSystem::smallest_pisot()}) {
    const WeightExperiment e = average_weight_experiment(sys, 10000);
    const double c = static_cast<double>(nonzero_frequency(sys.base()).approx());
    const double diff = std::abs(e.per_digit - c);
    o.pass = o.pass && diff <= 0.02;
    o.detail += sys.name() + ": " + fmt(e.per_digit, 5) + " vs " + fmt(c, 5) + " (n=" + std::to_string(e.length) + ", |diff| " +
                fmt(diff, 3) + "); ";
  }
  return o;
}

// 10. Cost table and binary NAF.
Outcome criterion10() {
  const NafExperiment naf = naf2_average(100000);
  const auto rows = cost_table();
  auto cost = [&](const std::string& sys, int r) {
    for (const auto& row : rows)
      if (row.system == sys && row.digits == "{-1,0,1}") return row.cost_per_log2(r);
    return 0.0;
  };
  const double f10 = cost("F_n", 10), b10 = cost("2^n", 10), s20 = cost("S_n", 20), f20 = cost("F_n", 20);
  const bool naf_ok = std::abs(naf.per_digit - 1.0 / 3) <= 0.01;
  const bool printed = std::abs(f10 - 4.321) <= 5e-4 && std::abs(b10 - 4.333) <= 5e-4 && std::abs(s20 - 7.156) <= 5e-4 &&
                       std::abs(f20 - 7.202) <= 5e-4;
  const bool order = f10 < b10 && s20 < f20;
  char buf[256];
  std::snprintf(buf, sizeof buf, "2-NAF per digit %.4f (n=%d); r=10: F %.3f < 2^n %.3f; r=20: S %.3f < F %.3f", naf.per_digit,
                naf.length, f10, b10, s20, f20);
  return {naf_ok && printed && order, buf};
}

// 11. Digit-set witnesses.
Outcome criterion11() {
  Outcome o;
  const std::vector<std::pair<Base, const char*>> cases{{Base::golden, "10.01"}, {Base::tribonacci, "10.001"}, {Base::smallest_pisot, "100.00001"}};
  for (const auto& [b, identity] : cases) {
    const BetaField f = field_of(b);
    const auto w = find_witness(f, 2, 12);
    const bool ok = w && weight(w->b) <= 2 && value_beta(w->b, f) == f.integer(2) &&
                    equivalent_beta(w->b, parse_word(identity), f, 24).has_value() &&
                    equivalent_beta(w->b, parse_word("2"), f, 24).has_value();
    o.pass = o.pass && ok;
    o.detail += base_name(b) + ": " + (w ? render_word(w->b) : std::string("none")) + (ok ? " ~ " : " !~ ") + identity + "; ";
  }
  return o;
}

// 12. M_T and M_S against the integer oracle.
Outcome criterion12() {
  Outcome o;
  for (const auto& sys : {NumerationSystem::tribonacci(), NumerationSystem::smallest_pisot()}) {
    const Dfa& m = int_minweight_automaton(sys);
    const auto u = sys.kind() == SystemKind::T ? oracle::tribonacci_terms(24) : oracle::smallest_pisot_terms(24);
    oracle::IntMin dp(u);
    long words = 0, bad = 0, dp_bad = 0;
    std::string example;
    for (int n = 0; n <= 10; ++n)
      oracle::for_each_word(n, [&](const std::vector<int>& w) {
        ++words;
        const bool minimal = !int_heavy_oracle(DigitWord(w), sys, 6).has_value();
        if (m.accepts(w) != minimal && bad++ == 0) example = render_digits(w);
        int wt = 0;
        for (int x : w) wt += std::abs(x);
        dp_bad += minimal != (wt == dp(oracle::int_value(w, u), n + 6));
      });
    o.pass = o.pass && bad == 0 && dp_bad == 0;
    o.detail += "M_" + sys.name() + ": " + std::to_string(m.num_states()) + " states, " + std::to_string(words) + " words, " +
                std::to_string(bad) + " disagreements" + (bad ? " (e.g. " + example + ")" : "") + "; ";
  }
  return o;
}

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  const std::vector<Outcome (*)()> criteria{criterion1, criterion2, criterion3, criterion4,  criterion5,  criterion6,
                                            criterion7, criterion8, criterion9, criterion10, criterion11, criterion12};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << "  " << o.detail << " [" << fmt(secs, 3) << " s]"
              << std::endl;
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
