// minweight: command-line front end.
//
// Exit codes: 0 success, 2 usage or parse error, 3 domain error, 4 internal error.

#include "minweight/analysis.hpp"
#include "minweight/automata.hpp"
#include "minweight/expand.hpp"
#include "minweight/intsys.hpp"
#include "minweight/minweight.hpp"
#include "minweight/words.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

using namespace minweight;
using nlohmann::json;

namespace {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BaseOpts {
  std::string base = "golden";
  std::string poly;  // "1,-1,-1", highest degree first
  int B = 2;
  std::string system;
};

void add_base_opts(CLI::App* cmd, BaseOpts& o, bool with_system) {
  cmd->add_option("--base", o.base, "golden | tribonacci | smallest-pisot");
  cmd->add_option("--poly", o.poly, "custom minimal polynomial, highest degree first, e.g. 1,-1,-1");
  cmd->add_option("--B", o.B, "digit bound: digits lie in {1-B, ..., B-1}")->check(CLI::Range(2, 64));
  if (with_system) cmd->add_option("--system", o.system, "integer numeration system F | T | S");
}

std::optional<Base> builtin(const BaseOpts& o) {
  if (!o.poly.empty()) return std::nullopt;
  auto b = parse_base(o.base);
  if (!b) throw ParseError("unknown base '" + o.base + "'");
  return b;
}

BetaField field_from(const BaseOpts& o) {
  if (auto b = builtin(o)) return field_of(*b);
  std::vector<Int> coeffs;
  std::stringstream ss(o.poly);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      coeffs.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError("bad polynomial coefficient '" + item + "'");
    }
  }
  BetaField f(coeffs);
  if (!f.is_pisot()) throw std::domain_error("beta is not a Pisot number");
  return f;
}

NumerationSystem system_from(const std::string& s) {
  auto k = parse_system(s);
  if (!k) throw ParseError("unknown system '" + s + "'");
  return NumerationSystem::of(*k);
}

DigitWord word_arg(const std::string& s) {
  try {
    return parse_word(s);
  } catch (const std::exception& e) {
    throw ParseError(e.what());
  }
}

Int int_arg(const std::string& s) {
  try {
    std::size_t used = 0;
    const Int v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("not an integer: '" + s + "'");
  }
}

std::string fmt(double x, int digits = 6) {
  std::ostringstream os;
  os << std::setprecision(digits) << x;
  return os.str();
}

int max_abs_digit(const DigitWord& x) {
  int m = 0;
  for (int d : x.digits) m = std::max(m, std::abs(d));
  return m;
}

// y scaled by the power of beta that gives it the value of x.
DigitWord align(const DigitWord& y, const DigitWord& x, const BetaField& f) {
  const auto k = equivalent_beta(x, y, f, 64);
  if (!k || y.empty()) return y;
  std::vector<int> d = y.digits;
  if (*k >= 0) {
    d.insert(d.end(), *k, 0);
    return DigitWord(d);
  }
  const int frac = -*k;
  if (static_cast<int>(d.size()) < frac) d.insert(d.begin(), frac - d.size(), 0);
  return DigitWord(d, static_cast<int>(d.size()) - frac);
}

void print_value(std::ostream& os, const FieldElem& z) { os << "value " << fmt(static_cast<double>(z.approx()), 12) << "\n"; }

// ---------------------------------------------------------------- expand

struct ExpandOpts {
  BaseOpts base;
  std::string greedy, tau, of_word, spec, format = "text";
  int max_len = 512;
};

int cmd_expand(const ExpandOpts& o) {
  const BetaField f = field_from(o.base);
  const bool use_tau = !o.tau.empty() || (!o.of_word.empty() && o.greedy.empty() && !o.spec.empty());
  if (o.greedy.empty() == o.tau.empty() && o.of_word.empty()) throw ParseError("give exactly one of --greedy or --tau");
  FieldElem z = f.zero();
  if (!o.of_word.empty())
    z = value_beta(word_arg(o.of_word), f);
  else
    z = f.integer(int_arg(use_tau ? o.tau : o.greedy));

  DigitWord w;
  bool truncated = false;
  if (use_tau) {
    const TauSpec* spec = nullptr;
    if (!o.spec.empty()) {
      spec = find_tau_spec(o.spec);
      if (!spec) throw ParseError("unknown tau transformation '" + o.spec + "'");
    } else {
      auto b = builtin(o.base);
      if (!b) throw std::domain_error("tau expansions exist for the built-in bases only");
      spec = &main_tau_spec(*b);
    }
    if (!(spec->field == f)) throw std::domain_error("tau transformation belongs to another base");
    w = tau_expand(z, *spec, o.max_len);
  } else {
    if (sign(z) < 0) throw std::domain_error("greedy expansions need a non-negative value");
    Expansion e = greedy_expand(z, o.max_len);
    w = e.word;
    truncated = e.truncated;
  }

  if (o.format == "json") {
    json j{{"digits", w.digits}, {"word", render_word(w)}, {"truncated", truncated},
           {"value", static_cast<double>(z.approx())}};
    j["point"] = w.point ? json(*w.point) : json(nullptr);
    std::cout << j.dump() << "\n";
    return 0;
  }
  if (w.empty())
    std::cout << "0\n";
  else if (use_tau)
    std::cout << render_digits(w.digits) << " (point " << w.point.value_or(static_cast<int>(w.size())) << ")\n";
  else
    std::cout << render_word(w) << (truncated ? " (truncated)" : "") << "\n";
  print_value(std::cout, z);
  return 0;
}

// ---------------------------------------------------------------- check

struct CheckOpts {
  BaseOpts base;
  std::string word, format = "text";
  int oracle = 4;
};

int cmd_check(const CheckOpts& o) {
  const DigitWord x = word_arg(o.word);
  bool minimal;
  std::optional<DigitWord> lighter, same_value;  // class witness, and the witness rescaled to x's value
  if (!o.base.system.empty()) {
    if (x.point) throw std::domain_error("integer representations carry no point");
    const NumerationSystem sys = system_from(o.base.system);
    if (max_abs_digit(x) > 1) throw std::domain_error("integer representations use digits -1, 0, 1");
    minimal = int_minweight_automaton(sys).accepts(x.digits);
    if (o.oracle >= 0) lighter = same_value = int_heavy_oracle(x, sys, o.oracle);
  } else {
    const BetaField f = field_from(o.base);
    if (max_abs_digit(x) >= o.base.B) throw std::domain_error("digit outside {1-B, ..., B-1}; raise --B");
    auto b = builtin(o.base);
    const Dfa m = b && o.base.B == 2 ? base_minweight_automaton(*b) : build_minweight_automaton(f, o.base.B);
    minimal = m.accepts(x.digits);
    if (o.oracle >= 0 && !minimal) {
      lighter = is_heavy_oracle(x, f, o.base.B, o.oracle);
      if (lighter) same_value = align(*lighter, x, f);
    }
  }
  if (o.format == "json") {
    auto opt = [](const std::optional<DigitWord>& w) { return w ? json(render_word(*w)) : json(nullptr); };
    std::cout << json{{"word", o.word}, {"minimal", minimal}, {"lighter", opt(lighter)}, {"lighter_same_value", opt(same_value)}}.dump()
              << "\n";
    return 0;
  }
  std::cout << (minimal ? "minimal" : "heavy");
  if (lighter) std::cout << "; lighter: " << render_word(*lighter);
  std::cout << "\n";
  return 0;
}

// ---------------------------------------------------------------- enumerate

struct EnumerateOpts {
  BaseOpts base;
  std::string word, value, format = "text";
};

int cmd_enumerate(const EnumerateOpts& o) {
  auto b = builtin(o.base);
  if (!b) throw std::domain_error("enumeration is available for the built-in bases only");
  const BetaField f = field_of(*b);
  if (o.word.empty() == o.value.empty()) throw ParseError("give a word or --value");
  const FieldElem z = o.word.empty() ? f.integer(int_arg(o.value)) : value_beta(word_arg(o.word), f);
  const auto words = enumerate_minimal(z, *b);
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& w : words) arr.push_back(render_word(w));
    std::cout << json{{"value", static_cast<double>(z.approx())}, {"expansions", arr}}.dump() << "\n";
    return 0;
  }
  for (const auto& w : words) std::cout << render_word(w) << "\n";
  return 0;
}

// ---------------------------------------------------------------- automaton

struct AutomatonOpts {
  BaseOpts base;
  std::string which = "M", format = "dot", compare, ws = "greedy";
  bool stats = false;
};

void emit(const Dfa& d, const std::string& format, const std::string& name) {
  if (format == "json")
    std::cout << to_json(d).dump() << "\n";
  else if (format == "dot")
    std::cout << to_dot(d, name);
  else
    std::cout << "states " << d.num_states() << "\n";
}

void report_comparison(const LanguageComparison& c) {
  if (c.holds)
    std::cout << "EQUAL\n";
  else
    std::cout << "DIFFERENT; counterexample: " << render_digits(*c.counterexample) << "\n";
}

int cmd_automaton(const AutomatonOpts& o) {
  if (!o.base.system.empty()) {
    const NumerationSystem sys = system_from(o.base.system);
    if (o.which != "M") throw ParseError("integer systems export M only");
    const Dfa& m = int_minweight_automaton(sys);
    if (o.compare == "generic") {
      report_comparison(language_equal(m, build_int_minweight_automaton_generic(sys)));
      return 0;
    }
    if (o.compare == "beta") {
      report_comparison(language_equal(m, base_minweight_automaton(sys.base())));
      return 0;
    }
    if (!o.compare.empty()) throw ParseError("unknown comparison '" + o.compare + "'");
    if (o.stats) {
      std::cout << "states " << m.num_states() << "\n";
      return 0;
    }
    emit(m, o.format, "M_" + sys.name());
    return 0;
  }

  const BetaField f = field_from(o.base);
  const int B = o.base.B;
  StateExpansion policy;
  if (o.ws == "greedy")
    policy = StateExpansion::greedy;
  else if (o.ws == "tau")
    policy = StateExpansion::tau;
  else
    throw ParseError("unknown --ws policy '" + o.ws + "'");

  if (o.which == "A") {
    const ZeroAutomaton z = build_zero_automaton(f, B);
    if (o.stats) {
      std::cout << "states " << z.dfa.num_states() << "\n";
      return 0;
    }
    emit(z.dfa, o.format, "A");
    return 0;
  }
  if (o.which == "S" || o.which == "H") {
    const WeightTransducer t = build_weight_transducer(f, B, max_states_from_env(), policy);
    if (o.stats) {
      std::cout << "W " << t.W << "\n"
                << "window states " << t.window_states << "\n"
                << "accessible " << t.accessible_states << "\n"
                << "coaccessible " << t.coaccessible_states << "\n"
                << "trimmed " << t.transducer.num_states() << "\n";
      return 0;
    }
    if (o.which == "S") {
      if (o.format == "json")
        std::cout << to_json(t.transducer).dump() << "\n";
      else
        std::cout << to_dot(t.transducer, "S");
      return 0;
    }
    emit(minimize(determinize(t.transducer.input_automaton())), o.format, "H");
    return 0;
  }
  if (o.which != "M") throw ParseError("--which must be A, S, H or M");
  auto b = builtin(o.base);
  const Dfa m = b && B == 2 ? base_minweight_automaton(*b) : build_minweight_automaton(f, B);
  if (o.compare == "explicit") {
    if (b != Base::golden || B != 2) throw std::domain_error("the explicit construction exists for the golden ratio with B = 2");
    report_comparison(language_equal(m, golden_explicit_M()));
    return 0;
  }
  if (!o.compare.empty()) throw ParseError("unknown comparison '" + o.compare + "'");
  if (o.stats) {
    std::cout << "states " << m.num_states() << "\n";
    return 0;
  }
  emit(m, o.format, "M");
  return 0;
}

// ---------------------------------------------------------------- intrep

struct IntrepOpts {
  std::string system = "F", minform, greedy, weight, value, format = "text";
  int bounds = 0;
};

int cmd_intrep(const IntrepOpts& o) {
  const NumerationSystem sys = system_from(o.system);
  const int chosen = !o.minform.empty() + !o.greedy.empty() + !o.weight.empty() + !o.value.empty() + (o.bounds > 0);
  if (chosen != 1) throw ParseError("give exactly one of --minform, --greedy, --weight, --value, --bounds");
  json j;
  std::string text;
  if (!o.minform.empty()) {
    const DigitWord w = unique_minform(int_arg(o.minform), sys);
    text = w.empty() ? "0" : render_word(w);
    j = {{"word", render_word(w)}, {"weight", weight(w)}};
  } else if (!o.greedy.empty()) {
    const Int n = int_arg(o.greedy);
    if (n < 0) throw std::domain_error("greedy representations need N >= 0");
    const DigitWord w = greedy_int(n, sys);
    text = w.empty() ? "0" : render_word(w);
    j = {{"word", render_word(w)}, {"weight", weight(w)}};
  } else if (!o.weight.empty()) {
    const int wt = int_min_weight(int_arg(o.weight), sys);
    text = std::to_string(wt);
    j = {{"weight", wt}};
  } else if (!o.value.empty()) {
    const DigitWord w = word_arg(o.value);
    if (w.point) throw std::domain_error("integer representations carry no point");
    const Int v = value_u(w, sys.terms());
    text = std::to_string(v);
    j = {{"value", v}};
  } else {
    const BoundPair b = bounds_gG(o.bounds, sys);
    std::ostringstream os;
    os << "g_" << b.n + 1 << " " << b.g_next << " (" << render_word(b.g_next_word) << ")\n"
       << "G_" << b.n << " " << b.G << " (" << render_word(b.G_word) << ")\n"
       << "difference " << b.g_next - b.G;
    text = os.str();
    j = {{"n", b.n},           {"g", b.g},
         {"g_next", b.g_next}, {"G", b.G},
         {"g_next_word", render_word(b.g_next_word)}, {"G_word", render_word(b.G_word)}};
  }
  if (o.format == "json")
    std::cout << j.dump() << "\n";
  else
    std::cout << text << "\n";
  return 0;
}

// ---------------------------------------------------------------- stats

struct StatsOpts {
  std::string system = "F", format = "text";
  Int M = 10000;
  int threads = 0;
  bool markov = false;
};

int cmd_stats(const StatsOpts& o) {
  const NumerationSystem sys = system_from(o.system);
  if (o.M < 1) throw std::domain_error("--M must be positive");
  const Base b = sys.base();
  if (o.markov) {
    const MarkovModel m = markov_model(b);
    const auto pi = stationary(m);
    if (o.format == "json") {
      json rows = json::array();
      for (std::size_t i = 0; i < m.p.size(); ++i) {
        json row = json::array();
        for (const auto& x : m.p[i]) row.push_back(x.to_string());
        rows.push_back(row);
      }
      json st = json::array();
      for (const auto& x : pi) st.push_back(x.to_string());
      std::cout << json{{"labels", m.labels}, {"matrix", rows}, {"stationary", st}}.dump() << "\n";
      return 0;
    }
    for (std::size_t i = 0; i < m.p.size(); ++i) {
      std::cout << m.labels[i] << ":";
      for (std::size_t j = 0; j < m.p[i].size(); ++j)
        if (!m.p[i][j].is_zero()) std::cout << " " << m.labels[j] << "=" << m.p[i][j].to_string();
      std::cout << "\n";
    }
    std::cout << "stationary:";
    for (std::size_t i = 0; i < pi.size(); ++i) std::cout << " " << fmt(static_cast<double>(pi[i].approx()));
    std::cout << "\n";
    return 0;
  }
  const WeightExperiment e = average_weight_experiment(sys, o.M, o.threads);
  const double c = static_cast<double>(nonzero_frequency(b).approx());
  if (o.format == "json") {
    std::cout << json{{"system", sys.name()},   {"M", e.M},
                      {"total_weight", e.total_weight}, {"average", static_cast<double>(e.average)},
                      {"length", e.length},     {"per_digit", e.per_digit},
                      {"per_log", e.per_log},   {"constant", c}}
                     .dump()
              << "\n";
  } else if (o.format == "csv") {
    std::cout << "system,M,average,length,per_digit,per_log,constant\n"
              << sys.name() << "," << e.M << "," << fmt(static_cast<double>(e.average), 10) << "," << e.length << ","
              << fmt(e.per_digit, 10) << "," << fmt(e.per_log, 10) << "," << fmt(c, 10) << "\n";
  } else {
    std::cout << "average weight " << fmt(static_cast<double>(e.average)) << " over [-" << e.M << ", " << e.M << "]\n"
              << "form length " << e.length << "\n"
              << "nonzero frequency " << fmt(e.per_digit) << " (per log M " << fmt(e.per_log) << ")\n"
              << "constant " << fmt(c) << "  difference " << fmt(e.per_digit - c, 3) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- cost

struct CostOpts {
  std::vector<int> r{10, 20};
  std::string format = "text";
  Int naf_M = 0;
};

int cmd_cost(const CostOpts& o) {
  const auto rows = cost_table();
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& row : rows) {
      json costs = json::object();
      for (int r : o.r) costs[std::to_string(r)] = row.cost_per_log2(r);
      arr.push_back({{"system", row.system}, {"digits", row.digits}, {"weight_per_log2", row.weight_per_log2()}, {"cost_per_log2", costs}});
    }
    std::cout << arr.dump() << "\n";
    return 0;
  }
  if (o.format == "csv") {
    std::cout << "system,digits,weight_per_log2";
    for (int r : o.r) std::cout << ",cost_r" << r;
    std::cout << "\n";
    for (const auto& row : rows) {
      std::cout << row.system << "," << row.digits << "," << fmt(row.weight_per_log2(), 8);
      for (int r : o.r) std::cout << "," << fmt(row.cost_per_log2(r), 8);
      std::cout << "\n";
    }
    return 0;
  }
  std::cout << std::left << std::setw(6) << "U" << std::setw(10) << "digits" << std::setw(12) << "weight";
  for (int r : o.r) std::cout << std::setw(10) << ("r=" + std::to_string(r));
  std::cout << "\n";
  for (const auto& row : rows) {
    std::cout << std::setw(6) << row.system << std::setw(10) << row.digits << std::setw(12) << fmt(row.weight_per_log2(), 4);
    for (int r : o.r) std::cout << std::setw(10) << fmt(row.cost_per_log2(r), 4);
    std::cout << "\n";
  }
  std::cout << "(coefficients of log2 M)\n";
  for (int r : o.r) {
    const CostRow* best = &rows[0];
    for (const auto& row : rows)
      if (row.cost_per_log2(r) < best->cost_per_log2(r)) best = &row;
    std::cout << "r=" << r << ": cheapest " << best->system << " " << best->digits << " " << fmt(best->cost_per_log2(r), 4) << "\n";
  }
  if (o.naf_M > 0) {
    const NafExperiment e = naf2_average(o.naf_M);
    std::cout << "2-NAF over [-" << e.M << ", " << e.M << "]: average " << fmt(static_cast<double>(e.average)) << ", per digit "
              << fmt(e.per_digit) << " (length " << e.length << ")\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal-weight expansions in Pisot bases"};
  app.require_subcommand(1);

  ExpandOpts ex;
  auto* expand = app.add_subcommand("expand", "greedy or tau expansion of a value");
  add_base_opts(expand, ex.base, false);
  expand->add_option("--greedy", ex.greedy, "integer to expand greedily");
  expand->add_option("--tau", ex.tau, "integer to expand with the tau transformation");
  expand->add_option("--of-word", ex.of_word, "expand the value of this word instead of an integer");
  expand->add_option("--spec", ex.spec, "tau transformation name (e.g. golden-remark)");
  expand->add_option("--max-len", ex.max_len, "length cap")->check(CLI::PositiveNumber);
  expand->add_option("--format", ex.format)->check(CLI::IsMember({"text", "json"}));

  CheckOpts ck;
  auto* check = app.add_subcommand("check", "minimality of a word");
  add_base_opts(check, ck.base, true);
  check->add_option("word", ck.word, "digit word")->required();
  check->add_option("--oracle", ck.oracle, "search a lighter word with this length slack (-1: off)");
  check->add_option("--format", ck.format)->check(CLI::IsMember({"text", "json"}));

  EnumerateOpts en;
  auto* enumerate = app.add_subcommand("enumerate", "all minimal expansions of a value");
  add_base_opts(enumerate, en.base, false);
  enumerate->add_option("word", en.word, "word whose value is expanded");
  enumerate->add_option("--value", en.value, "integer value");
  enumerate->add_option("--format", en.format)->check(CLI::IsMember({"text", "json"}));

  AutomatonOpts au;
  auto* automaton = app.add_subcommand("automaton", "build and export automata");
  add_base_opts(automaton, au.base, true);
  automaton->add_option("--which", au.which, "A (zero), S (weight transducer), H (heavy inputs), M (minimal words)")
      ->check(CLI::IsMember({"A", "S", "H", "M"}));
  automaton->add_option("--format", au.format)->check(CLI::IsMember({"dot", "json", "text"}));
  automaton->add_option("--compare", au.compare, "explicit (golden M), generic or beta (integer systems)");
  automaton->add_option("--ws", au.ws, "state weights: greedy or tau")->check(CLI::IsMember({"greedy", "tau"}));
  automaton->add_flag("--stats", au.stats, "print sizes only");

  IntrepOpts ir;
  auto* intrep = app.add_subcommand("intrep", "integer representations");
  intrep->add_option("--system", ir.system, "F | T | S");
  intrep->add_option("--minform", ir.minform, "unique minimal form of N");
  intrep->add_option("--greedy", ir.greedy, "greedy representation of N >= 0");
  intrep->add_option("--weight", ir.weight, "minimal weight of N");
  intrep->add_option("--value", ir.value, "integer value of a word");
  intrep->add_option("--bounds", ir.bounds, "g_{n+1} and G_n")->check(CLI::PositiveNumber);
  intrep->add_option("--format", ir.format)->check(CLI::IsMember({"text", "json"}));

  StatsOpts st;
  auto* stats = app.add_subcommand("stats", "average weight and digit statistics");
  stats->add_option("--system", st.system, "F | T | S");
  stats->add_option("--M", st.M, "range [-M, M]");
  stats->add_option("--threads", st.threads, "worker threads (0: automatic)");
  stats->add_flag("--markov", st.markov, "print the limiting Markov chain and its stationary vector");
  stats->add_option("--format", st.format)->check(CLI::IsMember({"text", "json", "csv"}));

  CostOpts co;
  auto* cost = app.add_subcommand("cost", "additions needed for r scalar multiples, per log2 M");
  cost->add_option("--r", co.r, "numbers of multiples");
  cost->add_option("--naf-M", co.naf_M, "also measure the binary NAF average over [-M, M]");
  cost->add_option("--format", co.format)->check(CLI::IsMember({"text", "json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*expand) return cmd_expand(ex);
    if (*check) return cmd_check(ck);
    if (*enumerate) return cmd_enumerate(en);
    if (*automaton) return cmd_automaton(au);
    if (*intrep) return cmd_intrep(ir);
    if (*stats) return cmd_stats(st);
    if (*cost) return cmd_cost(co);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    // Resource limits (state caps, overflow) and unfinished expansions.
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
