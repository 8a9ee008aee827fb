#include "doctest.h"
#include "minweight/algebra.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <random>

using namespace minweight;
using Dec = boost::multiprecision::cpp_dec_float_100;

namespace {

// beta to 100 digits by bisection on the polynomial, independent of the field's own intervals.
Dec beta_dec(const std::vector<Int>& poly) {
  auto eval = [&](const Dec& x) {
    Dec acc = 0;
    for (Int c : poly) acc = acc * x + c;
    return acc;
  };
  Dec lo = 1, hi = 2;
  while (eval(hi) < 0) hi *= 2;
  for (int i = 0; i < 340; ++i) {
    Dec mid = (lo + hi) / 2;
    (eval(mid) < 0 ? lo : hi) = mid;
  }
  return lo;
}

Dec embed(const FieldElem& x, const Dec& b) {
  Dec acc = 0, p = 1;
  for (Int c : x.coeffs()) {
    acc += p * c;
    p *= b;
  }
  return acc * pow(b, Dec(x.shift()));
}

FieldElem random_elem(const BetaField& f, std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-30, 30), sh(-6, 3);
  std::vector<Int> co(f.degree());
  for (auto& v : co) v = c(rng);
  return f.make(co, sh(rng));
}

std::vector<BetaField> fields() { return {BetaField::golden(), BetaField::tribonacci(), BetaField::smallest_pisot()}; }

}  // namespace

TEST_CASE("construction of the three built-in fields") {
  const BetaField g({1, -1, -1}), t({1, -1, -1, -1}), s({1, 0, -1, -1});
  CHECK(g.is_pisot());
  CHECK(t.is_pisot());
  CHECK(s.is_pisot());
  CHECK(g.approx() == doctest::Approx(1.6180339887));
  CHECK(t.approx() == doctest::Approx(1.8392867552));
  CHECK(s.approx() == doctest::Approx(1.3247179572));
  CHECK(g == BetaField::golden());
  CHECK(g.min_poly() == std::vector<Int>{1, -1, -1});
}

TEST_CASE("isolating interval brackets a sign change above 1") {
  for (const auto& f : fields()) {
    auto [lo, hi] = f.isolating_interval();
    CHECK(lo > 1);
    CHECK(lo < hi);
    auto eval = [&](const Rational& x) {
      Rational acc = 0;
      for (Int c : f.min_poly()) acc = acc * x + c;
      return acc;
    };
    CHECK(eval(lo) * eval(hi) < 0);
  }
}

TEST_CASE("invalid polynomials are rejected") {
  CHECK_THROWS_AS(BetaField({2, -1, -1}), std::invalid_argument);  // not monic
  CHECK_THROWS_AS(BetaField({1, -2}), std::invalid_argument);      // degree 1
  CHECK_THROWS_AS(BetaField({1, 0, 1}), std::invalid_argument);    // no real root > 1
  CHECK_THROWS_AS(BetaField({1, -1, 0}), std::invalid_argument);   // zero constant term
}

TEST_CASE("non-Pisot number is flagged") {
  const BetaField f({1, 0, -2});  // sqrt 2, conjugate -sqrt 2
  CHECK_FALSE(f.is_pisot());
}

TEST_CASE("arithmetic identities") {
  const BetaField g = BetaField::golden();
  const FieldElem b = g.beta();
  CHECK(b * b == b + 1);
  CHECK((b * b).coeffs()[0] == 1);
  CHECK((b * b).coeffs()[1] == 1);
  CHECK((b - 1) * b == g.one());
  CHECK(g.beta_pow(-1) == b - 1);

  const BetaField t = BetaField::tribonacci();
  const FieldElem tb = t.beta();
  CHECK(tb * tb * tb == tb * tb + tb + 1);
}

TEST_CASE("sign and floor examples") {
  const BetaField g = BetaField::golden();
  const FieldElem b = g.beta();
  CHECK(sign(g.zero()) == 0);
  CHECK(sign(b * b - 2) == 1);
  CHECK(sign(g.integer(2) - b * b) == -1);
  CHECK(floor_of(b) == 1);
  CHECK(floor_of(b * b) == 2);
  CHECK(floor_of(g.integer(3)) == 3);
  CHECK(floor_of(g.integer(-3)) == -3);
}

TEST_CASE("zero is unique and reduction is canonical") {
  const BetaField g = BetaField::golden();
  const FieldElem z = g.beta() * g.beta() - g.beta() - 1;
  CHECK(z.is_zero());
  CHECK(z.shift() == 0);
  for (Int c : z.coeffs()) CHECK(c == 0);
  CHECK(z.to_string() == g.zero().to_string());
  // Elements of Z[beta] carry shift 0.
  CHECK(g.make(std::vector<Int>{0, 0, 0, 5}, -2).shift() == 0);
}

TEST_CASE("conjugate bounds") {
  const BetaField g = BetaField::golden();
  CHECK(conjugate_abs_bound(g.zero(), 0) == 0);
  const long double one = conjugate_abs_bound(g.one(), 0);
  CHECK(one >= 1);
  CHECK(one <= 1.000001L);
  const long double c = conjugate_abs_bound(g.beta(), 0);
  CHECK(c >= 0.61L);
  CHECK(c <= 0.63L);
  for (const auto& f : fields())
    for (long double m : f.conjugate_moduli_bounds()) CHECK(m < 1);
}

TEST_CASE("conjugate bounds dominate the true conjugates") {
  std::mt19937 rng(7);
  for (const auto& f : fields()) {
    for (int it = 0; it < 200; ++it) {
      const FieldElem x = random_elem(f, rng);
      for (int j = 0; j < f.degree() - 1; ++j) {
        const std::complex<long double> r = f.conjugates()[j];
        std::complex<long double> acc = 0, p = 1;
        for (Int c : x.coeffs()) {
          acc += p * static_cast<long double>(c);
          p *= r;
        }
        acc *= std::pow(r, x.shift());
        CHECK(std::abs(acc) <= conjugate_abs_bound(x, j) * (1 + 1e-12L) + 1e-15L);
      }
    }
  }
}

TEST_CASE("sign, compare and floor agree with a 100-digit oracle") {
  std::mt19937 rng(1);
  for (const auto& f : fields()) {
    const Dec b = beta_dec(f.min_poly());
    for (int it = 0; it < 1000; ++it) {
      const FieldElem x = random_elem(f, rng);
      const Dec v = embed(x, b);
      const int expect = x.is_zero() ? 0 : (v > 0 ? 1 : -1);
      CHECK(sign(x) == expect);
      const Int fl = floor_of(x);
      CHECK(Dec(fl) <= v + Dec("1e-80"));
      CHECK(v < Dec(fl + 1));
      CHECK(sign(x - fl) >= 0);
      CHECK(sign(x - (fl + 1)) < 0);
    }
  }
}

TEST_CASE("sign(a - b) = 0 iff a == b") {
  std::mt19937 rng(2);
  for (const auto& f : fields()) {
    for (int it = 0; it < 300; ++it) {
      const FieldElem a = random_elem(f, rng);
      const FieldElem c = it % 3 == 0 ? a.times_beta_pow(2).times_beta_pow(-2) : random_elem(f, rng);
      CHECK((compare(a, c) == 0) == (a == c));
    }
  }
}

TEST_CASE("ring laws and beta * beta^-1 = 1") {
  std::mt19937 rng(3);
  for (const auto& f : fields()) {
    CHECK(f.beta() * f.beta_pow(-1) == f.one());
    for (int it = 0; it < 200; ++it) {
      const FieldElem a = random_elem(f, rng), b = random_elem(f, rng), c = random_elem(f, rng);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a - a == f.zero());
    }
  }
}

TEST_CASE("ratio floor and rounding") {
  const BetaField g = BetaField::golden();
  const FieldElem b = g.beta();
  // slope (beta^2 + 1) / (2 beta) times beta: (beta^2 + 1) / 2 = 1.809..
  const Ratio slope(b * b + 1, b * 2);
  CHECK(floor_of(Ratio(b * b + 1, g.integer(2))) == 1);
  CHECK(round_half_up(slope, b) == 2);
  CHECK(round_half_up(slope, g.zero()) == 0);
  // Exact tie: slope 1, x = 1/2 is not in Z[beta], so use x = 3 with slope 1/2.
  CHECK(round_half_up(Ratio(g.one(), g.integer(2)), g.integer(3)) == 2);
  CHECK(compare(Ratio(g.one(), g.integer(3)), Ratio(g.one(), g.integer(2))) < 0);
}

TEST_CASE("eventually periodic values") {
  const BetaField g = BetaField::golden();
  // .(0010)^omega = 1 / (beta^2 + 1)
  const std::vector<int> none, period{0, 0, 1, 0};
  const Ratio r = eventually_periodic_value(g, none, period);
  CHECK(compare(r, Ratio(g.one(), g.beta() * g.beta() + 1)) == 0);
}
