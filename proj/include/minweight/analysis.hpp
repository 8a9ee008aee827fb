#pragma once

// Weight statistics: the limiting Markov chains of the digit windows of minimal
// forms, their exact stationary vectors, empirical average weights and the cost
// comparison for computing many scalar multiples.

#include "minweight/algebra.hpp"
#include "minweight/expand.hpp"
#include "minweight/intsys.hpp"

#include <complex>
#include <memory>
#include <string>
#include <vector>

namespace minweight {

/// Element of Q(beta): sum c_i beta^i, i < degree.
class QElem {
 public:
  QElem() = default;
  explicit QElem(const BetaField& f);
  QElem(const BetaField& f, std::vector<Rational> coeffs);
  QElem(const BetaField& f, const Rational& r);
  static QElem beta(const BetaField& f);
  static QElem from(const FieldElem& x);

  const std::vector<Rational>& coeffs() const { return c_; }
  const BetaField& field() const { return *f_; }
  bool is_zero() const;
  long double approx() const;

  QElem operator-() const;
  QElem& operator+=(const QElem& o);
  QElem& operator-=(const QElem& o);
  QElem& operator*=(const QElem& o);
  QElem& operator/=(const QElem& o);
  friend QElem operator+(QElem a, const QElem& b) { return a += b; }
  friend QElem operator-(QElem a, const QElem& b) { return a -= b; }
  friend QElem operator*(QElem a, const QElem& b) { return a *= b; }
  friend QElem operator/(QElem a, const QElem& b) { return a /= b; }
  QElem inverse() const;
  QElem pow(int k) const;
  bool operator==(const QElem& o) const { return c_ == o.c_; }
  std::string to_string() const;

 private:
  std::shared_ptr<BetaField> f_;
  std::vector<Rational> c_;
};

using QMatrix = std::vector<std::vector<QElem>>;

struct MarkovModel {
  Base base;
  std::vector<std::string> labels;  // digit windows in the word grammar
  QMatrix p;                        // p[u][v] = Pr[next = v | current = u]
};

MarkovModel markov_model(Base b);

/// Exact left fixed vector normalized to sum 1. Throws std::runtime_error when
/// the fixed space is not one-dimensional.
std::vector<QElem> stationary(const MarkovModel& m);

/// Stationary mass of the windows starting with a nonzero digit: the limiting
/// density of nonzero digits in minimal forms.
QElem nonzero_frequency(Base b);

/// det(p - x I) by exact elimination.
QElem characteristic_value(const MarkovModel& m, const QElem& x);

/// Numerical eigenvalues of the matrix.
std::vector<std::complex<double>> eigenvalues(const MarkovModel& m);

struct WeightExperiment {
  Int M = 0;
  Int total_weight = 0;     // sum of ||N||_U over -M <= N <= M
  Int total_length = 0;     // sum of the lengths of the minimal forms
  int length = 0;           // n with G_{n-1} < M <= G_n
  Rational average;         // total_weight / (2M+1)
  double per_digit = 0;     // average / length: nonzero density in length-n windows
  double per_log = 0;       // average / log_beta M
};

/// Exact average of int_min_weight over [-M, M], split over `threads` workers.
WeightExperiment average_weight_experiment(const NumerationSystem& sys, Int M, int threads = 0);

/// Weight of the binary non-adjacent form of N.
int naf2_weight(Int N);

struct NafExperiment {
  Int M = 0;
  Int total_weight = 0;
  int length = 0;  // n with G_{n-1} < M <= G_n, G_n = floor(2^{n+1}/3) the largest n-digit NAF
  Rational average;
  double per_digit = 0;  // average / length
  double per_bit = 0;    // average / log_2 M
};
NafExperiment naf2_average(Int M);

struct CostRow {
  std::string system;  // "2^n", "F_n", "T_n", "S_n"
  std::string digits;  // "{0,1}" or "{-1,0,1}"
  double log2_beta = 0;
  double density = 0;  // average weight per digit
  /// Average weight as a multiple of log_2 M.
  double weight_per_log2() const { return density / log2_beta; }
  /// Additions for r multiples (recurrence steps plus r digit sums), per log_2 M.
  double cost_per_log2(int r) const { return (1.0 + r * density) / log2_beta; }
};

/// The six numeration systems compared for scalar multiplication.
std::vector<CostRow> cost_table();

}  // namespace minweight
