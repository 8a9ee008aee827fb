#include "minweight/analysis.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <future>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace minweight {

QElem::QElem(const BetaField& f) : f_(std::make_shared<BetaField>(f)), c_(f.degree(), Rational(0)) {}

QElem::QElem(const BetaField& f, std::vector<Rational> coeffs) : QElem(f) {
  // Reduce modulo the minimal polynomial x^d = -sum low_i x^i.
  const int d = f.degree();
  const auto& poly = f.min_poly();  // highest degree first, monic
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= d; --k) {
    const Rational top = coeffs[k];
    if (top == 0) continue;
    for (int i = 0; i < d; ++i) coeffs[k - d + i] -= top * poly[d - i];
    coeffs[k] = 0;
  }
  for (int i = 0; i < d && i < static_cast<int>(coeffs.size()); ++i) c_[i] = coeffs[i];
}

QElem::QElem(const BetaField& f, const Rational& r) : QElem(f) { c_[0] = r; }

QElem QElem::beta(const BetaField& f) { return QElem(f, std::vector<Rational>{0, 1}); }

QElem QElem::from(const FieldElem& x) {
  const BetaField f = x.field();
  std::vector<Rational> c;
  for (Int v : x.coeffs()) c.emplace_back(v);
  return QElem(f, c) * beta(f).pow(x.shift());
}

bool QElem::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r == 0; });
}

long double QElem::approx() const {
  const long double b = f_->approx();
  long double acc = 0;
  for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) acc = acc * b + static_cast<long double>(c_[i]);
  return acc;
}

QElem QElem::operator-() const {
  QElem r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

QElem& QElem::operator+=(const QElem& o) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

QElem& QElem::operator-=(const QElem& o) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

QElem& QElem::operator*=(const QElem& o) {
  std::vector<Rational> prod(2 * c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) prod[i + j] += c_[i] * o.c_[j];
  }
  *this = QElem(*f_, std::move(prod));
  return *this;
}

QElem QElem::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  // Columns of the multiplication-by-this matrix are this * beta^j.
  const int d = static_cast<int>(c_.size());
  std::vector<std::vector<Rational>> a(d, std::vector<Rational>(d + 1, Rational(0)));
  QElem col = *this;
  const QElem b = beta(*f_);
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) a[i][j] = col.c_[i];
    col *= b;
  }
  a[0][d] = 1;
  for (int k = 0; k < d; ++k) {
    int piv = k;
    while (a[piv][k] == 0) ++piv;
    std::swap(a[k], a[piv]);
    for (int i = 0; i < d; ++i) {
      if (i == k || a[i][k] == 0) continue;
      const Rational t = a[i][k] / a[k][k];
      for (int j = k; j <= d; ++j) a[i][j] -= t * a[k][j];
    }
  }
  std::vector<Rational> x(d);
  for (int i = 0; i < d; ++i) x[i] = a[i][d] / a[i][i];
  return QElem(*f_, std::move(x));
}

QElem& QElem::operator/=(const QElem& o) { return *this *= o.inverse(); }

QElem QElem::pow(int k) const {
  QElem base = k < 0 ? inverse() : *this;
  QElem r(*f_, Rational(1));
  for (int e = std::abs(k); e > 0; e >>= 1) {
    if (e & 1) r *= base;
    base *= base;
  }
  return r;
}

std::string QElem::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << (c_[i] > 0 ? " + " : " - ");
    else if (c_[i] < 0) os << "-";
    first = false;
    const Rational m = c_[i] < 0 ? Rational(-c_[i]) : c_[i];
    if (i == 0 || m != 1) os << m;
    if (i > 0) os << (m != 1 ? "*" : "") << "b" << (i > 1 ? "^" + std::to_string(i) : "");
  }
  if (first) os << "0";
  return os.str();
}

MarkovModel markov_model(Base base) {
  const BetaField f = field_of(base);
  const QElem b = QElem::beta(f), one(f, Rational(1)), zero(f);
  auto ib = [&](int k) { return b.pow(-k); };
  const QElem half(f, Rational(1, 2));
  MarkovModel m{base, {}, {}};
  auto sized = [&](int n) { m.p.assign(n, std::vector<QElem>(n, zero)); };
  switch (base) {
    case Base::golden:
      m.labels = {"100", "010", "001", "000", "00T", "0T0", "T00"};
      sized(7);
      m.p[0][3] = QElem(f, Rational(2)) * ib(2);
      m.p[0][4] = ib(3);
      m.p[1][0] = one;
      m.p[2][1] = one;
      m.p[3][2] = half * ib(2);
      m.p[3][3] = ib(1);
      m.p[3][4] = half * ib(2);
      m.p[4][5] = one;
      m.p[5][6] = one;
      m.p[6][2] = ib(3);
      m.p[6][3] = QElem(f, Rational(2)) * ib(2);
      break;
    case Base::tribonacci:
      m.labels = {"10", "01", "00", "0T", "T0"};
      sized(5);
      m.p[0][2] = (b * b - one) * ib(2);
      m.p[0][3] = ib(2);
      m.p[1][0] = one;
      m.p[2][1] = (b - one) * half * ib(1);
      m.p[2][2] = ib(1);
      m.p[2][3] = (b - one) * half * ib(1);
      m.p[3][4] = one;
      m.p[4][1] = ib(2);
      m.p[4][2] = (b * b - one) * ib(2);
      break;
    case Base::smallest_pisot: {
      // 1 0^6, 0 1 0^5, ..., 0^6 1, 0^7, 0^6 T, ..., T 0^6.
      for (int k = 0; k < 7; ++k) m.labels.push_back(std::string(k, '0') + "1" + std::string(6 - k, '0'));
      m.labels.push_back(std::string(7, '0'));
      for (int k = 6; k >= 0; --k) m.labels.push_back(std::string(k, '0') + "T" + std::string(6 - k, '0'));
      sized(15);
      m.p[0][7] = QElem(f, Rational(2)) * ib(3);
      m.p[0][8] = ib(7);
      for (int i = 1; i <= 6; ++i) m.p[i][i - 1] = one;
      m.p[7][6] = half * ib(5);
      m.p[7][7] = ib(1);
      m.p[7][8] = half * ib(5);
      for (int i = 8; i <= 13; ++i) m.p[i][i + 1] = one;
      m.p[14][6] = ib(7);
      m.p[14][7] = QElem(f, Rational(2)) * ib(3);
      break;
    }
  }
  return m;
}

namespace {

// Solves a x = rhs (square) by Gauss-Jordan elimination; returns the rank.
int solve(QMatrix a, std::vector<QElem> rhs, std::vector<QElem>& x) {
  const int n = static_cast<int>(a.size());
  int rank = 0;
  std::vector<int> pivot_col;
  for (int c = 0; c < n && rank < n; ++c) {
    int piv = -1;
    for (int r = rank; r < n; ++r)
      if (!a[r][c].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[rank], a[piv]);
    std::swap(rhs[rank], rhs[piv]);
    const QElem inv = a[rank][c].inverse();
    for (int j = c; j < n; ++j) a[rank][j] *= inv;
    rhs[rank] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == rank || a[r][c].is_zero()) continue;
      const QElem t = a[r][c];
      for (int j = c; j < n; ++j) a[r][j] -= t * a[rank][j];
      rhs[r] -= t * rhs[rank];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  x.assign(n, QElem(rhs[0].field()));
  for (int r = 0; r < rank; ++r) x[pivot_col[r]] = rhs[r];
  return rank;
}

}  // namespace

std::vector<QElem> stationary(const MarkovModel& m) {
  const int n = static_cast<int>(m.p.size());
  const BetaField f = m.p[0][0].field();
  // Rows of (P - I)^T pi = 0, the last one replaced by sum pi = 1.
  QMatrix a(n, std::vector<QElem>(n, QElem(f)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m.p[j][i] - (i == j ? QElem(f, Rational(1)) : QElem(f));
  // The fixed space is one-dimensional iff P - I has rank n - 1.
  std::vector<QElem> unused;
  if (solve(a, std::vector<QElem>(n, QElem(f)), unused) != n - 1)
    throw std::runtime_error("stationary vector is not unique");
  a[n - 1].assign(n, QElem(f, Rational(1)));
  std::vector<QElem> rhs(n, QElem(f));
  rhs[n - 1] = QElem(f, Rational(1));
  std::vector<QElem> pi;
  if (solve(a, rhs, pi) != n) throw std::runtime_error("stationary vector is not unique");
  return pi;
}

QElem nonzero_frequency(Base b) {
  const MarkovModel m = markov_model(b);
  const auto pi = stationary(m);
  QElem sum(field_of(b));
  for (std::size_t i = 0; i < pi.size(); ++i)
    if (m.labels[i][0] != '0') sum += pi[i];
  return sum;
}

QElem characteristic_value(const MarkovModel& m, const QElem& x) {
  const int n = static_cast<int>(m.p.size());
  QMatrix a = m.p;
  for (int i = 0; i < n; ++i) a[i][i] -= x;
  QElem det(x.field(), Rational(1));
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (!a[r][c].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return QElem(x.field());
    if (piv != c) {
      std::swap(a[c], a[piv]);
      det = -det;
    }
    det *= a[c][c];
    const QElem inv = a[c][c].inverse();
    for (int r = c + 1; r < n; ++r) {
      if (a[r][c].is_zero()) continue;
      const QElem t = a[r][c] * inv;
      for (int j = c; j < n; ++j) a[r][j] -= t * a[c][j];
    }
  }
  return det;
}

std::vector<std::complex<double>> eigenvalues(const MarkovModel& m) {
  const int n = static_cast<int>(m.p.size());
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = static_cast<double>(m.p[i][j].approx());
  const Eigen::VectorXcd ev = a.eigenvalues();
  std::vector<std::complex<double>> out(ev.data(), ev.data() + n);
  std::sort(out.begin(), out.end(), [](auto x, auto y) {
    return std::abs(x) != std::abs(y) ? std::abs(x) > std::abs(y)
                                      : (x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag());
  });
  return out;
}

WeightExperiment average_weight_experiment(const NumerationSystem& sys, Int M, int threads) {
  if (M < 1) throw std::invalid_argument("M must be positive");
  if (threads <= 0) threads = static_cast<int>(std::max(1u, std::min(8u, std::thread::hardware_concurrency())));
  // Warm the shared caches before fanning out.
  (void)unique_minform(1, sys);
  const Int count = 2 * M + 1;
  std::vector<std::future<std::pair<Int, Int>>> parts;
  for (int t = 0; t < threads; ++t) {
    const Int lo = -M + count * t / threads, hi = -M + count * (t + 1) / threads;
    parts.push_back(std::async(std::launch::async, [lo, hi, &sys] {
      Int wsum = 0, lsum = 0;
      for (Int N = lo; N < hi; ++N) {
        const DigitWord x = unique_minform(N, sys);
        wsum += weight(x);
        lsum += static_cast<Int>(x.size());
      }
      return std::pair{wsum, lsum};
    }));
  }
  WeightExperiment e;
  e.M = M;
  for (auto& p : parts) {
    auto [ws, ls] = p.get();
    e.total_weight += ws;
    e.total_length += ls;
  }
  e.length = 1;
  while (bounds_gG(e.length, sys).G < M) ++e.length;
  e.average = Rational(e.total_weight, count);
  const double avg = static_cast<double>(e.average);
  e.per_digit = avg / e.length;
  e.per_log = avg * std::log(static_cast<double>(sys.field().approx())) / std::log(static_cast<double>(M));
  return e;
}

int naf2_weight(Int N) {
  int w = 0;
  while (N != 0) {
    if (N & 1) {
      // Digit 2 - (N mod 4): +1 when N = 1 mod 4, -1 when N = 3 mod 4.
      const Int d = 2 - (((N % 4) + 4) % 4);
      N -= d;
      ++w;
    }
    N /= 2;
  }
  return w;
}

NafExperiment naf2_average(Int M) {
  if (M < 1) throw std::invalid_argument("M must be positive");
  NafExperiment e;
  e.M = M;
  for (Int N = -M; N <= M; ++N) e.total_weight += naf2_weight(N);
  e.average = Rational(e.total_weight, 2 * M + 1);
  e.length = 1;
  while (((Int{1} << (e.length + 1)) / 3) < M) ++e.length;
  e.per_digit = static_cast<double>(e.average) / e.length;
  e.per_bit = static_cast<double>(e.average) / std::log2(static_cast<double>(M));
  return e;
}

std::vector<CostRow> cost_table() {
  auto lb = [](Base b) { return static_cast<double>(std::log2(field_of(b).approx())); };
  auto val = [](const QElem& x) { return static_cast<double>(x.approx()); };
  const BetaField g = field_of(Base::golden);
  const QElem gb = QElem::beta(g);
  const QElem one(g, Rational(1));
  return {
      {"2^n", "{0,1}", 1.0, 0.5},
      {"2^n", "{-1,0,1}", 1.0, 1.0 / 3.0},
      {"F_n", "{0,1}", lb(Base::golden), val((gb * gb + one).inverse())},
      {"F_n", "{-1,0,1}", lb(Base::golden), val(nonzero_frequency(Base::golden))},
      {"T_n", "{-1,0,1}", lb(Base::tribonacci), val(nonzero_frequency(Base::tribonacci))},
      {"S_n", "{-1,0,1}", lb(Base::smallest_pisot), val(nonzero_frequency(Base::smallest_pisot))},
  };
}

}  // namespace minweight
