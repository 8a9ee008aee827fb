#include "minweight/algebra.hpp"

#include "field_core.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace minweight {

namespace detail {

namespace {

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("field coefficient overflow");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("field coefficient overflow");
  return r;
}

// Polynomials with rational coefficients, lowest power first.
using RPoly = std::vector<Rational>;

void trim(RPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RPoly rem(RPoly a, const RPoly& b) {
  trim(a);
  const auto db = b.size() - 1;
  while (a.size() >= b.size() && !a.empty()) {
    const Rational q = a.back() / b.back();
    const auto off = a.size() - b.size();
    for (std::size_t i = 0; i <= db; ++i) a[off + i] -= q * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

int rpoly_sign_at(const RPoly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc > 0 ? 1 : (acc < 0 ? -1 : 0);
}

struct Sturm {
  std::vector<RPoly> seq;

  explicit Sturm(const std::vector<Int>& poly_high) {
    RPoly p(poly_high.rbegin(), poly_high.rend());
    RPoly dp;
    for (std::size_t i = 1; i < p.size(); ++i) dp.push_back(p[i] * Rational(static_cast<long long>(i)));
    seq.push_back(p);
    seq.push_back(dp);
    while (true) {
      RPoly r = rem(seq[seq.size() - 2], seq.back());
      if (r.empty()) break;
      for (auto& c : r) c = -c;
      seq.push_back(std::move(r));
    }
  }

  int variations(const Rational& x) const {
    int count = 0, last = 0;
    for (const auto& p : seq) {
      const int s = rpoly_sign_at(p, x);
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }

  // Distinct roots in (a, b].
  int count(const Rational& a, const Rational& b) const { return variations(a) - variations(b); }
};

// Enclosures of beta^i * 2^bits for i < d, from the dyadic interval.
void compute_powers(const BigInt& lo, const BigInt& hi, unsigned bits, int d,
                    std::vector<BigInt>& out_lo, std::vector<BigInt>& out_hi) {
  out_lo.assign(d, BigInt(0));
  out_hi.assign(d, BigInt(0));
  const BigInt one = BigInt(1) << bits;
  BigInt plo = 1, phi = 1;
  for (int i = 0; i < d; ++i) {
    if (i == 0) {
      out_lo[0] = one;
      out_hi[0] = one;
      continue;
    }
    plo *= lo;
    phi *= hi;
    const unsigned sh = bits * static_cast<unsigned>(i - 1);
    out_lo[i] = plo >> sh;
    BigInt q = phi >> sh;
    if ((q << sh) != phi) q += 1;
    out_hi[i] = q;
  }
}

// Bisect [lo, hi]/2^bits down to width 2^-target (rescaling numerators).
void refine_interval(const std::vector<Int>& poly, int sign_at_lo, BigInt& lo, BigInt& hi,
                     unsigned& bits, unsigned target) {
  if (target > bits) {
    lo <<= (target - bits);
    hi <<= (target - bits);
    bits = target;
  }
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) >> 1;
    const int s = poly_sign_at_dyadic(poly, mid, bits);
    if (s == 0) {
      lo = hi = mid;
      break;
    }
    if (s == sign_at_lo)
      lo = mid;
    else
      hi = mid;
  }
}

int interval_sign(std::span<const BigInt> c, const std::vector<BigInt>& plo,
                  const std::vector<BigInt>& phi) {
  BigInt s_lo = 0, s_hi = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] >= 0) {
      s_lo += c[i] * plo[i];
      s_hi += c[i] * phi[i];
    } else {
      s_lo += c[i] * phi[i];
      s_hi += c[i] * plo[i];
    }
  }
  if (s_lo > 0) return 1;
  if (s_hi < 0) return -1;
  return 0;  // undecided
}

using CLD = std::complex<long double>;

CLD eval_poly(const std::vector<Int>& poly_high, CLD z) {
  CLD acc = 0;
  for (Int c : poly_high) acc = acc * z + static_cast<long double>(c);
  return acc;
}

CLD eval_dpoly(const std::vector<Int>& poly_high, CLD z) {
  const int d = static_cast<int>(poly_high.size()) - 1;
  CLD acc = 0;
  for (int i = 0; i < d; ++i) acc = acc * z + static_cast<long double>(poly_high[i]) * static_cast<long double>(d - i);
  return acc;
}

void compute_conjugates(FieldCore& core) {
  const int d = core.d;
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
  for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) companion(i, d - 1) = -static_cast<double>(core.low[i]);
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  std::vector<CLD> roots;
  for (int i = 0; i < d; ++i) {
    CLD z(solver.eigenvalues()[i].real(), solver.eigenvalues()[i].imag());
    for (int it = 0; it < 50; ++it) {
      const CLD dp = eval_dpoly(core.poly, z);
      if (std::abs(dp) == 0) break;
      const CLD step = eval_poly(core.poly, z) / dp;
      z -= step;
      if (std::abs(step) < 1e-30L) break;
    }
    roots.push_back(z);
  }
  // Drop the root nearest to beta.
  auto nearest = std::min_element(roots.begin(), roots.end(), [&](CLD a, CLD b) {
    return std::abs(a - CLD(core.approx)) < std::abs(b - CLD(core.approx));
  });
  roots.erase(nearest);
  std::sort(roots.begin(), roots.end(), [](CLD a, CLD b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });

  const long double eps = std::numeric_limits<long double>::epsilon();
  core.conj = roots;
  core.conj_radius.clear();
  core.conj_bound.clear();
  core.pisot = true;
  for (const CLD& z : roots) {
    long double mag = 0;
    for (Int c : core.poly) mag = mag * std::abs(z) + std::abs(static_cast<long double>(c));
    const long double pz = std::abs(eval_poly(core.poly, z)) + 16 * eps * mag;
    const long double dpz = std::abs(eval_dpoly(core.poly, z));
    // A disc of radius d|p/p'| around any point contains a root of p.
    long double r = dpz > 0 ? d * pz / dpz : 1.0L;
    r = r * (1 + 1e-6L) + 1e-18L;
    core.conj_radius.push_back(r);
    core.conj_bound.push_back(std::abs(z) + r);
    if (std::abs(z) + r >= 1) core.pisot = false;
  }
}

}  // namespace

int poly_sign_at_dyadic(const std::vector<Int>& poly, const BigInt& num, unsigned bits) {
  // value * 2^(d*bits) = sum P_i num^i 2^((d-i) bits), by Horner.
  const int d = static_cast<int>(poly.size()) - 1;
  BigInt acc = poly[0];
  for (int k = 1; k <= d; ++k) acc = acc * num + BigInt(poly[k]) * (BigInt(1) << (bits * static_cast<unsigned>(k)));
  return acc > 0 ? 1 : (acc < 0 ? -1 : 0);
}

}  // namespace detail

using detail::FieldCore;

// ---------------------------------------------------------------- BetaField

BetaField::BetaField(std::vector<Int> min_poly) {
  while (!min_poly.empty() && min_poly.front() == 0) min_poly.erase(min_poly.begin());
  if (min_poly.size() < 3)
    throw std::invalid_argument("minimal polynomial must have degree >= 2 (integer bases are not supported)");
  if (min_poly.front() != 1) throw std::invalid_argument("minimal polynomial must be monic");
  if (min_poly.back() == 0) throw std::invalid_argument("minimal polynomial has zero constant term");

  auto core = std::make_shared<FieldCore>();
  core->poly = min_poly;
  core->d = static_cast<int>(min_poly.size()) - 1;
  core->low.assign(core->d, 0);
  for (int i = 0; i < core->d; ++i) core->low[i] = min_poly[core->d - i];
  core->unit = (core->low[0] == 1 || core->low[0] == -1);

  // Isolate the largest real root in (1, C] with C a Cauchy bound.
  Int cmax = 0;
  for (std::size_t i = 1; i < min_poly.size(); ++i) cmax = std::max(cmax, std::abs(min_poly[i]));
  detail::Sturm sturm(min_poly);
  Rational lo = 1, hi = Rational(1 + cmax);
  if (sturm.count(lo, hi) == 0) throw std::invalid_argument("minimal polynomial has no real root > 1");
  for (int guard = 0; guard < 4096; ++guard) {
    const int n = sturm.count(lo, hi);
    if (n == 1 && lo > 1) break;
    const Rational mid = (lo + hi) / 2;
    if (sturm.count(mid, hi) >= 1)
      lo = mid;
    else
      hi = mid;
  }
  const int s_hi = detail::rpoly_sign_at(detail::RPoly(min_poly.rbegin(), min_poly.rend()), hi);
  const int s_lo = detail::rpoly_sign_at(detail::RPoly(min_poly.rbegin(), min_poly.rend()), lo);
  if (s_hi == 0 || s_lo == 0) throw std::invalid_argument("minimal polynomial has a rational root > 1");
  if (s_hi == s_lo) throw std::invalid_argument("root > 1 is not simple");

  // Endpoints are dyadic; express them over a common power of two.
  unsigned bits = 0;
  while (true) {
    const Rational scale = Rational(BigInt(1) << bits);
    const Rational a = lo * scale, b = hi * scale;
    if (denominator(a) == 1 && denominator(b) == 1) {
      core->lo_num = numerator(a);
      core->hi_num = numerator(b);
      break;
    }
    ++bits;
  }
  core->bits = bits;
  core->sign_at_lo = s_lo;
  detail::refine_interval(core->poly, s_lo, core->lo_num, core->hi_num, core->bits, detail::kBaseBits);
  detail::compute_powers(core->lo_num, core->hi_num, core->bits, core->d, core->pow_lo, core->pow_hi);

  {
    BigInt flo = core->lo_num >> (core->bits - detail::kFastBits);
    BigInt fhi = (core->hi_num >> (core->bits - detail::kFastBits)) + 1;
    std::vector<BigInt> plo, phi;
    detail::compute_powers(flo, fhi, detail::kFastBits, core->d, plo, phi);
    core->fast_ok = core->d <= 8 && phi.back() < (BigInt(1) << 62);
    if (core->fast_ok) {
      for (int i = 0; i < core->d; ++i) {
        core->fast_lo.push_back(static_cast<__int128>(static_cast<long long>(plo[i])));
        core->fast_hi.push_back(static_cast<__int128>(static_cast<long long>(phi[i])));
      }
    }
    core->approx = static_cast<long double>(Rational(core->lo_num, BigInt(1) << core->bits).convert_to<long double>());
  }
  detail::compute_conjugates(*core);
  core_ = std::move(core);
}

BetaField BetaField::golden() {
  static const BetaField f({1, -1, -1});
  return f;
}

BetaField BetaField::tribonacci() {
  static const BetaField f({1, -1, -1, -1});
  return f;
}

BetaField BetaField::smallest_pisot() {
  static const BetaField f({1, 0, -1, -1});
  return f;
}

int BetaField::degree() const { return core_->d; }
const std::vector<Int>& BetaField::min_poly() const { return core_->poly; }
bool BetaField::is_pisot() const { return core_->pisot; }
bool BetaField::is_unit() const { return core_->unit; }
long double BetaField::approx() const { return core_->approx; }
const std::vector<std::complex<long double>>& BetaField::conjugates() const { return core_->conj; }
const std::vector<long double>& BetaField::conjugate_radii() const { return core_->conj_radius; }
const std::vector<long double>& BetaField::conjugate_moduli_bounds() const { return core_->conj_bound; }

std::pair<Rational, Rational> BetaField::isolating_interval() const {
  const BigInt den = BigInt(1) << core_->bits;
  return {Rational(core_->lo_num, den), Rational(core_->hi_num, den)};
}

bool BetaField::operator==(const BetaField& other) const {
  return core_ == other.core_ || core_->poly == other.core_->poly;
}

FieldElem BetaField::zero() const { return FieldElem(core_, FieldElem::Coeffs(core_->d, 0), 0); }
FieldElem BetaField::one() const { return integer(1); }
FieldElem BetaField::integer(Int n) const {
  FieldElem::Coeffs c(core_->d, 0);
  c[0] = n;
  return FieldElem(core_, std::move(c), 0);
}
FieldElem BetaField::beta() const { return beta_pow(1); }
FieldElem BetaField::beta_pow(int k) const { return one().times_beta_pow(k); }
FieldElem BetaField::make(std::span<const Int> coeffs, int shift) const { return FieldElem(*this, coeffs, shift); }

std::string BetaField::to_string() const {
  std::ostringstream os;
  os << "x^" << core_->d;
  for (int i = 1; i <= core_->d; ++i) {
    const Int c = core_->poly[i];
    if (c == 0) continue;
    os << (c > 0 ? " + " : " - ");
    const int p = core_->d - i;
    if (std::abs(c) != 1 || p == 0) os << std::abs(c);
    if (p >= 1) os << "x";
    if (p >= 2) os << "^" << p;
  }
  return os.str();
}

// ---------------------------------------------------------------- FieldElem

FieldElem::FieldElem(const BetaField& field, std::span<const Int> coeffs, int shift)
    : core_(field.core_), shift_(shift) {
  const int d = core_->d;
  std::vector<Int> c(coeffs.begin(), coeffs.end());
  for (int k = static_cast<int>(c.size()) - 1; k >= d; --k) {
    const Int top = c[k];
    if (top == 0) continue;
    for (int i = 0; i < d; ++i)
      c[k - d + i] = detail::checked_add(c[k - d + i], -detail::checked_mul(top, core_->low[i]));
    c[k] = 0;
  }
  c.resize(d, 0);
  coeffs_.assign(c.begin(), c.end());
  normalize();
}

FieldElem::FieldElem(std::shared_ptr<const detail::FieldCore> core, Coeffs c, int shift)
    : core_(std::move(core)), coeffs_(std::move(c)), shift_(shift) {
  normalize();
}

bool FieldElem::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Int c) { return c == 0; });
}

void FieldElem::multiply_by_beta() {
  const int d = core_->d;
  const Int top = coeffs_[d - 1];
  for (int i = d - 1; i >= 1; --i)
    coeffs_[i] = detail::checked_add(coeffs_[i - 1], -detail::checked_mul(top, core_->low[i]));
  coeffs_[0] = -detail::checked_mul(top, core_->low[0]);
}

bool FieldElem::try_divide_by_beta() {
  const int d = core_->d;
  const Int a0 = core_->low[0];
  if (coeffs_[0] % a0 != 0) return false;
  const Int t = -coeffs_[0] / a0;
  for (int i = 1; i < d; ++i) coeffs_[i - 1] = detail::checked_add(coeffs_[i], detail::checked_mul(t, core_->low[i]));
  coeffs_[d - 1] = t;
  return true;
}

void FieldElem::normalize() {
  if (is_zero()) {
    shift_ = 0;
    return;
  }
  while (shift_ > 0) {
    multiply_by_beta();
    --shift_;
  }
  while (shift_ < 0) {
    Coeffs saved = coeffs_;
    if (!try_divide_by_beta()) {
      coeffs_ = std::move(saved);
      break;
    }
    ++shift_;
  }
}

void FieldElem::align_to(int target) {
  // Lower the shift to `target` (<= shift_) by multiplying coefficients by beta.
  while (shift_ > target) {
    multiply_by_beta();
    --shift_;
  }
}

FieldElem FieldElem::operator-() const {
  FieldElem r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  if (core_ != o.core_ && core_->poly != o.core_->poly) throw std::invalid_argument("field mismatch");
  FieldElem b = o;
  const int s = std::min(shift_, b.shift_);
  align_to(s);
  b.align_to(s);
  for (int i = 0; i < core_->d; ++i) coeffs_[i] = detail::checked_add(coeffs_[i], b.coeffs_[i]);
  normalize();
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) { return *this += -o; }

FieldElem& FieldElem::operator*=(const FieldElem& o) {
  if (core_ != o.core_ && core_->poly != o.core_->poly) throw std::invalid_argument("field mismatch");
  const int d = core_->d;
  std::vector<Int> prod(2 * d - 1, 0);
  for (int i = 0; i < d; ++i) {
    if (coeffs_[i] == 0) continue;
    for (int j = 0; j < d; ++j)
      prod[i + j] = detail::checked_add(prod[i + j], detail::checked_mul(coeffs_[i], o.coeffs_[j]));
  }
  *this = FieldElem(BetaField(core_), prod, shift_ + o.shift_);
  return *this;
}

FieldElem& FieldElem::operator*=(Int k) {
  for (auto& c : coeffs_) c = detail::checked_mul(c, k);
  normalize();
  return *this;
}

FieldElem FieldElem::operator+(Int k) const { return *this + BetaField(core_).integer(k); }
FieldElem FieldElem::operator-(Int k) const { return *this - BetaField(core_).integer(k); }

FieldElem FieldElem::times_beta_pow(int k) const {
  if (is_zero()) return *this;
  FieldElem r = *this;
  r.shift_ += k;
  r.normalize();
  return r;
}

bool FieldElem::operator==(const FieldElem& o) const {
  return shift_ == o.shift_ && coeffs_ == o.coeffs_ && core_->poly == o.core_->poly;
}

long double FieldElem::approx() const {
  long double acc = 0;
  for (int i = core_->d - 1; i >= 0; --i) acc = acc * core_->approx + static_cast<long double>(coeffs_[i]);
  return acc * std::pow(core_->approx, static_cast<long double>(shift_));
}

std::string FieldElem::to_string() const {
  std::ostringstream os;
  os << "shift:" << shift_ << " coeffs:[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? "," : "") << coeffs_[i];
  os << "]";
  return os.str();
}

std::size_t FieldElem::hash() const {
  std::size_t h = std::hash<int>()(shift_);
  for (Int c : coeffs_) h = h * 1000003u ^ std::hash<Int>()(c);
  return h;
}

// ---------------------------------------------------------------- Ratio

Ratio::Ratio(FieldElem n, FieldElem d) : num(std::move(n)), den(std::move(d)) {
  const int s = sign(den);
  if (s == 0) throw std::domain_error("ratio with zero denominator");
  if (s < 0) {
    num = -num;
    den = -den;
  }
}

Ratio::Ratio(const FieldElem& n) : num(n), den(n.field().one()) {}

// ---------------------------------------------------------------- sign & floor

int sign_of_poly(const detail::FieldCore& core, std::span<const BigInt> c) {
  if (std::all_of(c.begin(), c.end(), [](const BigInt& x) { return x == 0; })) return 0;
  if (int s = detail::interval_sign(c, core.pow_lo, core.pow_hi); s != 0) return s;
  BigInt lo = core.lo_num, hi = core.hi_num;
  unsigned bits = core.bits;
  std::vector<BigInt> plo, phi;
  for (unsigned target = 2 * bits; target <= (1u << 16); target *= 2) {
    detail::refine_interval(core.poly, core.sign_at_lo, lo, hi, bits, target);
    detail::compute_powers(lo, hi, bits, core.d, plo, phi);
    if (int s = detail::interval_sign(c, plo, phi); s != 0) return s;
  }
  throw std::logic_error("sign refinement did not converge");
}

int sign(const FieldElem& x) {
  if (x.is_zero()) return 0;
  const auto& core = x.core();
  const auto c = x.coeffs();
  if (core.fast_ok) {
    bool small = true;
    for (Int v : c) small = small && v < (Int(1) << 58) && v > -(Int(1) << 58);
    if (small) {
      __int128 lo = 0, hi = 0;
      for (int i = 0; i < core.d; ++i) {
        const __int128 v = c[i];
        if (v >= 0) {
          lo += v * core.fast_lo[i];
          hi += v * core.fast_hi[i];
        } else {
          lo += v * core.fast_hi[i];
          hi += v * core.fast_lo[i];
        }
      }
      if (lo > 0) return 1;
      if (hi < 0) return -1;
    }
  }
  std::vector<BigInt> big(c.begin(), c.end());
  return sign_of_poly(core, big);
}

int compare(const FieldElem& a, const FieldElem& b) { return sign(a - b); }
int compare(const FieldElem& x, const Ratio& r) { return sign(x * r.den - r.num); }
int compare(const Ratio& a, const Ratio& b) { return sign(a.num * b.den - b.num * a.den); }

FieldElem abs(const FieldElem& x) { return sign(x) < 0 ? -x : x; }

Int floor_of(const Ratio& r) {
  const long double a = r.approx();
  if (!std::isfinite(a) || std::fabs(a) > 1e17L) throw std::overflow_error("floor out of range");
  Int n = static_cast<Int>(std::floor(a));
  while (sign(r.num - r.den * n) < 0) --n;
  while (sign(r.num - r.den * (n + 1)) >= 0) ++n;
  return n;
}

Int floor_of(const FieldElem& x) { return floor_of(Ratio(x)); }

Int round_half_up(const Ratio& slope, const FieldElem& x) {
  return floor_of(Ratio(slope.num * x * 2 + slope.den, slope.den * 2));
}

// ---------------------------------------------------------------- conjugates

long double conjugate_abs_bound(const FieldElem& x, int j) {
  const auto& core = x.core();
  if (j < 0 || j >= static_cast<int>(core.conj.size())) throw std::out_of_range("conjugate index");
  if (x.is_zero()) return 0;
  const std::complex<long double> z = core.conj[j];
  const long double r = core.conj_radius[j];
  // Centered form: |P(z + h)| <= sum_k |P^(k)(z)/k!| r^k for |h| <= r.
  std::vector<std::complex<long double>> taylor(x.coeffs().begin(), x.coeffs().end());
  const int d = static_cast<int>(taylor.size());
  for (int k = 0; k + 1 < d; ++k)
    for (int i = d - 2; i >= k; --i) taylor[i] += z * taylor[i + 1];
  long double bound = 0, rk = 1;
  for (int k = 0; k < d; ++k) {
    bound += std::abs(taylor[k]) * rk;
    rk *= r;
  }
  const long double modulus = x.shift() >= 0 ? std::abs(z) + r : std::abs(z) - r;
  if (modulus <= 0) throw std::domain_error("conjugate enclosure contains zero");
  bound *= std::pow(modulus, static_cast<long double>(x.shift()));
  return bound * (1 + 1e-12L) + 1e-300L;
}

Ratio eventually_periodic_value(const BetaField& f, std::span<const int> prefix, std::span<const int> period) {
  FieldElem pre = f.zero();
  for (std::size_t i = 0; i < prefix.size(); ++i) pre += f.integer(prefix[i]).times_beta_pow(-static_cast<int>(i) - 1);
  if (period.empty()) return Ratio(pre);
  const int m = static_cast<int>(period.size());
  FieldElem per = f.zero();
  for (int i = 0; i < m; ++i) per += f.integer(period[i]).times_beta_pow(-i - 1);
  const FieldElem den = f.beta_pow(m) - 1;
  const FieldElem num = pre * den + per.times_beta_pow(m - static_cast<int>(prefix.size()));
  return Ratio(num, den);
}

}  // namespace minweight
