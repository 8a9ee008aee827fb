#pragma once

// Exact arithmetic in Z[beta, 1/beta] for a real algebraic integer beta > 1.
//
// An element is stored as beta^shift * (c_0 + c_1 beta + ... + c_{d-1} beta^{d-1})
// with integer coefficients. Signs and floors of the real embedding are decided
// exactly by interval evaluation over a dyadic isolating interval of beta.

#include <boost/container/small_vector.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace minweight {

using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class FieldElem;

namespace detail {
struct FieldCore;
}

/// A real algebraic integer beta > 1 given by its monic integer minimal
/// polynomial, highest-degree coefficient first.
class BetaField {
 public:
  explicit BetaField(std::vector<Int> min_poly);

  static BetaField golden();          // x^2 - x - 1
  static BetaField tribonacci();      // x^3 - x^2 - x - 1
  static BetaField smallest_pisot();  // x^3 - x - 1

  int degree() const;
  const std::vector<Int>& min_poly() const;
  /// Current isolating interval (lo, hi) of beta; lo > 1.
  std::pair<Rational, Rational> isolating_interval() const;
  bool is_pisot() const;
  /// True when beta^{-1} lies in Z[beta] (constant term +-1).
  bool is_unit() const;
  long double approx() const;

  /// Numerical approximations of the conjugates other than beta, in a fixed order.
  const std::vector<std::complex<long double>>& conjugates() const;
  /// Certified radii r_j: each disc |z - conjugates()[j]| <= r_j holds exactly one root.
  const std::vector<long double>& conjugate_radii() const;
  /// Certified upper bounds on |beta^(j)|.
  const std::vector<long double>& conjugate_moduli_bounds() const;

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem beta() const;
  FieldElem integer(Int n) const;
  FieldElem beta_pow(int k) const;
  /// beta^shift * sum coeffs[i] beta^i; coefficients lowest power first, any length.
  FieldElem make(std::span<const Int> coeffs, int shift = 0) const;

  std::string to_string() const;

  const detail::FieldCore& core() const { return *core_; }
  bool operator==(const BetaField& other) const;

 private:
  friend class FieldElem;
  explicit BetaField(std::shared_ptr<const detail::FieldCore> core) : core_(std::move(core)) {}
  std::shared_ptr<const detail::FieldCore> core_;
};

/// Element of Z[beta, 1/beta], kept in a canonical reduced form: coefficient vector
/// of length degree(), shift <= 0, and shift == 0 whenever the element is in Z[beta].
class FieldElem {
 public:
  using Coeffs = boost::container::small_vector<Int, 6>;

  FieldElem(const BetaField& field, std::span<const Int> coeffs, int shift = 0);

  BetaField field() const { return BetaField(core_); }
  const detail::FieldCore& core() const { return *core_; }
  std::span<const Int> coeffs() const { return {coeffs_.data(), coeffs_.size()}; }
  int shift() const { return shift_; }
  bool is_zero() const;

  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator*=(Int k);
  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator*(FieldElem a, Int k) { return a *= k; }
  friend FieldElem operator*(Int k, FieldElem a) { return a *= k; }
  FieldElem operator+(Int k) const;
  FieldElem operator-(Int k) const;

  /// this * beta^k.
  FieldElem times_beta_pow(int k) const;

  bool operator==(const FieldElem& o) const;
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

  /// Real embedding, approximately.
  long double approx() const;
  /// `shift:e coeffs:[c0,c1,...]`
  std::string to_string() const;
  std::size_t hash() const;

 private:
  FieldElem(std::shared_ptr<const detail::FieldCore> core, Coeffs c, int shift);
  void normalize();
  void multiply_by_beta();
  bool try_divide_by_beta();
  void align_to(int shift);

  std::shared_ptr<const detail::FieldCore> core_;
  Coeffs coeffs_;
  int shift_ = 0;
  friend class BetaField;
};

/// A quotient num/den of field elements with den > 0; used for slopes and thresholds.
struct Ratio {
  FieldElem num;
  FieldElem den;

  Ratio(FieldElem n, FieldElem d);
  explicit Ratio(const FieldElem& n);
  long double approx() const { return num.approx() / den.approx(); }
  Ratio operator-() const { return Ratio(-num, den); }
};

/// Exact sign of the real embedding.
int sign(const FieldElem& x);
/// sign(a - b).
int compare(const FieldElem& a, const FieldElem& b);
/// sign(x - r) for a ratio r.
int compare(const FieldElem& x, const Ratio& r);
int compare(const Ratio& a, const Ratio& b);
FieldElem abs(const FieldElem& x);

/// Unique integer n with n <= x < n + 1.
Int floor_of(const FieldElem& x);
/// floor(num / den) for den > 0.
Int floor_of(const Ratio& r);
/// floor(slope * x + 1/2) with exact tie handling (ties go to the lower branch's floor).
Int round_half_up(const Ratio& slope, const FieldElem& x);

/// Certified upper bound on |x^(j)|, the j-th conjugate of x (0 <= j < degree-1).
long double conjugate_abs_bound(const FieldElem& x, int j);

/// Exact sign of sum c_i beta^i for arbitrary-precision coefficients.
int sign_of_poly(const detail::FieldCore& core, std::span<const BigInt> coeffs);

/// Sum of a geometric-tail digit pattern .prefix(period)^omega as an exact ratio.
Ratio eventually_periodic_value(const BetaField& f, std::span<const int> prefix,
                                std::span<const int> period);

}  // namespace minweight

template <>
struct std::hash<minweight::FieldElem> {
  std::size_t operator()(const minweight::FieldElem& x) const noexcept { return x.hash(); }
};
