#pragma once

#include "minweight/algebra.hpp"

#include <complex>
#include <vector>

namespace minweight::detail {

// Bits of the always-available dyadic enclosure of beta.
inline constexpr unsigned kBaseBits = 256;
// Bits of the machine-word fast path.
inline constexpr unsigned kFastBits = 56;

struct FieldCore {
  std::vector<Int> poly;  // highest degree first, poly[0] == 1
  std::vector<Int> low;   // beta^d = -sum low[i] beta^i
  int d = 0;
  bool unit = false;

  // beta in [lo_num, hi_num] / 2^bits; sign of the minimal polynomial at lo.
  BigInt lo_num, hi_num;
  unsigned bits = 0;
  int sign_at_lo = -1;
  std::vector<BigInt> pow_lo, pow_hi;  // enclosures of beta^i * 2^bits, i < d

  bool fast_ok = false;
  std::vector<__int128> fast_lo, fast_hi;  // enclosures of beta^i * 2^kFastBits

  long double approx = 0;
  bool pisot = false;
  std::vector<std::complex<long double>> conj;
  std::vector<long double> conj_radius;
  std::vector<long double> conj_bound;
};

int poly_sign_at_dyadic(const std::vector<Int>& poly, const BigInt& num, unsigned bits);

}  // namespace minweight::detail
