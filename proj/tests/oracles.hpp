#pragma once

// Reference computations for the tests, written without the library's field,
// automata or oracle code. Values live in Z[beta] as plain coefficient vectors.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace oracle {

using I = std::int64_t;

// Z[beta] for a monic polynomial x^d + c_1 x^{d-1} + ... + c_d with c_d = +-1.
struct Ring {
  std::vector<I> poly;  // 1, c_1, ..., c_d
  int d;
  long double beta;

  explicit Ring(std::vector<I> p) : poly(std::move(p)), d(static_cast<int>(poly.size()) - 1) {
    if (std::abs(poly.back()) != 1) throw std::invalid_argument("unit constant term required");
    long double lo = 1, hi = 4;
    for (int i = 0; i < 200; ++i) {
      const long double mid = (lo + hi) / 2;
      (eval(mid) < 0 ? lo : hi) = mid;
    }
    beta = lo;
  }
  long double eval(long double x) const {
    long double acc = 0;
    for (I c : poly) acc = acc * x + c;
    return acc;
  }
  // v lowest power first, length d.
  std::vector<I> times_beta(const std::vector<I>& v) const {
    std::vector<I> r(d, 0);
    const I top = v[d - 1];
    for (int i = d - 1; i >= 1; --i) r[i] = v[i - 1];
    // beta^d = -(c_1 beta^{d-1} + ... + c_d)
    for (int i = 0; i < d; ++i) r[i] -= top * poly[d - i];
    return r;
  }
  std::vector<I> over_beta(const std::vector<I>& v) const {
    // v = beta * u: u_{i-1} = v_i + c_{d-i} u_{d-1}, v_0 = -c_d u_{d-1}.
    std::vector<I> u(d, 0);
    u[d - 1] = -v[0] / poly[d];
    for (int i = 1; i < d; ++i) u[i - 1] = v[i] + poly[d - i] * u[d - 1];
    return u;
  }
  long double real(const std::vector<I>& v) const {
    long double acc = 0, p = 1;
    for (I c : v) {
      acc += c * p;
      p *= beta;
    }
    return acc;
  }
  // Integer reading of a digit word.
  std::vector<I> value(const std::vector<int>& digits) const {
    std::vector<I> v(d, 0);
    for (int x : digits) {
      v = times_beta(v);
      v[0] += x;
    }
    return v;
  }
  // Representative of {beta^k v} with |v| in [1, beta); empty vector for zero.
  std::vector<I> canonical(std::vector<I> v) const {
    bool zero = true;
    for (I c : v) zero = zero && c == 0;
    if (zero) return {};
    const long double r = std::fabs(real(v));
    const int k = static_cast<int>(std::floor(std::log(r) / std::log(beta) + 1e-9L));
    for (int i = 0; i < k; ++i) v = over_beta(v);
    for (int i = 0; i > k; --i) v = times_beta(v);
    return v;
  }
};

struct VecHash {
  std::size_t operator()(const std::vector<I>& v) const {
    std::size_t h = v.size();
    for (I c : v) h = h * 1000003u ^ std::hash<I>()(c);
    return h;
  }
};

// Least weight per value class over all words of length <= max_len and weight
// <= max_weight with digits in [-B+1, B-1]. Exact for any word inside that universe.
class ClassMin {
 public:
  ClassMin(const Ring& ring, int max_len, int B = 2, int max_weight = 1 << 20) : ring_(ring) {
    std::vector<int> word;
    std::function<void(std::vector<I>, int)> rec = [&](std::vector<I> v, int wt) {
      if (!word.empty() && word.back() != 0) {
        auto key = ring_.canonical(v);
        auto [it, fresh] = best_.emplace(std::move(key), wt);
        if (!fresh && wt < it->second) it->second = wt;
      }
      if (static_cast<int>(word.size()) == max_len) return;
      for (int x = 1 - B; x <= B - 1; ++x) {
        if ((word.empty() && x == 0) || wt + std::abs(x) > max_weight) continue;
        auto u = ring_.times_beta(v);
        u[0] += x;
        word.push_back(x);
        rec(u, wt + std::abs(x));
        word.pop_back();
      }
    };
    rec(std::vector<I>(ring_.d, 0), 0);
    best_[{}] = 0;
  }

  // Whether the word's weight equals the least weight seen in its class.
  bool minimal(const std::vector<int>& digits) const {
    int wt = 0;
    for (int x : digits) wt += std::abs(x);
    return wt == class_min(digits);
  }
  int class_min(const std::vector<int>& digits) const {
    const int m = lookup(digits);
    if (m < 0) throw std::logic_error("word outside the enumerated universe");
    return m;
  }
  // Least weight in the class, or -1 if no word of the universe has this value class.
  int lookup(const std::vector<int>& digits) const {
    auto it = best_.find(ring_.canonical(ring_.value(digits)));
    return it == best_.end() ? -1 : it->second;
  }
  std::size_t size() const { return best_.size(); }

 private:
  Ring ring_;
  std::unordered_map<std::vector<I>, int, VecHash> best_;
};

// Least weight of a word over {-1,0,1} of length <= n with value N, sum x_j U_{n-j}.
// Returns -1 when N is not representable.
class IntMin {
 public:
  explicit IntMin(std::vector<I> terms) : u_(std::move(terms)) {
    reach_.assign(u_.size() + 1, 0);
    for (std::size_t i = 0; i < u_.size(); ++i) reach_[i + 1] = reach_[i] + u_[i];
  }
  int operator()(I N, int n) {
    if (n == 0) return N == 0 ? 0 : -1;
    if (std::llabs(N) > reach_[n]) return -1;
    const auto key = std::make_pair(N, n);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    int best = -1;
    for (int x : {0, 1, -1}) {
      const int r = (*this)(N - x * u_[n - 1], n - 1);
      if (r >= 0 && (best < 0 || r + std::abs(x) < best)) best = r + std::abs(x);
    }
    memo_[key] = best;
    return best;
  }

 private:
  std::vector<I> u_, reach_;
  std::map<std::pair<I, int>, int> memo_;
};

// U_0..U_{count-1} for the three integer systems, from their recurrences.
inline std::vector<I> fibonacci_terms(int count) {
  std::vector<I> u{1, 2};
  while (static_cast<int>(u.size()) < count) u.push_back(u[u.size() - 1] + u[u.size() - 2]);
  u.resize(count);
  return u;
}
inline std::vector<I> tribonacci_terms(int count) {
  std::vector<I> u{1, 2, 4};
  while (static_cast<int>(u.size()) < count) u.push_back(u[u.size() - 1] + u[u.size() - 2] + u[u.size() - 3]);
  u.resize(count);
  return u;
}
inline std::vector<I> smallest_pisot_terms(int count) {
  std::vector<I> u{1, 2, 3, 4};
  while (static_cast<int>(u.size()) < count) u.push_back(u[u.size() - 2] + u[u.size() - 3]);
  u.resize(count);
  return u;
}

inline I int_value(const std::vector<int>& digits, const std::vector<I>& u) {
  I acc = 0;
  const std::size_t n = digits.size();
  for (std::size_t j = 0; j < n; ++j) acc += digits[j] * u[n - 1 - j];
  return acc;
}

// Forbidden factors of the unique minimal forms of the systems 'F', 'T', 'S',
// written out from their definitions, and the factors allowed only as a suffix.
struct Rules {
  std::vector<std::vector<int>> forbidden, exceptions;
};

inline std::vector<int> one_zeros_d(int k, int d) {
  std::vector<int> v(k + 2, 0);
  v.front() = 1;
  v.back() = d;
  return v;
}

inline Rules rules(char system) {
  Rules r;
  auto add = [](std::vector<std::vector<int>>& out, std::vector<int> f) {
    out.push_back(f);
    for (int& x : f) x = -x;
    out.push_back(f);
  };
  if (system == 'F') {
    for (auto f : std::vector<std::vector<int>>{{1, 1}, {1, 0, 1}, {1, 0, 0, 1}, {1, -1}, {1, 0, -1}}) add(r.forbidden, f);
  } else if (system == 'T') {
    for (auto f : std::vector<std::vector<int>>{{1, 1}, {1, 0, 1}, {1, -1}}) add(r.forbidden, f);
  } else {
    for (int j = 0; j <= 5; ++j) {
      add(r.forbidden, one_zeros_d(j, 1));
      add(r.forbidden, one_zeros_d(j, -1));
    }
    add(r.forbidden, one_zeros_d(6, 1));
    add(r.exceptions, one_zeros_d(6, 1));
    add(r.exceptions, one_zeros_d(5, 1));
    add(r.exceptions, one_zeros_d(5, -1));
    add(r.exceptions, one_zeros_d(4, -1));
  }
  return r;
}

inline bool ends_with(const std::vector<int>& word, const std::vector<int>& f) {
  return word.size() >= f.size() && std::equal(f.begin(), f.end(), word.end() - f.size());
}

// 0: a forbidden factor ends at the last letter; 1: only a suffix exception does
// (valid as a complete word, not extendable); 2: none does.
inline int status(const std::vector<int>& word, const Rules& r) {
  bool exception = false;
  for (const auto& f : r.forbidden) {
    if (!ends_with(word, f)) continue;
    if (std::find(r.exceptions.begin(), r.exceptions.end(), f) == r.exceptions.end()) return 0;
    exception = true;
  }
  return exception ? 1 : 2;
}

inline bool compliant(const std::vector<int>& word, const Rules& r) {
  std::vector<int> prefix;
  for (std::size_t i = 0; i < word.size(); ++i) {
    prefix.push_back(word[i]);
    const int st = status(prefix, r);
    if (st == 0 || (st == 1 && i + 1 != word.size())) return false;
  }
  return true;
}

// Every compliant word with nonzero first digit and length <= max_len.
inline void for_each_compliant(const Rules& r, int max_len, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> word;
  std::function<void()> rec = [&]() {
    for (int x : {0, 1, -1}) {
      if (word.empty() && x == 0) continue;
      word.push_back(x);
      const int st = status(word, r);
      if (st > 0) f(word);
      if (st == 2 && static_cast<int>(word.size()) < max_len) rec();
      word.pop_back();
    }
  };
  rec();
}

// Every word over {-1,0,1} of length exactly n, in lexicographic order of 0 < 1 < -1.
inline void for_each_word(int n, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> w(n, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      f(w);
      return;
    }
    for (int x : {0, 1, -1}) {
      w[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
}

}  // namespace oracle
