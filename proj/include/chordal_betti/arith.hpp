#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace chordal_betti {

using Int = boost::multiprecision::cpp_int;

namespace detail {

// Pascal triangle cache. Rows beyond the cache fall back to the
// multiplicative formula, which only happens for very large inputs.
inline constexpr int kPascalRows = 192;

inline const std::vector<std::vector<Int>>& pascal_rows() {
  static const std::vector<std::vector<Int>> rows = [] {
    std::vector<std::vector<Int>> t(kPascalRows);
    for (int a = 0; a < kPascalRows; ++a) {
      t[a].resize(static_cast<std::size_t>(a) + 1);
      t[a][0] = 1;
      for (int b = 1; b <= a; ++b)
        t[a][static_cast<std::size_t>(b)] =
            (b == a) ? Int(1)
                     : t[a - 1][static_cast<std::size_t>(b) - 1] +
                           t[a - 1][static_cast<std::size_t>(b)];
    }
    return t;
  }();
  return rows;
}

inline Int binomial_slow(long long a, long long b) {
  if (b > a - b) b = a - b;
  Int acc = 1;
  for (long long t = 0; t < b; ++t) {
    acc *= a - t;
    acc /= t + 1;  // exact: product of k consecutive integers is divisible by k!
  }
  return acc;
}

}  // namespace detail

// Subset-counting binomial coefficient: zero unless 0 <= b <= a.
inline Int binomial(long long a, long long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  if (a < detail::kPascalRows)
    return detail::pascal_rows()[static_cast<std::size_t>(a)]
                                [static_cast<std::size_t>(b)];
  return detail::binomial_slow(a, b);
}

// Binomial coefficient with arbitrary integer upper argument:
// a*(a-1)*...*(a-b+1)/b! for b >= 0, zero for b < 0.  For a < 0 this is
// the upper-negation value (-1)^b * binomial(b-a-1, b).
inline Int binomial_any(long long a, long long b) {
  if (b < 0) return 0;
  if (a >= 0) return binomial(a, b);
  Int v = binomial(b - a - 1, b);
  return (b % 2 == 0) ? v : -v;
}

inline int sign_pow(long long k) { return (k % 2 == 0) ? 1 : -1; }

inline std::string to_string(const Int& v) { return v.str(); }

}  // namespace chordal_betti
