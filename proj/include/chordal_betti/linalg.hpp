#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "chordal_betti/arith.hpp"
#include "chordal_betti/errors.hpp"

namespace chordal_betti {

// Coefficient field for homology computations: the rationals, or a prime
// field F_p with p <= 257.
struct FieldChoice {
  int characteristic = 0;  // 0 = rationals

  static FieldChoice rationals() { return FieldChoice{0}; }

  static FieldChoice prime_field(int p) {
    if (p < 2 || p > 257) throw RangeError("prime field characteristic must lie in 2..257");
    for (int d = 2; d * d <= p; ++d)
      if (p % d == 0) throw RangeError(std::to_string(p) + " is not prime");
    return FieldChoice{p};
  }

  bool is_rationals() const { return characteristic == 0; }

  std::string str() const {
    return is_rationals() ? "Q" : "F" + std::to_string(characteristic);
  }

  bool operator==(const FieldChoice& o) const {
    return characteristic == o.characteristic;
  }
};

namespace linalg {

using Matrix64 = std::vector<std::vector<std::int64_t>>;

// Rank over F_2 by bit-packed Gaussian elimination.
inline int rank_gf2(const Matrix64& m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  const std::size_t words = (cols + 63) / 64;
  std::vector<std::uint64_t> bits(rows * words, 0);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (m[i][j] & 1) bits[i * words + j / 64] ^= 1ULL << (j % 64);
  int rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    const std::size_t w = col / 64;
    const std::uint64_t bit = 1ULL << (col % 64);
    std::size_t pivot = row;
    while (pivot < rows && !(bits[pivot * words + w] & bit)) ++pivot;
    if (pivot == rows) continue;
    if (pivot != row)
      for (std::size_t k = w; k < words; ++k)
        std::swap(bits[pivot * words + k], bits[row * words + k]);
    for (std::size_t i = row + 1; i < rows; ++i)
      if (bits[i * words + w] & bit)
        for (std::size_t k = w; k < words; ++k)
          bits[i * words + k] ^= bits[row * words + k];
    ++row;
    ++rank;
  }
  return rank;
}

// Rank over F_p, p odd prime <= 257.
inline int rank_mod_p(const Matrix64& m, int p) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  std::vector<std::uint32_t> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      std::int64_t v = m[i][j] % p;
      if (v < 0) v += p;
      a[i * cols + j] = static_cast<std::uint32_t>(v);
    }
  auto inv_mod = [p](std::uint32_t x) {
    // Fermat: x^(p-2)
    std::uint64_t base = x, acc = 1;
    int e = p - 2;
    while (e) {
      if (e & 1) acc = acc * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return static_cast<std::uint32_t>(acc);
  };
  int rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && a[pivot * cols + col] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != row)
      for (std::size_t k = col; k < cols; ++k)
        std::swap(a[pivot * cols + k], a[row * cols + k]);
    const std::uint64_t pinv = inv_mod(a[row * cols + col]);
    for (std::size_t i = row + 1; i < rows; ++i) {
      const std::uint64_t v = a[i * cols + col];
      if (!v) continue;
      const std::uint64_t f = v * pinv % p;
      a[i * cols + col] = 0;
      for (std::size_t k = col + 1; k < cols; ++k) {
        std::uint64_t t = a[i * cols + k] + (p - a[row * cols + k]) * f % p;
        if (t >= static_cast<std::uint64_t>(p)) t -= p;
        a[i * cols + k] = static_cast<std::uint32_t>(t);
      }
    }
    ++row;
    ++rank;
  }
  return rank;
}

// Fraction-free Bareiss elimination in exact integers; always correct but
// slower than the word-sized path.
inline int rank_bareiss_exact(const Matrix64& m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  std::vector<std::vector<Int>> a(rows, std::vector<Int>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m[i][j];
  Int prev = 1;
  std::size_t row = 0;
  int rank = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != row) std::swap(a[pivot], a[row]);
    for (std::size_t i = row + 1; i < rows; ++i) {
      for (std::size_t k = col + 1; k < cols; ++k)
        a[i][k] = (a[i][k] * a[row][col] - a[i][col] * a[row][k]) / prev;
      a[i][col] = 0;
    }
    prev = a[row][col];
    ++row;
    ++rank;
  }
  return rank;
}

// Rank over the rationals.  Integer row reduction preferring unit pivots
// keeps entries word-sized for incidence-type matrices; any overflow or
// missing unit pivot falls back to exact Bareiss elimination on the
// untouched remainder.
inline int rank_rationals(const Matrix64& input) {
  const std::size_t rows = input.size();
  if (rows == 0) return 0;
  const std::size_t cols = input[0].size();
  Matrix64 a = input;
  std::size_t row = 0;
  int rank = 0;
  auto tail = [&](std::size_t r0, std::size_t c0) {
    Matrix64 rest;
    for (std::size_t i = r0; i < rows; ++i)
      rest.emplace_back(a[i].begin() + static_cast<std::ptrdiff_t>(c0),
                        a[i].end());
    return rest;
  };
  std::vector<std::int64_t> scratch;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    // prefer a +-1 pivot to keep the elimination fraction-free
    std::size_t pivot = rows;
    for (std::size_t i = row; i < rows; ++i)
      if (a[i][col] == 1 || a[i][col] == -1) {
        pivot = i;
        break;
      }
    if (pivot == rows) {
      bool any = false;
      for (std::size_t i = row; i < rows && !any; ++i) any = a[i][col] != 0;
      if (!any) continue;
      return rank + rank_bareiss_exact(tail(row, col));
    }
    std::swap(a[pivot], a[row]);
    const std::int64_t pv = a[row][col];
    for (std::size_t i = row + 1; i < rows; ++i) {
      const std::int64_t v = a[i][col];
      if (!v) continue;
      // row_i -= (v/pv) * row_r with v/pv = v*pv since pv = +-1
      const std::int64_t f = v * pv;
      scratch.assign(cols - col - 1, 0);
      bool overflow = false;
      for (std::size_t k = col + 1; k < cols && !overflow; ++k) {
        std::int64_t prod, sum;
        overflow = __builtin_mul_overflow(f, a[row][k], &prod) ||
                   __builtin_sub_overflow(a[i][k], prod, &sum);
        if (!overflow) scratch[k - col - 1] = sum;
      }
      if (overflow) return rank + rank_bareiss_exact(tail(row, col));
      a[i][col] = 0;
      std::copy(scratch.begin(), scratch.end(),
                a[i].begin() + static_cast<std::ptrdiff_t>(col) + 1);
    }
    ++row;
    ++rank;
  }
  return rank;
}

inline int rank(const Matrix64& m, const FieldChoice& field) {
  if (field.is_rationals()) return rank_rationals(m);
  if (field.characteristic == 2) return rank_gf2(m);
  return rank_mod_p(m, field.characteristic);
}

}  // namespace linalg
}  // namespace chordal_betti
