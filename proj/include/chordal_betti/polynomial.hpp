#pragma once

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "chordal_betti/arith.hpp"
#include "chordal_betti/errors.hpp"

namespace chordal_betti {

// Dense univariate polynomial with exact integer coefficients.
// Trailing zero coefficients are always trimmed, so degree() of the zero
// polynomial is -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;

  explicit IntPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) {
    trim();
  }

  static IntPolynomial zero() { return IntPolynomial(); }

  static IntPolynomial constant(Int v) {
    return IntPolynomial(std::vector<Int>{std::move(v)});
  }

  // coef * t^deg
  static IntPolynomial monomial(int deg, Int coef = Int(1)) {
    if (deg < 0) throw RangeError("monomial degree must be nonnegative");
    std::vector<Int> c(static_cast<std::size_t>(deg) + 1);
    c.back() = std::move(coef);
    return IntPolynomial(std::move(c));
  }

  // (a + b*t)^n expanded by the binomial theorem.
  static IntPolynomial linear_power(const Int& a, const Int& b, int n) {
    if (n < 0) throw RangeError("linear_power exponent must be nonnegative");
    std::vector<Int> c(static_cast<std::size_t>(n) + 1);
    std::vector<Int> apow(static_cast<std::size_t>(n) + 1);
    apow[0] = 1;
    for (int k = 1; k <= n; ++k)
      apow[static_cast<std::size_t>(k)] = apow[static_cast<std::size_t>(k) - 1] * a;
    Int bp = 1;
    for (int k = 0; k <= n; ++k) {
      c[static_cast<std::size_t>(k)] =
          binomial(n, k) * apow[static_cast<std::size_t>(n - k)] * bp;
      bp *= b;
    }
    return IntPolynomial(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  const Int& coeff(int k) const {
    static const Int kZero = 0;
    if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<std::size_t>(k)];
  }

  const std::vector<Int>& coefficients() const { return c_; }

  Int evaluate(const Int& x) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  IntPolynomial& operator+=(const IntPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }

  IntPolynomial& operator-=(const IntPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) {
    a += b;
    return a;
  }

  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) {
    a -= b;
    return a;
  }

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial();
    std::vector<Int> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPolynomial(std::move(c));
  }

  IntPolynomial& operator*=(const IntPolynomial& o) { return *this = *this * o; }

  // Multiply by t^k.
  IntPolynomial shifted(int k) const {
    if (is_zero()) return IntPolynomial();
    if (k < 0) throw RangeError("shift must be nonnegative");
    std::vector<Int> c(c_.size() + static_cast<std::size_t>(k));
    std::copy(c_.begin(), c_.end(), c.begin() + k);
    return IntPolynomial(std::move(c));
  }

  // Exact division; throws InternalMismatch if the division leaves a
  // remainder or the divisor is zero.
  IntPolynomial divide_exact(const IntPolynomial& d) const {
    if (d.is_zero()) throw InternalMismatch("division by zero polynomial");
    if (is_zero()) return IntPolynomial();
    if (degree() < d.degree())
      throw InternalMismatch("inexact polynomial division");
    std::vector<Int> rem = c_;
    std::vector<Int> q(c_.size() - d.c_.size() + 1);
    const Int& lead = d.c_.back();
    for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
      Int& top = rem[static_cast<std::size_t>(k) + d.c_.size() - 1];
      if (top % lead != 0) throw InternalMismatch("inexact polynomial division");
      Int f = top / lead;
      if (f != 0)
        for (std::size_t j = 0; j < d.c_.size(); ++j)
          rem[static_cast<std::size_t>(k) + j] -= f * d.c_[j];
      q[static_cast<std::size_t>(k)] = std::move(f);
    }
    for (const Int& r : rem)
      if (r != 0) throw InternalMismatch("inexact polynomial division");
    return IntPolynomial(std::move(q));
  }

  bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }
  bool operator!=(const IntPolynomial& o) const { return !(*this == o); }

  // Human-readable form, e.g. "1 + 9t + 24t^2".
  std::string str(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = 0; k < static_cast<int>(c_.size()); ++k) {
      const Int& v = c_[static_cast<std::size_t>(k)];
      if (v == 0) continue;
      Int mag = v < 0 ? Int(-v) : v;
      if (first) {
        if (v < 0) out << "-";
        first = false;
      } else {
        out << (v < 0 ? " - " : " + ");
      }
      bool unit = (mag == 1);
      if (k == 0 || !unit) out << mag.str();
      if (k > 0) {
        out << var;
        if (k > 1) out << "^" << k;
      }
    }
    return out.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Int> c_;
};

}  // namespace chordal_betti
