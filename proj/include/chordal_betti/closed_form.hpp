#pragma once

#include <algorithm>
#include <vector>

#include "chordal_betti/arith.hpp"
#include "chordal_betti/betti_table.hpp"
#include "chordal_betti/errors.hpp"
#include "chordal_betti/fvector.hpp"
#include "chordal_betti/gluing_spec.hpp"
#include "chordal_betti/polynomial.hpp"

namespace chordal_betti {

// Face counts of the glued complex: f_{t-1} = sum binom(n_m, t) - sum
// binom(r_m, t).  Gluing along a shared simplex double-counts exactly the
// faces inside the overlap.
inline FVector f_vector(const GluingSpec& s) {
  validate_spec(s);
  std::vector<Int> entries(static_cast<std::size_t>(max_clique(s)) + 1);
  for (int t = 0; t <= max_clique(s); ++t) {
    Int acc = 0;
    for (int m : s.n) acc += binomial(m, t);
    for (int m : s.r) acc -= binomial(m, t);
    entries[static_cast<std::size_t>(t)] = acc;
  }
  return FVector(std::move(entries));
}

// Independence polynomial of the complement graph, i.e. the face-count
// generating polynomial: sum (1+x)^{n_m} - sum (1+x)^{r_m}.
inline IntPolynomial independence_polynomial(const GluingSpec& s) {
  validate_spec(s);
  IntPolynomial acc;
  for (int m : s.n) acc += IntPolynomial::linear_power(1, 1, m);
  for (int m : s.r) acc -= IntPolynomial::linear_power(1, 1, m);
  return acc;
}

// Numerator of the Hilbert series over the full polynomial ring:
// sum (1-t)^(N-n_m) - sum (1-t)^(N-r_m).
inline IntPolynomial hilbert_numerator(const GluingSpec& s) {
  validate_spec(s);
  const int N = n_vertices(s);
  IntPolynomial acc;
  for (int m : s.n) acc += IntPolynomial::linear_power(1, -1, N - m);
  for (int m : s.r) acc -= IntPolynomial::linear_power(1, -1, N - m);
  return acc;
}

// Hilbert series numerator of the k-skeleton, assembled from truncated face
// counts: sum_{s<=k+1} f_{s-1} t^s (1-t)^(N-s).
inline IntPolynomial skeleton_hilbert_numerator(const GluingSpec& s, int k) {
  validate_spec(s);
  if (k < -1) throw RangeError("skeleton index below -1");
  const int N = n_vertices(s);
  const FVector f = f_vector(s).truncated(k);
  IntPolynomial acc;
  for (int t = 0; t < static_cast<int>(f.entries.size()); ++t)
    acc += IntPolynomial(std::vector<Int>{f.entries[static_cast<std::size_t>(t)]}) *
           IntPolynomial::linear_power(1, -1, N - t).shifted(t);
  return acc;
}

// Graded Betti numbers beta_{i,i+j} of the k-skeleton of any complex whose
// non-face ideal has a t_lin-linear resolution, expressed through the
// f-vector of the ambient complex on n_vars vertices.  Rows j <= k agree
// with the ambient complex, whose only nonzero row below beta_{0,0} sits at
// j = t_lin - 1; the truncation adds a single top row at j = k + 1.
inline Int general_skeleton_betti(const FVector& f, int n_vars, int t_lin,
                                  int k, int i, int j) {
  if (i < 0 || j < 0) throw BadRowRequest("negative betti table index");
  if (t_lin < 1) throw RangeError("linearity degree must be positive");
  if (k < -1) throw RangeError("skeleton index below -1");
  if (i == 0) return j == 0 ? Int(1) : Int(0);
  const int sdeg = i + j;
  auto row_sum = [&](int lo, int hi, int sign_base, int sign_off) {
    Int acc = 0;
    for (int r = lo; r <= hi; ++r)
      acc += Int(sign_pow(sign_base - r + sign_off)) *
             binomial(n_vars - r, sdeg - r) * f.f(r - 1);
    return acc;
  };
  if (j == k + 1) {
    // top row of the truncation
    if (k + 1 < t_lin) return row_sum(0, k + 1, j, 0);
    return row_sum(k + 2, sdeg, j, 1);
  }
  if (j > k + 1) return 0;
  // below the top row the skeleton inherits the ambient Betti numbers
  if (j == t_lin - 1) return row_sum(0, sdeg, j, 0);
  return 0;
}

// Full Betti table of the k-skeleton of the glued complex.  The 2-linear
// row is shared by every skeleton with k >= 1; the top row at j = k + 1
// appears for proper truncations only (it vanishes identically once
// k reaches the dimension).
inline BettiTable skeleton_betti_table(const GluingSpec& s, int k) {
  validate_spec(s);
  if (k < -1) throw RangeError("skeleton index below -1");
  const int N = n_vertices(s);
  const int kk = std::min(k, complex_dim(s));
  BettiTable out;
  out.set(0, 0, 1);
  // the degree-(i+1) row survives truncation once k >= 1; at k == dim == 0 it
  // is the whole resolution of the vertex-set ideal and nothing shifts it out
  if (kk >= 1 || kk == complex_dim(s))
    for (int i = 1; i <= N; ++i) {
      Int v = 0;
      for (int m : s.n) v -= binomial(N - m, i + 1);
      for (int m : s.r) v += binomial(N - m, i + 1);
      out.set(i, i + 1, v);
    }
  if (kk < complex_dim(s)) {
    const FVector f = f_vector(s);
    for (int i = 1; i <= N; ++i)
      out.set(i, i + kk + 1, general_skeleton_betti(f, N, 2, kk, i, kk + 1));
  }
  return out;
}

struct SkeletonInvariants {
  int k = 0;  // requested truncation, not clamped
  int krull_dim = 0;
  int regularity = 0;
  int proj_dim = 0;
  int depth = 0;
  Int multiplicity;
  IntPolynomial h_poly;
  int h_degree = 0;
  int a_invariant = 0;
  Int euler;
  bool cohen_macaulay = false;
  bool initially_cm = false;
  bool sequentially_cm = false;
};

// Reduced Euler characteristic of the k-skeleton: the alternating face-count
// sum for proper truncations; for the full complex it collapses to the
// number of disconnected attachments.
inline Int euler_characteristic(const GluingSpec& s, int k) {
  validate_spec(s);
  if (k < -1) throw RangeError("skeleton index below -1");
  if (k < complex_dim(s)) return f_vector(s).truncated(k).reduced_euler();
  return min_overlap(s) == 0 ? Int(zero_overlap_count(s)) : Int(0);
}

inline SkeletonInvariants skeleton_invariants(const GluingSpec& s, int k) {
  validate_spec(s);
  if (k < -1) throw RangeError("skeleton index below -1");
  const int N = n_vertices(s);
  const int dim = complex_dim(s);
  const int rmin = min_overlap(s);
  const int kk = std::min(k, dim);
  SkeletonInvariants out;
  out.k = k;
  out.krull_dim = k < dim ? k + 1 : max_clique(s);
  // a single clique has a zero ideal, so the full ring is the polynomial
  // ring with regularity 0; the 2-linear value 1 needs e >= 2
  out.regularity = k < dim ? k + 1 : (s.e() == 1 ? 0 : 1);
  out.proj_dim = N - std::min(kk, rmin) - 1;
  out.depth = N - out.proj_dim;
  if (k < dim) {
    out.multiplicity = f_vector(s).f(k);
  } else {
    int top = 0;
    for (int m : s.n)
      if (m == max_clique(s)) ++top;
    out.multiplicity = top;
  }
  const IntPolynomial num = skeleton_hilbert_numerator(s, kk);
  out.h_poly =
      num.divide_exact(IntPolynomial::linear_power(1, -1, N - out.krull_dim));
  out.h_degree = out.h_poly.degree();
  out.a_invariant = out.h_degree - out.krull_dim;
  out.euler = euler_characteristic(s, k);
  if (out.h_poly.evaluate(1) != out.multiplicity)
    throw InternalMismatch("h(1) disagrees with the multiplicity");
  Int corner = out.h_poly.coeff(out.krull_dim);
  if (out.krull_dim % 2 == 0) corner = -corner;
  if (corner != out.euler)
    throw InternalMismatch("top h coefficient disagrees with Euler characteristic");
  out.cohen_macaulay = kk <= rmin || rmin == max_clique(s) - 1;
  out.initially_cm = rmin == min_clique(s) - 1;
  out.sequentially_cm = true;
  for (std::size_t m = 0; m + 1 < s.n.size(); ++m)
    if (s.r[m] != s.n[m + 1] - 1) out.sequentially_cm = false;
  return out;
}

}  // namespace chordal_betti
