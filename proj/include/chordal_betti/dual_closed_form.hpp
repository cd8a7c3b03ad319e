#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "chordal_betti/arith.hpp"
#include "chordal_betti/betti_table.hpp"
#include "chordal_betti/closed_form.hpp"
#include "chordal_betti/errors.hpp"
#include "chordal_betti/facet_complex.hpp"
#include "chordal_betti/fvector.hpp"
#include "chordal_betti/gluing_spec.hpp"
#include "chordal_betti/polynomial.hpp"

namespace chordal_betti {

namespace detail {

inline void require_dual(const GluingSpec& s) {
  validate_spec(s);
  if (max_clique(s) == n_vertices(s))
    throw VoidDual("the complex is a full simplex; its Alexander dual is void");
}

}  // namespace detail

// Face counts of the Alexander dual: a set of size i+1 is a dual face when
// its complement is not a face, so counting proceeds by complements.
inline FVector dual_f_vector(const GluingSpec& s) {
  detail::require_dual(s);
  const int N = n_vertices(s);
  std::vector<Int> entries(static_cast<std::size_t>(N) - 1);
  for (int i = -1; i <= N - 3; ++i) {
    Int acc = binomial(N, i + 1);
    for (int m : s.n) acc -= binomial(m, N - i - 1);
    for (int m : s.r) acc += binomial(m, N - i - 1);
    entries[static_cast<std::size_t>(i) + 1] = acc;
  }
  return FVector(std::move(entries));
}

// h-vector of the dual, padded to degrees 0..N-2.  The closed form and the
// rational form (1 - sum t^(N-n_m) + sum t^(N-r_m)) / (1-t)^2 must agree.
struct DualHVector {
  std::vector<Int> entries;
  IntPolynomial h;
  Int multiplicity;
};

// Numerator of the dual Hilbert series over the full polynomial ring:
// shifts N-n_m for the generators, N-r_m for the relations.
inline IntPolynomial dual_hilbert_numerator(const GluingSpec& s) {
  detail::require_dual(s);
  const int N = n_vertices(s);
  IntPolynomial acc = IntPolynomial::constant(1);
  for (int m : s.n) acc -= IntPolynomial::monomial(N - m);
  for (int m : s.r) acc += IntPolynomial::monomial(N - m);
  return acc;
}

inline DualHVector dual_h_vector(const GluingSpec& s) {
  detail::require_dual(s);
  const int N = n_vertices(s);
  DualHVector out;
  out.h = dual_hilbert_numerator(s).divide_exact(
      IntPolynomial::linear_power(1, -1, 2));
  out.entries.resize(static_cast<std::size_t>(N) - 1);
  for (int k = 0; k <= N - 2; ++k) {
    Int acc = k + 1;
    for (int m : s.n) acc -= std::max(0, k - N + m + 1);
    for (int m : s.r) acc += std::max(0, k - N + m + 1);
    out.entries[static_cast<std::size_t>(k)] = acc;
    if (acc != out.h.coeff(k))
      throw InternalMismatch("dual h-vector disagrees with its rational form");
  }
  out.multiplicity = out.h.evaluate(1);
  Int quad = 0;
  for (int m : s.r) quad += Int(N - m) * (N - m - 1);
  for (int m : s.n) quad -= Int(N - m) * (N - m - 1);
  if (out.multiplicity * 2 != quad)
    throw InternalMismatch("dual multiplicity disagrees with its closed form");
  return out;
}

// Betti table of the dual ring: one generator per clique in degree N-n_m,
// one relation per attachment in degree N-r_m.
inline BettiTable dual_betti_table(const GluingSpec& s) {
  detail::require_dual(s);
  const int N = n_vertices(s);
  BettiTable out;
  out.set(0, 0, 1);
  for (int m : s.n) out.add(1, N - m, 1);
  for (int m : s.r) out.add(2, N - m, 1);
  return out;
}

// A signed squarefree monomial; vars is a vertex bitmask.
struct SignedMonomial {
  int sign = 0;  // -1, 0, +1
  std::uint64_t vars = 0;

  int degree() const { return __builtin_popcountll(vars); }
  bool is_zero() const { return sign == 0; }
};

// The minimal free resolution 0 -> F2 -> F1 -> R -> K[dual] -> 0: the dual
// ideal is generated by the facet-complement monomials, and consecutive
// cliques are linked by one divided-difference relation through the parent.
struct GradedResolution {
  int n_vars = 0;
  std::vector<int> generator_shifts;              // N - n_m
  std::vector<int> relation_shifts;               // N - r_m
  std::vector<SignedMonomial> d1;                 // 1 x e
  std::vector<std::vector<SignedMonomial>> d2;    // e x (e-1)
};

inline GradedResolution dual_resolution(const GluingSpec& s) {
  detail::require_dual(s);
  const Realization real = realize_full(s);
  const int N = real.complex.n_vertices;
  const std::uint64_t all = real.complex.vertex_mask();
  const int e = s.e();
  GradedResolution out;
  out.n_vars = N;
  std::vector<std::uint64_t> clique_masks;
  for (const auto& c : real.cliques) {
    std::uint64_t mask = 0;
    for (int v : c) mask |= 1ULL << v;
    clique_masks.push_back(mask);
  }
  for (int m = 0; m < e; ++m) {
    out.generator_shifts.push_back(N - s.n[static_cast<std::size_t>(m)]);
    out.d1.push_back({+1, all & ~clique_masks[static_cast<std::size_t>(m)]});
  }
  out.d2.assign(static_cast<std::size_t>(e),
                std::vector<SignedMonomial>(static_cast<std::size_t>(e) - 1));
  for (int c = 0; c + 1 < e; ++c) {
    out.relation_shifts.push_back(N - s.r[static_cast<std::size_t>(c)]);
    const int parent = real.parents[static_cast<std::size_t>(c)] - 1;
    const std::uint64_t sp = clique_masks[static_cast<std::size_t>(parent)];
    const std::uint64_t sc = clique_masks[static_cast<std::size_t>(c) + 1];
    out.d2[static_cast<std::size_t>(parent)][static_cast<std::size_t>(c)] = {+1, sp & ~sc};
    out.d2[static_cast<std::size_t>(c) + 1][static_cast<std::size_t>(c)] = {-1, sc & ~sp};
  }
  // composite must vanish and every column must be homogeneous
  for (int c = 0; c + 1 < e; ++c) {
    std::uint64_t pos = 0, neg = 0;
    for (int a = 0; a < e; ++a) {
      const SignedMonomial& t = out.d2[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)];
      if (t.is_zero()) continue;
      if (out.d1[static_cast<std::size_t>(a)].vars & t.vars)
        throw InternalMismatch("resolution product is not squarefree");
      const std::uint64_t prod = out.d1[static_cast<std::size_t>(a)].vars | t.vars;
      if (t.sign > 0)
        pos = prod;
      else
        neg = prod;
      if (out.generator_shifts[static_cast<std::size_t>(a)] + t.degree() !=
          out.relation_shifts[static_cast<std::size_t>(c)])
        throw InternalMismatch("resolution column is not homogeneous");
    }
    if (pos != neg) throw InternalMismatch("resolution composite d1*d2 is nonzero");
  }
  return out;
}

struct DualProfile {
  int krull_dim = 0;
  int regularity = 0;
  int proj_dim = 2;
  int depth = 0;
  int a_invariant = 0;
  Int multiplicity;
  int cm_type = 0;
  bool gorenstein = false;
  bool pure = false;
  bool linear_resolution = false;
  Int sphere_count;  // wedge summands; zero means acyclic
  int sphere_dim = 0;
};

inline DualProfile dual_profile(const GluingSpec& s) {
  detail::require_dual(s);
  const int N = n_vertices(s);
  const int rmin = min_overlap(s);
  DualProfile out;
  out.krull_dim = N - 2;
  out.regularity = N - rmin - 2;
  out.proj_dim = 2;
  out.depth = N - 2;
  out.a_invariant = -rmin;
  out.multiplicity = dual_h_vector(s).multiplicity;
  out.cm_type = s.e() - 1;
  out.gorenstein = s.e() == 2;
  bool all_n = std::all_of(s.n.begin(), s.n.end(),
                           [&](int v) { return v == s.n[0]; });
  bool all_r = s.r.empty() || std::all_of(s.r.begin(), s.r.end(),
                                          [&](int v) { return v == s.r[0]; });
  out.pure = all_n && all_r;
  out.linear_resolution = out.pure && !s.r.empty() && s.r[0] == s.n[0] - 1;
  out.sphere_count = zero_overlap_count(s);
  out.sphere_dim = N - 3;
  return out;
}

// Betti table of the k-skeleton of the dual: rows strictly below the new
// top row are inherited from the dual, and the top row consists of the
// simplex-skeleton numbers corrected by clique and overlap defects.
inline BettiTable dual_skeleton_betti_table(const GluingSpec& s, int k) {
  detail::require_dual(s);
  if (k < -1) throw RangeError("skeleton index below -1");
  const int N = n_vertices(s);
  const int kk = std::min(k, N - 3);
  if (kk >= N - 3) return dual_betti_table(s);
  const BettiTable full = dual_betti_table(s);
  BettiTable out;
  out.set(0, 0, 1);  // survives truncation even when no other row is copied
  for (const auto& [key, v] : full.entries())
    if (key.second - key.first < kk + 1) out.set(key.first, key.second, v);
  int delta_count = 0;
  for (int m : s.r)
    if (N - m == kk + 2) ++delta_count;
  for (int i = 1; i <= N; ++i) {
    Int v = binomial(N, i + kk + 1) * binomial(i + kk, kk + 1);
    for (int m : s.n)
      v -= binomial(m, N - i - kk - 1) * binomial(m - N + i + kk, i - 1);
    for (int m : s.r)
      v += binomial(m, N - i - kk - 1) * binomial(m - N + i + kk, i - 1);
    if (i == 1) v += delta_count;
    out.set(i, i + kk + 1, v);
  }
  return out;
}

struct DualSkeletonProfile {
  int k = 0;
  int proj_dim = 0;
  bool cohen_macaulay = true;
  Int cm_type;
  int ideal_regularity = 0;
  Int multiplicity;
  Int euler;
  Int sphere_count;
  int sphere_dim = 0;
  int h_degree = 0;
  bool simplex_skeleton = false;  // agrees with a skeleton of the simplex
};

inline DualSkeletonProfile dual_skeleton_profile(const GluingSpec& s, int k) {
  detail::require_dual(s);
  if (k < -1) throw RangeError("skeleton index below -1");
  const int N = n_vertices(s);
  const int rmin = min_overlap(s);
  const int kk = std::min(k, N - 3);
  DualSkeletonProfile out;
  out.k = kk;
  out.proj_dim = N - kk - 1;
  out.cohen_macaulay = true;
  out.multiplicity = dual_f_vector(s).f(kk);
  out.simplex_skeleton = kk <= N - max_clique(s) - 2;
  if (kk == N - 3) {
    out.cm_type = s.e() - 1;
    out.ideal_regularity = N - rmin - 1;
    out.sphere_count = zero_overlap_count(s);
    out.sphere_dim = N - 3;
    out.euler = out.sphere_count;
    if ((N - 3) % 2 != 0) out.euler = -out.euler;
  } else {
    Int type = binomial(N - 1, kk + 1);
    for (int m : s.n) type -= binomial(m - 1, N - kk - 2);
    for (int m : s.r) type += binomial(m - 1, N - kk - 2);
    out.cm_type = type;
    out.ideal_regularity = kk + 2;
    out.sphere_count = type;
    out.sphere_dim = kk;
    out.euler = (kk % 2 == 0) ? type : Int(-type);
  }
  // exact h-polynomial of the truncation
  const FVector f = dual_f_vector(s).truncated(kk);
  IntPolynomial num;
  for (int t = 0; t < static_cast<int>(f.entries.size()); ++t)
    num += IntPolynomial(std::vector<Int>{f.entries[static_cast<std::size_t>(t)]}) *
           IntPolynomial::linear_power(1, -1, N - t).shifted(t);
  out.h_degree =
      num.divide_exact(IntPolynomial::linear_power(1, -1, N - kk - 1)).degree();
  return out;
}

struct RegularityBound {
  int k = 0;
  int ideal_reg_full = 0;       // regularity of the dual ideal
  int skeleton_gen_degree = 0;  // generator degree of the truncated ideal
  bool holds = false;
  bool equality = false;
};

// The dual ideal's regularity is bounded by the generator degree of any of
// its deep skeleton truncations; equality occurs at the lowest admissible k.
inline RegularityBound regularity_bound_check(const GluingSpec& s, int k) {
  detail::require_dual(s);
  const int N = n_vertices(s);
  const int rmin = min_overlap(s);
  if (k < N - rmin - 3 || k >= N - 3)
    throw RangeError("skeleton parameter outside the bound range " +
                     std::to_string(N - rmin - 3) + ".." +
                     std::to_string(N - 4));
  RegularityBound out;
  out.k = k;
  out.ideal_reg_full = N - rmin - 1;
  out.skeleton_gen_degree = k + 2;
  out.holds = out.ideal_reg_full <= out.skeleton_gen_degree;
  out.equality = out.ideal_reg_full == out.skeleton_gen_degree;
  return out;
}

}  // namespace chordal_betti
