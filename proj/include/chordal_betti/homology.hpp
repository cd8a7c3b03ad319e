#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "chordal_betti/arith.hpp"
#include "chordal_betti/betti_table.hpp"
#include "chordal_betti/errors.hpp"
#include "chordal_betti/facet_complex.hpp"
#include "chordal_betti/linalg.hpp"

namespace chordal_betti {

// Reduced homology dimensions over a field.  dims[d] = dim H~_d for
// d = 0..dim; the empty-face complex {{}} is the only one with homology in
// degree -1.
struct HomologyProfile {
  std::vector<int> dims;
  int dim_minus_one = 0;

  Int reduced_euler() const {
    Int acc = -dim_minus_one;
    int sign = 1;
    for (int v : dims) {
      acc += sign * v;
      sign = -sign;
    }
    return acc;
  }

  bool acyclic() const {
    if (dim_minus_one) return false;
    for (int v : dims)
      if (v) return false;
    return true;
  }

  bool operator==(const HomologyProfile& o) const {
    return dims == o.dims && dim_minus_one == o.dim_minus_one;
  }
};

namespace detail {

// Boundary-rank profile of a set of faces grouped by vertex count.
// faces[s] lists the faces with s vertices; the face set must be closed
// under taking subsets.  Returns rank of the boundary map out of the
// size-s chain group at index s (index 0 is the zero map out of the
// empty-face chain group).
inline std::vector<int> boundary_ranks(
    const std::vector<std::vector<std::uint64_t>>& faces,
    const FieldChoice& field) {
  const int top = static_cast<int>(faces.size());
  std::vector<int> rank(static_cast<std::size_t>(top) + 1, 0);
  for (int s = 1; s < top; ++s) {
    const auto& cols = faces[static_cast<std::size_t>(s)];
    const auto& rows = faces[static_cast<std::size_t>(s) - 1];
    if (cols.empty() || rows.empty()) continue;
    linalg::Matrix64 m(rows.size(), std::vector<std::int64_t>(cols.size(), 0));
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const std::uint64_t f = cols[c];
      int pos = 0;
      for (std::uint64_t bits = f; bits; bits &= bits - 1, ++pos) {
        const std::uint64_t sub = f ^ (bits & -bits);
        const auto it = std::lower_bound(rows.begin(), rows.end(), sub);
        if (it == rows.end() || *it != sub)
          throw InternalMismatch("face set not closed under subsets");
        m[static_cast<std::size_t>(it - rows.begin())][c] =
            (pos % 2 == 0) ? 1 : -1;
      }
    }
    rank[static_cast<std::size_t>(s)] = linalg::rank(m, field);
  }
  return rank;
}

}  // namespace detail

// Reduced simplicial homology by exact rank computation of all boundary
// matrices over the chosen field.
inline HomologyProfile reduced_homology(const FacetComplex& cx,
                                        const FieldChoice& field,
                                        int cap = kDefaultOracleCap) {
  check_cap(cx.n_vertices, cap, "homology");
  HomologyProfile out;
  if (cx.is_void()) return out;
  const auto table = face_table(cx);
  std::vector<std::vector<std::uint64_t>> faces(
      static_cast<std::size_t>(cx.dim()) + 2);
  for (std::uint64_t m = 0; m < table.size(); ++m)
    if (table[m])
      faces[static_cast<std::size_t>(__builtin_popcountll(m))].push_back(m);
  auto rank = detail::boundary_ranks(faces, field);
  const int top = static_cast<int>(faces.size());
  std::vector<int> h(static_cast<std::size_t>(top));
  for (int s = 0; s < top; ++s)
    h[static_cast<std::size_t>(s)] =
        static_cast<int>(faces[static_cast<std::size_t>(s)].size()) -
        rank[static_cast<std::size_t>(s)] - rank[static_cast<std::size_t>(s) + 1];
  out.dim_minus_one = h[0];
  out.dims.assign(h.begin() + 1, h.end());
  return out;
}

struct HochsterOptions {
  // Skip matrix work on induced subcomplexes that are cones, and shrink the
  // rest by elementary collapses first.  Both reductions preserve homology;
  // disable to force plain boundary-matrix ranks everywhere.
  bool structural_reductions = true;
};

namespace detail {

// Per-induced-subcomplex work area reused across the 2^N sweep.
struct HochsterScratch {
  std::vector<std::vector<std::uint64_t>> faces;  // grouped by vertex count
  std::vector<std::int16_t> coface_count;         // indexed by face mask
  std::vector<char> alive;
  std::vector<std::uint64_t> stack;
  std::vector<std::vector<std::uint64_t>> core;

  explicit HochsterScratch(int n_vertices)
      : faces(static_cast<std::size_t>(n_vertices) + 2),
        coface_count(1ULL << n_vertices, 0),
        alive(1ULL << n_vertices, 0),
        core(static_cast<std::size_t>(n_vertices) + 2) {}
};

// True if some vertex of w belongs to every maximal face of the induced
// subcomplex, i.e. the subcomplex is a cone and therefore acyclic.
inline bool induced_is_cone(const std::vector<char>& table,
                            const std::vector<std::vector<std::uint64_t>>& faces,
                            std::uint64_t w) {
  for (std::uint64_t vb = w; vb; vb &= vb - 1) {
    const std::uint64_t v = vb & -vb;
    bool apex = true;
    for (const auto& bucket : faces) {
      for (const std::uint64_t f : bucket)
        if (!(f & v) && !table[f | v]) {
          apex = false;
          break;
        }
      if (!apex) break;
    }
    if (apex) return true;
  }
  return false;
}

// Removes free face pairs until none remain.  faces/alive/coface_count are
// updated in place; homology of the alive part equals that of the input.
inline void collapse(const std::vector<char>& table, HochsterScratch& s,
                     std::uint64_t w) {
  s.stack.clear();
  for (const auto& bucket : s.faces)
    for (const std::uint64_t f : bucket) {
      s.alive[f] = 1;
      std::int16_t cnt = 0;
      for (std::uint64_t vb = w & ~f; vb; vb &= vb - 1)
        if (table[f | (vb & -vb)]) ++cnt;
      s.coface_count[f] = cnt;
      if (cnt == 1) s.stack.push_back(f);
    }
  while (!s.stack.empty()) {
    const std::uint64_t sigma = s.stack.back();
    s.stack.pop_back();
    if (!s.alive[sigma] || s.coface_count[sigma] != 1) continue;
    std::uint64_t tau = sigma;
    for (std::uint64_t vb = w & ~sigma; vb; vb &= vb - 1) {
      const std::uint64_t cand = sigma | (vb & -vb);
      if (s.alive[cand] && table[cand]) {
        tau = cand;
        break;
      }
    }
    if (tau == sigma) throw InternalMismatch("free face without coface");
    s.alive[sigma] = 0;
    s.alive[tau] = 0;
    for (std::uint64_t g : {sigma, tau})
      for (std::uint64_t bits = g; bits; bits &= bits - 1) {
        const std::uint64_t rho = g ^ (bits & -bits);
        if (!s.alive[rho]) continue;
        if (--s.coface_count[rho] == 1) s.stack.push_back(rho);
      }
  }
}

}  // namespace detail

// Graded Betti tables of every skeleton of cx at once, via the duality
// between induced-subcomplex homology and multigraded syzygies (Hochster):
//   beta_{i,j}(k-skeleton) = sum over |W| = j of dim H~_{j-i-1}((k-skel)|_W)
// and the restriction of a skeleton is the skeleton of the restriction, so
// one boundary-rank sweep per W feeds every k.  Index k+1 of the result is
// the table of the k-skeleton, k = -1..dim; the last entry is the table of
// cx itself.
inline std::vector<BettiTable> hochster_all_skeletons(
    const FacetComplex& cx, const FieldChoice& field,
    int cap = kDefaultOracleCap, const HochsterOptions& opt = {}) {
  check_cap(cx.n_vertices, cap, "Hochster sweep");
  if (cx.is_void()) throw RangeError("void complex has no Betti table");
  const int N = cx.n_vertices;
  const int dim_cx = cx.dim();
  const auto table = face_table(cx);
  std::vector<BettiTable> tables(static_cast<std::size_t>(dim_cx) + 2);
  detail::HochsterScratch scratch(N);

  std::vector<int> f(static_cast<std::size_t>(N) + 2);
  std::vector<int> h(static_cast<std::size_t>(N) + 2);
  std::vector<int> rank(static_cast<std::size_t>(N) + 3);

  for (std::uint64_t w = 0; w < (1ULL << N); ++w) {
    const int jw = __builtin_popcountll(w);
    for (auto& bucket : scratch.faces) bucket.clear();
    std::uint64_t sub = w;
    while (true) {
      if (table[sub])
        scratch.faces[static_cast<std::size_t>(__builtin_popcountll(sub))]
            .push_back(sub);
      if (sub == 0) break;
      sub = (sub - 1) & w;
    }
    // submask enumeration runs high-to-low; the rank kernels binary-search
    for (auto& bucket : scratch.faces)
      std::reverse(bucket.begin(), bucket.end());
    int top = jw + 1;
    while (top > 0 && scratch.faces[static_cast<std::size_t>(top)].empty())
      --top;
    // faces with s vertices exist for all s <= top by downward closure
    for (int s = 0; s <= top + 1; ++s) {
      f[static_cast<std::size_t>(s)] =
          s <= top ? static_cast<int>(
                         scratch.faces[static_cast<std::size_t>(s)].size())
                   : 0;
      h[static_cast<std::size_t>(s)] = 0;
    }

    bool trivial = false;
    if (opt.structural_reductions) {
      trivial = detail::induced_is_cone(table, scratch.faces, w);
      if (!trivial) {
        detail::collapse(table, scratch, w);
        for (int s = 0; s <= top; ++s) {
          auto& bucket = scratch.core[static_cast<std::size_t>(s)];
          bucket.clear();
          for (const std::uint64_t face :
               scratch.faces[static_cast<std::size_t>(s)])
            if (scratch.alive[face]) bucket.push_back(face);
        }
        for (const auto& bucket : scratch.faces)
          for (const std::uint64_t face : bucket) {
            scratch.alive[face] = 0;
            scratch.coface_count[face] = 0;
          }
        int core_top = top;
        while (core_top >= 0 &&
               scratch.core[static_cast<std::size_t>(core_top)].empty())
          --core_top;
        if (core_top < 0) {
          trivial = true;  // collapsed away entirely: a point
        } else {
          std::vector<std::vector<std::uint64_t>> core_faces(
              scratch.core.begin(),
              scratch.core.begin() + core_top + 1);
          auto core_rank = detail::boundary_ranks(core_faces, field);
          for (int s = 0; s <= core_top; ++s)
            h[static_cast<std::size_t>(s)] =
                static_cast<int>(
                    core_faces[static_cast<std::size_t>(s)].size()) -
                core_rank[static_cast<std::size_t>(s)] -
                core_rank[static_cast<std::size_t>(s) + 1];
        }
      }
    } else {
      std::vector<std::vector<std::uint64_t>> all_faces(
          scratch.faces.begin(), scratch.faces.begin() + top + 1);
      auto r = detail::boundary_ranks(all_faces, field);
      for (int s = 0; s <= top; ++s)
        h[static_cast<std::size_t>(s)] =
            f[static_cast<std::size_t>(s)] - r[static_cast<std::size_t>(s)] -
            r[static_cast<std::size_t>(s) + 1];
    }
    if (trivial)
      for (int s = 0; s <= top; ++s) h[static_cast<std::size_t>(s)] = 0;

    // ranks of the full induced boundary maps, recovered from f and
    // homology; needed for the top homology of each skeleton
    rank[0] = 0;
    for (int s = 0; s <= top; ++s)
      rank[static_cast<std::size_t>(s) + 1] = f[static_cast<std::size_t>(s)] -
                                              rank[static_cast<std::size_t>(s)] -
                                              h[static_cast<std::size_t>(s)];
    if (rank[static_cast<std::size_t>(top) + 1] != 0)
      throw InternalMismatch("inconsistent boundary rank profile");

    // homology of the k-skeleton below its top dimension agrees with the
    // full induced subcomplex
    for (int s = 0; s <= top; ++s) {
      const int hd = h[static_cast<std::size_t>(s)];
      if (hd == 0) continue;
      const int d = s - 1;
      for (int k = d + 1; k <= dim_cx; ++k)
        tables[static_cast<std::size_t>(k) + 1].add(jw - d - 1, jw, hd);
    }
    // top homology of the k-skeleton: k-cycles of the induced subcomplex
    for (int k = -1; k < top; ++k) {
      const int cycles = f[static_cast<std::size_t>(k) + 1] -
                         rank[static_cast<std::size_t>(k) + 1];
      if (cycles > 0) tables[static_cast<std::size_t>(k) + 1].add(jw - k - 1, jw, cycles);
    }
  }
  return tables;
}

// Graded Betti table of the quotient by the non-face ideal of cx.
inline BettiTable hochster_betti(const FacetComplex& cx,
                                 const FieldChoice& field,
                                 int cap = kDefaultOracleCap,
                                 const HochsterOptions& opt = {}) {
  return hochster_all_skeletons(cx, field, cap, opt).back();
}

// Numerator of the Hilbert series assembled from brute-force face counts:
// sum_s f_{s-1} t^s (1-t)^(N-s).
inline IntPolynomial hilbert_from_faces(const FacetComplex& cx,
                                        int cap = kDefaultOracleCap) {
  const FVector f = brute_f_vector(cx, cap);
  IntPolynomial acc;
  for (int s = 0; s < static_cast<int>(f.entries.size()); ++s) {
    IntPolynomial term =
        IntPolynomial::linear_power(1, -1, cx.n_vertices - s).shifted(s);
    acc += IntPolynomial(std::vector<Int>{f.entries[static_cast<std::size_t>(s)]}) * term;
  }
  return acc;
}

}  // namespace chordal_betti
