#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "chordal_betti/arith.hpp"
#include "chordal_betti/errors.hpp"
#include "chordal_betti/fvector.hpp"
#include "chordal_betti/gluing_spec.hpp"

namespace chordal_betti {

// Brute-force enumeration over 2^N subsets is refused above this many
// vertices unless the caller raises the cap explicitly.
inline constexpr int kDefaultOracleCap = 14;
// Beyond this the subset bitmask machinery itself would become unusable.
inline constexpr int kMaxOracleCap = 22;

// Cap taken from the environment when set, otherwise the default.
inline int oracle_cap_from_env() {
  if (const char* v = std::getenv("CHORDAL_BETTI_ORACLE_CAP")) {
    char* end = nullptr;
    long cap = std::strtol(v, &end, 10);
    if (end && *end == '\0' && cap >= 0 && cap <= kMaxOracleCap)
      return static_cast<int>(cap);
  }
  return kDefaultOracleCap;
}

inline void check_cap(int n_vertices, int cap, const char* what) {
  if (cap > kMaxOracleCap) cap = kMaxOracleCap;
  if (n_vertices > cap)
    throw OracleCapExceeded(std::string(what) + " needs 2^" +
                            std::to_string(n_vertices) +
                            " subset enumeration; cap is " +
                            std::to_string(cap));
}

// Simplicial complex given by its maximal faces as vertex bitmasks.
// Facets are sorted, distinct and mutually incomparable.  A complex with
// facet list {0} is the empty-face complex {{}}; an empty facet list is the
// void complex.
struct FacetComplex {
  int n_vertices = 0;
  std::vector<std::uint64_t> facets;

  bool is_void() const { return facets.empty(); }

  int dim() const {
    int d = -2;
    for (auto f : facets) d = std::max(d, __builtin_popcountll(f) - 1);
    return d;
  }

  std::uint64_t vertex_mask() const {
    return n_vertices == 64 ? ~0ULL : (1ULL << n_vertices) - 1;
  }

  bool operator==(const FacetComplex& o) const {
    return n_vertices == o.n_vertices && facets == o.facets;
  }
};

namespace detail {

// Sort, dedupe and drop faces contained in another; the result satisfies the
// facet-list invariants.
inline std::vector<std::uint64_t> normalize_facets(
    std::vector<std::uint64_t> faces) {
  std::sort(faces.begin(), faces.end(),
            [](std::uint64_t a, std::uint64_t b) {
              int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
              return pa != pb ? pa < pb : a < b;
            });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = i + 1; j < faces.size(); ++j)
      if ((faces[i] & faces[j]) == faces[i] && faces[i] != faces[j]) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(faces[i]);
  }
  return out;
}

}  // namespace detail

inline FacetComplex make_complex(int n_vertices,
                                 std::vector<std::uint64_t> faces) {
  if (n_vertices < 0 || n_vertices > 64)
    throw RangeError("vertex count out of range");
  FacetComplex cx;
  cx.n_vertices = n_vertices;
  cx.facets = detail::normalize_facets(std::move(faces));
  return cx;
}

// A realized gluing: the complex together with the vertex list of each
// clique in construction order and the parent actually used.
struct Realization {
  FacetComplex complex;
  std::vector<std::vector<int>> cliques;  // 0-based vertex labels
  std::vector<int> parents;               // 1-based, length e - 1
};

// Builds the canonical vertex labelling: clique 1 takes the first n1 labels,
// and each later clique reuses the r highest labels of its parent before
// taking fresh ones.
inline Realization realize_full(const GluingSpec& s) {
  validate_spec(s);
  const int N = n_vertices(s);
  if (N > 64) throw RangeError("more than 64 vertices");
  Realization out;
  out.parents = resolved_parents(s);
  int next = 0;
  for (int m = 0; m < s.e(); ++m) {
    std::vector<int> verts;
    if (m > 0) {
      const int overlap = s.r[static_cast<std::size_t>(m) - 1];
      const auto& parent =
          out.cliques[static_cast<std::size_t>(
              out.parents[static_cast<std::size_t>(m) - 1]) - 1];
      verts.assign(parent.end() - overlap, parent.end());
    }
    while (static_cast<int>(verts.size()) < s.n[static_cast<std::size_t>(m)])
      verts.push_back(next++);
    std::sort(verts.begin(), verts.end());
    out.cliques.push_back(std::move(verts));
  }
  out.complex.n_vertices = N;
  for (const auto& c : out.cliques) {
    std::uint64_t mask = 0;
    for (int v : c) mask |= 1ULL << v;
    out.complex.facets.push_back(mask);
  }
  out.complex.facets = detail::normalize_facets(std::move(out.complex.facets));
  if (out.complex.facets.size() != s.n.size())
    throw InternalMismatch("realized cliques are not mutually incomparable");
  return out;
}

inline FacetComplex realize(const GluingSpec& s) {
  return realize_full(s).complex;
}

// Membership table over all 2^N subsets: faces are the subsets of facets.
inline std::vector<char> face_table(const FacetComplex& cx) {
  std::vector<char> is_face(1ULL << cx.n_vertices, 0);
  for (auto f : cx.facets) {
    // enumerate subsets of each facet
    std::uint64_t sub = f;
    while (true) {
      is_face[sub] = 1;
      if (sub == 0) break;
      sub = (sub - 1) & f;
    }
  }
  return is_face;
}

// k-skeleton: faces of dimension at most k.
inline FacetComplex skeleton(const FacetComplex& cx, int k) {
  if (cx.is_void()) return cx;
  if (k < -1) throw RangeError("skeleton dimension below -1");
  if (k >= cx.dim()) return cx;
  std::vector<std::uint64_t> faces;
  for (auto f : cx.facets) {
    const int size = __builtin_popcountll(f);
    if (size <= k + 1) {
      faces.push_back(f);
      continue;
    }
    // all (k+1)-subsets of f
    std::vector<int> verts;
    for (int v = 0; v < cx.n_vertices; ++v)
      if (f >> v & 1) verts.push_back(v);
    std::vector<int> idx(static_cast<std::size_t>(k) + 1);
    for (int t = 0; t <= k; ++t) idx[static_cast<std::size_t>(t)] = t;
    while (true) {
      std::uint64_t mask = 0;
      for (int t : idx) mask |= 1ULL << verts[static_cast<std::size_t>(t)];
      faces.push_back(mask);
      int t = k;
      while (t >= 0 && idx[static_cast<std::size_t>(t)] == size - (k + 1) + t)
        --t;
      if (t < 0) break;
      ++idx[static_cast<std::size_t>(t)];
      for (int u = t + 1; u <= k; ++u)
        idx[static_cast<std::size_t>(u)] = idx[static_cast<std::size_t>(u) - 1] + 1;
    }
  }
  if (k == -1) faces.assign(1, 0);
  FacetComplex out;
  out.n_vertices = cx.n_vertices;
  out.facets = detail::normalize_facets(std::move(faces));
  return out;
}

// Face counts by direct subset enumeration.
inline FVector brute_f_vector(const FacetComplex& cx,
                              int cap = kDefaultOracleCap) {
  check_cap(cx.n_vertices, cap, "f-vector enumeration");
  std::vector<Int> counts(static_cast<std::size_t>(cx.n_vertices) + 1);
  const auto table = face_table(cx);
  for (std::uint64_t m = 0; m < table.size(); ++m)
    if (table[m]) counts[static_cast<std::size_t>(__builtin_popcountll(m))] += 1;
  return FVector(std::move(counts));
}

// Inclusion-minimal non-faces, sorted by size then lexicographically by
// vertex list.
inline std::vector<std::uint64_t> minimal_nonfaces(
    const FacetComplex& cx, int cap = kDefaultOracleCap) {
  check_cap(cx.n_vertices, cap, "non-face enumeration");
  const auto table = face_table(cx);
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 0; m < table.size(); ++m) {
    if (table[m]) continue;
    bool minimal = true;
    for (std::uint64_t bits = m; bits; bits &= bits - 1) {
      if (!table[m ^ (bits & -bits)]) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), [](std::uint64_t a, std::uint64_t b) {
    int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
    if (pa != pb) return pa < pb;
    // lexicographic on increasing vertex lists = numeric on reversed bits;
    // smaller lowest set bit first
    std::uint64_t x = a, y = b;
    while (x && y) {
      std::uint64_t la = x & -x, lb = y & -y;
      if (la != lb) return la < lb;
      x ^= la;
      y ^= lb;
    }
    return a < b;
  });
  return out;
}

// Alexander dual: faces are complements of non-faces; its facets are the
// complements of the minimal non-faces.
inline FacetComplex alexander_dual(const FacetComplex& cx,
                                   int cap = kDefaultOracleCap) {
  check_cap(cx.n_vertices, cap, "dual enumeration");
  const auto nonfaces = minimal_nonfaces(cx, cap);
  if (nonfaces.empty())
    throw VoidDual("the full simplex has no Alexander dual");
  FacetComplex out;
  out.n_vertices = cx.n_vertices;
  const std::uint64_t all = cx.vertex_mask();
  for (auto m : nonfaces) out.facets.push_back(all & ~m);
  out.facets = detail::normalize_facets(std::move(out.facets));
  return out;
}

inline std::string mask_to_string(std::uint64_t mask) {
  std::string out = "{";
  bool first = true;
  for (int v = 0; v < 64; ++v)
    if (mask >> v & 1) {
      if (!first) out += ",";
      out += std::to_string(v + 1);
      first = false;
    }
  return out + "}";
}

}  // namespace chordal_betti
