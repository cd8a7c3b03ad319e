#pragma once

#include <chrono>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "chordal_betti/betti_table.hpp"
#include "chordal_betti/closed_form.hpp"
#include "chordal_betti/dual_closed_form.hpp"
#include "chordal_betti/errors.hpp"
#include "chordal_betti/facet_complex.hpp"
#include "chordal_betti/fvector.hpp"
#include "chordal_betti/gluing_spec.hpp"
#include "chordal_betti/homology.hpp"
#include "chordal_betti/linalg.hpp"
#include "chordal_betti/polynomial.hpp"

namespace chordal_betti {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // counterexample or error text when failing
  long long micros = 0;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  int failures() const {
    int n = 0;
    for (const auto& c : checks)
      if (!c.pass) ++n;
    return n;
  }
};

namespace detail {

// Reports the first cell where the two tables disagree.
inline std::string diff_tables(const BettiTable& expected,
                               const BettiTable& actual) {
  std::map<std::pair<int, int>, int> keys;
  for (const auto& [k, v] : expected.entries()) keys[k] = 1;
  for (const auto& [k, v] : actual.entries()) keys[k] = 1;
  for (const auto& [k, v] : keys) {
    if (expected.get(k.first, k.second) != actual.get(k.first, k.second)) {
      std::ostringstream os;
      os << "beta(" << k.first << "," << k.second
         << "): expected " << to_string(expected.get(k.first, k.second))
         << ", got " << to_string(actual.get(k.first, k.second));
      return os.str();
    }
  }
  return {};
}

// Reduced Euler characteristic read off a Betti table's topmost column.
inline Int table_euler(const BettiTable& t, int n_vars) {
  Int acc = 0;
  for (int i = 0; i <= n_vars; ++i)
    acc += sign_pow(n_vars - i - 1) * t.get(i, n_vars);
  return acc;
}

class CheckRunner {
 public:
  explicit CheckRunner(VerificationReport& report) : report_(report) {}

  // body returns empty string on pass, a counterexample on failure;
  // internal consistency throws are converted to failures.
  void operator()(const std::string& name,
                  const std::function<std::string()>& body) const {
    const auto start = std::chrono::steady_clock::now();
    CheckResult res;
    res.name = name;
    try {
      res.detail = body();
      res.pass = res.detail.empty();
    } catch (const OracleCapExceeded&) {
      throw;
    } catch (const Error& e) {
      res.pass = false;
      res.detail = e.what();
    }
    res.micros = std::chrono::duration_cast<std::chrono::microseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
    report_.checks.push_back(std::move(res));
  }

 private:
  VerificationReport& report_;
};

}  // namespace detail

// Checks every closed form for the given gluing against brute-force face
// enumeration and the restriction-homology computation of the Betti
// numbers.  Throws OracleCapExceeded if the vertex count is out of reach.
inline VerificationReport verify_all(const GluingSpec& s,
                                     const FieldChoice& field = FieldChoice::rationals(),
                                     int cap = oracle_cap_from_env(),
                                     const HochsterOptions& opt = {}) {
  validate_spec(s);
  check_cap(n_vertices(s), cap, "full verification");
  const int N = n_vertices(s);
  const FacetComplex cx = realize(s);
  const int dim = cx.dim();

  VerificationReport report;
  detail::CheckRunner run(report);

  run("f-vector", [&] {
    const FVector closed = f_vector(s);
    const FVector brute = brute_f_vector(cx);
    if (closed == brute) return std::string{};
    return "closed " + closed.face_polynomial().str() + " vs brute " +
           brute.face_polynomial().str();
  });

  run("independence-polynomial", [&] {
    const IntPolynomial closed = independence_polynomial(s);
    IntPolynomial brute = IntPolynomial::constant(1);
    const FVector f = brute_f_vector(cx);
    for (int t = 1; t < static_cast<int>(f.entries.size()); ++t)
      brute += IntPolynomial::monomial(t, f.entries[static_cast<std::size_t>(t)]);
    if (closed == brute) return std::string{};
    return "closed " + closed.str("x") + " vs faces " + brute.str("x");
  });

  run("hilbert-numerator", [&] {
    const IntPolynomial closed = hilbert_numerator(s);
    if (closed != hilbert_from_faces(cx))
      return std::string{"clique form differs from the face expansion"};
    if (closed != skeleton_hilbert_numerator(s, dim))
      return std::string{"top skeleton numerator differs from the full one"};
    return std::string{};
  });

  run("minimal-nonfaces", [&] {
    for (std::uint64_t nf : minimal_nonfaces(cx))
      if (__builtin_popcountll(nf) != 2)
        return "minimal nonface " + mask_to_string(nf) + " is not an edge";
    return std::string{};
  });

  std::vector<BettiTable> oracle;
  run("oracle-tables", [&] {
    oracle = hochster_all_skeletons(cx, field, cap, opt);
    return std::string{};
  });

  for (int k = -1; k <= dim && !oracle.empty(); ++k) {
    const BettiTable& truth = oracle[static_cast<std::size_t>(k) + 1];
    run("betti-skeleton[" + std::to_string(k) + "]", [&, k] {
      return detail::diff_tables(truth, skeleton_betti_table(s, k));
    });
    run("alternating-sum[" + std::to_string(k) + "]", [&, k] {
      const IntPolynomial lhs = skeleton_hilbert_numerator(s, k);
      const IntPolynomial rhs = truth.alternating_polynomial();
      if (lhs == rhs) return std::string{};
      return "numerator " + lhs.str() + " vs table sum " + rhs.str();
    });
    run("invariants[" + std::to_string(k) + "]", [&, k] {
      const SkeletonInvariants inv = skeleton_invariants(s, k);
      const TableInvariants ti = invariants_from_betti(truth, N);
      std::ostringstream os;
      if (inv.regularity != ti.regularity)
        os << "regularity " << inv.regularity << " vs table " << ti.regularity;
      else if (inv.proj_dim != ti.proj_dim)
        os << "pdim " << inv.proj_dim << " vs table " << ti.proj_dim;
      else if (inv.depth != ti.depth)
        os << "depth " << inv.depth << " vs table " << ti.depth;
      else if (inv.cohen_macaulay != (ti.depth == inv.krull_dim))
        os << "CM flag disagrees with depth " << ti.depth << " and dimension "
           << inv.krull_dim;
      else if (inv.euler != detail::table_euler(truth, N))
        os << "euler " << to_string(inv.euler) << " vs homology "
           << to_string(detail::table_euler(truth, N));
      return os.str();
    });
  }

  if (max_clique(s) == N) return report;  // full simplex: no dual side

  const FacetComplex dual = alexander_dual(cx);

  run("dual-involution", [&] {
    if (alexander_dual(dual) == cx) return std::string{};
    return std::string{"double dual differs from the complex"};
  });

  run("dual-f-vector", [&] {
    const FVector closed = dual_f_vector(s);
    const FVector brute = brute_f_vector(dual);
    if (closed == brute) return std::string{};
    return "closed " + closed.face_polynomial().str() + " vs brute " +
           brute.face_polynomial().str();
  });

  std::vector<BettiTable> dual_oracle;
  run("dual-oracle-tables", [&] {
    dual_oracle = hochster_all_skeletons(dual, field, cap, opt);
    return std::string{};
  });

  if (dual_oracle.empty()) return report;

  const BettiTable& dual_truth = dual_oracle.back();

  run("dual-betti", [&] {
    return detail::diff_tables(dual_truth, dual_betti_table(s));
  });

  run("dual-h-vector", [&] {
    const DualHVector h = dual_h_vector(s);
    const IntPolynomial num = dual_hilbert_numerator(s);
    if (num != dual_truth.alternating_polynomial())
      return std::string{"numerator differs from the table sum"};
    if (h.h * IntPolynomial::linear_power(1, -1, 2) != num)
      return std::string{"h-vector does not reproduce the numerator"};
    return std::string{};
  });

  run("dual-profile", [&] {
    const DualProfile p = dual_profile(s);
    const TableInvariants ti = invariants_from_betti(dual_truth, N);
    std::ostringstream os;
    if (p.regularity != ti.regularity)
      os << "regularity " << p.regularity << " vs table " << ti.regularity;
    else if (p.proj_dim != ti.proj_dim)
      os << "pdim " << p.proj_dim << " vs table " << ti.proj_dim;
    else if (Int(p.cm_type) != dual_truth.total(p.proj_dim))
      os << "type " << p.cm_type << " vs table "
         << to_string(dual_truth.total(p.proj_dim));
    else if (p.gorenstein != (dual_truth.total(p.proj_dim) == 1))
      os << "Gorenstein flag disagrees with the table";
    else if (p.sphere_count != dual_truth.get(2, N) ||
             dual_truth.get(1, N) != 0)
      os << "top homology is not a wedge of " << to_string(p.sphere_count)
         << " spheres";
    return os.str();
  });

  run("dual-resolution", [&] {
    const GradedResolution res = dual_resolution(s);  // self-checking
    IntPolynomial alt = IntPolynomial::constant(1);
    for (int d : res.generator_shifts) alt -= IntPolynomial::monomial(d);
    for (int d : res.relation_shifts) alt += IntPolynomial::monomial(d);
    if (alt != dual_hilbert_numerator(s))
      return std::string{"resolution shifts miss the numerator"};
    for (std::size_t m = 0; m < res.d1.size(); ++m)
      if (res.d1[m].degree() != res.generator_shifts[m])
        return std::string{"generator degree mismatch"};
    return std::string{};
  });

  const int rmin = min_overlap(s);
  for (int k = -1; k <= N - 3; ++k) {
    const BettiTable& truth = dual_oracle[static_cast<std::size_t>(k) + 1];
    run("dual-skeleton[" + std::to_string(k) + "]", [&, k] {
      return detail::diff_tables(truth, dual_skeleton_betti_table(s, k));
    });
    run("dual-skeleton-profile[" + std::to_string(k) + "]", [&, k] {
      const DualSkeletonProfile p = dual_skeleton_profile(s, k);
      const TableInvariants ti = invariants_from_betti(truth, N);
      const int kk = std::min(k, N - 3);
      std::ostringstream os;
      if (p.proj_dim != ti.proj_dim)
        os << "pdim " << p.proj_dim << " vs table " << ti.proj_dim;
      else if (ti.depth != kk + 1)  // depth reaches the Krull dimension
        os << "depth " << ti.depth << " vs dimension " << kk + 1;
      else if (p.h_degree != ti.regularity)
        os << "h degree " << p.h_degree << " vs regularity " << ti.regularity;
      else if (p.ideal_regularity != ti.regularity + 1)
        os << "ideal regularity " << p.ideal_regularity << " vs table "
           << ti.regularity + 1;
      else if (p.cm_type != truth.total(ti.proj_dim))
        os << "type " << to_string(p.cm_type) << " vs table "
           << to_string(truth.total(ti.proj_dim));
      else if (p.euler != detail::table_euler(truth, N))
        os << "euler " << to_string(p.euler) << " vs homology "
           << to_string(detail::table_euler(truth, N));
      return os.str();
    });
  }

  run("regularity-bound", [&] {
    for (int k = N - rmin - 3; k < N - 3; ++k) {
      const RegularityBound b = regularity_bound_check(s, k);
      if (!b.holds)
        return "bound fails at k=" + std::to_string(k);
      if (b.equality != (k == N - rmin - 3))
        return "equality misplaced at k=" + std::to_string(k);
    }
    return std::string{};
  });

  run("simplex-threshold", [&] {
    std::vector<std::uint64_t> simplex_facet{cx.vertex_mask()};
    FacetComplex simplex;
    simplex.n_vertices = N;
    simplex.facets = simplex_facet;
    for (int k = -1; k <= N - max_clique(s) - 2; ++k) {
      if (!(skeleton(dual, k) == skeleton(simplex, k)))
        return "dual skeleton k=" + std::to_string(k) +
               " is not the simplex skeleton";
      const DualSkeletonProfile p = dual_skeleton_profile(s, k);
      if (!p.simplex_skeleton)
        return "threshold flag unset at k=" + std::to_string(k);
    }
    return std::string{};
  });

  return report;
}

}  // namespace chordal_betti
