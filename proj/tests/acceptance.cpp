// Acceptance gates for the whole library.  Each criterion prints exactly one
// PASS/FAIL line; the process exits nonzero if any of them fail.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "chordal_betti/closed_form.hpp"
#include "chordal_betti/dual_closed_form.hpp"
#include "chordal_betti/homology.hpp"
#include "chordal_betti/identities.hpp"
#include "chordal_betti/verify.hpp"

using namespace chordal_betti;

namespace {

struct Criterion {
  std::string label;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok && failures.size() < 8) failures.push_back(what);
    if (!ok && failures.size() == 8) failures.push_back("...");
  }
};

GluingSpec make(std::vector<int> n, std::vector<int> r = {}) {
  GluingSpec s;
  s.n = std::move(n);
  s.r = std::move(r);
  return s;
}

bool rows_equal(const BettiTable& t, int row, const std::vector<Int>& want) {
  for (int i = 1; i <= static_cast<int>(want.size()); ++i)
    if (t.get(i, i + row) != want[static_cast<std::size_t>(i) - 1]) return false;
  return t.get(static_cast<int>(want.size()) + 1,
               static_cast<int>(want.size()) + 1 + row) == 0;
}

bool totals_equal(const BettiTable& t, const std::vector<Int>& want) {
  for (int i = 0; i < static_cast<int>(want.size()) + 1; ++i)
    if (t.total(i) !=
        (i < static_cast<int>(want.size()) ? want[static_cast<std::size_t>(i)]
                                           : Int(0)))
      return false;
  return true;
}

// every feasible recipe with e <= 3 cliques of size 2..5 on at most 10
// vertices, overlaps resolved against default parents
std::vector<GluingSpec> family() {
  std::vector<GluingSpec> out;
  for (int e = 1; e <= 3; ++e) {
    std::vector<int> n(static_cast<std::size_t>(e), 2);
    for (;;) {
      std::vector<int> r(static_cast<std::size_t>(e) - 1, 0);
      for (;;) {
        GluingSpec s;
        s.n = n;
        s.r = r;
        bool ok = true;
        try {
          validate_spec(s);
        } catch (const Error&) {
          ok = false;
        }
        if (ok && n_vertices(s) <= 10) out.push_back(s);
        int i = e - 2;
        while (i >= 0 && ++r[static_cast<std::size_t>(i)] >=
                             n[static_cast<std::size_t>(i) + 1]) {
          r[static_cast<std::size_t>(i)] = 0;
          --i;
        }
        if (i < 0) break;
      }
      int i = e - 1;
      while (i >= 0 && ++n[static_cast<std::size_t>(i)] > 5) {
        n[static_cast<std::size_t>(i)] = 2;
        --i;
      }
      if (i < 0) break;
    }
  }
  return out;
}

// numerator of the Hilbert series of a truncation, assembled from the face
// counts of the dual
IntPolynomial dual_truncated_numerator(const GluingSpec& s, int k) {
  const int N = n_vertices(s);
  const FVector f = dual_f_vector(s).truncated(k);
  IntPolynomial acc;
  for (int t = 0; t < static_cast<int>(f.entries.size()); ++t)
    acc += IntPolynomial(std::vector<Int>{f.entries[static_cast<std::size_t>(t)]}) *
           IntPolynomial::linear_power(1, -1, N - t).shifted(t);
  return acc;
}

void criterion_worked_example(Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  const GluingSpec s = make({3, 5, 6}, {2, 3});

  c.expect(f_vector(s).entries == std::vector<Int>{1, 9, 24, 30, 20, 7, 1},
           "face counts");

  const BettiTable full = skeleton_betti_table(s, 5);
  c.expect(totals_equal(full, {1, 12, 30, 34, 21, 7, 1}), "full totals");
  c.expect(full.get(6, 7) == 1, "full corner");

  c.expect(rows_equal(skeleton_betti_table(s, 1), 2,
                      {30, 160, 357, 427, 289, 105, 16}),
           "k=1 shifted row");
  c.expect(totals_equal(skeleton_betti_table(s, 1),
                        {1, 42, 190, 391, 448, 296, 106, 16}),
           "k=1 totals");
  c.expect(rows_equal(skeleton_betti_table(s, 2), 3,
                      {20, 93, 173, 161, 75, 14}),
           "k=2 shifted row");
  c.expect(rows_equal(skeleton_betti_table(s, 3), 4, {7, 27, 39, 25, 6}),
           "k=3 shifted row");
  c.expect(rows_equal(skeleton_betti_table(s, 4), 5, {1, 3, 3, 1}),
           "k=4 shifted row");

  const SkeletonInvariants k2 = skeleton_invariants(s, 2);
  c.expect(k2.regularity == 3 && k2.proj_dim == 6 && k2.depth == 3 &&
               k2.multiplicity == 30 && k2.euler == 14 &&
               k2.h_poly == IntPolynomial(std::vector<Int>{1, 6, 9, 14}),
           "k=2 invariants");
  const SkeletonInvariants k5 = skeleton_invariants(s, 5);
  c.expect(k5.regularity == 1 && k5.proj_dim == 6 && k5.depth == 3 &&
               k5.krull_dim == 6 && k5.multiplicity == 1 && k5.h_degree == 4 &&
               k5.a_invariant == -2 && k5.euler == 0,
           "full invariants");

  const BettiTable dual = dual_betti_table(s);
  c.expect(dual.get(1, 3) == 1 && dual.get(1, 4) == 1 && dual.get(1, 6) == 1 &&
               dual.get(2, 6) == 1 && dual.get(2, 7) == 1 &&
               dual.entries().size() == 6,
           "dual table");
  const DualProfile dp = dual_profile(s);
  c.expect(dp.regularity == 5 && dp.proj_dim == 2 && dp.depth == 7 &&
               dp.multiplicity == 12 && dp.cm_type == 2 &&
               dp.a_invariant == -2 && dp.sphere_count == 0,
           "dual profile");
  c.expect(dual_h_vector(s).entries ==
               std::vector<Int>{1, 2, 3, 3, 2, 1, 0, 0},
           "dual h-vector");

  const GradedResolution res = dual_resolution(s);
  c.expect(res.generator_shifts == std::vector<int>{6, 4, 3} &&
               res.relation_shifts == std::vector<int>{7, 6},
           "resolution shifts");
  c.expect(res.d1.size() == 3 && res.d1[0].vars == 0b111111000ULL &&
               res.d1[1].vars == 0b111000001ULL && res.d1[2].vars == 0b111ULL,
           "resolution generators");
  c.expect(res.d2[0][0].sign == 1 && res.d2[0][0].vars == 0b1ULL &&
               res.d2[1][0].sign == -1 && res.d2[1][0].vars == 0b111000ULL &&
               res.d2[1][1].sign == 1 && res.d2[1][1].vars == 0b110ULL &&
               res.d2[2][1].sign == -1 && res.d2[2][1].vars == 0b111000000ULL &&
               res.d2[0][1].is_zero() && res.d2[2][0].is_zero(),
           "resolution relations");

  c.expect(rows_equal(dual_skeleton_betti_table(s, 1), 2,
                      {84, 378, 756, 840, 540, 189, 28}),
           "dual k=1 row");
  c.expect(totals_equal(dual_skeleton_betti_table(s, 2),
                        {1, 121, 489, 820, 705, 309, 55}),
           "dual k=2 totals");
  c.expect(totals_equal(dual_skeleton_betti_table(s, 4), {1, 57, 152, 138, 42}),
           "dual k=4 totals");
  const DualSkeletonProfile dk2 = dual_skeleton_profile(s, 2);
  c.expect(dk2.proj_dim == 6 && dk2.cm_type == 55 && dk2.ideal_regularity == 4 &&
               dk2.multiplicity == 83 && dk2.euler == 55 && dk2.h_degree == 3,
           "dual k=2 profile");

  const Int prim_mult[] = {9, 24, 30, 20, 7, 1};
  const int prim_deg[] = {1, 2, 3, 4, 5, 4};
  const Int prim_euler[] = {8, -16, 14, -6, 1, 0};
  for (int k = 0; k <= 5; ++k) {
    const SkeletonInvariants inv = skeleton_invariants(s, k);
    c.expect(inv.multiplicity == prim_mult[k] && inv.h_degree == prim_deg[k] &&
                 inv.euler == prim_euler[k],
             "summary row k=" + std::to_string(k));
  }
  const Int dual_mult[] = {9, 36, 83, 119, 106, 54, 12};
  const int dual_deg[] = {1, 2, 3, 4, 5, 6, 5};
  const Int dual_euler[] = {8, -28, 55, -64, 42, -12, 0};
  for (int k = 0; k <= 6; ++k) {
    const DualSkeletonProfile p = dual_skeleton_profile(s, k);
    c.expect(p.multiplicity == dual_mult[k] && p.h_degree == dual_deg[k] &&
                 p.euler == dual_euler[k],
             "dual summary row k=" + std::to_string(k));
  }

  const RegularityBound rb = regularity_bound_check(s, 4);
  c.expect(rb.holds && rb.equality && rb.ideal_reg_full == 6,
           "regularity bound attained");

  const auto elapsed = std::chrono::steady_clock::now() - start;
  c.expect(std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count() <
               1000,
           "worked example must reproduce in under one second");
}

void criteria_family(Criterion& oracle_q, Criterion& fields, Criterion& invs,
                     Criterion& structure) {
  const FieldChoice q = FieldChoice::rationals();
  const FieldChoice f2 = FieldChoice::prime_field(2);
  const FieldChoice f3 = FieldChoice::prime_field(3);

  for (const GluingSpec& s : family()) {
    const std::string tag = spec_to_string(s);
    const int N = n_vertices(s);
    const int dim = complex_dim(s);
    const FacetComplex cx = realize(s);

    const auto over_q = hochster_all_skeletons(cx, q, 14);
    {
      const auto over_f2 = hochster_all_skeletons(cx, f2, 14);
      const auto over_f3 = hochster_all_skeletons(cx, f3, 14);
      for (std::size_t i = 0; i < over_q.size(); ++i) {
        fields.expect(over_f2[i] == over_q[i], tag + " char 2");
        fields.expect(over_f3[i] == over_q[i], tag + " char 3");
      }
    }

    for (int k = -1; k <= dim; ++k) {
      const BettiTable closed = skeleton_betti_table(s, k);
      const BettiTable& brute = over_q[static_cast<std::size_t>(k) + 1];
      oracle_q.expect(closed == brute,
                      tag + " k=" + std::to_string(k) + ": " +
                          detail::diff_tables(brute, closed));

      const SkeletonInvariants inv = skeleton_invariants(s, k);
      const TableInvariants ti = invariants_from_betti(brute, N);
      invs.expect(inv.regularity == ti.regularity &&
                      inv.proj_dim == ti.proj_dim && inv.depth == ti.depth,
                  tag + " invariants k=" + std::to_string(k));

      structure.expect(closed.alternating_polynomial() ==
                           skeleton_hilbert_numerator(s, k),
                       tag + " numerator k=" + std::to_string(k));
    }

    if (max_clique(s) == N) continue;

    const FacetComplex dual_cx = alexander_dual(cx);
    const auto dual_q = hochster_all_skeletons(dual_cx, q, 14);
    {
      const auto dual_f2 = hochster_all_skeletons(dual_cx, f2, 14);
      const auto dual_f3 = hochster_all_skeletons(dual_cx, f3, 14);
      for (std::size_t i = 0; i < dual_q.size(); ++i) {
        fields.expect(dual_f2[i] == dual_q[i], tag + " dual char 2");
        fields.expect(dual_f3[i] == dual_q[i], tag + " dual char 3");
      }
    }

    oracle_q.expect(dual_betti_table(s) == dual_q.back(), tag + " full dual");

    const int rmin = min_overlap(s);
    for (int k = -1; k <= N - 3; ++k) {
      const BettiTable closed = dual_skeleton_betti_table(s, k);
      const BettiTable& brute = dual_q[static_cast<std::size_t>(k) + 1];
      oracle_q.expect(closed == brute,
                      tag + " dual k=" + std::to_string(k) + ": " +
                          detail::diff_tables(brute, closed));

      const DualSkeletonProfile p = dual_skeleton_profile(s, k);
      const TableInvariants ti = invariants_from_betti(brute, N);
      invs.expect(p.proj_dim == ti.proj_dim, tag + " dual pdim");
      invs.expect(brute.empty() || p.ideal_regularity == ti.regularity + 1,
                  tag + " dual regularity k=" + std::to_string(k));

      structure.expect(closed.alternating_polynomial() ==
                           dual_truncated_numerator(s, std::min(k, N - 3)),
                       tag + " dual numerator k=" + std::to_string(k));
    }

    for (int k = N - rmin - 3; k <= N - 4; ++k) {
      if (k < -1) continue;
      const RegularityBound rb = regularity_bound_check(s, k);
      invs.expect(rb.holds, tag + " bound k=" + std::to_string(k));
      invs.expect(rb.equality == (k == N - rmin - 3),
                  tag + " bound tight k=" + std::to_string(k));
    }

    const GradedResolution res = dual_resolution(s);
    for (std::size_t col = 0; col < res.relation_shifts.size(); ++col) {
      int sign_sum = 0, seen = 0;
      std::uint64_t product = 0;
      bool same = true;
      for (std::size_t row = 0; row < res.d1.size(); ++row) {
        const SignedMonomial& entry = res.d2[row][col];
        if (entry.is_zero()) continue;
        ++seen;
        sign_sum += res.d1[row].sign * entry.sign;
        const std::uint64_t composite = res.d1[row].vars | entry.vars;
        same = same && (res.d1[row].vars & entry.vars) == 0;
        if (product == 0)
          product = composite;
        else
          same = same && product == composite;
      }
      structure.expect(seen == 2 && sign_sum == 0 && same,
                       tag + " composite column " + std::to_string(col + 1));
    }
    structure.expect(dual_hilbert_numerator(s) ==
                         dual_q.back().alternating_polynomial(),
                     tag + " dual numerator");

    const FacetComplex simplex =
        make_complex(N, {N == 64 ? ~0ULL : (1ULL << N) - 1});
    for (int k = -1; k <= N - 3; ++k) {
      const bool below = k <= N - max_clique(s) - 2;
      structure.expect(dual_skeleton_profile(s, k).simplex_skeleton == below,
                       tag + " threshold flag k=" + std::to_string(k));
      if (below)
        structure.expect(skeleton(dual_cx, k) == skeleton(simplex, k),
                         tag + " threshold faces k=" + std::to_string(k));
    }
  }
}

void criterion_identities(Criterion& c) {
  for (const SweepOutcome& o : run_all_sweeps({})) {
    c.expect(o.pass(), family_name(o.family) + " sweep");
    c.expect(o.cases > 0, family_name(o.family) + " is nonempty");
  }
}

}  // namespace

int main() {
  Criterion worked{"worked example reproduced exactly in under a second"};
  Criterion oracle_q{"closed tables equal brute force over Q on the full family"};
  Criterion fields{"brute force agrees across Q, F2 and F3 on the family"};
  Criterion invs{"piecewise invariant formulas match the oracle tables"};
  Criterion ids{"all identity sweeps pass with no counterexamples"};
  Criterion structure{"resolutions compose to zero and numerators match"};

  criterion_worked_example(worked);
  criteria_family(oracle_q, fields, invs, structure);
  criterion_identities(ids);

  const Criterion* all[] = {&worked, &oracle_q, &fields, &invs, &ids, &structure};
  bool ok = true;
  int idx = 0;
  for (const Criterion* c : all) {
    ++idx;
    if (c->failures.empty()) {
      std::printf("criterion %d: PASS  %s\n", idx, c->label.c_str());
    } else {
      ok = false;
      std::printf("criterion %d: FAIL  %s\n", idx, c->label.c_str());
      for (const std::string& f : c->failures)
        std::printf("    %s\n", f.c_str());
    }
  }
  return ok ? 0 : 1;
}
