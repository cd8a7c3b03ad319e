#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <vector>

#include "chordal_betti/closed_form.hpp"
#include "chordal_betti/errors.hpp"
#include "chordal_betti/homology.hpp"
#include "chordal_betti/linalg.hpp"

using namespace chordal_betti;

namespace {

GluingSpec make(std::vector<int> n, std::vector<int> r = {}) {
  GluingSpec s;
  s.n = std::move(n);
  s.r = std::move(r);
  return s;
}

// six-vertex projective plane: every edge lies in exactly two of the ten
// triangles, Euler characteristic 1
FacetComplex projective_plane() {
  return make_complex(6, {7, 13, 25, 49, 35, 22, 44, 26, 52, 42});
}

const FieldChoice kQ = FieldChoice::rationals();
const FieldChoice kF2 = FieldChoice::prime_field(2);
const FieldChoice kF3 = FieldChoice::prime_field(3);

}  // namespace

TEST_CASE("exact ranks over the rationals") {
  using linalg::Matrix64;
  CHECK(linalg::rank_rationals(Matrix64{{1, 0}, {0, 1}}) == 2);
  CHECK(linalg::rank_rationals(Matrix64{{1, 2}, {2, 4}}) == 1);
  CHECK(linalg::rank_rationals(Matrix64{{0, 0}, {0, 0}}) == 0);
  CHECK(linalg::rank_rationals(Matrix64{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 2);
  CHECK(linalg::rank_bareiss_exact(Matrix64{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) ==
        2);
}

TEST_CASE("large entries fall back to fraction-free elimination") {
  const std::int64_t big = 3037000499LL;  // floor(sqrt(2^63))
  const linalg::Matrix64 m{{big, big - 1, 1},
                           {big - 1, big, 2},
                           {2 * big - 1, 2 * big - 1, 5}};
  CHECK(linalg::rank_rationals(m) == linalg::rank_bareiss_exact(m));
  CHECK(linalg::rank_rationals(m) == 3);
}

TEST_CASE("ranks over prime fields see the characteristic") {
  using linalg::Matrix64;
  CHECK(linalg::rank_mod_p(Matrix64{{1, 1}, {1, 1}}, 2) == 1);
  CHECK(linalg::rank_mod_p(Matrix64{{2}}, 2) == 0);
  CHECK(linalg::rank_mod_p(Matrix64{{2}}, 3) == 1);
  CHECK(linalg::rank_mod_p(Matrix64{{6, 4}, {4, 6}}, 5) == 1);
  CHECK(linalg::rank(Matrix64{{6, 4}, {4, 6}}, kQ) == 2);
  CHECK(linalg::rank(Matrix64{{6, 4}, {4, 6}}, FieldChoice::prime_field(5)) ==
        1);
}

TEST_CASE("reduced homology of model complexes") {
  const HomologyProfile hollow_triangle =
      reduced_homology(make_complex(3, {3, 5, 6}), kQ);
  CHECK(hollow_triangle.dims == std::vector<int>{0, 1});
  CHECK(hollow_triangle.reduced_euler() == 0 - 1);

  const HomologyProfile two_points =
      reduced_homology(make_complex(2, {1, 2}), kQ);
  CHECK(two_points.dims == std::vector<int>{1});

  const HomologyProfile sphere =
      reduced_homology(make_complex(4, {7, 11, 13, 14}), kQ);
  CHECK(sphere.dims == std::vector<int>{0, 0, 1});

  const HomologyProfile point = reduced_homology(make_complex(1, {1}), kQ);
  CHECK(point.acyclic());

  const HomologyProfile empty = reduced_homology(make_complex(3, {0}), kQ);
  CHECK(empty.dim_minus_one == 1);
  CHECK(empty.dims.empty());
  CHECK(empty.reduced_euler() == -1);

  const HomologyProfile void_cx = reduced_homology(make_complex(3, {}), kQ);
  CHECK(void_cx.acyclic());
  CHECK(void_cx.reduced_euler() == 0);
}

TEST_CASE("homology of the projective plane depends on the field") {
  const FacetComplex rp2 = projective_plane();
  CHECK(reduced_homology(rp2, kQ).dims == std::vector<int>{0, 0, 0});
  CHECK(reduced_homology(rp2, kF2).dims == std::vector<int>{0, 1, 1});
  CHECK(reduced_homology(rp2, kF3).dims == std::vector<int>{0, 0, 0});
}

TEST_CASE("restriction tables of the projective plane differ only in char 2") {
  const FacetComplex rp2 = projective_plane();
  const BettiTable over_q = hochster_betti(rp2, kQ);
  CHECK(hochster_betti(rp2, kF3) == over_q);
  CHECK_FALSE(hochster_betti(rp2, kF2) == over_q);
}

TEST_CASE("structural reductions do not change any table") {
  HochsterOptions plain;
  plain.structural_reductions = false;
  for (const FacetComplex& cx :
       {projective_plane(), realize(make({3, 5, 6}, {2, 3})),
        realize(make({2, 2, 2}, {0, 0}))}) {
    for (const FieldChoice& field : {kQ, kF2}) {
      const auto fast = hochster_all_skeletons(cx, field, 14, {});
      const auto slow = hochster_all_skeletons(cx, field, 14, plain);
      REQUIRE(fast.size() == slow.size());
      for (std::size_t i = 0; i < fast.size(); ++i) CHECK(fast[i] == slow[i]);
    }
  }
}

TEST_CASE("restriction tables of the nine-vertex example") {
  const auto tables = hochster_all_skeletons(realize(make({3, 5, 6}, {2, 3})), kQ, 14);
  REQUIRE(tables.size() == 7);  // skeleta -1..5

  // the empty skeleton resolves the whole vertex set: Koszul numbers
  for (int i = 0; i <= 9; ++i) CHECK(tables[0].total(i) == binomial(9, i));

  // the full complex has a two-row table
  const BettiTable& full = tables.back();
  const std::vector<Int> totals{1, 12, 30, 34, 21, 7, 1};
  for (int i = 0; i < static_cast<int>(totals.size()); ++i)
    CHECK(full.total(i) == totals[static_cast<std::size_t>(i)]);
  CHECK(full.get(6, 7) == 1);
  CHECK(full.proj_dim() == 6);
  CHECK(full.regularity() == 1);
}

TEST_CASE("homology of a dual skeleton") {
  const FacetComplex dual = alexander_dual(realize(make({3, 5, 6}, {2, 3})));
  const HomologyProfile h = reduced_homology(skeleton(dual, 2), kQ);
  CHECK(h.dims == std::vector<int>{0, 0, 55});
}

TEST_CASE("restriction sweep respects the cap") {
  CHECK_THROWS_AS(reduced_homology(make_complex(23, {1}), kQ),
                  OracleCapExceeded);
  CHECK_THROWS_AS(hochster_betti(make_complex(16, {1}), kQ, 15),
                  OracleCapExceeded);
}

TEST_CASE("face-count numerator matches the clique closed form") {
  const GluingSpec s = make({3, 5, 6}, {2, 3});
  CHECK(hilbert_from_faces(realize(s)) == hilbert_numerator(s));
}
