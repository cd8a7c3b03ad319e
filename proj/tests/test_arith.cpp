#include <catch2/catch_amalgamated.hpp>

#include "chordal_betti/arith.hpp"

using namespace chordal_betti;

TEST_CASE("subset binomial vanishes outside 0 <= b <= a") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(3, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(-1, 0) == 0);
  CHECK(binomial(-2, 3) == 0);
  CHECK(binomial(4, -1) == 0);
}

TEST_CASE("subset binomial known values") {
  CHECK(binomial(52, 5) == 2598960);
  CHECK(binomial(60, 30) == Int("118264581564861424"));
  CHECK(to_string(binomial(100, 50)) == "100891344545564193334812497256");
}

TEST_CASE("binomial falls back past the cached Pascal rows") {
  // kPascalRows is 192; 200 exercises the multiplicative path
  CHECK(binomial(200, 3) == 1313400);
  CHECK(binomial(200, 0) == 1);
  CHECK(binomial(200, 200) == 1);
  CHECK(binomial(193, 2) == 193 * 192 / 2);
}

TEST_CASE("subset binomial satisfies the Pascal recurrence") {
  for (long long a = 1; a <= 30; ++a)
    for (long long b = 0; b <= a; ++b)
      CHECK(binomial(a, b) == binomial(a - 1, b - 1) + binomial(a - 1, b));
}

TEST_CASE("generalized binomial extends the polynomial in the top argument") {
  CHECK(binomial_any(-1, 0) == 1);
  CHECK(binomial_any(-1, 3) == -1);
  CHECK(binomial_any(-2, 3) == -4);
  CHECK(binomial_any(-3, 2) == 6);
  CHECK(binomial_any(2, 2) == 1);
  CHECK(binomial_any(7, -1) == 0);
}

TEST_CASE("generalized binomial agrees with the subset count when a >= 0") {
  for (long long a = 0; a <= 20; ++a)
    for (long long b = 0; b <= 22; ++b)
      CHECK(binomial_any(a, b) == binomial(a, b));
}

TEST_CASE("generalized binomial upper negation") {
  for (long long n = 1; n <= 12; ++n)
    for (long long k = 0; k <= 12; ++k)
      CHECK(binomial_any(-n, k) ==
            Int(sign_pow(k)) * binomial(n + k - 1, k));
}

TEST_CASE("generalized binomial satisfies the Pascal recurrence everywhere") {
  for (long long a = -10; a <= 15; ++a)
    for (long long b = 1; b <= 12; ++b)
      CHECK(binomial_any(a, b) ==
            binomial_any(a - 1, b - 1) + binomial_any(a - 1, b));
}

TEST_CASE("sign_pow") {
  CHECK(sign_pow(0) == 1);
  CHECK(sign_pow(1) == -1);
  CHECK(sign_pow(2) == 1);
  CHECK(sign_pow(-1) == -1);
  CHECK(sign_pow(-2) == 1);
}
