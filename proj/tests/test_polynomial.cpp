#include <catch2/catch_amalgamated.hpp>

#include "chordal_betti/errors.hpp"
#include "chordal_betti/polynomial.hpp"

using namespace chordal_betti;

TEST_CASE("linear powers expand binomially") {
  const IntPolynomial p = IntPolynomial::linear_power(1, -1, 3);  // (1-t)^3
  CHECK(p.coeff(0) == 1);
  CHECK(p.coeff(1) == -3);
  CHECK(p.coeff(2) == 3);
  CHECK(p.coeff(3) == -1);
  CHECK(p.degree() == 3);

  const IntPolynomial q = IntPolynomial::linear_power(1, 1, 5);  // (1+t)^5
  CHECK(q.coeff(2) == 10);
  CHECK(q.evaluate(1) == 32);
}

TEST_CASE("ring operations") {
  const IntPolynomial one_minus_t = IntPolynomial::linear_power(1, -1, 1);
  IntPolynomial cyc(std::vector<Int>{1, 1, 1});  // 1 + t + t^2
  CHECK(one_minus_t * cyc ==
        IntPolynomial::constant(1) - IntPolynomial::monomial(3));

  IntPolynomial acc = IntPolynomial::zero();
  acc += IntPolynomial::monomial(2, 7);
  acc -= IntPolynomial::monomial(2, 7);
  CHECK(acc.is_zero());
  CHECK(acc == IntPolynomial::zero());

  CHECK(IntPolynomial::monomial(1).shifted(2) == IntPolynomial::monomial(3));
}

TEST_CASE("coefficients outside the support read as zero") {
  const IntPolynomial p = IntPolynomial::monomial(2, 5);
  CHECK(p.coeff(-1) == 0);
  CHECK(p.coeff(3) == 0);
  CHECK(p.coeff(2) == 5);
}

TEST_CASE("exact division recovers the quotient") {
  const IntPolynomial h(std::vector<Int>{1, 7, 16});
  const IntPolynomial d = IntPolynomial::linear_power(1, -1, 4);
  CHECK((h * d).divide_exact(d) == h);
}

TEST_CASE("inexact division is rejected") {
  const IntPolynomial p(std::vector<Int>{1, 1});
  const IntPolynomial d = IntPolynomial::linear_power(1, -1, 2);
  CHECK_THROWS_AS(p.divide_exact(d), InternalMismatch);
  CHECK_THROWS_AS(p.divide_exact(IntPolynomial::zero()), InternalMismatch);
  const IntPolynomial odd(std::vector<Int>{1, 3});
  CHECK_THROWS_AS(odd.divide_exact(IntPolynomial(std::vector<Int>{2})),
                  InternalMismatch);
}

TEST_CASE("evaluation") {
  const IntPolynomial h(std::vector<Int>{1, 7, 16});
  CHECK(h.evaluate(1) == 24);
  CHECK(h.evaluate(-1) == 10);
  CHECK(h.evaluate(0) == 1);
  CHECK(IntPolynomial::zero().evaluate(5) == 0);
}

TEST_CASE("printing") {
  CHECK(IntPolynomial(std::vector<Int>{1, 7, 16}).str() == "1 + 7t + 16t^2");
  CHECK(IntPolynomial::zero().str() == "0");
  CHECK(IntPolynomial(std::vector<Int>{-1, 1}).str() == "-1 + t");
  CHECK(IntPolynomial(std::vector<Int>{0, 0, 3}).str("x") == "3x^2");
  CHECK(IntPolynomial(std::vector<Int>{1, -2}).str() == "1 - 2t");
}

TEST_CASE("degree bookkeeping trims trailing zeros") {
  IntPolynomial p = IntPolynomial::monomial(4);
  p -= IntPolynomial::monomial(4);
  p += IntPolynomial::constant(2);
  CHECK(p.degree() == 0);
}
