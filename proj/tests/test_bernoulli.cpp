#include <catch2/catch_amalgamated.hpp>

#include "gratio/bernoulli.hpp"

using namespace gratio;

TEST_CASE("bernoulli numbers, small indices") {
  CHECK(bernoulli_number(0) == Rational(1));
  CHECK(bernoulli_number(1) == make_rational(-1, 2));
  CHECK(bernoulli_number(2) == make_rational(1, 6));
  CHECK(bernoulli_number(3) == Rational(0));
  CHECK(bernoulli_number(4) == make_rational(-1, 30));
  CHECK(bernoulli_number(10) == make_rational(5, 66));
  CHECK(bernoulli_number(12) == make_rational(-691, 2730));
}

TEST_CASE("bernoulli numbers satisfy the defining recurrence") {
  // sum_{k=0}^{n} C(n+1,k) B_k = 0 for n >= 1
  for (int n = 1; n <= 40; ++n) {
    Rational acc{};
    BigInt binom = 1;
    for (int k = 0; k <= n; ++k) {
      acc += Rational(binom) * bernoulli_number(k);
      binom = binom * (n + 1 - k) / (k + 1);
    }
    CHECK(acc == 0);
  }
}

TEST_CASE("odd bernoulli numbers vanish beyond B_1") {
  for (int k = 1; k <= 15; ++k) CHECK(bernoulli_number(2 * k + 1) == 0);
}

TEST_CASE("bernoulli polynomials, explicit low degrees") {
  CHECK(bernoulli_polynomial(0) == RationalPolynomial({Rational(1)}));
  CHECK(bernoulli_polynomial(1) == RationalPolynomial({make_rational(-1, 2), Rational(1)}));
  // B_2(x) = x^2 - x + 1/6
  CHECK(bernoulli_polynomial(2) ==
        RationalPolynomial({make_rational(1, 6), Rational(-1), Rational(1)}));
  CHECK(eval_poly_exact(bernoulli_polynomial(3), make_rational(1, 2)) == 0);
  CHECK(eval_poly_exact(bernoulli_polynomial(3), make_rational(1, 4)) == make_rational(3, 64));
}

TEST_CASE("bernoulli polynomials are monic of full degree with B_n(0) = B_n") {
  for (int n = 0; n <= 30; ++n) {
    const auto& p = bernoulli_polynomial(n);
    CHECK(p.degree() == n);
    CHECK(p.coeff(static_cast<std::size_t>(n)) == 1);
    CHECK(p.coeff(0) == bernoulli_number(n));
  }
}

TEST_CASE("reflection identity holds exactly up to degree 30") {
  // B_n(1 - x) = (-1)^n B_n(x)
  for (int n = 0; n <= 30; ++n) {
    const auto& p = bernoulli_polynomial(n);
    const auto reflected = p.compose_affine(Rational(1), Rational(-1));
    const auto signed_p = p * ((n % 2 == 0) ? Rational(1) : Rational(-1));
    CHECK(reflected == signed_p);
  }
}

TEST_CASE("derivative identity holds exactly up to degree 30") {
  // B_n'(x) = n B_{n-1}(x)
  for (int n = 1; n <= 30; ++n) {
    CHECK(bernoulli_polynomial(n).derivative() == bernoulli_polynomial(n - 1) * Rational(n));
  }
}

TEST_CASE("difference identity holds exactly up to degree 30") {
  // B_n(x+1) - B_n(x) = n x^{n-1}
  for (int n = 1; n <= 30; ++n) {
    const auto& p = bernoulli_polynomial(n);
    const auto diff = p.compose_affine(Rational(1), Rational(1)) - p;
    std::vector<Rational> mono(static_cast<std::size_t>(n));
    mono.back() = Rational(n);
    CHECK(diff == RationalPolynomial(std::move(mono)));
  }
}

TEST_CASE("odd polynomials vanish at 0, 1/2 and 1 exactly") {
  for (int k = 1; 2 * k + 1 <= 31; ++k) {
    const auto& p = bernoulli_polynomial(2 * k + 1);
    CHECK(eval_poly_exact(p, Rational(0)) == 0);
    CHECK(eval_poly_exact(p, make_rational(1, 2)) == 0);
    CHECK(eval_poly_exact(p, Rational(1)) == 0);
    CHECK(bernoulli_poly_at(2 * k + 1, 0.0) == 0.0);
    CHECK(bernoulli_poly_at(2 * k + 1, 0.5) == 0.0);
    CHECK(bernoulli_poly_at(2 * k + 1, 1.0) == 0.0);
  }
}

TEST_CASE("double evaluation matches the exact values") {
  CHECK(eval_poly(bernoulli_polynomial(1), 0.0) == -0.5);
  CHECK(eval_poly(bernoulli_polynomial(2), 1.0) ==
        eval_poly(bernoulli_polynomial(2), 0.0));  // reflection, even degree
  CHECK(eval_poly(bernoulli_polynomial(3), 0.25) == 0.046875);
  for (int n = 0; n <= 20; ++n) {
    const double exact = to_double(eval_poly_exact(bernoulli_polynomial(n), make_rational(3, 10)));
    CHECK_THAT(bernoulli_poly_at(n, 0.3), Catch::Matchers::WithinRel(exact, 1e-13));
  }
}

TEST_CASE("index bounds are enforced") {
  CHECK_THROWS_AS(bernoulli_number(-1), std::domain_error);
  CHECK_THROWS_AS(bernoulli_number(201), std::domain_error);
  CHECK_THROWS_AS(bernoulli_polynomial(201), std::domain_error);
  CHECK_NOTHROW(bernoulli_number(200));
}
