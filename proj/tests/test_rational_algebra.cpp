#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pav/laurent.hpp"
#include "pav/rational.hpp"
#include "pav/series.hpp"

using namespace pav;

TEST_CASE("integer helpers produce the classical sequences") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(12) == 479001600);
    CHECK(binomial(10UL, 3UL) == 120);
    CHECK(binomial(BigInt(200), 5UL) == BigInt("2535650040"));
    CHECK(binomial(4UL, 7UL) == 0);

    const long cat[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
    for (unsigned long n = 0; n <= 10; ++n) CHECK(catalan(n) == cat[n]);
    CHECK(catalan(30) == BigInt("3814986502092304"));
}

TEST_CASE("make_rational canonicalizes") {
    CHECK(make_rational(4, 2) == Rational(2));
    CHECK(make_rational(4, 2).get_den() == 1);
    CHECK(make_rational(-6, -4) == make_rational(3, 2));
    CHECK(make_rational(0, 7) == 0);
    CHECK(to_string(make_rational(7, -14)) == "-1/2");
    CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational powers and rising factorials") {
    CHECK(pav::pow(make_rational(2, 3), 3) == make_rational(8, 27));
    CHECK(pav::pow(make_rational(2, 3), -2) == make_rational(9, 4));
    CHECK(pav::pow(make_rational(5), 0) == 1);
    CHECK_THROWS_AS(pav::pow(Rational(0), -1), std::invalid_argument);

    CHECK(rising_factorial(make_rational(-1, 2), 0) == 1);
    // (-1/2)(1/2)(3/2) = -3/8
    CHECK(rising_factorial(make_rational(-1, 2), 3) == make_rational(-3, 8));
    CHECK(rising_factorial(Rational(3), 4) == 360);
}

TEST_CASE("laurent polynomial arithmetic") {
    const LaurentPoly f =
        LaurentPoly::term(make_rational(1, 2), -2) + LaurentPoly::term(make_rational(-1, 2), -1);
    CHECK(f.min_exp() == -2);
    CHECK(f.max_exp() == -1);
    CHECK(f.leading_coeff() == make_rational(1, 2));
    CHECK(f.coeff(-2) == make_rational(1, 2));
    CHECK(f.coeff(3) == 0);
    CHECK(f.str() == "1/2 d^-2 - 1/2 d^-1");

    const LaurentPoly g = f - f;
    CHECK(g.is_zero());
    CHECK(g.str() == "0");
    CHECK_THROWS_AS(g.min_exp(), std::logic_error);

    // (d^-1)(1 - d)^2 / 4 expands to 1/4 d^-1 - 1/2 + 1/4 d
    const LaurentPoly one_minus_d = LaurentPoly(Rational(1)) - LaurentPoly::term(Rational(1), 1);
    const LaurentPoly w = make_rational(1, 4) * (LaurentPoly::term(Rational(1), -1) *
                                                 one_minus_d * one_minus_d);
    CHECK(w == LaurentPoly::term(make_rational(1, 4), -1) +
                   LaurentPoly::term(make_rational(-1, 2), 0) +
                   LaurentPoly::term(make_rational(1, 4), 1));

    CHECK(f.shifted(2) == LaurentPoly(make_rational(1, 2)) +
                              LaurentPoly::term(make_rational(-1, 2), 1));
    CHECK(one_minus_d.pow(2) == LaurentPoly(Rational(1)) + LaurentPoly::term(Rational(-2), 1) +
                                    LaurentPoly::term(Rational(1), 2));
    CHECK(f.eval(make_rational(1, 3)) == 3);  // 9/2 - 3/2

    // d/dd (1/2 d^-2 - 1/2 d^-1) = -d^-3 + 1/2 d^-2
    CHECK(f.derivative() == LaurentPoly::term(Rational(-1), -3) +
                                LaurentPoly::term(make_rational(1, 2), -2));
    CHECK(LaurentPoly(Rational(3)).derivative().is_zero());
}

TEST_CASE("binomial series of (1-4x)^{h/2}") {
    const Series sqrt14 = binomial_series(1, 5);  // 1 - 2x - 2x^2 - 4x^3 - 10x^4 - 28x^5
    const long sq[] = {1, -2, -2, -4, -10, -28};
    for (std::size_t i = 0; i <= 5; ++i) CHECK(sqrt14[i] == sq[i]);

    const Series inv = binomial_series(-1, 4);  // central binomial coefficients
    const long cb[] = {1, 2, 6, 20, 70};
    for (std::size_t i = 0; i <= 4; ++i) CHECK(inv[i] == cb[i]);

    // (1-4x)^{2/2} is exactly 1 - 4x.
    const Series lin = binomial_series(2, 6);
    CHECK(lin[0] == 1);
    CHECK(lin[1] == -4);
    for (std::size_t i = 2; i <= 6; ++i) CHECK(lin[i] == 0);

    // Squaring the square root recovers it too.
    CHECK(sqrt14 * sqrt14 == binomial_series(2, 5));
}

TEST_CASE("catalan generating function from the explicit cancellation") {
    const Series p = catalan_gf(8);
    CHECK(p[0] == 0);
    for (std::size_t n = 1; n <= 8; ++n) CHECK(p[n] == Rational(catalan(n)));
}

TEST_CASE("series arithmetic basics") {
    Series a(3), b(3);
    a[0] = 1;
    a[1] = 2;
    b[2] = make_rational(1, 2);
    const Series s = a + b;
    CHECK(s[1] == 2);
    CHECK(s[2] == make_rational(1, 2));
    const Series prod = a * b;  // (1 + 2x)(x^2/2) = x^2/2 + x^3
    CHECK(prod[2] == make_rational(1, 2));
    CHECK(prod[3] == 1);
    CHECK_THROWS_AS(a + Series(5), std::invalid_argument);
}

TEST_CASE("single-coefficient extraction matches the full series product") {
    // f = the mean polynomial of the 12 pattern; both routes must agree.
    const LaurentPoly f = LaurentPoly::term(make_rational(1, 2), -2) +
                          LaurentPoly::term(make_rational(-1, 2), -1);
    const Series full = gf_from_expectation(f, 12);
    for (std::size_t n = 1; n <= 12; ++n) CHECK(gf_coefficient(f, n) == full[n]);
    CHECK(gf_coefficient(f, 0) == 0);
    CHECK(gf_coefficient(LaurentPoly(), 500) == 0);

    const LaurentPoly bad = LaurentPoly::term(Rational(1), 0);
    CHECK_THROWS_AS(gf_from_expectation(bad, 4), std::invalid_argument);
    CHECK_THROWS_AS(gf_coefficient(bad, 4), std::invalid_argument);
}
