#include "doctest.h"

#include "supersol/coefficient.hpp"
#include "supersol/rational.hpp"

using namespace supersol;

TEST_CASE("rationals are canonical and exact") {
    Rational a(6, 4);
    CHECK(a == Rational(3, 2));
    CHECK(a.to_string() == "3/2");
    CHECK(Rational(-6, -4) == Rational(3, 2));
    CHECK(Rational(6, -4).to_string() == "-3/2");
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(1, 3) * Rational(3, 7)) == Rational(1, 7));
    CHECK((Rational(1) / Rational(-8)) == Rational(-1, 8));
    CHECK_THROWS_AS(Rational(1, 0), Error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
    CHECK(Rational::from_string("-21/14") == Rational(-3, 2));
}

TEST_CASE("big factorials and binomials stay exact") {
    // binom(59, 30) does not fit in 64 bits times the recurrence factors.
    Rational b = binomial(59, 30);
    CHECK(b == binomial(59, 29));
    CHECK(factorial(20) == Rational::from_string("2432902008176640000/1"));
    CHECK(binomial_general(Rational(1, 2), 2) == Rational(-1, 8));
    CHECK(binomial_general(Rational(-1, 2), 1) == Rational(-1, 2));
}

TEST_CASE("coefficient arithmetic tracks pi powers") {
    Coefficient a(Rational(1, 4), -2);  // (1/4) pi^-1
    Coefficient b(Rational(1, 2), -2);
    CHECK((a + b) == Coefficient(Rational(3, 4), -2));
    CHECK((a * b) == Coefficient(Rational(1, 8), -4));
    CHECK((a / b) == Coefficient(Rational(1, 2), 0));

    Coefficient pi(Rational(1), 2);
    CHECK_THROWS_AS(a + pi, PiPowerMismatchError);

    // zero absorbs any pi power
    Coefficient z(Rational(0), 4);
    CHECK(z.pi_half() == 0);
    CHECK((z + pi) == pi);
    CHECK((a - a).is_zero());

    CHECK(Coefficient(Rational(2), 2).value() == doctest::Approx(2.0 * M_PI));
    CHECK(Coefficient(Rational(1), 1).value() == doctest::Approx(std::sqrt(M_PI)));
    CHECK(Coefficient(Rational(-1, 2), -2).to_string() == "-1/2 pi^-1");
}
