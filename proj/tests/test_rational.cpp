#include <doctest.h>

#include <stdexcept>

#include "bookcoh/rational.hpp"

using namespace bookcoh;

TEST_SUITE_BEGIN("rational");

TEST_CASE("construction reduces and fixes the sign of the denominator") {
    Rational r(6, -4);
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(Rational(0, 5) == Rational(0));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("arithmetic") {
    Rational a(1, 2), b(1, 3);
    CHECK((a + b) == Rational(5, 6));
    CHECK((a - b) == Rational(1, 6));
    CHECK((a * b) == Rational(1, 6));
    CHECK((a / b) == Rational(3, 2));
    CHECK((-a) == Rational(-1, 2));
    CHECK(a.pow(3) == Rational(1, 8));
    CHECK(Rational(-2, 3).pow(-2) == Rational(9, 4));
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);
}

TEST_CASE("parse and print") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-6/4") == Rational(-3, 2));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational(3, 4).str() == "3/4");
    CHECK(Rational(-8, 2).str() == "-4");
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("a"));
    CHECK_THROWS(Rational::parse("1 /2"));
    CHECK_THROWS(Rational::parse(""));
}

TEST_CASE("big values stay exact") {
    Rational big = Rational(1, 3).pow(40);
    CHECK(big * Rational(3).pow(40) == Rational(1));
}

TEST_SUITE_END();
