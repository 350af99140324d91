#include <doctest.h>

#include <stdexcept>

#include "bookcoh/random.hpp"
#include "bookcoh/text.hpp"

using namespace bookcoh;

TEST_SUITE_BEGIN("text");

TEST_CASE("parse the documented examples") {
    CHECK((parse_multivector("u1*dt^du1 + u2*dt^du2", 3) - book_poisson(3)).is_zero());

    PolyMultivector m = parse_multivector("du1^dt", 2);
    CHECK(m == PolyMultivector(GeneratorWord{true, IncreasingIndex({1})},
                               Polynomial(2, -1)));

    PolyMultivector single = parse_multivector("3/2*t^2*u1*du2", 3);
    Polynomial expected = Polynomial::variable_t(3) * Polynomial::variable_t(3) *
                          Polynomial::variable_u(3, 1) * Rational(3, 2);
    CHECK(single == PolyMultivector(GeneratorWord{false, IncreasingIndex({2})}, expected));
}

TEST_CASE("parse grammar corners") {
    CHECK(parse_multivector("1", 3) == unit_multivector(3));
    CHECK(parse_multivector("-1", 3) == unit_multivector(3) * Rational(-1));
    CHECK(parse_multivector("5/3*1", 2) == unit_multivector(2) * Rational(5, 3));
    CHECK(parse_multivector("t*1", 2) ==
          PolyMultivector(Polynomial::variable_t(2)));
    CHECK(parse_multivector("u1^2*1", 2) ==
          PolyMultivector(Polynomial::variable_u(2, 1) * Polynomial::variable_u(2, 1)));
    CHECK(parse_multivector("du1^du1", 3).is_zero());
    CHECK(parse_multivector("dt^du2", 3) ==
          PolyMultivector(GeneratorWord{true, IncreasingIndex({2})}, Polynomial(3, 1)));
    CHECK(parse_multivector("du2^du1", 3) ==
          PolyMultivector(GeneratorWord{false, IncreasingIndex({1, 2})}, Polynomial(3, -1)));
    CHECK(parse_multivector("dt - dt", 3).is_zero());
    CHECK(parse_multivector(" u1 * du1 ", 3) ==
          PolyMultivector(GeneratorWord{false, IncreasingIndex({1})},
                          Polynomial::variable_u(3, 1)));
}

TEST_CASE("parse errors carry positions and categories") {
    CHECK_THROWS_AS(parse_multivector("u1*", 3), ParseError);
    CHECK_THROWS_AS(parse_multivector("2", 3), ParseError);       // INT needs '*'
    CHECK_THROWS_AS(parse_multivector("1/2", 3), ParseError);     // rational needs '*'
    CHECK_THROWS_AS(parse_multivector("u1", 3), ParseError);      // monomial needs gens
    CHECK_THROWS_AS(parse_multivector("dt^2", 3), ParseError);    // power of a generator
    CHECK_THROWS_AS(parse_multivector("x", 3), ParseError);
    CHECK_THROWS_AS(parse_multivector("", 3), ParseError);
    CHECK_THROWS_AS(parse_multivector("1/0*1", 3), ParseError);
    CHECK_THROWS_AS(parse_multivector("du3", 3), std::out_of_range);    // index >= n
    CHECK_THROWS_AS(parse_multivector("u3*du1", 3), std::out_of_range);
    CHECK_THROWS_AS(parse_multivector("du0", 3), std::out_of_range);
    CHECK_THROWS_AS(parse_multivector("dt + du1^du2", 3), std::invalid_argument);

    try {
        parse_multivector("u1*du1 + $", 3);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 9);
    }
}

TEST_CASE("large rationals survive parsing") {
    PolyMultivector m = parse_multivector("123456789012345678901234567890/7*dt", 2);
    CHECK(m.coefficient(GeneratorWord{true, {}}).coefficient(Monomial::one(2)) ==
          Rational(Integer("123456789012345678901234567890"), Integer(7)));
}

TEST_CASE("format the documented examples") {
    CHECK(format_multivector(book_poisson(3)) == "u1*dt^du1 + u2*dt^du2");
    CHECK(format_multivector(PolyMultivector(3, 1)) == "0");
    CHECK(format_multivector(-euler_field(2)) == "-u1*du1");
    CHECK(format_multivector(unit_multivector(2) * Rational(3, 2)) == "3/2*1");
    CHECK(format_multivector(dt_vector(2)) == "dt");
}

TEST_CASE("canonical order: dt first, J lexicographic, monomial lexicographic") {
    PolyMultivector mu(3, 1);
    mu += PolyMultivector(GeneratorWord{false, IncreasingIndex({2})},
                          Polynomial::variable_u(3, 1));
    mu += dt_vector(3) * Rational(2);
    mu += PolyMultivector(GeneratorWord{false, IncreasingIndex({1})},
                          Polynomial::variable_t(3) - Polynomial::variable_u(3, 2));
    // monomials ascend by (t-exponent, u-exponents), so u2*du1 precedes t*du1
    CHECK(format_multivector(mu) == "2*dt - u2*du1 + t*du1 + u1*du2");
}

TEST_CASE("parse after format is the identity") {
    RandomSource rng(3);
    for (int t = 0; t < 200; ++t) {
        int n = rng.range(2, 5);
        int k = rng.range(0, n);
        PolyMultivector mu = random_multivector(rng, n, k, 4, 4);
        CHECK((parse_multivector(format_multivector(mu), n) - mu).is_zero());
    }
}

TEST_SUITE_END();
