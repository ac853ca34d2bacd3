#include <doctest.h>

#include <cmath>

#include "hookbound/errors.hpp"
#include "hookbound/rational.hpp"

using hookbound::Rational;

TEST_CASE("rational parse and print") {
    CHECK(Rational::parse("11/10").to_string() == "11/10");
    CHECK(Rational::parse("4/2").to_string() == "2");
    CHECK(Rational::parse("-3/6").to_string() == "-1/2");
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("3/-6") == Rational(-1, 2));
    CHECK(Rational::parse("3/-6").denominator() == 2);
}

TEST_CASE("rational parse errors") {
    CHECK_THROWS_AS(Rational::parse(""), hookbound::ParseError);
    CHECK_THROWS_AS(Rational::parse("1/0"), hookbound::ParseError);
    CHECK_THROWS_AS(Rational::parse("1.5"), hookbound::ParseError);
    CHECK_THROWS_AS(Rational::parse("a/b"), hookbound::ParseError);
    CHECK_THROWS_AS(Rational::parse("1/"), hookbound::ParseError);
}

TEST_CASE("floor and fractional part are exact") {
    const Rational a = Rational::parse("11/10");
    CHECK(a.floor() == 1);
    CHECK(a.fractional_part() == Rational(1, 10));
    CHECK(Rational(-3, 2).floor() == -2);
    CHECK(Rational(-3, 2).fractional_part() == Rational(1, 2));
    CHECK(Rational(5).fractional_part() == Rational(0));
    CHECK(Rational(5).is_integer());
    CHECK_FALSE(a.is_integer());
}

TEST_CASE("ordering and arithmetic") {
    const Rational a(11, 10);
    CHECK(Rational(2) * a == Rational(11, 5));
    CHECK(a > Rational(1));
    CHECK(Rational(3) < Rational(2) * a + Rational(1));
    CHECK(a - a == Rational(0));
    CHECK(a / a == Rational(1));
    CHECK_THROWS_AS(a / Rational(0), hookbound::DomainError);
}

TEST_CASE("log of big integers") {
    hookbound::BigInt big;
    mpz_ui_pow_ui(big.get_mpz_t(), 3, 5000);
    CHECK(hookbound::log_big(big) == doctest::Approx(5000 * std::log(3.0)).epsilon(1e-14));
    CHECK(Rational(1, 4).log() == doctest::Approx(-std::log(4.0)));
    CHECK_THROWS_AS(hookbound::log_big(0), hookbound::DomainError);
}
