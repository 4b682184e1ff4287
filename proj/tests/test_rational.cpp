#include <doctest.h>

#include <random>
#include <sstream>

#include "hurwitz/errors.hpp"
#include "hurwitz/rational.hpp"

using namespace hurwitz;

TEST_CASE("rational arithmetic stays in lowest terms") {
    Rational a(22, 8);
    CHECK(a.numerator() == 11);
    CHECK(a.denominator() == 4);
    Rational b(-3, -6);
    CHECK(b == Rational(1, 2));
    CHECK((a * b).str() == "11/8");
    CHECK((a - a).is_zero());
    CHECK(Rational(1, -2).str() == "-1/2");
}

TEST_CASE("string round trip is lossless") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-100000, 100000);
    std::uniform_int_distribution<long> den(1, 100000);
    for (int i = 0; i < 500; ++i) {
        Rational r(num(rng), den(rng));
        CHECK(Rational::parse(r.str()) == r);
    }
    CHECK(Rational::parse("-7/3") == Rational(-7, 3));
    CHECK(Rational::parse("42") == Rational(42));
}

TEST_CASE("bad input is rejected") {
    CHECK_THROWS_AS(Rational(1, 0), ArgumentError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), ArgumentError);
    CHECK_THROWS_AS(Rational::parse("x/y"), ArgumentError);
}

TEST_CASE("factorial and binomial helpers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(6) == 720);
    CHECK(binomial(7, 3) == 35);
    CHECK(binomial(3, 5) == 0);
}
