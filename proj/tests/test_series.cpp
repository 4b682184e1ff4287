#include <doctest.h>

#include "hurwitz/errors.hpp"
#include "hurwitz/series.hpp"

using namespace hurwitz;

namespace {

// Independent route: [z^k] (e^(z/2) - e^(-z/2)) = ((1/2)^k - (-1/2)^k) / k!.
Rational sinh_coefficient(int k) {
    Integer pow2;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(k));
    Rational half_pow(Integer(1), pow2);
    Rational signed_half = (k % 2 == 0) ? half_pow : -half_pow;
    return (half_pow - signed_half) / Rational(factorial(k));
}

}  // namespace

TEST_CASE("bernoulli numbers satisfy the defining recurrence") {
    CHECK(bernoulli(0) == Rational(1));
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(4) == Rational(-1, 30));
    CHECK(bernoulli(6) == Rational(1, 42));
    CHECK(bernoulli(12) == Rational(-691, 2730));
    CHECK_THROWS_AS(bernoulli(3), ArgumentError);
    CHECK_THROWS_AS(bernoulli(-2), ArgumentError);
}

TEST_CASE("zeta series is odd and matches the exponential route") {
    LaurentSeries zeta = zeta_series(11);
    CHECK(zeta.min_degree() == 1);
    CHECK(zeta.coefficient(1) == Rational(1));
    CHECK(zeta.coefficient(3) == Rational(1, 24));
    CHECK(zeta.coefficient(5) == Rational(1, 1920));
    for (int k = 1; k <= 11; ++k) CHECK(zeta.coefficient(k) == sinh_coefficient(k));
    for (int k = 2; k <= 10; k += 2) CHECK(zeta.coefficient(k).is_zero());
    CHECK_THROWS_AS(zeta.coefficient(12), TruncationError);
    CHECK_THROWS_AS(zeta.coefficient(0), TruncationError);
}

TEST_CASE("S series and its inverse match the known expansions") {
    LaurentSeries s = s_series(6);
    CHECK(s.coefficient(0) == Rational(1));
    CHECK(s.coefficient(2) == Rational(1, 24));
    CHECK(s.coefficient(4) == Rational(1, 1920));
    LaurentSeries inv = s.inverse();
    CHECK(inv.coefficient(0) == Rational(1));
    CHECK(inv.coefficient(2) == Rational(-1, 24));
    CHECK(inv.coefficient(4) == Rational(7, 5760));
    CHECK(inv.coefficient(6) == Rational(-31, 967680));
}

TEST_CASE("series times its inverse is exactly one through the valid order") {
    for (int order = 0; order <= 10; ++order) {
        LaurentSeries s = s_series(order);
        LaurentSeries prod = s * s.inverse();
        CHECK(prod.coefficient(0) == Rational(1));
        for (int k = 1; k <= order; ++k) CHECK(prod.coefficient(k).is_zero());
    }
}

TEST_CASE("inverting zeta produces a z^-1 term") {
    LaurentSeries inv = zeta_series(5).inverse();
    CHECK(inv.min_degree() == -1);
    CHECK(inv.coefficient(-1) == Rational(1));
    CHECK(inv.coefficient(1) == Rational(-1, 24));
    CHECK_THROWS_AS(LaurentSeries::constant(Rational(0), 3).inverse(), SingularSeriesError);
}

TEST_CASE("series convolution examples") {
    LaurentSeries s = s_series(4);
    CHECK((s * s).coefficient(2) == Rational(1, 12));
    CHECK(zeta_series(3).coefficient(2).is_zero());
}

TEST_CASE("scaled substitution") {
    LaurentSeries s = s_series(4);
    LaurentSeries s2 = s.scaled(2);
    CHECK(s2.coefficient(2) == Rational(1, 6));
    CHECK(s2.coefficient(4) == Rational(1, 120));
    CHECK(s.scaled(-2) == s2);  // even series
}

TEST_CASE("one-point coefficients agree across both routes") {
    CHECK(one_point_coefficient(0) == Rational(1));
    CHECK(one_point_coefficient(1) == Rational(-1, 24));
    CHECK(one_point_coefficient(2) == Rational(7, 5760));
    CHECK(one_point_coefficient(3) == Rational(-31, 967680));
    for (long l = 0; l <= 8; ++l) CHECK_NOTHROW(one_point_coefficient(l));
}
