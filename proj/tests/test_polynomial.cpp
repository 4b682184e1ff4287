#include <doctest.h>

#include "hurwitz/errors.hpp"
#include "hurwitz/polynomial.hpp"
#include "hurwitz/tropical.hpp"

using namespace hurwitz;

TEST_CASE("chamber signatures") {
    CHECK_THROWS_AS(chamber_signature({1, 2, -1, -2}), OnWallError);  // x_1 + x_3 = 0
    ChamberSignature a = chamber_signature({1, 3, -2, -2});
    CHECK(a.signs.at(1u) == 1);  // {x_1}
    CHECK(chamber_signature({5, 1, -2, -4}) == chamber_signature({7, 1, -3, -5}));
    CHECK(chamber_signature({5, 1, -2, -4}) != chamber_signature({1, 5, -2, -4}));
}

TEST_CASE("chamber sampler stays in its chamber") {
    ChamberSignature target = chamber_signature({7, 3, -4, -6});
    ChamberSampler sampler(target, 12, 99);
    for (int i = 0; i < 25; ++i) {
        std::vector<int> pt = sampler.next();
        CHECK(chamber_signature(pt) == target);
        CHECK(sum_of(pt) == 0);
    }
}

TEST_CASE("exact linear solve") {
    std::vector<std::vector<Rational>> m = {{Rational(2), Rational(1)}, {Rational(1), Rational(3)}};
    std::vector<Rational> rhs = {Rational(5), Rational(10)};
    auto sol = solve_exact(m, rhs);
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == Rational(1));
    CHECK((*sol)[1] == Rational(3));
    std::vector<std::vector<Rational>> sing = {{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
    CHECK_FALSE(solve_exact(sing, rhs).has_value());
}

TEST_CASE("polynomial evaluation and difference") {
    MultivariatePolynomial p(2);
    p.set_term({1, 0}, Rational(3));
    p.set_term({0, 2}, Rational(1, 2));
    CHECK(p.evaluate({2, 4}) == Rational(14));
    CHECK(p.total_degree() == 2);
    MultivariatePolynomial q(2);
    q.set_term({1, 0}, Rational(3));
    MultivariatePolynomial d = p - q;
    CHECK(d.evaluate({5, 2}) == Rational(2));
    CHECK((p - p).is_zero());
}

TEST_CASE("fitting the monotone (1,1)-slice in a genus-0 chamber recovers x1") {
    // In the chamber of (3,1,-2,-2) the labeled slice is exactly the first
    // coordinate: covers contribute (x1+x2) + (x1+x3) + (x1+x4) over 2!.
    FitOptions opts;
    opts.box = 18;
    opts.seed = 5;
    FitResult fit = fit_chamber_polynomial(0, {1, 1}, {3, 1, -2, -2}, Variant::monotone(), true, opts);
    CHECK(fit.polynomial.total_degree() <= 1);
    MultivariatePolynomial expected(3);
    expected.set_term({1, 0, 0}, Rational(1));
    CHECK(fit.polynomial == expected);
    CHECK(fit.holdout.size() >= 1);

    // strict variant only flips the sign of the 4-valent vertex: same slice here
    FitResult strict_fit = fit_chamber_polynomial(0, {1, 1}, {3, 1, -2, -2}, Variant::strict(), true, opts);
    CHECK(strict_fit.polynomial == expected);
}

TEST_CASE("constant slices fit constants") {
    FitOptions opts;
    opts.box = 9;
    opts.seed = 11;
    FitResult fit = fit_chamber_polynomial(0, {2}, {3, 1, -2, -2}, Variant::strict(), true, opts);
    MultivariatePolynomial expected(3);
    expected.set_term({0, 0, 0}, Rational(-1));
    CHECK(fit.polynomial == expected);

    FitResult mono = fit_chamber_polynomial(0, {1}, {5, 2, -7}, Variant::monotone(), true, opts);
    MultivariatePolynomial one(2);
    one.set_term({0, 0}, Rational(1));
    CHECK(mono.polynomial == one);
}

TEST_CASE("an impossible degree bound is reported as a fit failure") {
    FitOptions opts;
    opts.box = 14;
    opts.seed = 8;
    opts.max_degree = 0;  // the slice is x1, not a constant
    CHECK_THROWS_AS(fit_chamber_polynomial(0, {1, 1}, {3, 1, -2, -2}, Variant::monotone(), true, opts),
                    FitFailureError);
}

TEST_CASE("on-wall errors name the offending subset") {
    try {
        chamber_signature({1, 2, -1, -2});
        FAIL("expected OnWallError");
    } catch (const OnWallError& e) {
        CHECK(e.subset == std::vector<int>{1, 3});
    }
}

TEST_CASE("fits are deterministic in the seed") {
    FitOptions opts;
    opts.box = 16;
    opts.seed = 42;
    FitResult a = fit_chamber_polynomial(0, {1, 1}, {7, 3, -4, -6}, Variant::monotone(), true, opts);
    FitResult b = fit_chamber_polynomial(0, {1, 1}, {7, 3, -4, -6}, Variant::monotone(), true, opts);
    CHECK(a.polynomial == b.polynomial);
    CHECK(a.samples == b.samples);
    CHECK(a.holdout == b.holdout);
}

TEST_CASE("degree bound holds on the genus-1 three-end slices") {
    FitOptions opts;
    opts.box = 10;
    opts.seed = 3;
    for (const Partition& lambda : {Partition{3}, Partition{2, 1}, Partition{1, 1, 1}}) {
        FitResult fit = fit_chamber_polynomial(1, lambda, {5, 2, -7}, Variant::monotone(), true, opts);
        CHECK(fit.polynomial.total_degree() <= 4 * 1 - 3 + 3);
    }
}
