#include <doctest.h>

#include "hurwitz/errors.hpp"
#include "hurwitz/tropical.hpp"

using namespace hurwitz;

TEST_CASE("vertex multiplicities") {
    CHECK(vertex_multiplicity(Multiset{1, 1}, Multiset{2}, 0) == Rational(1));
    CHECK(vertex_multiplicity(Multiset{1}, Multiset{1}, 1) == Rational(0));
    CHECK(vertex_multiplicity(Multiset{2}, Multiset{2}, 1) == Rational(1, 4));
    // 5-valent genus 0: (lambda-1)! = 2
    CHECK(vertex_multiplicity(Multiset{2, 1, 1, 1, 1}, 0) == Rational(2));
    // even in each weight argument
    CHECK(vertex_multiplicity(Multiset{-2, 2}, 1) == vertex_multiplicity(Multiset{2, 2}, 1));
    // genus-2 bivalent vertex over the degree-2 cylinder:
    // 3! * (c(2) + c(1)*7/24 + c(0)*61/1920) = 1/8
    CHECK(vertex_multiplicity(Multiset{2, 2}, 2) == Rational(1, 8));
}

TEST_CASE("per-cover contributions") {
    Profile x({2, 1, -2, -1});
    auto covers = collect_covers(x, {1, 1}, true);
    REQUIRE(covers.size() == 2);
    for (const Cover& c : covers) {
        REQUIRE(c.edges.size() == 1);
        if (c.edges[0].weight == 3) {
            CHECK(cover_contribution(c, uniform_lambda({1, 1}, VertexKind::Monotone)) == Rational(3, 2));
            CHECK(cover_contribution(c, uniform_lambda({1, 1}, VertexKind::Strict)) == Rational(3, 2));
        } else {
            CHECK(cover_contribution(c, uniform_lambda({1, 1}, VertexKind::Monotone)) == Rational(1, 2));
        }
    }
    auto one = collect_covers(x, {2}, true);
    REQUIRE(one.size() == 1);
    CHECK(cover_contribution(one[0], uniform_lambda({2}, VertexKind::Strict)) == Rational(-1));
    CHECK(cover_automorphism_order(one[0]) == 1);
}

TEST_CASE("ordered slices match hand enumeration") {
    Profile x({2, 1, -2, -1});
    CHECK(vec_h(0, x, {2}, Variant::monotone(), true) == Rational(1));
    CHECK(vec_h(0, x, {1, 1}, Variant::monotone(), true) == Rational(2));
    CHECK(vec_h(0, x, {2}, Variant::strict(), true) == Rational(-1));
    CHECK(vec_h(0, x, {1, 1}, Variant::strict(), true) == Rational(2));

    Profile cyl({2, -2});
    CHECK(vec_h(1, cyl, {2}, Variant::monotone(), false) == Rational(1, 4));
    CHECK(vec_h(1, cyl, {1, 1}, Variant::monotone(), false) == Rational(1, 4));
    CHECK(vec_h(1, cyl, {2}, Variant::strict(), false) == Rational(-1, 4));

    Profile comb({3, -1, -1, -1});
    CHECK(vec_h(0, comb, {1, 1}, Variant::monotone(), true) == Rational(1, 2));
    CHECK(vec_h(0, comb, {2}, Variant::monotone(), true) == Rational(1, 6));

    Profile five({2, 1, -1, -1, -1});
    CHECK(vec_h(0, five, {3}, Variant::monotone(), true) == Rational(1, 3));
    CHECK(vec_h(0, five, {2, 1}, Variant::monotone(), true) == Rational(1, 2));
    CHECK(vec_h(0, five, {1, 2}, Variant::monotone(), true) == Rational(1, 2));
    CHECK(vec_h(0, five, {1, 1, 1}, Variant::monotone(), true) == Rational(2, 3));
}

TEST_CASE("slice preconditions") {
    Profile x({2, 1, -2, -1});
    CHECK_THROWS_AS(vec_h(0, x, {3}, Variant::monotone(), true), ArgumentError);
    CHECK_THROWS_AS(vec_h(0, x, {1, 2}, Variant::plain(), true), ArgumentError);
}

TEST_CASE("totals match the oracle on hand-checked queries") {
    CHECK(h_total(0, Profile({2, 1, -2, -1}), Variant::monotone(), true) == Rational(3));
    CHECK(h_total(0, Profile({2, 1, -2, -1}), Variant::strict(), true) == Rational(1));
    CHECK(h_total(0, Profile({2, 1, -2, -1}), Variant::monotone(), false) == Rational(7, 2));
    CHECK(h_total(1, Profile({2, -2}), Variant::monotone(), false) == Rational(1, 2));
    CHECK(h_total(1, Profile({2, -2}), Variant::strict(), false) == Rational(0));
    CHECK(h_total(1, Profile({1, -1}), Variant::monotone(), false) == Rational(0));
    CHECK(h_total(0, Profile({2, -2}), Variant::monotone(), true) == Rational(1, 2));
    CHECK(h_total(0, Profile({5, -5}), Variant::strict(), true) == Rational(1, 5));
    CHECK(h_total(0, Profile({1, 1, -1, -1}), Variant::monotone(), true) == Rational(1, 2));
    CHECK(h_total(0, Profile({2, 1, -2, -1}), Variant::plain(), true) == Rational(4));
    CHECK(h_total(0, Profile({1, 1, -1, -1}), Variant::plain(), true) == Rational(1, 2));
}

TEST_CASE("oracle equivalence on a small grid") {
    std::vector<std::vector<int>> profiles = {
        {1, -1},       {2, -2},         {1, 1, -2},      {2, -1, -1},       {2, 1, -2, -1}, {1, 1, -1, -1},
        {3, -2, -1},   {2, 2, -3, -1},  {3, -1, -1, -1}, {1, 1, 1, -3},     {2, 2, -2, -2}, {4, -2, -1, -1},
        {3, 1, -2, -2}};
    for (const auto& entries : profiles) {
        Profile x(entries);
        for (int g = 0; g <= 1; ++g) {
            if (2 * g - 2 + x.size() < 0) continue;
            for (bool conn : {true, false}) {
                for (Variant v : {Variant::monotone(), Variant::strict()}) {
                    CAPTURE(entries);
                    CAPTURE(g);
                    CAPTURE(conn);
                    CHECK(h_total(g, x, v, conn) ==
                          count_factorizations({g, entries, v, conn}));
                }
            }
        }
    }
}

TEST_CASE("strict equals monotone on all-trivalent slices") {
    Profile x({3, 1, -2, -2});
    Composition ones(4, 1);  // b = 2g-2+n with g=1, n=4
    CHECK(vec_h(1, x, ones, Variant::strict(), true) == vec_h(1, x, ones, Variant::monotone(), true));
}

TEST_CASE("slices are invariant under permuting same-sign entries") {
    CHECK(vec_h(0, Profile({1, 2, -2, -1}), {1, 1}, Variant::monotone(), true) ==
          vec_h(0, Profile({2, 1, -1, -2}), {1, 1}, Variant::monotone(), true));
}

TEST_CASE("mixed slices specialize and reproduce the genuinely mixed count") {
    Profile five({2, 1, -1, -1, -1});
    // p = 2, q = 0: slice over (2) is the signed 4-valent cover, slice over
    // (1,1) the trivalent pair; hand-derived values.
    CHECK(mixed_slice(0, five, 2, 0, {2, 1}, true) == Rational(-1));
    CHECK(mixed_slice(0, five, 2, 0, {1, 1, 1}, true) == Rational(2));
    CHECK(h_total(0, five, Variant::mixed(2, 0), true) == Rational(1));
    CHECK(h_total(0, five, Variant::mixed(2, 1), true) == Rational(1));
    CHECK(h_total(0, five, Variant::mixed(0, 0), true) == Rational(4));

    // Specializations against the pure regimes.
    Profile x({2, 1, -2, -1});
    CHECK(mixed_slice(0, x, 2, 0, {2}, true) == vec_h(0, x, {2}, Variant::strict(), true));
    CHECK(mixed_slice(0, x, 0, 2, {1, 1}, true) == vec_h(0, x, {1, 1}, Variant::monotone(), true));
    CHECK(mixed_slice(0, x, 0, 0, {1, 1}, true) == h_total(0, x, Variant::plain(), true));
    CHECK_THROWS_AS(mixed_slice(0, x, 1, 0, {2}, true), ArgumentError);
}

TEST_CASE("mixed totals agree with the oracle across p and q") {
    std::vector<std::vector<int>> profiles = {{2, 1, -2, -1}, {2, 1, -1, -1, -1}, {1, 1, -2}, {2, 2, -3, -1}};
    for (const auto& entries : profiles) {
        Profile x(entries);
        for (int g = 0; g <= 1; ++g) {
            int b = 2 * g - 2 + x.size();
            if (b < 0 || b > 4) continue;
            for (int p = 0; p + 1 <= b; ++p) {
                for (int q = 0; p + q <= b; ++q) {
                    for (bool conn : {true, false}) {
                        CAPTURE(entries);
                        CAPTURE(g);
                        CAPTURE(p);
                        CAPTURE(q);
                        CHECK(h_total(g, x, Variant::mixed(p, q), conn) ==
                              count_factorizations({g, entries, Variant::mixed(p, q), conn}));
                    }
                }
            }
        }
    }
}

TEST_CASE("slices over all partitions sum to the total") {
    std::vector<std::pair<Profile, int>> grid = {
        {Profile({2, 1, -2, -1}), 0}, {Profile({3, -1, -1, -1}), 0}, {Profile({2, -2}), 1}, {Profile({3, -2, -1}), 1}};
    for (const auto& [x, g] : grid) {
        int b = 2 * g - 2 + x.size();
        for (Variant v : {Variant::monotone(), Variant::strict()}) {
            for (bool conn : {true, false}) {
                Rational sum(0);
                for (const Partition& lambda : partitions_of(b)) sum += h_slice(g, x, lambda, v, conn);
                CHECK(sum == h_total(g, x, v, conn));
            }
        }
    }
}

TEST_CASE("labeled normalisation multiplies by the profile symmetries") {
    CHECK(h_slice_labeled(0, Profile({2, 2, -4}), {1}, Variant::monotone(), true) == Rational(1));
    CHECK(h_slice(0, Profile({2, 2, -4}), {1}, Variant::monotone(), true) == Rational(1, 2));
    CHECK(h_slice_labeled(0, Profile({3, 2, -5}), {1}, Variant::monotone(), true) == Rational(1));
}
