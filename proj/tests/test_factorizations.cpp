#include <doctest.h>

#include "hurwitz/errors.hpp"
#include "hurwitz/factorization_count.hpp"
#include "hurwitz/permutations.hpp"

using namespace hurwitz;

namespace {

Rational oracle(int g, std::vector<int> x, Variant v, bool connected) {
    return count_factorizations({g, std::move(x), v, connected});
}

}  // namespace

TEST_CASE("conjugacy types and transitivity") {
    CHECK(conjugacy_type({0, 1, 2}) == Partition{1, 1, 1});
    CHECK(conjugacy_type({1, 0, 2}) == Partition{2, 1});
    CHECK(conjugacy_type({1, 2, 0}) == Partition{3});
    CHECK(is_transitive({{1, 0}}, 2));
    CHECK_FALSE(is_transitive({{0, 1}}, 2));
    CHECK(is_transitive({{1, 0, 2}, {0, 2, 1}}, 3));
}

TEST_CASE("hand-checked monotone and strict counts") {
    CHECK(oracle(0, {2, 1, -2, -1}, Variant::monotone(), true) == Rational(3));
    CHECK(oracle(0, {2, 1, -2, -1}, Variant::strict(), true) == Rational(1));
    CHECK(oracle(0, {2, 1, -2, -1}, Variant::plain(), true) == Rational(4));
    CHECK(oracle(0, {2, 1, -2, -1}, Variant::monotone(), false) == Rational(7, 2));
    CHECK(oracle(0, {2, 1, -2, -1}, Variant::plain(), false) == Rational(9, 2));
    CHECK(oracle(1, {1, -1}, Variant::monotone(), false) == Rational(0));
    CHECK(oracle(1, {2, -2}, Variant::monotone(), false) == Rational(1, 2));
    CHECK(oracle(1, {2, -2}, Variant::strict(), false) == Rational(0));
    CHECK(oracle(0, {1, 1, -2}, Variant::monotone(), true) == Rational(1, 2));
    CHECK(oracle(0, {3, -1, -1, -1}, Variant::monotone(), true) == Rational(2, 3));
    CHECK(oracle(0, {1, 1, -1, -1}, Variant::monotone(), true) == Rational(1, 2));
    CHECK(oracle(0, {2, -2}, Variant::monotone(), true) == Rational(1, 2));
    CHECK(oracle(0, {5, -5}, Variant::monotone(), true) == Rational(1, 5));
}

TEST_CASE("mixed counts and their specializations") {
    std::vector<std::vector<int>> profiles = {{2, 1, -2, -1}, {1, 1, -1, -1}, {3, -2, -1}};
    for (const auto& x : profiles) {
        for (int g = 0; g <= 1; ++g) {
            int b = 2 * g - 2 + static_cast<int>(x.size());
            if (b < 0) continue;
            for (bool conn : {false, true}) {
                CHECK(oracle(g, x, Variant::mixed(b, 0), conn) == oracle(g, x, Variant::strict(), conn));
                CHECK(oracle(g, x, Variant::mixed(0, b), conn) == oracle(g, x, Variant::monotone(), conn));
                CHECK(oracle(g, x, Variant::mixed(0, 0), conn) == oracle(g, x, Variant::plain(), conn));
            }
        }
    }
    // Genuinely mixed: s_1 < s_2 with a free third factor.
    CHECK(oracle(0, {2, 1, -1, -1, -1}, Variant::mixed(2, 0), true) == Rational(1));
    CHECK(oracle(0, {2, 1, -1, -1, -1}, Variant::mixed(2, 1), true) == Rational(1));
    CHECK(oracle(0, {2, 1, -1, -1, -1}, Variant::plain(), true) == Rational(4));
}

TEST_CASE("variant ordering: strict <= monotone <= plain") {
    std::vector<std::vector<int>> profiles = {{2, 1, -2, -1}, {2, -2}, {3, -1, -1, -1}, {2, 2, -2, -2}};
    for (const auto& x : profiles) {
        for (int g = 0; g <= 1; ++g) {
            int b = 2 * g - 2 + static_cast<int>(x.size());
            if (b < 0) continue;
            for (bool conn : {false, true}) {
                Rational s = oracle(g, x, Variant::strict(), conn);
                Rational m = oracle(g, x, Variant::monotone(), conn);
                Rational p = oracle(g, x, Variant::plain(), conn);
                CHECK(s <= m);
                CHECK(m <= p);
                CHECK(oracle(g, x, Variant::monotone(), true) <= oracle(g, x, Variant::monotone(), false));
            }
        }
    }
}

TEST_CASE("profile entry order does not matter") {
    CHECK(oracle(0, {-2, 1, 2, -1}, Variant::monotone(), true) == Rational(3));
    CHECK(oracle(1, {-2, 2}, Variant::monotone(), false) == Rational(1, 2));
}

TEST_CASE("degree limit guards the brute force") {
    FactorizationQuery big{0, {8, -8}, Variant::monotone(), true};
    CHECK_THROWS_AS(count_factorizations(big), ResourceError);
    FactorizationQuery bad{0, {2, 1, -2, -1}, Variant::mixed(3, 0), true};
    CHECK_THROWS_AS(count_factorizations(bad), ArgumentError);
}
