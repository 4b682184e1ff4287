#include <doctest.h>

#include "hurwitz/errors.hpp"
#include "hurwitz/recursion.hpp"

using namespace hurwitz;

namespace {

Profile joined(const Multiset& mu, const Multiset& nu) {
    std::vector<int> entries = mu;
    for (int w : nu) entries.push_back(-w);
    return Profile(entries);
}

}  // namespace

TEST_CASE("recursion matches hand-verified slices") {
    CHECK(recursion_rhs(0, {2, 1}, {2, 1}, {1, 1}, Variant::monotone()) == Rational(2));
    CHECK(recursion_rhs(1, {2}, {2}, {1, 1}, Variant::monotone()) == Rational(1, 4));
    CHECK(recursion_rhs(0, {2, 1}, {2, 1}, {2}, Variant::strict()) == Rational(-1));
    CHECK(recursion_rhs(0, {3}, {1, 1, 1}, {1, 1}, Variant::monotone()) == Rational(1, 2));
    CHECK(recursion_rhs(0, {1, 1}, {2}, {1}, Variant::monotone()) == Rational(1, 2));
    CHECK(recursion_rhs(1, {2}, {2}, {2}, Variant::monotone()) == Rational(1, 4));
}

TEST_CASE("recursion equals the enumerated slice on a d<=4 grid") {
    std::vector<std::pair<Multiset, Multiset>> ends = {
        {{1}, {1}}, {{2}, {2}}, {{2}, {1, 1}}, {{1, 1}, {2}}, {{1, 1}, {1, 1}},
        {{3}, {3}}, {{3}, {2, 1}}, {{2, 1}, {2, 1}}, {{3}, {1, 1, 1}}, {{2, 1}, {1, 1, 1}},
        {{2, 2}, {3, 1}}, {{2, 1, 1}, {4}}, {{4}, {4}}, {{2, 2}, {2, 2}}, {{3, 1}, {2, 2}},
    };
    for (const auto& [mu, nu] : ends) {
        int n = static_cast<int>(mu.size() + nu.size());
        for (int g = 0; g <= 1; ++g) {
            int b = 2 * g - 2 + n;
            if (b < 1 || b > 4) continue;
            for (const Composition& lambda : ordered_partitions(b)) {
                for (Variant v : {Variant::monotone(), Variant::strict()}) {
                    CAPTURE(mu);
                    CAPTURE(nu);
                    CAPTURE(g);
                    CAPTURE(lambda);
                    Rational lhs = vec_h(g, joined(mu, nu), lambda, v, true);
                    CHECK(recursion_rhs(g, mu, nu, lambda, v) == lhs);
                }
            }
        }
    }
}

TEST_CASE("mixed recursions reduce to the pure ones at the extremes") {
    Multiset mu{2, 1}, nu{2, 1};
    CHECK(mixed_recursion_rhs(0, mu, nu, 2, 0, {2}, CutType::StrictVertex) ==
          recursion_rhs(0, mu, nu, {2}, Variant::strict()));
    CHECK(mixed_recursion_rhs(0, mu, nu, 0, 2, {1, 1}, CutType::WeakVertex) ==
          recursion_rhs(0, mu, nu, {1, 1}, Variant::monotone()));
}

TEST_CASE("mixed recursions equal the mixed slices for each admissible cut") {
    std::vector<std::pair<Multiset, Multiset>> ends = {
        {{2}, {2}}, {{2}, {1, 1}}, {{1, 1}, {1, 1}}, {{2, 1}, {2, 1}}, {{3}, {1, 1, 1}},
    };
    for (const auto& [mu, nu] : ends) {
        int n = static_cast<int>(mu.size() + nu.size());
        for (int g = 0; g <= 1; ++g) {
            int b = 2 * g - 2 + n;
            if (b < 1 || b > 4) continue;
            for (int p = 0; p <= b; ++p) {
                for (int q = 0; p + q <= b; ++q) {
                    auto block = [](int total) {
                        std::vector<Composition> out;
                        if (total == 0)
                            out.emplace_back();
                        else
                            out = ordered_partitions(total);
                        return out;
                    };
                    for (const Composition& l1 : block(p)) {
                        for (const Composition& l2 : block(q)) {
                            Composition lambda = l1;
                            lambda.insert(lambda.end(), l2.begin(), l2.end());
                            lambda.insert(lambda.end(), static_cast<size_t>(b - p - q), 1);
                            CutType cut = CutType::UsualVertex;
                            if (b - p - q == 0) cut = q > 0 ? CutType::WeakVertex : CutType::StrictVertex;
                            if (lambda.empty()) continue;
                            CAPTURE(mu);
                            CAPTURE(nu);
                            CAPTURE(g);
                            CAPTURE(p);
                            CAPTURE(q);
                            CAPTURE(lambda);
                            Rational lhs = mixed_slice(g, joined(mu, nu), p, q, lambda, true);
                            CHECK(mixed_recursion_rhs(g, mu, nu, p, q, lambda, cut) == lhs);
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("mixed recursion validates its cut type") {
    CHECK_THROWS_AS(mixed_recursion_rhs(0, {2, 1}, {2, 1}, 2, 0, {2}, CutType::UsualVertex), ArgumentError);
    CHECK_THROWS_AS(mixed_recursion_rhs(0, {2, 1}, {2, 1}, 1, 0, {1, 1}, CutType::StrictVertex), ArgumentError);
}
