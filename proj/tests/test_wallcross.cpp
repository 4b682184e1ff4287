#include <doctest.h>

#include "hurwitz/errors.hpp"
#include "hurwitz/tropical.hpp"
#include "hurwitz/wallcross.hpp"

using namespace hurwitz;

TEST_CASE("adjacent chamber search straddles the wall") {
    WallNeighborhood nbhd = find_adjacent_chambers(4, {0, 1}, 8, 17);
    long pos = 0, neg = 0;
    for (int i : nbhd.wall) {
        pos += nbhd.witness_positive[static_cast<size_t>(i)];
        neg += nbhd.witness_negative[static_cast<size_t>(i)];
    }
    CHECK(pos > 0);
    CHECK(neg < 0);
    int differing = 0;
    for (const auto& [mask, sign] : nbhd.positive_side.signs)
        differing += (nbhd.negative_side.signs.at(mask) != sign);
    CHECK(differing == 1);
}

TEST_CASE("wall crossing formula equals the polynomial difference, genus 0") {
    FitOptions opts;
    opts.box = 18;
    opts.seed = 23;
    for (const Partition& lambda : {Partition{2}, Partition{1, 1}}) {
        for (Variant v : {Variant::monotone(), Variant::strict()}) {
            CAPTURE(lambda);
            WallCrossingDirect direct = wall_crossing_direct(0, lambda, {0, 1}, v, true, opts);
            ChamberSampler sampler(chamber_signature(direct.fit_positive.samples.front()), 14, 77);
            for (int i = 0; i < 6; ++i) {
                std::vector<int> pt = sampler.next();
                CAPTURE(pt);
                CHECK(wall_crossing_formula(pt, {0, 1}, lambda, v) == direct.difference.evaluate(pt));
            }
        }
    }
}

TEST_CASE("wall crossing rejects on-wall and wrong-side points") {
    CHECK_THROWS_AS(wall_crossing_formula({2, -2, 3, -3}, {0, 1}, {1, 1}, Variant::monotone()), ArgumentError);
    CHECK_THROWS_AS(wall_crossing_formula({-3, 1, 5, -3}, {0, 1}, {1, 1}, Variant::monotone()), ArgumentError);
}
