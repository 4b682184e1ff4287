#include "hurwitz/wallcross.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "hurwitz/errors.hpp"
#include "hurwitz/tropical.hpp"

namespace hurwitz {

namespace {

unsigned canonical_mask(unsigned mask, int n) {
    unsigned full = (1u << n) - 1;
    return (mask & 1u) ? mask : (full ^ mask);
}

unsigned mask_of(const std::vector<int>& wall) {
    unsigned m = 0;
    for (int i : wall) m |= (1u << i);
    return m;
}

long wall_sum(const std::vector<int>& entries, const std::vector<int>& wall) {
    long s = 0;
    for (int i : wall) s += entries[static_cast<size_t>(i)];
    return s;
}

}  // namespace

WallNeighborhood find_adjacent_chambers(int n, const std::vector<int>& wall, int box, std::uint64_t seed) {
    if (wall.empty() || static_cast<int>(wall.size()) >= n) throw ArgumentError("wall must be a proper nonempty subset");
    for (int i : wall)
        if (i < 0 || i >= n) throw ArgumentError("wall index out of range");

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(-box, box);
    unsigned wmask = mask_of(wall);
    unsigned full = (1u << n) - 1;
    int i0 = wall.front();
    int j0 = 0;
    while (wmask & (1u << j0)) ++j0;

    for (int attempt = 0; attempt < 400000; ++attempt) {
        // Anchor on the wall: both the I part and its complement sum to zero.
        std::vector<int> anchor(static_cast<size_t>(n), 0);
        long sum_wall = 0, sum_rest = 0;
        for (int i = 0; i < n; ++i) {
            if (i == i0 || i == j0) continue;
            int v = dist(rng);
            anchor[static_cast<size_t>(i)] = v;
            if (wmask & (1u << i))
                sum_wall += v;
            else
                sum_rest += v;
        }
        anchor[static_cast<size_t>(i0)] = static_cast<int>(-sum_wall);
        anchor[static_cast<size_t>(j0)] = static_cast<int>(-sum_rest);

        // Every non-wall subset sum must survive a +-1 perturbation.
        bool good = true;
        for (unsigned mask = 1; mask < full && good; ++mask) {
            unsigned canon = canonical_mask(mask, n);
            if (canon != mask) continue;
            long s = 0;
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) s += anchor[static_cast<size_t>(i)];
            if (canon == canonical_mask(wmask, n)) {
                if (s != 0) good = false;
            } else if (s > -2 && s < 2) {
                good = false;
            }
        }
        if (!good) continue;

        auto bump = [&](int dir) {
            std::vector<int> pt = anchor;
            pt[static_cast<size_t>(i0)] += dir;
            pt[static_cast<size_t>(j0)] -= dir;
            return pt;
        };
        std::vector<int> plus = bump(+1);
        std::vector<int> minus = bump(-1);
        bool nonzero = true;
        for (int v : plus) nonzero &= (v != 0);
        for (int v : minus) nonzero &= (v != 0);
        if (!nonzero) continue;

        try {
            WallNeighborhood out;
            out.wall = wall;
            out.positive_side = chamber_signature(plus);
            out.negative_side = chamber_signature(minus);
            out.witness_positive = plus;
            out.witness_negative = minus;
            if (wall_sum(plus, wall) <= 0 || wall_sum(minus, wall) >= 0) continue;
            // Adjacency: the two signatures may differ only on the wall class.
            bool adjacent = true;
            unsigned wall_canon = canonical_mask(wmask, n);
            for (const auto& [mask, sign] : out.positive_side.signs) {
                if (mask == wall_canon) continue;
                if (out.negative_side.signs.at(mask) != sign) {
                    adjacent = false;
                    break;
                }
            }
            if (!adjacent) continue;
            return out;
        } catch (const OnWallError&) {
            continue;
        }
    }
    throw ResourceError("no adjacent chamber pair found for the requested wall");
}

WallCrossingDirect wall_crossing_direct(int g, const Partition& lambda, const std::vector<int>& wall,
                                        const Variant& variant, bool connected, const FitOptions& options) {
    int b = sum_of(lambda);
    int n = b + 2 - 2 * g;
    if (n < 2) throw ArgumentError("lambda and genus leave no room for a profile");
    WallNeighborhood nbhd = find_adjacent_chambers(n, wall, std::max(4, options.box / 3), options.seed);
    FitResult fit_neg = fit_chamber_polynomial(g, lambda, nbhd.witness_negative, variant, connected, options);
    FitResult fit_pos = fit_chamber_polynomial(g, lambda, nbhd.witness_positive, variant, connected, options);
    return WallCrossingDirect{fit_pos.polynomial - fit_neg.polynomial, std::move(fit_neg), std::move(fit_pos)};
}

Rational wall_crossing_formula(const std::vector<int>& entries, const std::vector<int>& wall,
                               const Partition& lambda, const Variant& variant) {
    int n = static_cast<int>(entries.size());
    long xI = wall_sum(entries, wall);
    if (xI == 0) throw ArgumentError("point lies on the wall");
    if (xI < 0) throw ArgumentError("point must lie in the chamber with x_I > 0");

    std::vector<int> tuple_I, tuple_Ic;
    std::vector<bool> in_wall(static_cast<size_t>(n), false);
    for (int i : wall) in_wall[static_cast<size_t>(i)] = true;
    for (int i = 0; i < n; ++i)
        (in_wall[static_cast<size_t>(i)] ? tuple_I : tuple_Ic).push_back(entries[static_cast<size_t>(i)]);
    int nI = static_cast<int>(tuple_I.size());
    int nIc = n - nI;

    Rational total(0);
    // lambda = l1 u l2 u l3 over distinguished blocks of the unordered parts.
    for (const auto& [l1, rest] : submultisets(sorted_desc(lambda))) {
        for (const auto& [l2, l3] : submultisets(rest)) {
            int L1 = sum_of(l1), L2 = sum_of(l2), L3 = sum_of(l3);
            // Genus of each block is fixed by its size; skip bad parities.
            for (int ly = 1; ly <= L1 + 2 - nI; ++ly) {
                int twice_g1 = L1 + 2 - nI - ly;
                if (twice_g1 % 2 != 0) continue;
                for (int lz = 1; lz <= L3 + 2 - nIc; ++lz) {
                    int twice_g3 = L3 + 2 - nIc - lz;
                    if (twice_g3 % 2 != 0) continue;
                    int twice_g2 = L2 + 2 - ly - lz;
                    if (twice_g2 < 0 || twice_g2 % 2 != 0) continue;

                    Rational block(0);
                    for (const Composition& y : compositions_of(static_cast<int>(xI), ly)) {
                        for (const Composition& z : compositions_of(static_cast<int>(xI), lz)) {
                            std::vector<int> left = tuple_I;
                            for (int w : y) left.push_back(-w);
                            std::vector<int> middle = y;
                            for (int w : z) middle.push_back(-w);
                            std::vector<int> right = z;
                            right.insert(right.end(), tuple_Ic.begin(), tuple_Ic.end());

                            Rational h1 = h_slice_labeled(twice_g1 / 2, Profile(left), l1, variant, true);
                            if (h1.is_zero()) continue;
                            Rational h2 = h_slice_labeled(twice_g2 / 2, Profile(middle), l2, variant, false);
                            if (h2.is_zero()) continue;
                            Rational h3 = h_slice_labeled(twice_g3 / 2, Profile(right), l3, variant, true);
                            if (h3.is_zero()) continue;

                            Rational weights(1);
                            for (int w : y) weights *= Rational(w);
                            for (int w : z) weights *= Rational(w);
                            block += weights * h1 * h2 * h3;
                        }
                    }
                    if (block.is_zero()) continue;
                    block /= Rational(factorial(ly) * factorial(lz));
                    if (l2.size() % 2 == 1) block = -block;
                    total += block;
                }
            }
        }
    }
    return total;
}

}  // namespace hurwitz
