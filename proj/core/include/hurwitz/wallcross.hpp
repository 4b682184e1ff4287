#ifndef HURWITZ_WALLCROSS_HPP
#define HURWITZ_WALLCROSS_HPP

#include "hurwitz/polynomial.hpp"

namespace hurwitz {

// A pair of chambers adjacent along the wall sum_{i in I} x_i = 0, found by
// perturbing a deterministic on-wall anchor. Index sets are 0-based.
struct WallNeighborhood {
    std::vector<int> wall;
    ChamberSignature negative_side;  // x_I < 0
    ChamberSignature positive_side;  // x_I > 0
    std::vector<int> witness_negative;
    std::vector<int> witness_positive;
};

WallNeighborhood find_adjacent_chambers(int n, const std::vector<int>& wall, int box, std::uint64_t seed);

struct WallCrossingDirect {
    MultivariatePolynomial difference;  // P_2 - P_1
    FitResult fit_negative;
    FitResult fit_positive;
};

// Fits the slice polynomial on both sides of the wall and returns the exact
// difference (positive side minus negative side).
WallCrossingDirect wall_crossing_direct(int g, const Partition& lambda, const std::vector<int>& wall,
                                        const Variant& variant, bool connected, const FitOptions& options = {});

// Closed-form wall-crossing sum evaluated at a point strictly inside the
// positive chamber: over ordered tuples y, z of positive integers with
// |y| = |z| = x_I and splittings lambda = l1 u l2 u l3,
//   (-1)^len(l2) * (prod y / len(y)!) (prod z / len(z)!)
//     * h(x_I,-y; l1) * h_disc(y,-z; l2) * h(z,x_Ic; l3)
// in the end-labeled normalisation, with each genus fixed by its block size
// and non-integral or negative cases skipped.
Rational wall_crossing_formula(const std::vector<int>& entries, const std::vector<int>& wall,
                               const Partition& lambda, const Variant& variant);

}  // namespace hurwitz

#endif
