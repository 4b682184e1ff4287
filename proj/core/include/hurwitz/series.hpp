#ifndef HURWITZ_SERIES_HPP
#define HURWITZ_SERIES_HPP

#include "hurwitz/laurent.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

// Exact Bernoulli number B_m for even m >= 0 (convention B_1 = -1/2 internally,
// never requested by callers). Throws ArgumentError for odd or negative m.
Rational bernoulli(long m);

// zeta(z) = 2 sinh(z/2) = z + z^3/24 + z^5/1920 + ..., tracked through `order`.
LaurentSeries zeta_series(int order);

// S(z) = zeta(z)/z = 1 + z^2/24 + z^4/1920 + ..., tracked through `order`.
LaurentSeries s_series(int order);

// c(l) = [z^(2l-1)] 1/zeta(z). Computed both by series inversion and, for l >= 1,
// by the closed form -(2^(2l-1)-1)/2^(2l-1) * B_{2l}/(2l)!; the two routes are
// compared and a ConsistencyError is thrown if they ever disagree.
Rational one_point_coefficient(long l);

}  // namespace hurwitz

#endif
