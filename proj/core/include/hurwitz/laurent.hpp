#ifndef HURWITZ_LAURENT_HPP
#define HURWITZ_LAURENT_HPP

#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

// Truncated Laurent series: exact coefficients for degrees min_degree()..order(),
// nothing known past order(). min_degree may be negative (1/zeta has a z^-1 term);
// coefficients are never padded implicitly, and out-of-range reads throw rather
// than returning zero so that truncation mistakes surface immediately.
class LaurentSeries {
public:
    LaurentSeries(int min_degree, std::vector<Rational> coefficients);

    static LaurentSeries constant(const Rational& c, int order);
    static LaurentSeries one(int order) { return constant(Rational(1), order); }

    int min_degree() const { return min_deg_; }
    int order() const { return min_deg_ + static_cast<int>(coef_.size()) - 1; }

    // Exact coefficient of z^k; throws TruncationError outside [min_degree, order].
    const Rational& coefficient(int k) const;

    LaurentSeries operator*(const LaurentSeries& o) const;
    LaurentSeries operator+(const LaurentSeries& o) const;

    // Multiplicative inverse; requires the leading coefficient to be nonzero.
    // The result is valid through order() - 2*min_degree().
    LaurentSeries inverse() const;

    // Substitution z -> a*z.
    LaurentSeries scaled(long a) const;

    LaurentSeries truncated(int new_order) const;

    bool operator==(const LaurentSeries& o) const = default;

private:
    int min_deg_;
    std::vector<Rational> coef_;  // coef_[i] is the coefficient of z^(min_deg_ + i)
};

}  // namespace hurwitz

#endif
