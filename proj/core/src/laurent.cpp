#include "hurwitz/laurent.hpp"

#include <algorithm>
#include <string>

#include "hurwitz/errors.hpp"

namespace hurwitz {

LaurentSeries::LaurentSeries(int min_degree, std::vector<Rational> coefficients)
    : min_deg_(min_degree), coef_(std::move(coefficients)) {
    if (coef_.empty()) throw ArgumentError("series needs at least one tracked coefficient");
}

LaurentSeries LaurentSeries::constant(const Rational& c, int order) {
    if (order < 0) throw ArgumentError("constant series needs order >= 0");
    std::vector<Rational> coef(static_cast<size_t>(order) + 1, Rational(0));
    coef[0] = c;
    return LaurentSeries(0, std::move(coef));
}

const Rational& LaurentSeries::coefficient(int k) const {
    if (k < min_deg_ || k > order())
        throw TruncationError("coefficient of z^" + std::to_string(k) + " outside tracked range [" +
                              std::to_string(min_deg_) + ", " + std::to_string(order()) + "]");
    return coef_[static_cast<size_t>(k - min_deg_)];
}

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
    // A product is trustworthy through min(order_a + min_b, order_b + min_a):
    // unknown tails of one factor meet tracked heads of the other beyond that.
    int res_min = min_deg_ + o.min_deg_;
    int res_order = std::min(order() + o.min_deg_, o.order() + min_deg_);
    if (res_order < res_min) throw TruncationError("product truncates to an empty range");
    std::vector<Rational> coef(static_cast<size_t>(res_order - res_min) + 1, Rational(0));
    for (size_t i = 0; i < coef_.size(); ++i) {
        if (coef_[i].is_zero()) continue;
        int da = min_deg_ + static_cast<int>(i);
        for (size_t j = 0; j < o.coef_.size(); ++j) {
            int d = da + o.min_deg_ + static_cast<int>(j);
            if (d > res_order) break;
            if (o.coef_[j].is_zero()) continue;
            coef[static_cast<size_t>(d - res_min)] += coef_[i] * o.coef_[j];
        }
    }
    return LaurentSeries(res_min, std::move(coef));
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
    int res_min = std::min(min_deg_, o.min_deg_);
    int res_order = std::min(order(), o.order());
    if (res_order < res_min) throw TruncationError("sum truncates to an empty range");
    std::vector<Rational> coef(static_cast<size_t>(res_order - res_min) + 1, Rational(0));
    for (int d = res_min; d <= res_order; ++d) {
        Rational c(0);
        if (d >= min_deg_ && d <= order()) c += coefficient(d);
        if (d >= o.min_deg_ && d <= o.order()) c += o.coefficient(d);
        coef[static_cast<size_t>(d - res_min)] = c;
    }
    return LaurentSeries(res_min, std::move(coef));
}

LaurentSeries LaurentSeries::inverse() const {
    const Rational& lead = coef_.front();
    if (lead.is_zero()) throw SingularSeriesError("cannot invert series with vanishing leading coefficient");
    // Write this = z^m * u with u a unit power series; invert u by the usual recurrence.
    size_t len = coef_.size();
    std::vector<Rational> inv(len, Rational(0));
    inv[0] = Rational(1) / lead;
    for (size_t j = 1; j < len; ++j) {
        Rational acc(0);
        for (size_t i = 1; i <= j; ++i) acc += coef_[i] * inv[j - i];
        inv[j] = -acc / lead;
    }
    return LaurentSeries(-min_deg_, std::move(inv));
}

LaurentSeries LaurentSeries::scaled(long a) const {
    std::vector<Rational> coef(coef_.size());
    // z^k picks up a^k; negative k divides instead (a != 0 for edge weights).
    if (a == 0) throw ArgumentError("scaling factor must be nonzero");
    for (int k = 0; k <= order() - min_deg_; ++k) {
        int deg = min_deg_ + k;
        Rational factor(1);
        if (deg >= 0) {
            Integer num;
            mpz_pow_ui(num.get_mpz_t(), Integer(a).get_mpz_t(), static_cast<unsigned long>(deg));
            factor = Rational(num);
        } else {
            Integer den;
            mpz_pow_ui(den.get_mpz_t(), Integer(a).get_mpz_t(), static_cast<unsigned long>(-deg));
            factor = Rational(Integer(1), den);
        }
        coef[static_cast<size_t>(k)] = coef_[static_cast<size_t>(k)] * factor;
    }
    return LaurentSeries(min_deg_, std::move(coef));
}

LaurentSeries LaurentSeries::truncated(int new_order) const {
    if (new_order < min_deg_) throw TruncationError("truncation below min_degree");
    if (new_order >= order()) return *this;
    std::vector<Rational> coef(coef_.begin(), coef_.begin() + (new_order - min_deg_ + 1));
    return LaurentSeries(min_deg_, std::move(coef));
}

}  // namespace hurwitz
