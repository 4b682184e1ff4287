#include "hurwitz/series.hpp"

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

// Grows on demand; indices include odd positions so the defining recurrence
// sum_{j<=m} C(m+1,j) B_j = 0 can be applied verbatim.
std::vector<Rational>& bernoulli_table() {
    static std::vector<Rational> table{Rational(1), Rational(-1, 2)};
    return table;
}
std::mutex bernoulli_mutex;

}  // namespace

Rational bernoulli(long m) {
    if (m < 0 || m % 2 != 0) throw ArgumentError("Bernoulli numbers are tabulated for even m >= 0");
    std::lock_guard<std::mutex> lock(bernoulli_mutex);
    auto& table = bernoulli_table();
    while (static_cast<long>(table.size()) <= m) {
        long k = static_cast<long>(table.size());
        Rational acc(0);
        for (long j = 0; j < k; ++j) acc += Rational(binomial(k + 1, j)) * table[static_cast<size_t>(j)];
        table.push_back(-acc / Rational(k + 1));
    }
    return table[static_cast<size_t>(m)];
}

LaurentSeries zeta_series(int order) {
    if (order < 1) throw ArgumentError("zeta series needs order >= 1");
    std::vector<Rational> coef(static_cast<size_t>(order), Rational(0));
    // [z^k] 2 sinh(z/2) = 2 / (2^k k!) for odd k.
    for (int k = 1; k <= order; k += 2) {
        Integer pow2;
        mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(k - 1));
        coef[static_cast<size_t>(k - 1)] = Rational(Integer(1), pow2 * factorial(k));
    }
    return LaurentSeries(1, std::move(coef));
}

LaurentSeries s_series(int order) {
    if (order < 0) throw ArgumentError("S series needs order >= 0");
    std::vector<Rational> coef(static_cast<size_t>(order) + 1, Rational(0));
    for (int k = 0; k <= order; k += 2) {
        Integer pow2;
        mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(k));
        coef[static_cast<size_t>(k)] = Rational(Integer(1), pow2 * factorial(k + 1));
    }
    return LaurentSeries(0, std::move(coef));
}

Rational one_point_coefficient(long l) {
    if (l < 0) throw ArgumentError("one-point coefficient needs l >= 0");
    static std::map<long, Rational> memo;
    static std::mutex memo_mutex;
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find(l);
        if (it != memo.end()) return it->second;
    }

    int target = static_cast<int>(2 * l - 1);
    // 1/zeta has min degree -1; tracking zeta through 2l+1 keeps the inverse
    // valid through degree 2l-1.
    Rational via_series = zeta_series(static_cast<int>(2 * l + 1)).inverse().coefficient(target);

    if (l >= 1) {
        Integer pow2;
        mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(2 * l - 1));
        Rational closed = -Rational(pow2 - 1, pow2) * bernoulli(2 * l) / Rational(factorial(2 * l));
        if (closed != via_series)
            throw ConsistencyError("one-point coefficient routes disagree at l=" + std::to_string(l) +
                                   ": series " + via_series.str() + " vs Bernoulli " + closed.str());
    }

    std::lock_guard<std::mutex> lock(memo_mutex);
    memo.emplace(l, via_series);
    return via_series;
}

}  // namespace hurwitz
