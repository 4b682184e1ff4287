#include "hurwitz/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

#include "hurwitz/errors.hpp"
#include "hurwitz/tropical.hpp"

namespace hurwitz {

void MultivariatePolynomial::set_term(const std::vector<int>& exponents, const Rational& coefficient) {
    if (static_cast<int>(exponents.size()) != nvars_) throw ArgumentError("exponent vector has wrong length");
    if (coefficient.is_zero())
        terms_.erase(exponents);
    else
        terms_[exponents] = coefficient;
}

Rational MultivariatePolynomial::evaluate(const std::vector<int>& point) const {
    if (static_cast<int>(point.size()) < nvars_) throw ArgumentError("evaluation point too short");
    Rational value(0);
    for (const auto& [exps, coeff] : terms_) {
        Rational term = coeff;
        for (int v = 0; v < nvars_; ++v) {
            for (int k = 0; k < exps[static_cast<size_t>(v)]; ++k) term *= Rational(point[static_cast<size_t>(v)]);
        }
        value += term;
    }
    return value;
}

int MultivariatePolynomial::total_degree() const {
    int deg = 0;
    for (const auto& [exps, coeff] : terms_) {
        int d = 0;
        for (int e : exps) d += e;
        deg = std::max(deg, d);
    }
    return deg;
}

bool MultivariatePolynomial::is_zero() const { return terms_.empty(); }

MultivariatePolynomial MultivariatePolynomial::operator-(const MultivariatePolynomial& o) const {
    if (nvars_ != o.nvars_) throw ArgumentError("mixed variable counts");
    MultivariatePolynomial out(nvars_);
    out.terms_ = terms_;
    for (const auto& [exps, coeff] : o.terms_) {
        auto it = out.terms_.find(exps);
        if (it == out.terms_.end()) {
            out.terms_[exps] = -coeff;
        } else {
            it->second -= coeff;
            if (it->second.is_zero()) out.terms_.erase(it);
        }
    }
    return out;
}

std::optional<std::vector<Rational>> solve_exact(std::vector<std::vector<Rational>> matrix,
                                                 std::vector<Rational> rhs) {
    size_t n = matrix.size();
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && matrix[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(matrix[col], matrix[pivot]);
        std::swap(rhs[col], rhs[pivot]);
        Rational inv = Rational(1) / matrix[col][col];
        for (size_t j = col; j < n; ++j) matrix[col][j] *= inv;
        rhs[col] *= inv;
        for (size_t row = 0; row < n; ++row) {
            if (row == col || matrix[row][col].is_zero()) continue;
            Rational f = matrix[row][col];
            for (size_t j = col; j < n; ++j) matrix[row][j] -= f * matrix[col][j];
            rhs[row] -= f * rhs[col];
        }
    }
    return rhs;
}

namespace {

std::vector<std::vector<int>> monomials_up_to(int nvars, int degree) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<size_t>(nvars), 0);
    std::function<void(int, int)> rec = [&](int var, int rest) {
        if (var == nvars) {
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= rest; ++e) {
            cur[static_cast<size_t>(var)] = e;
            rec(var + 1, rest - e);
        }
        cur[static_cast<size_t>(var)] = 0;
    };
    rec(0, degree);
    return out;
}

Rational monomial_value(const std::vector<int>& exps, const std::vector<int>& point) {
    Rational v(1);
    for (size_t i = 0; i < exps.size(); ++i)
        for (int k = 0; k < exps[i]; ++k) v *= Rational(point[i]);
    return v;
}

}  // namespace

FitResult fit_chamber_polynomial(int g, const Partition& lambda, const std::vector<int>& witness,
                                 const Variant& variant, bool connected, const FitOptions& options) {
    int n = static_cast<int>(witness.size());
    int b = 2 * g - 2 + n;
    if (b < 0 || sum_of(lambda) != b) throw ArgumentError("lambda must partition 2g-2+n");
    int degree = options.max_degree >= 0 ? options.max_degree : std::max(0, 4 * g - 3 + n);
    int nvars = n - 1;

    ChamberSignature target = chamber_signature(witness);
    ChamberSampler sampler(target, options.box, options.seed);

    auto slice_at = [&](const std::vector<int>& entries) {
        return h_slice_labeled(g, Profile(entries), lambda, variant, connected);
    };

    std::vector<std::vector<int>> monos = monomials_up_to(nvars, degree);
    size_t m = monos.size();

    // Incremental exact row reduction: keep sampling until the interpolation
    // system has full rank, remembering which samples were kept.
    std::vector<std::vector<Rational>> reduced;      // rows in echelon form
    std::vector<size_t> pivot_of_row;
    std::vector<std::vector<int>> kept;
    std::vector<std::vector<Rational>> kept_rows;    // original rows of kept samples
    std::set<std::vector<int>> seen;

    long budget = static_cast<long>(m) * 200 + 2000;
    while (kept.size() < m && budget-- > 0) {
        std::vector<int> pt = sampler.next();
        if (!seen.insert(pt).second) continue;
        std::vector<Rational> row(m);
        for (size_t j = 0; j < m; ++j) row[j] = monomial_value(monos[j], pt);
        std::vector<Rational> work = row;
        for (size_t r = 0; r < reduced.size(); ++r) {
            const Rational& lead = work[pivot_of_row[r]];
            if (lead.is_zero()) continue;
            Rational f = lead / reduced[r][pivot_of_row[r]];
            for (size_t j = 0; j < m; ++j) work[j] -= f * reduced[r][j];
        }
        size_t pivot = 0;
        while (pivot < m && work[pivot].is_zero()) ++pivot;
        if (pivot == m) continue;  // linearly dependent on kept samples
        reduced.push_back(std::move(work));
        pivot_of_row.push_back(pivot);
        kept.push_back(pt);
        kept_rows.push_back(std::move(row));
    }
    if (kept.size() < m)
        throw InsufficientSamplesError("could not reach a full-rank interpolation system (" +
                                       std::to_string(kept.size()) + "/" + std::to_string(m) + " rows)");

    std::vector<Rational> values(m);
    for (size_t i = 0; i < m; ++i) values[i] = slice_at(kept[i]);
    auto solution = solve_exact(kept_rows, values);
    if (!solution) throw InsufficientSamplesError("interpolation system unexpectedly singular");

    FitResult result{MultivariatePolynomial(nvars), options.seed, kept, {}};
    for (size_t j = 0; j < m; ++j) result.polynomial.set_term(monos[j], (*solution)[j]);

    size_t holdout_count = (m + 3) / 4;
    if (holdout_count == 0) holdout_count = 1;
    while (result.holdout.size() < holdout_count) {
        std::vector<int> pt = sampler.next();
        if (!seen.insert(pt).second) continue;
        Rational predicted = result.polynomial.evaluate(pt);
        Rational actual = slice_at(pt);
        if (predicted != actual) {
            std::string entries;
            for (int e : pt) entries += (entries.empty() ? "" : ",") + std::to_string(e);
            throw FitFailureError("fitted polynomial disagrees with the slice at (" + entries + "): " +
                                  predicted.str() + " vs " + actual.str());
        }
        result.holdout.push_back(pt);
    }
    return result;
}

}  // namespace hurwitz
