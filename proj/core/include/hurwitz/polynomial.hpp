#ifndef HURWITZ_POLYNOMIAL_HPP
#define HURWITZ_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "hurwitz/chambers.hpp"
#include "hurwitz/factorization_count.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

// Exact polynomial in the first n-1 profile coordinates (x_n is eliminated
// through sum x_i = 0). Keys are exponent vectors of length nvars.
class MultivariatePolynomial {
public:
    explicit MultivariatePolynomial(int nvars) : nvars_(nvars) {}

    int nvars() const { return nvars_; }
    const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

    void set_term(const std::vector<int>& exponents, const Rational& coefficient);
    Rational evaluate(const std::vector<int>& point) const;  // point of size nvars or nvars+1
    int total_degree() const;
    bool is_zero() const;

    MultivariatePolynomial operator-(const MultivariatePolynomial& o) const;
    bool operator==(const MultivariatePolynomial&) const = default;

private:
    int nvars_;
    std::map<std::vector<int>, Rational> terms_;
};

// Exact solve of a square rational system by Gaussian elimination; returns
// nothing when the matrix is singular.
std::optional<std::vector<Rational>> solve_exact(std::vector<std::vector<Rational>> matrix,
                                                 std::vector<Rational> rhs);

struct FitOptions {
    int box = 24;
    std::uint64_t seed = 1;
    int max_degree = -1;  // default: 4g - 3 + n
};

struct FitResult {
    MultivariatePolynomial polynomial;
    std::uint64_t seed = 0;
    std::vector<std::vector<int>> samples;   // interpolation points (profiles)
    std::vector<std::vector<int>> holdout;   // exact-verification points
};

// Fits the end-labeled lambda-slice on the chamber of `witness` by exact
// interpolation on sampled lattice profiles, then verifies the polynomial
// exactly on at least 25% extra held-out samples. Throws
// InsufficientSamplesError / FitFailureError accordingly.
FitResult fit_chamber_polynomial(int g, const Partition& lambda, const std::vector<int>& witness,
                                 const Variant& variant, bool connected, const FitOptions& options = {});

}  // namespace hurwitz

#endif
