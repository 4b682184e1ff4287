#ifndef HURWITZ_ERRORS_HPP
#define HURWITZ_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace hurwitz {

// Bad user-supplied data (malformed profile, odd Bernoulli index, ...).
struct ArgumentError : std::invalid_argument {
    explicit ArgumentError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Coefficient access past the truncation order of a series.
struct TruncationError : std::logic_error {
    explicit TruncationError(const std::string& msg) : std::logic_error(msg) {}
};

// Inversion of a series whose leading coefficient vanishes.
struct SingularSeriesError : std::domain_error {
    explicit SingularSeriesError(const std::string& msg) : std::domain_error(msg) {}
};

// Two supposedly equivalent computation routes disagreed.
struct ConsistencyError : std::logic_error {
    explicit ConsistencyError(const std::string& msg) : std::logic_error(msg) {}
};

// A query exceeds a configured resource limit (e.g. symmetric-group degree).
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

// A profile lies on a resonance wall; carries the offending index subset.
struct OnWallError : std::domain_error {
    std::vector<int> subset;
    OnWallError(const std::string& msg, std::vector<int> I)
        : std::domain_error(msg), subset(std::move(I)) {}
};

// Interpolation could not produce a full-rank exact system.
struct InsufficientSamplesError : std::runtime_error {
    explicit InsufficientSamplesError(const std::string& msg) : std::runtime_error(msg) {}
};

// A fitted polynomial failed held-out verification.
struct FitFailureError : std::runtime_error {
    explicit FitFailureError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace hurwitz

#endif
