#ifndef HURWITZ_FACTORIZATION_COUNT_HPP
#define HURWITZ_FACTORIZATION_COUNT_HPP

#include "hurwitz/partitions.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

// Monotonicity regime for the transposition sequence. Mixed(p, q) constrains
// the first p transpositions to be strictly monotone among themselves and the
// next q to be weakly monotone among themselves; nothing ties the two blocks
// together, and the remaining b-p-q factors are unconstrained.
struct Variant {
    enum class Kind { Plain, Monotone, Strict, Mixed } kind = Kind::Monotone;
    int p = 0;
    int q = 0;

    static Variant plain() { return {Kind::Plain, 0, 0}; }
    static Variant monotone() { return {Kind::Monotone, 0, 0}; }
    static Variant strict() { return {Kind::Strict, 0, 0}; }
    static Variant mixed(int p, int q) { return {Kind::Mixed, p, q}; }

    bool operator==(const Variant&) const = default;
    auto operator<=>(const Variant&) const = default;
};

struct FactorizationQuery {
    int genus = 0;
    std::vector<int> profile;  // nonzero entries summing to zero
    Variant variant = Variant::monotone();
    bool connected = true;
    int degree_limit = 7;
};

// Number of tuples (sigma_1, tau_1..tau_b, sigma_2) in S_d with the prescribed
// cycle types, product relation, monotonicity regime and (optionally)
// transitivity, divided by d!. Brute force over the conjugacy class of
// sigma_1 with a DFS over transposition sequences; this is the ground truth
// the enumeration engine is checked against.
Rational count_factorizations(const FactorizationQuery& query);

}  // namespace hurwitz

#endif
