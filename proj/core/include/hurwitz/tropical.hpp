#ifndef HURWITZ_TROPICAL_HPP
#define HURWITZ_TROPICAL_HPP

#include "hurwitz/cover.hpp"
#include "hurwitz/factorization_count.hpp"
#include "hurwitz/partitions.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

// Monotonicity regime of a single inner vertex. Strict vertices carry the
// sign (-1)^(1+val), monotone and plain vertices are unsigned; the slice
// normalisation divides by the factorials of the strict and monotone block
// lengths only (plain vertices are anchored to their own branch points and
// contribute per compatible ordering).
enum class VertexKind { Strict, Monotone, Plain };

struct TypedPart {
    int part = 1;
    VertexKind kind = VertexKind::Monotone;
    auto operator<=>(const TypedPart&) const = default;
};
using TypedLambda = std::vector<TypedPart>;

TypedLambda uniform_lambda(const Composition& lambda, VertexKind kind);

// Typed vertex data for the mixed p-strict / q-monotone / rest-plain regime:
// the strict block covers the parts summing to p, the monotone block the parts
// summing to q, and the remaining b-p-q parts are all 1 and plain. Throws if
// lambda does not decompose that way.
TypedLambda mixed_lambda(const Composition& lambda, int p, int q);

// Gromov-Witten weight of an inner vertex with the given adjacent edge
// weights and genus:
//   M(v) = (lambda_v - 1)! * sum_{g1+g2=gv} c(g2) [w^(2 g1)] prod_a S(a w) / S(w)
// with lambda_v = #weights + 2 gv - 2. Memoized; even in each weight.
Rational vertex_multiplicity(const Multiset& adjacent_weights, int vertex_genus);
Rational vertex_multiplicity(const Multiset& y_plus, const Multiset& y_minus, int vertex_genus);

Integer cover_automorphism_order(const Cover& cover);

// Weight of one cover in the slice sum: signs and vertex multiplicities,
// internal edge weights, 1/|Aut|, and the block-factorial normalisation.
Rational cover_contribution(const Cover& cover, const TypedLambda& lambda);

// Sum of cover contributions over all covers of the given type. The genus is
// implied by sum(lambda) = 2g - 2 + n and is validated against `g`.
Rational typed_slice(int g, const Profile& x, const TypedLambda& lambda, bool connected);

// Ordered-lambda slice for the pure monotone / strict regimes.
Rational vec_h(int g, const Profile& x, const Composition& lambda, const Variant& variant, bool connected);

// Unordered slice: sum of vec_h over the distinct orderings of lambda.
Rational h_slice(int g, const Profile& x, const Partition& lambda, const Variant& variant, bool connected);

// Full invariant: sum of h_slice over all unordered partitions of b. For the
// mixed variant the sum runs over ordered decompositions lambda_(1) |- p,
// lambda_(2) |- q. Equals count_factorizations on the oracle-checkable grid.
Rational h_total(int g, const Profile& x, const Variant& variant, bool connected);

// Mixed lambda-slice; lambda carries its decomposition via p and q.
Rational mixed_slice(int g, const Profile& x, int p, int q, const Composition& lambda, bool connected);

// End-labeled normalisation |Aut(x+)| |Aut(x-)| * h_slice: the chamber
// polynomial object (the unlabeled count is not polynomial across profiles
// with repeated entries).
Rational h_slice_labeled(int g, const Profile& x, const Partition& lambda, const Variant& variant, bool connected);

}  // namespace hurwitz

#endif
