#ifndef HURWITZ_RECURSION_HPP
#define HURWITZ_RECURSION_HPP

#include "hurwitz/partitions.hpp"
#include "hurwitz/rational.hpp"
#include "hurwitz/tropical.hpp"

namespace hurwitz {

// Which vertex regime the removed vertex belongs to in the mixed recursions.
enum class CutType { StrictVertex, WeakVertex, UsualVertex };

// Right-hand side of the cut-and-join style recursion: remove the last inner
// vertex of every cover of ((mu, -nu), lambda) and resum the pieces as a sum
// over: the out-ends nu' kept at the removed vertex, the in-ends kappa
// attached directly to it, a set partition of the remaining vertex positions
// into components, per-component end decompositions mu^i / nu^i and cut-edge
// partitions gamma^i (with the component genus fixed by its own Euler count),
// weighted by the smaller slices, binomial end-designation factors, the
// product of cut-edge weights, symmetry factors of nu' and kappa, and the
// series weight and sign of the removed vertex. Equals typed_slice exactly.
Rational typed_recursion_rhs(int g, const Multiset& mu, const Multiset& nu, const TypedLambda& lambda);

// Pure monotone / strict form.
Rational recursion_rhs(int g, const Multiset& mu, const Multiset& nu, const Composition& lambda,
                       const Variant& variant);

// Mixed form; the cut type must match the regime of the final vertex (the
// only one whose removal decomposes the cover), i.e. the last nonempty block
// of the declared decomposition.
Rational mixed_recursion_rhs(int g, const Multiset& mu, const Multiset& nu, int p, int q,
                             const Composition& lambda, CutType cut);

}  // namespace hurwitz

#endif
