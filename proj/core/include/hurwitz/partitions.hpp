#ifndef HURWITZ_PARTITIONS_HPP
#define HURWITZ_PARTITIONS_HPP

#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

// Ordered tuple of positive parts (a composition when the order matters).
using Composition = std::vector<int>;
// Weakly decreasing tuple of positive parts.
using Partition = std::vector<int>;
// Multiset of integers in canonical (sorted descending) form.
using Multiset = std::vector<int>;

// Ramification profile: nonzero integers summing to zero, in caller order.
// Ends are identified by position; invariance under reordering is tested,
// not assumed by the representation.
class Profile {
public:
    explicit Profile(std::vector<int> entries);

    const std::vector<int>& entries() const { return entries_; }
    int size() const { return static_cast<int>(entries_.size()); }

    Multiset positive_part() const;  // x^+, sorted descending
    Multiset negative_part() const;  // x^-, absolute values, sorted descending
    long degree() const;             // d = |x^+| = |x^-|

private:
    std::vector<int> entries_;
};

// All compositions of b >= 1, each exactly once (2^(b-1) of them).
std::vector<Composition> ordered_partitions(int b);

// Distinct orderings of the parts of an unordered partition.
std::vector<Composition> orderings_of(const Partition& parts);

// Product of factorials of value multiplicities: |Aut| of a tuple.
Integer multiset_aut(const Multiset& t);

// All (sub, complement) splits of a multiset, canonical form, each once.
std::vector<std::pair<Multiset, Multiset>> submultisets(const Multiset& t);

// Partitions of `total` with at most `max_parts` parts and parts <= max_part
// (pass 0 for "no bound"). Result multisets are sorted descending.
std::vector<Multiset> partitions_of(int total, int max_parts = 0, int max_part = 0);

// Ordered tuples of exactly `length` positive parts summing to `total`.
std::vector<Composition> compositions_of(int total, int length);

Multiset sorted_desc(std::vector<int> v);
int sum_of(const std::vector<int>& v);

}  // namespace hurwitz

#endif
