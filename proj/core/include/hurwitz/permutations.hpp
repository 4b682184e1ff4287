#ifndef HURWITZ_PERMUTATIONS_HPP
#define HURWITZ_PERMUTATIONS_HPP

#include <vector>

#include "hurwitz/partitions.hpp"

namespace hurwitz {

// One-line notation on {0, ..., d-1}: perm[i] is the image of i.
using Permutation = std::vector<int>;

Permutation identity_permutation(int d);

// Weakly decreasing cycle type.
Partition conjugacy_type(const Permutation& p);

int cycle_count(const Permutation& p);

// True iff the group generated by the listed permutations acts transitively
// on {0, ..., d-1} (union-find over each permutation's cycles).
bool is_transitive(const std::vector<Permutation>& perms, int d);

// All elements of S_d with the given cycle type.
std::vector<Permutation> conjugacy_class(const Partition& type, int d);

}  // namespace hurwitz

#endif
