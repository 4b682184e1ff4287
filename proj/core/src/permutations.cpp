#include "hurwitz/permutations.hpp"

#include <algorithm>
#include <numeric>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

Permutation identity_permutation(int d) {
    Permutation p(static_cast<size_t>(d));
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Partition conjugacy_type(const Permutation& p) {
    int d = static_cast<int>(p.size());
    std::vector<bool> seen(static_cast<size_t>(d), false);
    std::vector<int> lengths;
    for (int i = 0; i < d; ++i) {
        if (seen[static_cast<size_t>(i)]) continue;
        int len = 0;
        for (int j = i; !seen[static_cast<size_t>(j)]; j = p[static_cast<size_t>(j)]) {
            seen[static_cast<size_t>(j)] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    return sorted_desc(std::move(lengths));
}

int cycle_count(const Permutation& p) {
    int d = static_cast<int>(p.size());
    std::vector<bool> seen(static_cast<size_t>(d), false);
    int cycles = 0;
    for (int i = 0; i < d; ++i) {
        if (seen[static_cast<size_t>(i)]) continue;
        ++cycles;
        for (int j = i; !seen[static_cast<size_t>(j)]; j = p[static_cast<size_t>(j)]) seen[static_cast<size_t>(j)] = true;
    }
    return cycles;
}

bool is_transitive(const std::vector<Permutation>& perms, int d) {
    if (d <= 1) return true;
    UnionFind uf(d);
    for (const auto& p : perms)
        for (int i = 0; i < d; ++i) uf.unite(i, p[static_cast<size_t>(i)]);
    int root = uf.find(0);
    for (int i = 1; i < d; ++i)
        if (uf.find(i) != root) return false;
    return true;
}

std::vector<Permutation> conjugacy_class(const Partition& type, int d) {
    if (sum_of(type) != d) throw ArgumentError("cycle type must sum to the degree");
    std::vector<Permutation> out;
    Permutation p = identity_permutation(d);
    // Degrees stay tiny (d <= 7), so filtering all of S_d is fine.
    std::sort(p.begin(), p.end());
    do {
        if (conjugacy_type(p) == type) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace hurwitz
