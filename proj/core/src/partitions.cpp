#include "hurwitz/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "hurwitz/errors.hpp"

namespace hurwitz {

Multiset sorted_desc(std::vector<int> v) {
    std::sort(v.begin(), v.end(), std::greater<int>());
    return v;
}

int sum_of(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

Profile::Profile(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.size() < 2) throw ArgumentError("profile needs at least two entries");
    long sum = 0;
    for (int e : entries_) {
        if (e == 0) throw ArgumentError("profile entries must be nonzero");
        sum += e;
    }
    if (sum != 0) throw ArgumentError("profile entries must sum to zero");
}

Multiset Profile::positive_part() const {
    std::vector<int> v;
    for (int e : entries_)
        if (e > 0) v.push_back(e);
    return sorted_desc(std::move(v));
}

Multiset Profile::negative_part() const {
    std::vector<int> v;
    for (int e : entries_)
        if (e < 0) v.push_back(-e);
    return sorted_desc(std::move(v));
}

long Profile::degree() const {
    long d = 0;
    for (int e : entries_)
        if (e > 0) d += e;
    return d;
}

std::vector<Composition> ordered_partitions(int b) {
    if (b <= 0) throw ArgumentError("compositions need b >= 1");
    std::vector<Composition> out;
    Composition cur;
    std::function<void(int)> rec = [&](int rest) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = 1; p <= rest; ++p) {
            cur.push_back(p);
            rec(rest - p);
            cur.pop_back();
        }
    };
    rec(b);
    return out;
}

std::vector<Composition> orderings_of(const Partition& parts) {
    Composition v = parts;
    std::sort(v.begin(), v.end());
    std::vector<Composition> out;
    do {
        out.push_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

Integer multiset_aut(const Multiset& t) {
    Multiset v = sorted_desc(t);
    Integer aut(1);
    size_t i = 0;
    while (i < v.size()) {
        size_t j = i;
        while (j < v.size() && v[j] == v[i]) ++j;
        aut *= factorial(static_cast<long>(j - i));
        i = j;
    }
    return aut;
}

std::vector<std::pair<Multiset, Multiset>> submultisets(const Multiset& t) {
    // Group by distinct value, choose a count 0..mult for each.
    Multiset v = sorted_desc(t);
    std::vector<std::pair<int, int>> groups;  // (value, multiplicity)
    for (int x : v) {
        if (!groups.empty() && groups.back().first == x)
            ++groups.back().second;
        else
            groups.emplace_back(x, 1);
    }
    std::vector<std::pair<Multiset, Multiset>> out;
    Multiset sub, rest;
    std::function<void(size_t)> rec = [&](size_t gi) {
        if (gi == groups.size()) {
            out.emplace_back(sub, rest);
            return;
        }
        auto [value, mult] = groups[gi];
        for (int take = 0; take <= mult; ++take) {
            for (int k = 0; k < take; ++k) sub.push_back(value);
            for (int k = take; k < mult; ++k) rest.push_back(value);
            rec(gi + 1);
            sub.resize(sub.size() - static_cast<size_t>(take));
            rest.resize(rest.size() - static_cast<size_t>(mult - take));
        }
    };
    rec(0);
    return out;
}

std::vector<Multiset> partitions_of(int total, int max_parts, int max_part) {
    if (total < 1) throw ArgumentError("partitions need total >= 1");
    if (max_parts <= 0) max_parts = total;
    if (max_part <= 0) max_part = total;
    std::vector<Multiset> out;
    Multiset cur;
    std::function<void(int, int)> rec = [&](int rest, int cap) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) >= max_parts) return;
        for (int p = std::min(rest, cap); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(total, max_part);
    return out;
}

std::vector<Composition> compositions_of(int total, int length) {
    std::vector<Composition> out;
    if (length < 1 || total < length) return out;
    Composition cur;
    std::function<void(int, int)> rec = [&](int rest, int slots) {
        if (slots == 1) {
            cur.push_back(rest);
            out.push_back(cur);
            cur.pop_back();
            return;
        }
        for (int p = 1; p <= rest - (slots - 1); ++p) {
            cur.push_back(p);
            rec(rest - p, slots - 1);
            cur.pop_back();
        }
    };
    rec(total, length);
    return out;
}

}  // namespace hurwitz
