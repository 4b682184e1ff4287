#include "hurwitz/cover.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>

#include "hurwitz/errors.hpp"

namespace hurwitz {

int Cover::valence(int vertex) const {
    int val = 0;
    for (const auto& e : edges) val += (e.tail == vertex) + (e.head == vertex);
    for (const auto& e : in_ends) val += (e.vertex == vertex);
    for (const auto& e : out_ends) val += (e.vertex == vertex);
    return val;
}

int Cover::lambda_part(int vertex) const {
    return valence(vertex) + 2 * vertex_genus[static_cast<size_t>(vertex)] - 2;
}

Multiset Cover::adjacent_weights(int vertex) const {
    std::vector<int> w;
    for (const auto& e : edges) {
        if (e.tail == vertex) w.push_back(e.weight);
        if (e.head == vertex) w.push_back(e.weight);
    }
    for (const auto& e : in_ends)
        if (e.vertex == vertex) w.push_back(e.weight);
    for (const auto& e : out_ends)
        if (e.vertex == vertex) w.push_back(e.weight);
    return sorted_desc(std::move(w));
}

bool Cover::is_connected() const {
    size_t nv = vertex_genus.size();
    if (nv == 0) return straights.size() == 1;
    if (!straights.empty()) return false;
    std::vector<int> parent(nv);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
        return x;
    };
    for (const auto& e : edges) parent[static_cast<size_t>(find(e.tail))] = find(e.head);
    int root = find(0);
    for (size_t i = 1; i < nv; ++i)
        if (find(static_cast<int>(i)) != root) return false;
    return true;
}

Integer Cover::automorphism_order() const {
    Integer aut(1);
    auto count_groups = [&aut](auto items) {
        std::sort(items.begin(), items.end());
        size_t i = 0;
        while (i < items.size()) {
            size_t j = i;
            while (j < items.size() && items[j] == items[i]) ++j;
            aut *= factorial(static_cast<long>(j - i));
            i = j;
        }
    };
    count_groups(edges);
    count_groups(in_ends);
    count_groups(out_ends);
    count_groups(straights);
    for (int w : straights) aut *= w;
    return aut;
}

void Cover::write_text(std::ostream& os) const {
    for (size_t i = 0; i < vertex_genus.size(); ++i)
        os << "vertex " << i << " genus " << vertex_genus[i] << "\n";
    for (const auto& e : edges) os << "edge " << e.tail << " " << e.head << " weight " << e.weight << "\n";
    for (const auto& e : in_ends) os << "end in vertex " << e.vertex << " weight " << e.weight << "\n";
    for (const auto& e : out_ends) os << "end out vertex " << e.vertex << " weight " << e.weight << "\n";
    for (int w : straights) os << "straight weight " << w << "\n";
}

namespace {

// Canonical submultiset enumeration over a sorted vector of items.
template <typename T>
void for_each_submultiset(const std::vector<T>& items, const std::function<void(const std::vector<T>&, const std::vector<T>&)>& fn) {
    std::vector<std::pair<T, int>> groups;
    for (const T& x : items) {
        if (!groups.empty() && groups.back().first == x)
            ++groups.back().second;
        else
            groups.emplace_back(x, 1);
    }
    std::vector<T> sub, rest;
    std::function<void(size_t)> rec = [&](size_t gi) {
        if (gi == groups.size()) {
            fn(sub, rest);
            return;
        }
        const auto& [value, mult] = groups[gi];
        for (int take = 0; take <= mult; ++take) {
            for (int k = 0; k < take; ++k) sub.push_back(value);
            for (int k = take; k < mult; ++k) rest.push_back(value);
            rec(gi + 1);
            sub.resize(sub.size() - static_cast<size_t>(take));
            rest.resize(rest.size() - static_cast<size_t>(mult - take));
        }
    };
    rec(0);
}

struct Sweep {
    Composition lambda;
    bool allow_disconnected = false;
    const std::function<void(const Cover&)>* emit = nullptr;

    std::vector<std::pair<int, int>> open;  // (source vertex, weight), kept sorted
    Multiset in_left;                       // unattached in-end weights, sorted desc
    Multiset out_left;                      // unmatched out-end weights, sorted desc
    Cover cover;

    // Each later vertex can absorb at most lambda_j + 1 incoming items.
    std::vector<int> consume_capacity_after;  // suffix sums of (lambda_j + 1)

    void run() {
        int l = static_cast<int>(lambda.size());
        consume_capacity_after.assign(static_cast<size_t>(l) + 1, 0);
        for (int j = l - 1; j >= 0; --j)
            consume_capacity_after[static_cast<size_t>(j)] =
                consume_capacity_after[static_cast<size_t>(j) + 1] + lambda[static_cast<size_t>(j)] + 1;
        vertex(0);
    }

    void finish() {
        if (!open.empty()) return;
        if (in_left != out_left) return;  // only end-to-end matches may remain
        cover.straights = in_left;
        if (allow_disconnected || cover.is_connected()) (*emit)(cover);
        cover.straights.clear();
    }

    void vertex(int i) {
        if (i == static_cast<int>(lambda.size())) {
            finish();
            return;
        }
        // Dead branch: open edges (and, for connected covers, in-ends) must all
        // be absorbed by the remaining vertices.
        int pending = static_cast<int>(open.size());
        if (!allow_disconnected) pending += static_cast<int>(in_left.size());
        if (pending > consume_capacity_after[static_cast<size_t>(i)]) return;

        int lam = lambda[static_cast<size_t>(i)];
        bool last = i + 1 == static_cast<int>(lambda.size());
        for_each_submultiset<std::pair<int, int>>(open, [&](const auto& consumed, const auto& open_rest) {
            if (last && !open_rest.empty()) return;  // nothing may dangle past the last vertex
            for_each_submultiset<int>(in_left, [&](const Multiset& ins, const Multiset& ins_rest) {
                int cin = static_cast<int>(consumed.size() + ins.size());
                if (cin > lam + 1) return;
                long flow = 0;
                for (const auto& [src, w] : consumed) flow += w;
                for (int w : ins) flow += w;
                if (flow < 1) return;
                for (int cout = 1; cout <= lam + 2 - cin; ++cout) {
                    if ((lam + 2 - cin - cout) % 2 != 0) continue;
                    int genus = (lam + 2 - cin - cout) / 2;
                    if (flow < cout) continue;
                    for (const Multiset& emitted : partitions_of(static_cast<int>(flow), cout, 0)) {
                        if (static_cast<int>(emitted.size()) != cout) continue;
                        emit_splits(i, genus, consumed, open_rest, ins, ins_rest, emitted);
                    }
                }
            });
        });
    }

    // Split the emitted weight multiset into out-ends (must be available) and
    // new open edges, then recurse into the next vertex.
    void emit_splits(int i, int genus, const std::vector<std::pair<int, int>>& consumed,
                     const std::vector<std::pair<int, int>>& open_rest, const Multiset& ins,
                     const Multiset& ins_rest, const Multiset& emitted) {
        for_each_submultiset<int>(emitted, [&](const Multiset& as_out, const Multiset& as_edges) {
            if (!is_submultiset(as_out, out_left)) return;
            bool last = i + 1 == static_cast<int>(lambda.size());
            if (last && !as_edges.empty()) return;

            auto saved_open = open;
            auto saved_in = in_left;
            auto saved_out = out_left;
            size_t saved_edges = cover.edges.size();
            size_t saved_inends = cover.in_ends.size();
            size_t saved_outends = cover.out_ends.size();

            cover.vertex_genus.push_back(genus);
            for (const auto& [src, w] : consumed) cover.edges.push_back({src, i, w});
            for (int w : ins) cover.in_ends.push_back({i, w});
            for (int w : as_out) cover.out_ends.push_back({i, w});
            open = open_rest;
            for (int w : as_edges) open.emplace_back(i, w);
            std::sort(open.begin(), open.end());
            in_left = ins_rest;
            out_left = multiset_minus(out_left, as_out);

            vertex(i + 1);

            cover.vertex_genus.pop_back();
            cover.edges.resize(saved_edges);
            cover.in_ends.resize(saved_inends);
            cover.out_ends.resize(saved_outends);
            open = std::move(saved_open);
            in_left = std::move(saved_in);
            out_left = std::move(saved_out);
        });
    }

    static bool is_submultiset(const Multiset& sub, const Multiset& super) {
        auto it = super.begin();
        for (int x : sub) {
            it = std::find(it, super.end(), x);
            if (it == super.end()) return false;
            ++it;
        }
        return true;
    }

    static Multiset multiset_minus(const Multiset& a, const Multiset& b) {
        Multiset out = a;
        for (int x : b) {
            auto it = std::find(out.begin(), out.end(), x);
            out.erase(it);
        }
        return out;
    }
};

}  // namespace

void enumerate_covers(const Multiset& plus, const Multiset& minus, const Composition& lambda,
                      bool allow_disconnected, const std::function<void(const Cover&)>& emit) {
    if (sum_of(plus) != sum_of(minus)) throw ArgumentError("profile parts must balance");
    for (int p : lambda)
        if (p < 1) throw ArgumentError("vertex data parts must be positive");
    Sweep sweep;
    sweep.lambda = lambda;
    sweep.allow_disconnected = allow_disconnected;
    sweep.emit = &emit;
    sweep.in_left = sorted_desc(plus);
    sweep.out_left = sorted_desc(minus);
    sweep.run();
}

std::vector<Cover> collect_covers(const Profile& x, const Composition& lambda, bool connected) {
    std::vector<Cover> out;
    enumerate_covers(x.positive_part(), x.negative_part(), lambda, !connected, [&](const Cover& c) {
        if (!connected || c.is_connected()) out.push_back(c);
    });
    return out;
}

}  // namespace hurwitz
