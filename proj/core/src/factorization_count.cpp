#include "hurwitz/factorization_count.hpp"

#include <map>
#include <mutex>
#include <string>
#include <tuple>

#include "hurwitz/errors.hpp"
#include "hurwitz/permutations.hpp"

namespace hurwitz {

namespace {

struct Search {
    int d = 0;
    int b = 0;
    Variant variant;
    bool connected = false;
    Partition target;
    int target_cycles = 0;

    Permutation cur;      // tau_i ... tau_1 sigma_1
    Permutation cur_inv;  // inverse of cur, kept in step for O(1) transposition updates
    std::vector<std::pair<int, int>> taus;
    const Permutation* sigma1 = nullptr;
    Integer hits = 0;

    // true when position i (1-based) must respect a bound against position i-1
    bool allows(int i, int s_prev, int s) const {
        switch (variant.kind) {
            case Variant::Kind::Plain:
                return true;
            case Variant::Kind::Monotone:
                return i < 2 || s >= s_prev;
            case Variant::Kind::Strict:
                return i < 2 || s > s_prev;
            case Variant::Kind::Mixed:
                if (i >= 2 && i <= variant.p) return s > s_prev;
                if (i >= variant.p + 2 && i <= variant.p + variant.q) return s >= s_prev;
                return true;
        }
        return true;
    }

    void apply_transposition(int r, int s) {
        // cur <- (r s) o cur : swap the preimages of r and s.
        int a = cur_inv[static_cast<size_t>(r)];
        int b2 = cur_inv[static_cast<size_t>(s)];
        std::swap(cur[static_cast<size_t>(a)], cur[static_cast<size_t>(b2)]);
        std::swap(cur_inv[static_cast<size_t>(r)], cur_inv[static_cast<size_t>(s)]);
    }

    bool leaf_accept() {
        if (conjugacy_type(cur) != target) return false;
        if (!connected) return true;
        std::vector<Permutation> gens;
        gens.reserve(taus.size() + 1);
        gens.push_back(*sigma1);
        for (auto [r, s] : taus) {
            Permutation t = identity_permutation(d);
            std::swap(t[static_cast<size_t>(r)], t[static_cast<size_t>(s)]);
            gens.push_back(std::move(t));
        }
        return is_transitive(gens, d);
    }

    void dfs(int i, int s_prev) {
        if (i > b) {
            if (leaf_accept()) ++hits;
            return;
        }
        int remaining_after = b - i;
        for (int s = 0; s < d; ++s) {
            for (int r = 0; r < s; ++r) {
                if (!allows(i, s_prev, s)) continue;
                apply_transposition(r, s);
                int gap = cycle_count(cur) - target_cycles;
                if (gap < 0) gap = -gap;
                if (remaining_after >= gap && (remaining_after - gap) % 2 == 0) {
                    taus.emplace_back(r, s);
                    dfs(i + 1, s);
                    taus.pop_back();
                }
                apply_transposition(r, s);  // undo
            }
        }
    }
};

std::map<std::tuple<int, Multiset, Multiset, int, Variant, bool>, Rational> memo;
std::mutex memo_mutex;

}  // namespace

Rational count_factorizations(const FactorizationQuery& query) {
    Profile profile(query.profile);
    int n = profile.size();
    int d = static_cast<int>(profile.degree());
    int b = 2 * query.genus - 2 + n;
    if (query.genus < 0 || b < 0) throw ArgumentError("factorization query needs 2g-2+n >= 0");
    if (d > query.degree_limit)
        throw ResourceError("degree " + std::to_string(d) + " exceeds the configured limit of " +
                            std::to_string(query.degree_limit));
    if (query.variant.kind == Variant::Kind::Mixed &&
        (query.variant.p < 0 || query.variant.q < 0 || query.variant.p + query.variant.q > b))
        throw ArgumentError("mixed variant needs p, q >= 0 and p+q <= b");

    Multiset plus = profile.positive_part();
    Multiset minus = profile.negative_part();
    auto key = std::make_tuple(query.genus, plus, minus, b, query.variant, query.connected);
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }

    Integer total = 0;
    for (const Permutation& sigma1 : conjugacy_class(plus, d)) {
        Search search;
        search.d = d;
        search.b = b;
        search.variant = query.variant;
        search.connected = query.connected;
        search.target = minus;
        search.target_cycles = static_cast<int>(minus.size());
        search.cur = sigma1;
        search.cur_inv.assign(static_cast<size_t>(d), 0);
        for (int i = 0; i < d; ++i) search.cur_inv[static_cast<size_t>(sigma1[static_cast<size_t>(i)])] = i;
        search.sigma1 = &sigma1;
        int gap = cycle_count(sigma1) - search.target_cycles;
        if (gap < 0) gap = -gap;
        if (b >= gap && (b - gap) % 2 == 0) search.dfs(1, -1);
        total += search.hits;
    }

    Rational value(total, factorial(d));
    std::lock_guard<std::mutex> lock(memo_mutex);
    memo.emplace(std::move(key), value);
    return value;
}

}  // namespace hurwitz
