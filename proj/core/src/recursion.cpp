#include "hurwitz/recursion.hpp"

#include <functional>
#include <map>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

// All ways to split a multiset into `blocks` distinguished multisets.
void distribute_multiset(const Multiset& items, int blocks,
                         const std::function<void(const std::vector<Multiset>&)>& fn) {
    if (blocks == 0) {
        if (items.empty()) fn({});
        return;
    }
    std::vector<std::pair<int, int>> groups;
    for (int x : sorted_desc(items)) {
        if (!groups.empty() && groups.back().first == x)
            ++groups.back().second;
        else
            groups.emplace_back(x, 1);
    }
    std::vector<Multiset> parts(static_cast<size_t>(blocks));
    std::function<void(size_t)> rec_group = [&](size_t gi) {
        if (gi == groups.size()) {
            fn(parts);
            return;
        }
        auto [value, mult] = groups[gi];
        // counts per block summing to mult
        std::vector<int> counts(static_cast<size_t>(blocks), 0);
        std::function<void(int, int)> rec_counts = [&](int block, int rest) {
            if (block == blocks - 1) {
                counts[static_cast<size_t>(block)] = rest;
                for (int bl = 0; bl < blocks; ++bl)
                    for (int c = 0; c < counts[static_cast<size_t>(bl)]; ++c)
                        parts[static_cast<size_t>(bl)].push_back(value);
                rec_group(gi + 1);
                for (int bl = 0; bl < blocks; ++bl)
                    parts[static_cast<size_t>(bl)].resize(parts[static_cast<size_t>(bl)].size() -
                                                          static_cast<size_t>(counts[static_cast<size_t>(bl)]));
                return;
            }
            for (int c = 0; c <= rest; ++c) {
                counts[static_cast<size_t>(block)] = c;
                rec_counts(block + 1, rest - c);
            }
        };
        rec_counts(0, mult);
    };
    rec_group(0);
}

// Set partitions of {0, ..., n-1}; blocks are canonically ordered by their
// smallest element.
void set_partitions(int n, const std::function<void(const std::vector<std::vector<int>>&)>& fn) {
    std::vector<std::vector<int>> blocks;
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            fn(blocks);
            return;
        }
        size_t existing = blocks.size();  // recursion below grows and shrinks the vector
        for (size_t bi = 0; bi < existing; ++bi) {
            blocks[bi].push_back(i);
            rec(i + 1);
            blocks[bi].pop_back();
        }
        blocks.push_back({i});
        rec(i + 1);
        blocks.pop_back();
    };
    rec(0);
}

int multiplicity_of(const Multiset& ms, int value) {
    int c = 0;
    for (int x : ms) c += (x == value);
    return c;
}

// Number of ways to pick the cut-edge ends inside the component's negative
// ends: product over weights of C(#nu + #gamma, #gamma).
Integer designation_count(const Multiset& nu_i, const Multiset& gamma_i) {
    Integer count(1);
    Multiset distinct = gamma_i;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int u : distinct) {
        int t = multiplicity_of(gamma_i, u);
        int a = multiplicity_of(nu_i, u);
        count *= binomial(a + t, t);
    }
    return count;
}

Rational block_unnormalisation(const TypedLambda& lambda) {
    long n_strict = 0, n_mono = 0;
    for (const auto& tp : lambda) {
        if (tp.kind == VertexKind::Strict) ++n_strict;
        if (tp.kind == VertexKind::Monotone) ++n_mono;
    }
    return Rational(factorial(n_strict) * factorial(n_mono));
}

}  // namespace

Rational typed_recursion_rhs(int g, const Multiset& mu, const Multiset& nu, const TypedLambda& lambda) {
    if (lambda.empty()) throw ArgumentError("recursion needs at least one inner vertex");
    int k = static_cast<int>(lambda.size());
    const TypedPart last = lambda.back();
    TypedLambda prefix(lambda.begin(), lambda.end() - 1);

    int n_ends = static_cast<int>(mu.size() + nu.size());
    int b = 2 * g - 2 + n_ends;
    {
        int total = 0;
        for (const auto& tp : lambda) total += tp.part;
        if (total != b) throw ArgumentError("vertex data must sum to 2g-2+n");
    }

    Rational total(0);

    // nu' = out-ends kept at the removed vertex w (nonempty by balancing),
    // kappa = in-ends attached directly to w.
    for (const auto& [nu_prime, nu_rest] : submultisets(sorted_desc(nu))) {
        if (nu_prime.empty()) continue;
        for (const auto& [kappa, mu_rest] : submultisets(sorted_desc(mu))) {
            set_partitions(k - 1, [&](const std::vector<std::vector<int>>& blocks) {
                int m = static_cast<int>(blocks.size());
                if (m == 0 && !mu_rest.empty()) return;  // leftover in-ends need components
                std::vector<TypedLambda> sub_lambda(static_cast<size_t>(m));
                for (int i = 0; i < m; ++i)
                    for (int pos : blocks[static_cast<size_t>(i)])
                        sub_lambda[static_cast<size_t>(i)].push_back(prefix[static_cast<size_t>(pos)]);

                distribute_multiset(mu_rest, m, [&](const std::vector<Multiset>& mu_parts) {
                    for (const auto& mp : mu_parts)
                        if (mp.empty()) return;
                    distribute_multiset(nu_rest, m, [&](const std::vector<Multiset>& nu_parts) {
                        // Each component sheds a nonempty positive flow into w.
                        std::vector<int> gamma_total(static_cast<size_t>(m));
                        for (int i = 0; i < m; ++i) {
                            int flow = sum_of(mu_parts[static_cast<size_t>(i)]) - sum_of(nu_parts[static_cast<size_t>(i)]);
                            if (flow < 1) return;
                            gamma_total[static_cast<size_t>(i)] = flow;
                        }
                        std::vector<std::vector<Multiset>> gamma_choices(static_cast<size_t>(m));
                        for (int i = 0; i < m; ++i)
                            gamma_choices[static_cast<size_t>(i)] = partitions_of(gamma_total[static_cast<size_t>(i)]);

                        std::vector<const Multiset*> gamma(static_cast<size_t>(m));
                        std::function<void(int, Rational)> rec = [&](int i, Rational acc) {
                            if (i == m) {
                                // The removed vertex sees the cut edges, its own
                                // in-ends and its out-ends.
                                Multiset w_weights = nu_prime;
                                w_weights.insert(w_weights.end(), kappa.begin(), kappa.end());
                                int gamma_len = 0;
                                for (int j = 0; j < m; ++j) {
                                    const Multiset& gj = *gamma[static_cast<size_t>(j)];
                                    w_weights.insert(w_weights.end(), gj.begin(), gj.end());
                                    gamma_len += static_cast<int>(gj.size());
                                }
                                int val_w = static_cast<int>(nu_prime.size() + kappa.size()) + gamma_len;
                                int twice_gw = last.part + 2 - val_w;
                                if (twice_gw < 0 || twice_gw % 2 != 0) return;
                                Rational term = acc * vertex_multiplicity(w_weights, twice_gw / 2);
                                if (last.kind == VertexKind::Strict && val_w % 2 == 0) term = -term;
                                term /= Rational(multiset_aut(nu_prime) * multiset_aut(kappa));
                                total += term;
                                return;
                            }
                            const auto& mu_i = mu_parts[static_cast<size_t>(i)];
                            const auto& nu_i = nu_parts[static_cast<size_t>(i)];
                            const auto& lam_i = sub_lambda[static_cast<size_t>(i)];
                            int b_i = 0;
                            for (const auto& tp : lam_i) b_i += tp.part;
                            for (const Multiset& gi : gamma_choices[static_cast<size_t>(i)]) {
                                int n_i = static_cast<int>(mu_i.size() + nu_i.size() + gi.size());
                                int twice_gi = b_i + 2 - n_i;
                                if (twice_gi < 0 || twice_gi % 2 != 0) continue;
                                std::vector<int> entries = mu_i;
                                for (int w : nu_i) entries.push_back(-w);
                                for (int w : gi) entries.push_back(-w);
                                Rational piece = typed_slice(twice_gi / 2, Profile(entries), lam_i, true);
                                if (piece.is_zero()) continue;
                                piece *= block_unnormalisation(lam_i);
                                piece *= Rational(designation_count(nu_i, gi));
                                for (int w : gi) piece *= Rational(w);
                                gamma[static_cast<size_t>(i)] = &gi;
                                rec(i + 1, acc * piece);
                            }
                        };
                        rec(0, Rational(1));
                    });
                });
            });
        }
    }

    long n_strict = 0, n_mono = 0;
    for (const auto& tp : lambda) {
        if (tp.kind == VertexKind::Strict) ++n_strict;
        if (tp.kind == VertexKind::Monotone) ++n_mono;
    }
    return total / Rational(factorial(n_strict) * factorial(n_mono));
}

Rational recursion_rhs(int g, const Multiset& mu, const Multiset& nu, const Composition& lambda,
                       const Variant& variant) {
    VertexKind kind;
    switch (variant.kind) {
        case Variant::Kind::Monotone:
            kind = VertexKind::Monotone;
            break;
        case Variant::Kind::Strict:
            kind = VertexKind::Strict;
            break;
        default:
            throw ArgumentError("recursion is stated for the monotone and strict regimes");
    }
    return typed_recursion_rhs(g, mu, nu, uniform_lambda(lambda, kind));
}

Rational mixed_recursion_rhs(int g, const Multiset& mu, const Multiset& nu, int p, int q,
                             const Composition& lambda, CutType cut) {
    TypedLambda typed = mixed_lambda(lambda, p, q);
    if (typed.empty()) throw ArgumentError("recursion needs at least one inner vertex");
    VertexKind want;
    switch (cut) {
        case CutType::StrictVertex:
            want = VertexKind::Strict;
            break;
        case CutType::WeakVertex:
            want = VertexKind::Monotone;
            break;
        case CutType::UsualVertex:
            want = VertexKind::Plain;
            break;
    }
    bool block_nonempty = false;
    for (const auto& tp : typed) block_nonempty |= (tp.kind == want);
    if (!block_nonempty) throw ArgumentError("requested cut block is empty");
    if (typed.back().kind != want)
        throw ArgumentError("cut type must match the final vertex of the declared decomposition");
    return typed_recursion_rhs(g, mu, nu, typed);
}

}  // namespace hurwitz
