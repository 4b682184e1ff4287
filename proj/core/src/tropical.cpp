#include "hurwitz/tropical.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <tuple>

#include "hurwitz/errors.hpp"
#include "hurwitz/series.hpp"

namespace hurwitz {

TypedLambda uniform_lambda(const Composition& lambda, VertexKind kind) {
    TypedLambda out;
    out.reserve(lambda.size());
    for (int p : lambda) out.push_back({p, kind});
    return out;
}

TypedLambda mixed_lambda(const Composition& lambda, int p, int q) {
    if (p < 0 || q < 0) throw ArgumentError("mixed decomposition needs p, q >= 0");
    TypedLambda out;
    int acc = 0;
    size_t i = 0;
    for (; i < lambda.size() && acc < p; ++i) {
        out.push_back({lambda[i], VertexKind::Strict});
        acc += lambda[i];
    }
    if (acc != p) throw ArgumentError("lambda has no prefix summing to p");
    acc = 0;
    for (; i < lambda.size() && acc < q; ++i) {
        out.push_back({lambda[i], VertexKind::Monotone});
        acc += lambda[i];
    }
    if (acc != q) throw ArgumentError("lambda has no middle block summing to q");
    for (; i < lambda.size(); ++i) {
        if (lambda[i] != 1) throw ArgumentError("trailing block of a mixed lambda must consist of 1s");
        out.push_back({lambda[i], VertexKind::Plain});
    }
    return out;
}

namespace {

std::map<std::pair<Multiset, int>, Rational> multiplicity_memo;
std::shared_mutex multiplicity_mutex;

Rational slice_normalisation(const TypedLambda& lambda) {
    long n_strict = 0, n_mono = 0;
    for (const auto& tp : lambda) {
        if (tp.kind == VertexKind::Strict) ++n_strict;
        if (tp.kind == VertexKind::Monotone) ++n_mono;
    }
    return Rational(Integer(1), factorial(n_strict) * factorial(n_mono));
}

}  // namespace

Rational vertex_multiplicity(const Multiset& adjacent_weights, int vertex_genus) {
    int lambda_v = static_cast<int>(adjacent_weights.size()) + 2 * vertex_genus - 2;
    if (lambda_v < 1) throw ArgumentError("vertex data must satisfy val + 2g - 2 >= 1");
    Multiset weights(adjacent_weights.size());
    std::transform(adjacent_weights.begin(), adjacent_weights.end(), weights.begin(),
                   [](int w) { return w < 0 ? -w : w; });
    weights = sorted_desc(std::move(weights));

    auto key = std::make_pair(weights, vertex_genus);
    {
        std::shared_lock lock(multiplicity_mutex);
        auto it = multiplicity_memo.find(key);
        if (it != multiplicity_memo.end()) return it->second;
    }

    Rational result(0);
    if (vertex_genus == 0) {
        result = Rational(factorial(lambda_v - 1));
    } else {
        int order = 2 * vertex_genus;
        LaurentSeries s = s_series(order);
        LaurentSeries prod = s.inverse();
        for (int w : weights) prod = prod * s.scaled(w);
        Rational acc(0);
        for (int g1 = 0; g1 <= vertex_genus; ++g1)
            acc += one_point_coefficient(vertex_genus - g1) * prod.coefficient(2 * g1);
        result = Rational(factorial(lambda_v - 1)) * acc;
    }

    std::unique_lock lock(multiplicity_mutex);
    multiplicity_memo.emplace(std::move(key), result);
    return result;
}

Rational vertex_multiplicity(const Multiset& y_plus, const Multiset& y_minus, int vertex_genus) {
    Multiset all = y_plus;
    all.insert(all.end(), y_minus.begin(), y_minus.end());
    return vertex_multiplicity(all, vertex_genus);
}

Integer cover_automorphism_order(const Cover& cover) { return cover.automorphism_order(); }

Rational cover_contribution(const Cover& cover, const TypedLambda& lambda) {
    if (cover.vertex_genus.size() != lambda.size())
        throw ArgumentError("cover and vertex data lengths differ");
    Rational value = slice_normalisation(lambda) / Rational(cover.automorphism_order());
    for (size_t i = 0; i < lambda.size(); ++i) {
        int v = static_cast<int>(i);
        value *= vertex_multiplicity(cover.adjacent_weights(v), cover.vertex_genus[i]);
        if (lambda[i].kind == VertexKind::Strict && cover.valence(v) % 2 == 0) value = -value;
    }
    for (const auto& e : cover.edges) value *= Rational(e.weight);
    return value;
}

Rational typed_slice(int g, const Profile& x, const TypedLambda& lambda, bool connected) {
    int b = 2 * g - 2 + x.size();
    int total = 0;
    for (const auto& tp : lambda) total += tp.part;
    if (total != b) throw ArgumentError("vertex data must sum to 2g-2+n");

    static std::map<std::tuple<Multiset, Multiset, TypedLambda, bool>, Rational> memo;
    static std::shared_mutex memo_mutex;
    auto key = std::make_tuple(x.positive_part(), x.negative_part(), lambda, connected);
    {
        std::shared_lock lock(memo_mutex);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }

    Composition parts;
    parts.reserve(lambda.size());
    for (const auto& tp : lambda) parts.push_back(tp.part);

    Rational sum(0);
    enumerate_covers(x.positive_part(), x.negative_part(), parts, !connected,
                     [&](const Cover& c) { sum += cover_contribution(c, lambda); });

    std::unique_lock lock(memo_mutex);
    memo.emplace(std::move(key), sum);
    return sum;
}

Rational vec_h(int g, const Profile& x, const Composition& lambda, const Variant& variant, bool connected) {
    switch (variant.kind) {
        case Variant::Kind::Monotone:
            return typed_slice(g, x, uniform_lambda(lambda, VertexKind::Monotone), connected);
        case Variant::Kind::Strict:
            return typed_slice(g, x, uniform_lambda(lambda, VertexKind::Strict), connected);
        case Variant::Kind::Plain: {
            for (int p : lambda)
                if (p != 1) throw ArgumentError("plain slices exist only for all-1 vertex data");
            return typed_slice(g, x, uniform_lambda(lambda, VertexKind::Plain), connected);
        }
        case Variant::Kind::Mixed:
            return mixed_slice(g, x, variant.p, variant.q, lambda, connected);
    }
    throw ArgumentError("unknown variant");
}

Rational h_slice(int g, const Profile& x, const Partition& lambda, const Variant& variant, bool connected) {
    Rational sum(0);
    for (const Composition& ordered : orderings_of(lambda)) sum += vec_h(g, x, ordered, variant, connected);
    return sum;
}

Rational h_total(int g, const Profile& x, const Variant& variant, bool connected) {
    int b = 2 * g - 2 + x.size();
    if (b < 0) throw ArgumentError("invariant needs 2g-2+n >= 0");
    if (b == 0) {
        Composition empty;
        if (variant.kind == Variant::Kind::Mixed) return mixed_slice(g, x, 0, 0, empty, connected);
        return typed_slice(g, x, TypedLambda{}, connected);
    }
    switch (variant.kind) {
        case Variant::Kind::Monotone:
        case Variant::Kind::Strict: {
            Rational sum(0);
            for (const Composition& lambda : ordered_partitions(b)) sum += vec_h(g, x, lambda, variant, connected);
            return sum;
        }
        case Variant::Kind::Plain: {
            Composition ones(static_cast<size_t>(b), 1);
            return vec_h(g, x, ones, variant, connected);
        }
        case Variant::Kind::Mixed: {
            int p = variant.p, q = variant.q;
            if (p < 0 || q < 0 || p + q > b) throw ArgumentError("mixed variant needs p, q >= 0 and p+q <= b");
            Rational sum(0);
            auto block = [](int total) {
                std::vector<Composition> out;
                if (total == 0)
                    out.emplace_back();
                else
                    out = ordered_partitions(total);
                return out;
            };
            for (const Composition& l1 : block(p)) {
                for (const Composition& l2 : block(q)) {
                    Composition lambda = l1;
                    lambda.insert(lambda.end(), l2.begin(), l2.end());
                    lambda.insert(lambda.end(), static_cast<size_t>(b - p - q), 1);
                    sum += mixed_slice(g, x, p, q, lambda, connected);
                }
            }
            return sum;
        }
    }
    throw ArgumentError("unknown variant");
}

Rational mixed_slice(int g, const Profile& x, int p, int q, const Composition& lambda, bool connected) {
    return typed_slice(g, x, mixed_lambda(lambda, p, q), connected);
}

Rational h_slice_labeled(int g, const Profile& x, const Partition& lambda, const Variant& variant, bool connected) {
    Rational aut(multiset_aut(x.positive_part()) * multiset_aut(x.negative_part()));
    return aut * h_slice(g, x, lambda, variant, connected);
}

}  // namespace hurwitz
