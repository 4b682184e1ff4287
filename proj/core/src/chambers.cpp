#include "hurwitz/chambers.hpp"

#include <string>

#include "hurwitz/errors.hpp"

namespace hurwitz {

ChamberSignature chamber_signature(const std::vector<int>& entries) {
    int n = static_cast<int>(entries.size());
    if (n < 2) throw ArgumentError("signature needs at least two coordinates");
    ChamberSignature sig;
    sig.n = n;
    unsigned full = (1u << n) - 1;
    for (unsigned mask = 1; mask < full; ++mask) {
        if (!(mask & 1u)) continue;  // canonical subsets contain index 0
        long sum = 0;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) sum += entries[static_cast<size_t>(i)];
        if (sum == 0) {
            std::vector<int> subset;
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) subset.push_back(i + 1);
            std::string names;
            for (int i : subset) names += (names.empty() ? "" : ",") + std::to_string(i);
            throw OnWallError("point lies on the wall x_{" + names + "} = 0", subset);
        }
        sig.signs[mask] = sum > 0 ? 1 : -1;
    }
    return sig;
}

ChamberSampler::ChamberSampler(ChamberSignature target, int box, std::uint64_t seed)
    : target_(std::move(target)), box_(box), rng_(seed) {
    if (box_ < 2) throw ArgumentError("sampling box too small");
}

std::vector<int> ChamberSampler::next() {
    std::uniform_int_distribution<int> dist(-box_, box_);
    for (int attempt = 0; attempt < 200000; ++attempt) {
        std::vector<int> entries(static_cast<size_t>(target_.n));
        long sum = 0;
        bool ok = true;
        for (int i = 0; i + 1 < target_.n; ++i) {
            int v = dist(rng_);
            if (v == 0) {
                ok = false;
                break;
            }
            entries[static_cast<size_t>(i)] = v;
            sum += v;
        }
        if (!ok) continue;
        long lastv = -sum;
        if (lastv == 0 || lastv < -box_ * 4 || lastv > box_ * 4) continue;
        entries[static_cast<size_t>(target_.n - 1)] = static_cast<int>(lastv);
        try {
            if (chamber_signature(entries) == target_) return entries;
        } catch (const OnWallError&) {
            continue;
        }
    }
    throw ResourceError("chamber sampler exhausted its rejection budget");
}

}  // namespace hurwitz
