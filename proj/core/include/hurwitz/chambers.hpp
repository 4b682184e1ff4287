#ifndef HURWITZ_CHAMBERS_HPP
#define HURWITZ_CHAMBERS_HPP

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "hurwitz/partitions.hpp"

namespace hurwitz {

// Sign data of a point relative to the resonance arrangement: one sign per
// nonempty proper subset of coordinate indices, canonicalised to the subset
// containing index 0 (the complement carries the opposite sign).
struct ChamberSignature {
    int n = 0;
    std::map<unsigned, int> signs;  // bitmask (bit 0 set, not the full set) -> +1/-1

    bool operator==(const ChamberSignature&) const = default;
};

// Throws OnWallError (naming the subset, 1-based) when some subset sum vanishes.
ChamberSignature chamber_signature(const std::vector<int>& entries);

// Deterministic stream of lattice profiles inside a fixed chamber.
class ChamberSampler {
public:
    ChamberSampler(ChamberSignature target, int box, std::uint64_t seed);

    // Next in-chamber profile (entries sum to zero, none zero). Throws
    // ResourceError after too many consecutive rejections.
    std::vector<int> next();

private:
    ChamberSignature target_;
    int box_;
    std::mt19937_64 rng_;
};

}  // namespace hurwitz

#endif
