#ifndef HURWITZ_RESULT_CACHE_HPP
#define HURWITZ_RESULT_CACHE_HPP

#include <optional>
#include <string>
#include <vector>

#include "hurwitz/factorization_count.hpp"

namespace hurwitz {

// One computed invariant, as stored on disk and printed by the CLI. The value
// string always round-trips to the identical exact fraction.
struct ResultRecord {
    std::string kind;         // total | slice | mixed | oracle | ...
    int g = 0;
    std::vector<int> x;
    std::vector<int> lambda;
    bool lambda_ordered = true;
    std::string variant;      // plain | monotone | strict | mixed
    int p = 0;
    int q = 0;
    bool connected = true;
    std::string value;        // exact fraction "p/q" or integer string
    std::string engine;       // oracle | tropical | formula
    double timing_ms = 0.0;
};

std::string variant_name(const Variant& v);

// Canonical cache key: positive entries sorted descending, negative entries
// sorted descending, lambda order preserved, variant and connectivity tagged.
std::string canonical_query_key(const std::string& kind, int g, const std::vector<int>& x,
                                const std::vector<int>& lambda, bool lambda_ordered, const Variant& variant,
                                bool connected);

// Append-only JSON-lines cache in a directory; a missing or unwritable
// directory degrades to warnings, never to failures. Corrupt lines are
// skipped with a warning.
class ResultCache {
public:
    explicit ResultCache(std::string directory);

    bool enabled() const { return !directory_.empty(); }
    std::optional<ResultRecord> lookup(const std::string& key) const;
    void store(const std::string& key, const ResultRecord& record) const;

private:
    std::string directory_;
    std::string file_path() const;
};

}  // namespace hurwitz

#endif
