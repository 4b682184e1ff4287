// Acceptance suite: one line per criterion, exact checks only. Exits nonzero
// if any criterion fails. The golden CSV path is passed by ctest; without it
// the built-in golden table is used.

#include <chrono>
#include <cstring>
#include <iostream>
#include <string>

#include "hurwitz/verification.hpp"

using namespace hurwitz;

namespace {

struct Criterion {
    std::string label;
    std::function<bool(const CheckSink&)> run;
};

}  // namespace

int main(int argc, char** argv) {
    std::string golden_csv;
    std::uint64_t seed = 20240901;
    for (int i = 1; i + 1 < argc; i += 2) {
        if (std::strcmp(argv[i], "--golden") == 0) golden_csv = argv[i + 1];
        if (std::strcmp(argv[i], "--seed") == 0) seed = std::stoull(argv[i + 1]);
    }

    std::vector<Criterion> criteria = {
        {"1. oracle equivalence grid (d<=5, n<=4, g<=2, both regimes, both connectivities)",
         [](const CheckSink& s) { return verify_oracle_grid(5, 2, 4, s); }},
        {"2. golden values (hand-derived, oracle-re-derivable)",
         [&](const CheckSink& s) { return verify_golden(golden_csv, s); }},
        {"3. series golden values and dual-route one-point coefficients",
         [](const CheckSink& s) { return verify_series(s); }},
        {"4. piecewise polynomiality: chamber fits, degree <= 4g-3+n, exact holdout",
         [&](const CheckSink& s) { return verify_polynomiality(seed, s); }},
        {"5. wall-crossing identity (genus 0 four ends; two-end wall documented skip)",
         [&](const CheckSink& s) { return verify_wallcross(seed, s); }},
        {"6. cut recursion equals enumerated slices (g<=1, d<=4, all ordered data)",
         [](const CheckSink& s) { return verify_recursion(4, s); }},
        {"7. mixed regime: totals vs oracle and the three cutting recursions (d<=4)",
         [](const CheckSink& s) { return verify_mixed(4, s); }},
        {"8. determinism: seeded runs produce byte-identical values",
         [&](const CheckSink& s) { return verify_determinism(seed, s); }},
    };

    bool all_ok = true;
    for (const Criterion& criterion : criteria) {
        CheckSink sink = [](const CheckResult& r) {
            std::cout << "    " << (r.skipped ? "[skip] " : (r.passed ? "[ok]   " : "[FAIL] ")) << r.name;
            if (!r.detail.empty()) std::cout << " -- " << r.detail;
            std::cout << "\n";
        };
        auto t0 = std::chrono::steady_clock::now();
        bool ok = criterion.run(sink);
        auto t1 = std::chrono::steady_clock::now();
        double secs = std::chrono::duration<double>(t1 - t0).count();
        std::cout << (ok ? "PASS " : "FAIL ") << criterion.label << " (" << secs << " s)\n";
        all_ok &= ok;
    }
    std::cout << (all_ok ? "acceptance: all criteria passed\n" : "acceptance: FAILURES above\n");
    return all_ok ? 0 : 1;
}
