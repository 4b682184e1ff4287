// Command-line front end: exact monotone / strictly monotone / mixed double
// Hurwitz numbers via symmetric-group counting and tropical-cover enumeration,
// plus chamber fits, wall-crossing and recursion checks. All values are exact
// fractions; nothing here ever touches floating point except timing metadata.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "hurwitz/cover.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/polynomial.hpp"
#include "hurwitz/recursion.hpp"
#include "hurwitz/result_cache.hpp"
#include "hurwitz/tropical.hpp"
#include "hurwitz/verification.hpp"
#include "hurwitz/wallcross.hpp"

using namespace hurwitz;
using nlohmann::json;

namespace {

constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

struct QueryFlags {
    int g = 0;
    std::vector<int> x;
    std::vector<int> lambda;
    std::string variant = "monotone";
    int p = 0;
    int q = 0;
    bool connected = false;
    bool disconnected = false;
    std::uint64_t seed = 1;
    std::vector<int> wall;
    int dmax = 4;
    std::string cache_dir;
    std::string export_covers;
    std::string golden_file;
    std::string suite = "oracle-vs-tropical";
    std::string cut = "usual";
    int box = 18;
    int oracle_limit = 7;
};

void add_profile_flags(CLI::App* cmd, QueryFlags& fl) {
    cmd->add_option("--g", fl.g, "genus")->required();
    cmd->add_option("--x", fl.x, "profile entries, comma separated, nonzero, summing to zero")
        ->required()
        ->delimiter(',');
    cmd->add_flag("--connected", fl.connected, "count connected covers only");
    cmd->add_flag("--disconnected", fl.disconnected, "count possibly disconnected covers");
}

void add_variant_flags(CLI::App* cmd, QueryFlags& fl) {
    cmd->add_option("--variant", fl.variant, "plain | monotone | strict | mixed")
        ->check(CLI::IsMember({"plain", "monotone", "strict", "mixed"}));
    cmd->add_option("--p", fl.p, "strictly monotone block size (mixed variant)");
    cmd->add_option("--q", fl.q, "weakly monotone block size (mixed variant)");
}

bool resolve_connected(const QueryFlags& fl) {
    if (fl.connected && fl.disconnected) throw ArgumentError("--connected and --disconnected are exclusive");
    if (!fl.connected && !fl.disconnected) throw ArgumentError("choose --connected or --disconnected");
    return fl.connected;
}

Variant resolve_variant(const QueryFlags& fl, int b) {
    if (fl.variant == "plain") return Variant::plain();
    if (fl.variant == "monotone") return Variant::monotone();
    if (fl.variant == "strict") return Variant::strict();
    if (fl.p + fl.q > b) throw ArgumentError("mixed variant needs p+q <= 2g-2+n");
    return Variant::mixed(fl.p, fl.q);
}

std::string cache_directory(const QueryFlags& fl) {
    if (!fl.cache_dir.empty()) return fl.cache_dir;
    if (const char* env = std::getenv("HURWITZ_CACHE_DIR")) return env;
    return "";
}

json record_to_json(const ResultRecord& r) {
    return json{{"kind", r.kind},       {"g", r.g},
                {"x", r.x},             {"lambda", r.lambda},
                {"lambda_ordered", r.lambda_ordered}, {"variant", r.variant},
                {"p", r.p},             {"q", r.q},
                {"connected", r.connected}, {"value", r.value},
                {"engine", r.engine},   {"timing_ms", r.timing_ms}};
}

// Computes (or recalls) one scalar invariant and prints it as JSON.
int run_value_command(const std::string& kind, const QueryFlags& fl, bool lambda_ordered,
                      const std::function<Rational()>& compute, const Variant& variant, bool connected,
                      const std::string& engine) {
    ResultCache cache(cache_directory(fl));
    std::string key = canonical_query_key(kind, fl.g, fl.x, fl.lambda, lambda_ordered, variant, connected);
    if (auto hit = cache.lookup(key)) {
        json out = record_to_json(*hit);
        out["cache"] = "hit";
        std::cout << out.dump() << "\n";
        return 0;
    }
    auto t0 = std::chrono::steady_clock::now();
    Rational value = compute();
    auto t1 = std::chrono::steady_clock::now();

    ResultRecord rec;
    rec.kind = kind;
    rec.g = fl.g;
    rec.x = fl.x;
    rec.lambda = fl.lambda;
    rec.lambda_ordered = lambda_ordered;
    rec.variant = variant_name(variant);
    rec.p = variant.p;
    rec.q = variant.q;
    rec.connected = connected;
    rec.value = value.str();
    rec.engine = engine;
    rec.timing_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    cache.store(key, rec);
    json out = record_to_json(rec);
    out["cache"] = cache.enabled() ? "miss" : "off";
    std::cout << out.dump() << "\n";
    return 0;
}

json polynomial_to_json(const MultivariatePolynomial& poly) {
    json terms = json::array();
    for (const auto& [exps, coeff] : poly.terms()) terms.push_back(json{{"exponents", exps}, {"coefficient", coeff.str()}});
    return terms;
}

std::vector<int> wall_to_indices(const std::vector<int>& wall, int n) {
    if (wall.empty()) throw ArgumentError("--wall must list at least one 1-based profile position");
    std::vector<int> idx;
    for (int i : wall) {
        if (i < 1 || i > n) throw ArgumentError("wall index " + std::to_string(i) + " out of range");
        idx.push_back(i - 1);
    }
    return idx;
}

int run_verify(const QueryFlags& fl) {
    CheckSink sink = [](const CheckResult& r) {
        std::cout << (r.skipped ? "[skip] " : (r.passed ? "[ok]   " : "[FAIL] ")) << r.name;
        if (!r.detail.empty()) std::cout << " -- " << r.detail;
        std::cout << "\n";
    };
    bool ok = false;
    if (fl.suite == "oracle-vs-tropical")
        ok = verify_oracle_grid(fl.dmax, 2, 4, sink);
    else if (fl.suite == "golden")
        ok = verify_golden(fl.golden_file, sink);
    else if (fl.suite == "series")
        ok = verify_series(sink);
    else if (fl.suite == "polynomiality")
        ok = verify_polynomiality(fl.seed, sink);
    else if (fl.suite == "wallcross")
        ok = verify_wallcross(fl.seed, sink);
    else if (fl.suite == "recursion")
        ok = verify_recursion(fl.dmax, sink);
    else if (fl.suite == "mixed")
        ok = verify_mixed(fl.dmax, sink);
    else if (fl.suite == "determinism")
        ok = verify_determinism(fl.seed, sink);
    else if (fl.suite == "all")
        ok = verify_series(sink) && verify_golden(fl.golden_file, sink) && verify_oracle_grid(fl.dmax, 2, 4, sink) &&
             verify_recursion(std::min(fl.dmax, 4), sink) && verify_mixed(std::min(fl.dmax, 4), sink) &&
             verify_polynomiality(fl.seed, sink) && verify_wallcross(fl.seed, sink) && verify_determinism(fl.seed, sink);
    else
        throw ArgumentError("unknown suite '" + fl.suite + "'");
    return ok ? 0 : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact (strictly) monotone and mixed double Hurwitz numbers via tropical covers"};
    app.require_subcommand(1);
    QueryFlags fl;

    CLI::App* oracle = app.add_subcommand("oracle", "brute-force symmetric-group count");
    add_profile_flags(oracle, fl);
    add_variant_flags(oracle, fl);
    oracle->add_option("--dmax", fl.oracle_limit, "degree limit for the brute force")->capture_default_str();
    oracle->add_option("--cache-dir", fl.cache_dir, "result cache directory");

    CLI::App* tropical = app.add_subcommand("tropical", "tropical-cover enumeration of the full invariant");
    add_profile_flags(tropical, fl);
    add_variant_flags(tropical, fl);
    tropical->add_option("--cache-dir", fl.cache_dir, "result cache directory");

    CLI::App* total = app.add_subcommand("total", "alias of tropical: full invariant");
    add_profile_flags(total, fl);
    add_variant_flags(total, fl);
    total->add_option("--cache-dir", fl.cache_dir, "result cache directory");

    CLI::App* slice = app.add_subcommand("slice", "one lambda-slice of the invariant");
    add_profile_flags(slice, fl);
    add_variant_flags(slice, fl);
    slice->add_option("--lambda", fl.lambda, "vertex data, comma separated")->required()->delimiter(',');
    bool unordered = false;
    slice->add_flag("--unordered", unordered, "sum over all orderings of lambda");
    slice->add_option("--export-covers", fl.export_covers, "write the enumerated covers as text to this file");
    slice->add_option("--cache-dir", fl.cache_dir, "result cache directory");

    CLI::App* mixed = app.add_subcommand("mixed", "mixed strict/monotone/plain slice or total");
    add_profile_flags(mixed, fl);
    mixed->add_option("--p", fl.p, "strictly monotone block size")->required();
    mixed->add_option("--q", fl.q, "weakly monotone block size")->required();
    mixed->add_option("--lambda", fl.lambda, "declared vertex data (slice); omit for the total")->delimiter(',');
    mixed->add_option("--cache-dir", fl.cache_dir, "result cache directory");

    CLI::App* fit = app.add_subcommand("fit", "exact chamber polynomial of a lambda-slice");
    add_profile_flags(fit, fl);
    add_variant_flags(fit, fl);
    fit->add_option("--lambda", fl.lambda, "unordered vertex data")->required()->delimiter(',');
    fit->add_option("--seed", fl.seed, "sampling seed")->capture_default_str();
    fit->add_option("--box", fl.box, "sampling box half-width")->capture_default_str();

    CLI::App* wallcross = app.add_subcommand("wallcross", "wall-crossing: fitted difference vs closed formula");
    add_profile_flags(wallcross, fl);
    add_variant_flags(wallcross, fl);
    wallcross->add_option("--lambda", fl.lambda, "unordered vertex data")->required()->delimiter(',');
    wallcross->add_option("--wall", fl.wall, "wall subset, 1-based positions, comma separated")
        ->required()
        ->delimiter(',');
    wallcross->add_option("--seed", fl.seed, "sampling seed")->capture_default_str();
    wallcross->add_option("--box", fl.box, "sampling box half-width")->capture_default_str();

    CLI::App* recursion = app.add_subcommand("recursion", "cut recursion vs enumerated slice");
    add_profile_flags(recursion, fl);
    add_variant_flags(recursion, fl);
    recursion->add_option("--lambda", fl.lambda, "ordered vertex data")->required()->delimiter(',');
    recursion->add_option("--cut", fl.cut, "strict | weak | usual (mixed variant only)")
        ->check(CLI::IsMember({"strict", "weak", "usual"}));

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", fl.suite,
                       "oracle-vs-tropical | golden | series | polynomiality | wallcross | recursion | mixed | "
                       "determinism | all")
        ->capture_default_str();
    verify->add_option("--dmax", fl.dmax, "degree bound for grid suites")->capture_default_str();
    verify->add_option("--seed", fl.seed, "seed for sampling suites")->capture_default_str();
    verify->add_option("--file", fl.golden_file, "golden CSV (g,x,lambda,variant,connected,value)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);  // prints usage or help text
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (oracle->parsed()) {
            bool conn = resolve_connected(fl);
            Profile x(fl.x);
            int b = 2 * fl.g - 2 + x.size();
            Variant v = resolve_variant(fl, b);
            FactorizationQuery query{fl.g, fl.x, v, conn, fl.oracle_limit};
            return run_value_command("oracle", fl, true, [&] { return count_factorizations(query); }, v, conn,
                                     "oracle");
        }
        if (tropical->parsed() || total->parsed()) {
            bool conn = resolve_connected(fl);
            Profile x(fl.x);
            Variant v = resolve_variant(fl, 2 * fl.g - 2 + x.size());
            return run_value_command("total", fl, true, [&] { return h_total(fl.g, x, v, conn); }, v, conn,
                                     "tropical");
        }
        if (slice->parsed()) {
            bool conn = resolve_connected(fl);
            Profile x(fl.x);
            Variant v = resolve_variant(fl, 2 * fl.g - 2 + x.size());
            if (!fl.export_covers.empty()) {
                std::ofstream out(fl.export_covers);
                if (!out) throw ArgumentError("cannot open '" + fl.export_covers + "' for writing");
                int index = 0;
                for (const Cover& c : collect_covers(x, fl.lambda, conn)) {
                    out << "# cover " << index++ << "\n";
                    c.write_text(out);
                }
            }
            auto compute = [&] {
                if (unordered) return h_slice(fl.g, x, sorted_desc(fl.lambda), v, conn);
                return vec_h(fl.g, x, fl.lambda, v, conn);
            };
            return run_value_command("slice", fl, !unordered, compute, v, conn, "tropical");
        }
        if (mixed->parsed()) {
            bool conn = resolve_connected(fl);
            Profile x(fl.x);
            Variant v = Variant::mixed(fl.p, fl.q);
            auto compute = [&] {
                if (fl.lambda.empty()) return h_total(fl.g, x, v, conn);
                return mixed_slice(fl.g, x, fl.p, fl.q, fl.lambda, conn);
            };
            return run_value_command(fl.lambda.empty() ? "mixed-total" : "mixed-slice", fl, true, compute, v, conn,
                                     "tropical");
        }
        if (fit->parsed()) {
            bool conn = resolve_connected(fl);
            Variant v = resolve_variant(fl, 2 * fl.g - 2 + static_cast<int>(fl.x.size()));
            FitOptions opts;
            opts.box = fl.box;
            opts.seed = fl.seed;
            auto t0 = std::chrono::steady_clock::now();
            FitResult result = fit_chamber_polynomial(fl.g, sorted_desc(fl.lambda), fl.x, v, conn, opts);
            auto t1 = std::chrono::steady_clock::now();
            json out{{"kind", "fit"},
                     {"g", fl.g},
                     {"chamber_witness", fl.x},
                     {"lambda", sorted_desc(fl.lambda)},
                     {"variant", variant_name(v)},
                     {"connected", conn},
                     {"seed", result.seed},
                     {"degree_bound", std::max(0, 4 * fl.g - 3 + static_cast<int>(fl.x.size()))},
                     {"degree", result.polynomial.total_degree()},
                     {"polynomial", polynomial_to_json(result.polynomial)},
                     {"samples", result.samples},
                     {"holdout", result.holdout},
                     {"timing_ms", std::chrono::duration<double, std::milli>(t1 - t0).count()}};
            std::cout << out.dump() << "\n";
            return 0;
        }
        if (wallcross->parsed()) {
            bool conn = resolve_connected(fl);
            int n = static_cast<int>(fl.x.size());
            Variant v = resolve_variant(fl, 2 * fl.g - 2 + n);
            std::vector<int> wall = wall_to_indices(fl.wall, n);
            FitOptions opts;
            opts.box = fl.box;
            opts.seed = fl.seed;
            WallCrossingDirect direct = wall_crossing_direct(fl.g, sorted_desc(fl.lambda), wall, v, conn, opts);
            ChamberSampler sampler(chamber_signature(direct.fit_positive.samples.front()), std::max(6, fl.box / 2),
                                   fl.seed + 1);
            json points = json::array();
            bool all_match = true;
            std::vector<std::vector<int>> pts{fl.x};
            for (int i = 0; i < 9; ++i) pts.push_back(sampler.next());
            for (const auto& pt : pts) {
                Rational formula = wall_crossing_formula(pt, wall, sorted_desc(fl.lambda), v);
                Rational evaluated = direct.difference.evaluate(pt);
                bool match = formula == evaluated;
                all_match &= match;
                points.push_back(json{{"x", pt}, {"formula", formula.str()}, {"evaluated", evaluated.str()},
                                      {"match", match}});
            }
            json out{{"kind", "wallcross"},
                     {"g", fl.g},
                     {"wall", fl.wall},
                     {"lambda", sorted_desc(fl.lambda)},
                     {"variant", variant_name(v)},
                     {"connected", conn},
                     {"seed", fl.seed},
                     {"difference", polynomial_to_json(direct.difference)},
                     {"points", points},
                     {"all_match", all_match}};
            std::cout << out.dump() << "\n";
            return all_match ? 0 : kExitVerificationFailure;
        }
        if (recursion->parsed()) {
            bool conn = resolve_connected(fl);
            if (!conn) throw ArgumentError("the recursion is stated for connected invariants");
            Profile x(fl.x);
            int b = 2 * fl.g - 2 + x.size();
            Variant v = resolve_variant(fl, b);
            Rational lhs, rhs;
            if (v.kind == Variant::Kind::Mixed) {
                CutType cut = fl.cut == "strict" ? CutType::StrictVertex
                              : fl.cut == "weak" ? CutType::WeakVertex
                                                 : CutType::UsualVertex;
                lhs = mixed_slice(fl.g, x, v.p, v.q, fl.lambda, true);
                rhs = mixed_recursion_rhs(fl.g, x.positive_part(), x.negative_part(), v.p, v.q, fl.lambda, cut);
            } else {
                lhs = vec_h(fl.g, x, fl.lambda, v, true);
                rhs = recursion_rhs(fl.g, x.positive_part(), x.negative_part(), fl.lambda, v);
            }
            bool match = lhs == rhs;
            json out{{"kind", "recursion"},   {"g", fl.g},
                     {"x", fl.x},             {"lambda", fl.lambda},
                     {"variant", variant_name(v)}, {"connected", true},
                     {"slice", lhs.str()},    {"recursion_rhs", rhs.str()},
                     {"match", match}};
            std::cout << out.dump() << "\n";
            return match ? 0 : kExitVerificationFailure;
        }
        if (verify->parsed()) return run_verify(fl);
    } catch (const ArgumentError& e) {
        std::cerr << "argument error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const OnWallError& e) {
        std::cerr << "argument error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailure;
    }
    return kExitUsage;
}
