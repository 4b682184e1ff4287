#include "hurwitz/result_cache.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "hurwitz/partitions.hpp"

namespace hurwitz {

using nlohmann::json;

std::string variant_name(const Variant& v) {
    switch (v.kind) {
        case Variant::Kind::Plain:
            return "plain";
        case Variant::Kind::Monotone:
            return "monotone";
        case Variant::Kind::Strict:
            return "strict";
        case Variant::Kind::Mixed:
            return "mixed(" + std::to_string(v.p) + "," + std::to_string(v.q) + ")";
    }
    return "unknown";
}

std::string canonical_query_key(const std::string& kind, int g, const std::vector<int>& x,
                                const std::vector<int>& lambda, bool lambda_ordered, const Variant& variant,
                                bool connected) {
    Profile profile(x);
    std::ostringstream os;
    os << kind << "|g=" << g << "|x+=";
    for (int v : profile.positive_part()) os << v << ",";
    os << "|x-=";
    for (int v : profile.negative_part()) os << v << ",";
    os << "|l" << (lambda_ordered ? "o" : "u") << "=";
    for (int v : lambda) os << v << ",";
    os << "|" << variant_name(variant) << "|" << (connected ? "conn" : "disc");
    return os.str();
}

namespace {

json to_json(const ResultRecord& r) {
    return json{{"kind", r.kind},
                {"g", r.g},
                {"x", r.x},
                {"lambda", r.lambda},
                {"lambda_ordered", r.lambda_ordered},
                {"variant", r.variant},
                {"p", r.p},
                {"q", r.q},
                {"connected", r.connected},
                {"value", r.value},
                {"engine", r.engine},
                {"timing_ms", r.timing_ms}};
}

ResultRecord from_json(const json& j) {
    ResultRecord r;
    r.kind = j.at("kind").get<std::string>();
    r.g = j.at("g").get<int>();
    r.x = j.at("x").get<std::vector<int>>();
    r.lambda = j.at("lambda").get<std::vector<int>>();
    r.lambda_ordered = j.at("lambda_ordered").get<bool>();
    r.variant = j.at("variant").get<std::string>();
    r.p = j.value("p", 0);
    r.q = j.value("q", 0);
    r.connected = j.at("connected").get<bool>();
    r.value = j.at("value").get<std::string>();
    r.engine = j.at("engine").get<std::string>();
    r.timing_ms = j.value("timing_ms", 0.0);
    return r;
}

}  // namespace

ResultCache::ResultCache(std::string directory) : directory_(std::move(directory)) {}

std::string ResultCache::file_path() const { return directory_ + "/results.jsonl"; }

std::optional<ResultRecord> ResultCache::lookup(const std::string& key) const {
    if (!enabled()) return std::nullopt;
    std::ifstream in(file_path());
    if (!in) return std::nullopt;
    std::string line;
    std::optional<ResultRecord> found;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            json j = json::parse(line);
            if (j.at("key").get<std::string>() == key) found = from_json(j.at("record"));
        } catch (const std::exception&) {
            std::cerr << "warning: skipping corrupt cache line\n";
        }
    }
    return found;
}

void ResultCache::store(const std::string& key, const ResultRecord& record) const {
    if (!enabled()) return;
    std::error_code ec;
    std::filesystem::create_directories(directory_, ec);
    std::ofstream out(file_path(), std::ios::app);
    if (!out) {
        std::cerr << "warning: cache directory '" << directory_ << "' is not writable; proceeding uncached\n";
        return;
    }
    json j{{"key", key}, {"record", to_json(record)}};
    out << j.dump() << "\n";
}

}  // namespace hurwitz
