#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "hurwitz/result_cache.hpp"

using namespace hurwitz;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() / ("hurwitz-cache-test-" + std::to_string(std::rand()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("canonical keys sort the profile halves") {
    std::string a = canonical_query_key("total", 0, {2, 1, -2, -1}, {1, 1}, true, Variant::monotone(), true);
    std::string b = canonical_query_key("total", 0, {1, -1, 2, -2}, {1, 1}, true, Variant::monotone(), true);
    CHECK(a == b);
    std::string c = canonical_query_key("total", 0, {2, 1, -2, -1}, {1, 1}, true, Variant::strict(), true);
    CHECK(a != c);
}

TEST_CASE("store then lookup returns the identical record") {
    TempDir dir;
    ResultCache cache(dir.path.string());
    ResultRecord rec;
    rec.kind = "total";
    rec.g = 0;
    rec.x = {2, 1, -2, -1};
    rec.lambda = {};
    rec.variant = "monotone";
    rec.connected = true;
    rec.value = "3";
    rec.engine = "tropical";
    std::string key = canonical_query_key("total", 0, rec.x, {}, true, Variant::monotone(), true);
    cache.store(key, rec);
    auto found = cache.lookup(key);
    REQUIRE(found.has_value());
    CHECK(found->value == "3");
    CHECK(found->engine == "tropical");
    CHECK_FALSE(cache.lookup("missing").has_value());
}

TEST_CASE("corrupt lines are skipped") {
    TempDir dir;
    ResultCache cache(dir.path.string());
    ResultRecord rec;
    rec.kind = "total";
    rec.x = {2, -2};
    rec.value = "1/2";
    rec.engine = "oracle";
    cache.store("k1", rec);
    {
        std::ofstream out(dir.path / "results.jsonl", std::ios::app);
        out << "{this is not json\n";
    }
    rec.value = "5";
    cache.store("k2", rec);
    auto first = cache.lookup("k1");
    auto second = cache.lookup("k2");
    REQUIRE(first.has_value());
    REQUIRE(second.has_value());
    CHECK(first->value == "1/2");
    CHECK(second->value == "5");
}

TEST_CASE("disabled cache never finds anything") {
    ResultCache cache("");
    CHECK_FALSE(cache.enabled());
    CHECK_FALSE(cache.lookup("anything").has_value());
    ResultRecord rec;
    cache.store("anything", rec);  // no-op
}
