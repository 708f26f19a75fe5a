#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "stratavol/atable.hpp"
#include "stratavol/errors.hpp"

using namespace stratavol;
using cli::ATableEntry;
using cli::ATableFile;
using cli::Config;

namespace {

namespace fs = std::filesystem;

// Fresh scratch directory per test case, removed on scope exit.
struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("stratavol-atable-" + std::to_string(::getpid()) + "-" +
                std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    static int& counter() {
        static int c = 0;
        return c;
    }
};

Config small_config() {
    Config c;
    c.max_k = 5;
    c.max_weight = 5;
    return c;
}

} // namespace

TEST_CASE("config validation") {
    Config c;
    CHECK_NOTHROW(c.validate());
    c.max_k = 0;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c = Config{};
    c.max_weight = c.max_k + 2; // weight cap beyond max_k + 1 is incoherent
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c = Config{};
    c.format = "xml";
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c = Config{};
    c.digits = 0;
    CHECK_THROWS_AS(c.validate(), ConfigError);
}

TEST_CASE("content hash tracks exactly the caps") {
    Config a = small_config();
    Config b = small_config();
    CHECK(a.content_hash() == b.content_hash());
    b.format = "json";
    b.digits = 3;
    b.cache_dir = "/somewhere";
    CHECK(a.content_hash() == b.content_hash()); // presentation fields excluded
    b.max_weight = 4;
    CHECK(a.content_hash() != b.content_hash());
    Config c = small_config();
    c.max_k = 6;
    CHECK(a.content_hash() != c.content_hash());
}

TEST_CASE("snapshot lists a-values with the automorphism order folded in") {
    auto table = minimal::solve_minimal(5, 5);
    ATableFile file = cli::snapshot(table);
    CHECK(file.max_k == 5);
    CHECK(file.max_weight == 5);

    auto find = [&](std::vector<int> mu, std::vector<int> rho) -> const ATableEntry* {
        Partition pm(std::move(mu)), pr(std::move(rho));
        for (const auto& e : file.entries)
            if (e.mu == pm && e.rho == pr)
                return &e;
        return nullptr;
    };
    const ATableEntry* e10 = find({1}, {});
    REQUIRE(e10 != nullptr);
    CHECK(e10->value == Rational(-1, 24));
    const ATableEntry* e32 = find({3}, {2});
    REQUIRE(e32 != nullptr);
    CHECK(e32->value == Rational(-1, 24));
    // t2^2 coefficient of the k=3 row is 1/2; |Aut((2,2))| = 2 doubles it.
    const ATableEntry* e322 = find({3}, {2, 2});
    REQUIRE(e322 != nullptr);
    CHECK(e322->value == Rational(1));
    // Zero coefficients are never materialized.
    CHECK(find({2}, {}) == nullptr);

    // Canonical listing order: nondecreasing in (mu, rho).
    for (std::size_t i = 1; i < file.entries.size(); ++i) {
        const auto& a = file.entries[i - 1];
        const auto& b = file.entries[i];
        bool ordered = a.mu < b.mu || (a.mu == b.mu && a.rho < b.rho);
        CHECK(ordered);
    }
}

TEST_CASE("serialization round trip is exact and deterministic") {
    Config config = small_config();
    auto table = minimal::solve_minimal(config.max_k, config.max_weight);
    ATableFile file = cli::snapshot(table);

    std::string text = cli::to_json_text(file, config.content_hash());
    CHECK(text == cli::to_json_text(file, config.content_hash()));
    ATableFile parsed = cli::parse_atable(text);
    CHECK(parsed == file);

    auto restored = cli::restore(parsed);
    CHECK(restored.max_k() == table.max_k());
    CHECK(restored.weight_cap() == table.weight_cap());
    for (int k = 1; k <= table.max_k(); ++k)
        CHECK(restored.at(k) == table.at(k));
    CHECK(cli::to_json_text(cli::snapshot(restored), config.content_hash()) == text);
}

TEST_CASE("parse rejects defective table files") {
    Config config = small_config();
    auto table = minimal::solve_minimal(config.max_k, config.max_weight);
    std::string good = cli::to_json_text(cli::snapshot(table), config.content_hash());

    CHECK_THROWS_AS(cli::parse_atable("not json at all"), DomainError);
    CHECK_THROWS_AS(cli::parse_atable("{}"), DomainError);

    std::string bad_version = good;
    bad_version.replace(bad_version.find("\"version\": 1"), 12, "\"version\": 9");
    CHECK_THROWS_AS(cli::parse_atable(bad_version), DomainError);

    // Caps edited without refreshing the hash: stale by construction.
    std::string bad_caps = good;
    bad_caps.replace(bad_caps.find("\"max_k\": 5"), 10, "\"max_k\": 7");
    CHECK_THROWS_AS(cli::parse_atable(bad_caps), DomainError);

    // A multi-part mu cannot come from a one-zero table.
    ATableFile crooked = cli::snapshot(table);
    crooked.entries.push_back(
        ATableEntry{Partition({2, 1}), Partition::empty(), Rational(1)});
    CHECK_THROWS_AS(cli::restore(crooked), DomainError);
}

TEST_CASE("atomic writes land complete files and create directories") {
    TempDir tmp;
    std::string path = (tmp.path / "deep" / "nested" / "file.json").string();
    cli::write_atomic(path, "payload\n");
    CHECK(cli::read_file(path) == "payload\n");
    cli::write_atomic(path, "replaced\n");
    CHECK(cli::read_file(path) == "replaced\n");
    CHECK_FALSE(fs::exists(path + ".tmp"));
    CHECK_THROWS_AS(cli::read_file((tmp.path / "absent").string()), DomainError);
}

TEST_CASE("cache store, load and invalidation") {
    TempDir tmp;
    Config config = small_config();
    config.cache_dir = tmp.path.string();

    CHECK_FALSE(cli::load_cached(config).has_value());

    auto table = minimal::solve_minimal(config.max_k, config.max_weight);
    ATableFile file = cli::snapshot(table);
    cli::store_cached(config, file);
    auto loaded = cli::load_cached(config);
    REQUIRE(loaded.has_value());
    CHECK(*loaded == file);

    // Byte identity across repeated stores.
    std::string bytes = cli::read_file(cli::cache_path(config));
    cli::store_cached(config, file);
    CHECK(cli::read_file(cli::cache_path(config)) == bytes);

    // Different caps hash to a different file: a miss, not a collision.
    Config other = config;
    other.max_weight = 4;
    CHECK(cli::cache_path(other) != cli::cache_path(config));
    CHECK_FALSE(cli::load_cached(other).has_value());

    // A corrupted cache degrades to a miss.
    cli::write_atomic(cli::cache_path(config), "garbage");
    CHECK_FALSE(cli::load_cached(config).has_value());

    // Caching disabled entirely without a directory.
    Config off = small_config();
    CHECK_FALSE(cli::load_cached(off).has_value());
    CHECK_NOTHROW(cli::store_cached(off, file)); // silently skipped
}

TEST_CASE("obtain_table populates and reuses the cache") {
    TempDir tmp;
    Config config = small_config();
    config.cache_dir = tmp.path.string();

    auto first = cli::obtain_table(config);
    CHECK(fs::exists(cli::cache_path(config)));
    auto second = cli::obtain_table(config); // served from disk
    auto fresh = minimal::solve_minimal(config.max_k, config.max_weight);
    for (int k = 1; k <= config.max_k; ++k) {
        CHECK(first.at(k) == fresh.at(k));
        CHECK(second.at(k) == fresh.at(k));
    }
}
