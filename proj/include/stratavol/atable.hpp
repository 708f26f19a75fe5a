#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stratavol/minimal.hpp"
#include "stratavol/partition.hpp"
#include "stratavol/rational.hpp"

namespace stratavol::cli {

// Runtime knobs shared by every subcommand. The caps decide mathematical
// content; format and digits only affect rendering, so they stay out of the
// cache hash.
struct Config {
    int max_k = 12;
    int max_weight = 10;
    int kernel_cap_1 = 6;
    int kernel_cap_2 = 6;
    std::string cache_dir;  // empty disables on-disk caching
    std::string data_dir;   // empty falls back to the compiled-in default
    std::string format = "text"; // text|json|csv
    int digits = 12;

    // ConfigError unless every cap is positive, max_weight <= max_k + 1,
    // and format is one of the three known names.
    void validate() const;

    // Stable key covering exactly the content-determining caps.
    std::string cache_key() const;
    std::uint64_t content_hash() const; // FNV-1a over cache_key()

    std::string resolved_data_dir() const;
};

// One stored a-value: the rho-coefficient of the mu-polynomial times
// |Aut(rho)|. Zero values are not stored.
struct ATableEntry {
    Partition mu;
    Partition rho;
    Rational value;

    bool operator==(const ATableEntry&) const = default;
};

// Serializable snapshot of a solved one-zero table. Entries are sorted by
// (mu, rho) in the canonical partition order, which starts with the weight,
// so the listing is also sorted by (|mu|, mu, |rho|, rho).
struct ATableFile {
    int version = 1;
    int max_k = 0;
    int max_weight = 0;
    std::vector<ATableEntry> entries;

    bool operator==(const ATableFile&) const = default;
};

ATableFile snapshot(const minimal::MinimalTable& table);
// Inverse of snapshot; DomainError if some mu is not a single part or lies
// outside the declared caps.
minimal::MinimalTable restore(const ATableFile& file);

// Canonical rendering: fixed key order, two-space indent, trailing newline.
// Byte-identical across runs for equal inputs.
std::string to_json_text(const ATableFile& file, std::uint64_t content_hash);
// DomainError on malformed JSON, wrong version, or a stored hash that does
// not match the caps in the file.
ATableFile parse_atable(const std::string& text);

// Writes via a sibling temp file plus rename, so readers never observe a
// partial file.
void write_atomic(const std::string& path, const std::string& bytes);
std::string read_file(const std::string& path); // DomainError if unreadable

// Cache location is determined by the content hash, so mismatched caps never
// alias. Loading re-verifies the embedded hash and falls back to a miss on
// any defect rather than failing.
std::string cache_path(const Config& config);
std::optional<ATableFile> load_cached(const Config& config);
void store_cached(const Config& config, const ATableFile& file);

// Solves at the config caps, consulting and refreshing the cache when a
// cache directory is configured.
minimal::MinimalTable obtain_table(const Config& config);

} // namespace stratavol::cli
