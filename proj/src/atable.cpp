#include "stratavol/atable.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "stratavol/errors.hpp"

#ifndef STRATAVOL_DEFAULT_DATA_DIR
#define STRATAVOL_DEFAULT_DATA_DIR ""
#endif

namespace stratavol::cli {

void Config::validate() const {
    if (max_k < 1 || max_weight < 1 || kernel_cap_1 < 1 || kernel_cap_2 < 1)
        throw ConfigError("all caps must be positive");
    if (max_weight > max_k + 1)
        throw ConfigError("max_weight must be at most max_k + 1 (" +
                          std::to_string(max_weight) + " > " +
                          std::to_string(max_k + 1) + ")");
    if (format != "text" && format != "json" && format != "csv")
        throw ConfigError("format must be text, json or csv, got '" + format + "'");
    if (digits < 1)
        throw ConfigError("digits must be positive");
}

std::string Config::cache_key() const {
    return "max_k=" + std::to_string(max_k) +
           ";max_weight=" + std::to_string(max_weight);
}

std::uint64_t Config::content_hash() const {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : cache_key()) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string Config::resolved_data_dir() const {
    if (!data_dir.empty())
        return data_dir;
    if (const char* env = std::getenv("STRATAVOL_DATA_DIR"); env && *env)
        return env;
    return STRATAVOL_DEFAULT_DATA_DIR;
}

ATableFile snapshot(const minimal::MinimalTable& table) {
    ATableFile file;
    file.max_k = table.max_k();
    file.max_weight = table.weight_cap();
    for (int k = 1; k <= table.max_k(); ++k) {
        Partition mu({k});
        // TPoly stores monomials in canonical partition order, so the entry
        // list comes out sorted by (mu, rho) without an explicit sort.
        for (const auto& [rho, c] : table.at(k).terms())
            file.entries.push_back(ATableEntry{mu, rho, c * rho.aut_order()});
    }
    return file;
}

minimal::MinimalTable restore(const ATableFile& file) {
    std::map<int, TPoly> values;
    for (int k = 1; k <= file.max_k; ++k)
        values.emplace(k, TPoly(file.max_weight));
    for (const ATableEntry& e : file.entries) {
        if (e.mu.length() != 1)
            throw DomainError("stored mu " + e.mu.to_string() + " is not minimal");
        int k = e.mu.max_part();
        if (k < 1 || k > file.max_k || e.rho.weight() > file.max_weight)
            throw DomainError("stored entry " + e.mu.to_string() + "," +
                              e.rho.to_string() + " lies outside the declared caps");
        values.at(k).add_term(e.rho, e.value / e.rho.aut_order());
    }
    return minimal::MinimalTable(file.max_k, file.max_weight, std::move(values));
}

static std::string hash_string(std::uint64_t h) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

static std::uint64_t caps_hash(int max_k, int max_weight) {
    Config c;
    c.max_k = max_k;
    c.max_weight = max_weight;
    return c.content_hash();
}

std::string to_json_text(const ATableFile& file, std::uint64_t content_hash) {
    nlohmann::ordered_json doc;
    doc["version"] = file.version;
    doc["config_hash"] = hash_string(content_hash);
    doc["caps"] = {{"max_k", file.max_k}, {"max_weight", file.max_weight}};
    doc["entries"] = nlohmann::ordered_json::array();
    for (const ATableEntry& e : file.entries) {
        nlohmann::ordered_json entry;
        entry["mu"] = e.mu.parts();
        entry["rho"] = e.rho.parts();
        entry["value"] = stratavol::to_string(e.value);
        doc["entries"].push_back(std::move(entry));
    }
    return doc.dump(2) + "\n";
}

ATableFile parse_atable(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("table file is not valid JSON: ") + e.what());
    }
    ATableFile file;
    try {
        file.version = doc.at("version").get<int>();
        if (file.version != 1)
            throw DomainError("unsupported table file version " +
                              std::to_string(file.version));
        file.max_k = doc.at("caps").at("max_k").get<int>();
        file.max_weight = doc.at("caps").at("max_weight").get<int>();
        std::string stored = doc.at("config_hash").get<std::string>();
        if (stored != hash_string(caps_hash(file.max_k, file.max_weight)))
            throw DomainError("table file hash does not match its caps");
        for (const auto& item : doc.at("entries")) {
            ATableEntry e{Partition(item.at("mu").get<std::vector<int>>()),
                          Partition(item.at("rho").get<std::vector<int>>()),
                          rational_from_string(item.at("value").get<std::string>())};
            file.entries.push_back(std::move(e));
        }
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("table file structure: ") + e.what());
    }
    return file;
}

void write_atomic(const std::string& path, const std::string& bytes) {
    std::filesystem::path target(path);
    if (target.has_parent_path())
        std::filesystem::create_directories(target.parent_path());
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw DomainError("cannot open " + tmp.string() + " for writing");
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        if (!out)
            throw DomainError("short write to " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw DomainError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string cache_path(const Config& config) {
    return (std::filesystem::path(config.cache_dir) /
            ("minimal-" + hash_string(config.content_hash()) + ".json"))
        .string();
}

std::optional<ATableFile> load_cached(const Config& config) {
    if (config.cache_dir.empty())
        return std::nullopt;
    std::string path = cache_path(config);
    if (!std::filesystem::exists(path))
        return std::nullopt;
    try {
        ATableFile file = parse_atable(read_file(path));
        if (file.max_k != config.max_k || file.max_weight != config.max_weight)
            return std::nullopt;
        return file;
    } catch (const DomainError&) {
        return std::nullopt; // defective cache entries degrade to a recompute
    }
}

void store_cached(const Config& config, const ATableFile& file) {
    if (config.cache_dir.empty())
        return;
    write_atomic(cache_path(config), to_json_text(file, config.content_hash()));
}

minimal::MinimalTable obtain_table(const Config& config) {
    if (auto cached = load_cached(config))
        return restore(*cached);
    minimal::MinimalTable table = minimal::solve_minimal(config.max_k, config.max_weight);
    store_cached(config, snapshot(table));
    return table;
}

} // namespace stratavol::cli
