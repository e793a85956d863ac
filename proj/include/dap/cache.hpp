#pragma once

// On-disk result cache: one JSON file per (command, id, parameters), named by
// a sanitized key the CLI builds from those pieces. Files carry a format
// version; anything stale, unreadable, or from an older layout is recomputed
// rather than trusted.

#include <cctype>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include "json_io.hpp"

namespace dap {

inline constexpr int cache_format_version = 1;

class ResultCache {
public:
    explicit ResultCache(std::string dir = "") : dir_(std::move(dir)) {}

    bool enabled() const { return !dir_.empty(); }

    std::optional<json> load(const std::string& key) const {
        if (!enabled()) return std::nullopt;
        std::ifstream in(path_for(key));
        if (!in) return std::nullopt;
        json j;
        try {
            j = json::parse(in);
        } catch (const json::exception&) {
            return std::nullopt;  // corrupt file: fall back to recomputation
        }
        if (!j.is_object() || !j.contains("version") || !j.contains("payload")) return std::nullopt;
        if (j["version"] != cache_format_version) return std::nullopt;  // stale layout
        return j["payload"];
    }

    void store(const std::string& key, const json& payload) const {
        if (!enabled()) return;
        std::filesystem::create_directories(dir_);
        json j{{"version", cache_format_version}, {"payload", payload}};
        std::ofstream out(path_for(key), std::ios::trunc);
        out << j.dump();
    }

    std::filesystem::path path_for(const std::string& key) const {
        std::string name;
        for (char c : key)
            name += std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' ? c : '_';
        return std::filesystem::path(dir_) / (name + ".json");
    }

private:
    std::string dir_;
};

}  // namespace dap
