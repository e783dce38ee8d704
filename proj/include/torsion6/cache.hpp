// Copyright (c) the torsion6 authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include "torsion6/embedded_data.hpp"
#include "torsion6/serialize.hpp"
#include "torsion6/util.hpp"

namespace torsion6 {
namespace cache {

// Bump to invalidate every cached artifact after a behavioural change.
inline constexpr int kCacheEpoch = 1;

// Key = (operation, canonical input, seed, code version).  The hash names the
// file; the full key is stored inside so collisions degrade to misses.
inline std::string cache_key(const std::string& op, const std::string& input,
                             std::uint64_t seed) {
    return op + "|" + input + "|" + hex_seed(seed) + "|" +
           std::string(embedded::kVersion) + "." + std::to_string(kCacheEpoch);
}

inline std::filesystem::path cache_path(const std::string& dir, const std::string& key) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a(key)));
    return std::filesystem::path(dir) / (std::string(buf) + ".json");
}

inline std::optional<json> load(const std::string& dir, const std::string& op,
                                const std::string& input, std::uint64_t seed) {
    if (dir.empty()) return std::nullopt;
    const std::string key = cache_key(op, input, seed);
    std::error_code ec;
    const auto path = cache_path(dir, key);
    if (!std::filesystem::exists(path, ec) || ec) return std::nullopt;
    std::ifstream in(path);
    if (!in) return std::nullopt;
    json wrapper = json::parse(in, nullptr, /*allow_exceptions=*/false);
    if (wrapper.is_discarded() || !wrapper.is_object()) return std::nullopt;
    if (wrapper.value("key", std::string()) != key) return std::nullopt;
    if (!wrapper.contains("value")) return std::nullopt;
    return wrapper["value"];
}

// Atomic write-then-rename so concurrent writers never expose partial files.
inline void store(const std::string& dir, const std::string& op,
                  const std::string& input, std::uint64_t seed, const json& value) {
    if (dir.empty()) return;
    const std::string key = cache_key(op, input, seed);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) return;
    const auto path = cache_path(dir, key);
    json wrapper;
    wrapper["key"] = key;
    wrapper["value"] = value;
    const auto tmp = path.string() + ".tmp." +
                     std::to_string(static_cast<unsigned long long>(
                         fnv1a(key + std::to_string(std::rand()))));
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) return;
        out << wrapper.dump(1) << "\n";
        if (!out) {
            std::filesystem::remove(tmp, ec);
            return;
        }
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace cache
}  // namespace torsion6
