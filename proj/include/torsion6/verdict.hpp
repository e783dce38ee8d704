// Copyright (c) the torsion6 authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "torsion6/serialize.hpp"
#include "torsion6/util.hpp"

namespace torsion6 {

// Shared run parameters for checks and reports.
struct RunConfig {
    int jobs = 0;                                  // 0 = hardware concurrency
    std::uint64_t seed = kDefaultSeed;
    int prime_budget = 25;
    std::size_t enumeration_ceiling = 50000;
    bool timings = false;                          // emit runtime_ms in reports
    std::string cache_dir;                         // empty = caching disabled

    // TORSION6_CACHE overrides the configured directory; cache location never
    // enters reports, so cached and uncached runs stay byte-identical.
    std::string resolved_cache_dir() const {
        if (const char* env = std::getenv("TORSION6_CACHE"); env && *env)
            return env;
        return cache_dir;
    }

    int effective_jobs() const {
        if (jobs > 0) return jobs;
        unsigned hw = std::thread::hardware_concurrency();
        return hw == 0 ? 1 : static_cast<int>(hw);
    }

    static std::string seed_hex(std::uint64_t s) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(s));
        return buf;
    }

    json to_json(const std::string& facts_version) const {
        json j;
        j["jobs"] = effective_jobs();
        j["seed"] = seed_hex(seed);
        j["prime_budget"] = prime_budget;
        j["enumeration_ceiling"] = enumeration_ceiling;
        j["facts_version"] = facts_version;
        if (timings) j["timings"] = true;
        return j;
    }
};

enum class VerdictStatus { kExcluded, kInconclusive, kCitedFact };

inline std::string to_string(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::kExcluded: return "excluded";
        case VerdictStatus::kInconclusive: return "inconclusive";
        case VerdictStatus::kCitedFact: return "cited-fact";
    }
    return "?";
}

inline VerdictStatus verdict_status_from_string(const std::string& s) {
    if (s == "excluded") return VerdictStatus::kExcluded;
    if (s == "inconclusive") return VerdictStatus::kInconclusive;
    if (s == "cited-fact") return VerdictStatus::kCitedFact;
    throw std::invalid_argument("unknown verdict status '" + s + "'");
}

// Outcome of one classification-case argument. Machine results live under
// evidence["computed"]; purely cited conclusions carry citations and a
// statement but no computed payload.
struct ExclusionVerdict {
    std::string check_id;                 // id of the producing check
    std::string target;                   // group or named case, e.g. "C25"
    VerdictStatus status = VerdictStatus::kInconclusive;
    json evidence = json::object();
    std::vector<std::string> citations;   // citation keys into the knowledge base
    long runtime_ms = 0;

    // status = excluded requires nonempty machine-checkable evidence;
    // status = cited-fact requires a citation and no local computation claim.
    void validate() const {
        if (check_id.empty() || target.empty())
            throw std::logic_error("verdict: empty check id or target");
        if (!evidence.is_object())
            throw std::logic_error("verdict '" + target + "': evidence must be an object");
        if (status == VerdictStatus::kExcluded) {
            if (!evidence.contains("computed") || evidence["computed"].empty())
                throw std::logic_error("verdict '" + target +
                                       "': excluded requires computed evidence");
        }
        if (status == VerdictStatus::kCitedFact) {
            if (citations.empty())
                throw std::logic_error("verdict '" + target +
                                       "': cited-fact requires a citation");
            if (evidence.contains("computed"))
                throw std::logic_error("verdict '" + target +
                                       "': cited-fact must not claim local computation");
        }
    }

    json to_json(std::uint64_t seed, bool with_timings) const {
        json j;
        j["id"] = check_id;
        j["target"] = target;
        j["status"] = to_string(status);
        j["citations"] = citations;
        j["evidence"] = evidence;
        j["seed"] = RunConfig::seed_hex(seed);
        if (with_timings) j["runtime_ms"] = runtime_ms;
        return j;
    }

    static ExclusionVerdict from_json(const json& j) {
        ExclusionVerdict v;
        v.check_id = j.at("id").get<std::string>();
        v.target = j.at("target").get<std::string>();
        v.status = verdict_status_from_string(j.at("status").get<std::string>());
        v.citations = j.at("citations").get<std::vector<std::string>>();
        v.evidence = j.at("evidence");
        if (j.contains("runtime_ms")) v.runtime_ms = j.at("runtime_ms").get<long>();
        return v;
    }
};

}   // namespace torsion6
