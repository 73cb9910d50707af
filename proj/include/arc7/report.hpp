// Census reports and the append-only JSON-lines result cache.
//
// A report records one exact count with both normalizations (raw and per
// |PGL|) and, when a registry expression covers it, the formula value and
// the match verdict. The cache keys on (q, lambda, operation, code_version);
// partial entries carry the completed-shard set so interrupted jobs resume
// at shard granularity. Rationals serialize as "num/den" strings, never as
// floating point.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "arc7/arcs.hpp"
#include "arc7/bigint.hpp"

namespace arc7 {

inline constexpr const char* kCodeVersion = "arc7-1.0.0";
inline constexpr int kCacheSchema = 1;

struct CountReport {
    std::uint64_t q = 0;
    int p = 0, s = 0;
    std::string lambda;
    std::string operation;
    std::uint64_t raw_count = 0;
    // What raw_count counts: "sets" (unordered invariant sets) or
    // "tuples" (generator-labeled tuples, symmetry_factor per set).
    std::string counting = "sets";
    std::uint64_t symmetry = 1;
    BigRat per_pgl;
    std::optional<std::string> formula_key;
    std::optional<BigRat> formula_value;
    std::optional<bool> match;
    std::uint64_t elapsed_ms = 0;
    int shard_count = 1;
    std::string code_version = kCodeVersion;

    nlohmann::ordered_json to_json() const;
    static CountReport from_json(const nlohmann::ordered_json& j);
    // Fixed columns: q,lambda,operation,raw_count,per_pgl,formula_value,match,elapsed_ms
    std::string csv_row() const;
    static std::string csv_header();
};

// Fill per_pgl, formula_value and match for a raw count, given the registry
// key (which may be absent from the registry).
CountReport make_report(std::uint64_t q, int p, int s, const std::string& lambda,
                        const std::string& operation, std::uint64_t raw,
                        const std::string& counting, std::uint64_t symmetry,
                        const std::string& formula_key);

struct CacheEntry {
    bool complete = false;
    int shard_count = 0;
    std::set<int> done;
    Tally tallies;
    std::uint64_t elapsed_ms = 0;
    std::vector<CountReport> reports;  // present when complete
};

class Cache {
public:
    // Empty path disables persistence (lookups miss, appends are dropped).
    explicit Cache(std::string path);

    std::optional<CacheEntry> lookup(std::uint64_t q, const std::string& lambda,
                                     const std::string& operation) const;
    void append(std::uint64_t q, const std::string& lambda, const std::string& operation,
                const CacheEntry& entry);

    const std::string& path() const { return path_; }

private:
    std::string path_;
    std::map<std::string, CacheEntry> entries_;
    static std::string key(std::uint64_t q, const std::string& lambda,
                           const std::string& operation);
};

}  // namespace arc7
