#include "arc7/report.hpp"

#include <fstream>

#include "arc7/formulas.hpp"

namespace arc7 {

using nlohmann::ordered_json;

ordered_json CountReport::to_json() const {
    ordered_json j;
    j["q"] = q;
    j["p"] = p;
    j["s"] = s;
    j["lambda"] = lambda;
    j["operation"] = operation;
    j["raw_count"] = raw_count;
    j["counting"] = counting;
    j["symmetry"] = symmetry;
    j["per_pgl"] = per_pgl.to_string();
    if (formula_key) {
        j["formula_key"] = *formula_key;
        j["formula_value"] = formula_value->to_string();
        j["match"] = *match;
    }
    j["elapsed_ms"] = elapsed_ms;
    j["shard_count"] = shard_count;
    j["code_version"] = code_version;
    return j;
}

CountReport CountReport::from_json(const ordered_json& j) {
    CountReport r;
    r.q = j.at("q").get<std::uint64_t>();
    r.p = j.at("p").get<int>();
    r.s = j.at("s").get<int>();
    r.lambda = j.at("lambda").get<std::string>();
    r.operation = j.at("operation").get<std::string>();
    r.raw_count = j.at("raw_count").get<std::uint64_t>();
    r.counting = j.at("counting").get<std::string>();
    r.symmetry = j.at("symmetry").get<std::uint64_t>();
    r.per_pgl = BigRat::from_string(j.at("per_pgl").get<std::string>());
    if (j.contains("formula_key")) {
        r.formula_key = j.at("formula_key").get<std::string>();
        r.formula_value = BigRat::from_string(j.at("formula_value").get<std::string>());
        r.match = j.at("match").get<bool>();
    }
    r.elapsed_ms = j.at("elapsed_ms").get<std::uint64_t>();
    r.shard_count = j.at("shard_count").get<int>();
    r.code_version = j.at("code_version").get<std::string>();
    return r;
}

std::string CountReport::csv_header() {
    return "q,lambda,operation,raw_count,per_pgl,formula_value,match,elapsed_ms";
}

std::string CountReport::csv_row() const {
    std::string row = std::to_string(q) + "," + lambda + "," + operation + "," +
                      std::to_string(raw_count) + "," + per_pgl.to_string() + ",";
    if (formula_value) row += formula_value->to_string();
    row += ",";
    if (match) row += *match ? "true" : "false";
    row += "," + std::to_string(elapsed_ms);
    return row;
}

CountReport make_report(std::uint64_t q, int p, int s, const std::string& lambda,
                        const std::string& operation, std::uint64_t raw,
                        const std::string& counting, std::uint64_t symmetry,
                        const std::string& formula_key) {
    CountReport r;
    r.q = q;
    r.p = p;
    r.s = s;
    r.lambda = lambda;
    r.operation = operation;
    r.raw_count = raw;
    r.counting = counting;
    r.symmetry = symmetry;
    r.per_pgl = BigRat(BigInt(static_cast<std::int64_t>(raw)), pgl3_order(q));
    if (const FormulaEntry* e = find_formula(formula_key)) {
        r.formula_key = formula_key;
        r.formula_value = e->value_at(q);
        r.match = BigInt(static_cast<std::int64_t>(raw)) == e->expected_raw(q, symmetry);
    }
    return r;
}

std::string Cache::key(std::uint64_t q, const std::string& lambda, const std::string& op) {
    return std::to_string(q) + "|" + lambda + "|" + op + "|" + kCodeVersion;
}

Cache::Cache(std::string path) : path_(std::move(path)) {
    if (path_.empty()) return;
    std::ifstream in(path_);
    if (!in.is_open()) return;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        ordered_json j = ordered_json::parse(line, nullptr, false);
        if (j.is_discarded()) continue;  // tolerate torn trailing writes
        if (!j.contains("schema") || j["schema"].get<int>() != kCacheSchema) continue;
        if (j["code_version"].get<std::string>() != kCodeVersion) continue;
        CacheEntry e;
        e.complete = j.at("status").get<std::string>() == "complete";
        e.shard_count = j.at("shard_count").get<int>();
        for (const auto& d : j.at("done")) e.done.insert(d.get<int>());
        for (auto it = j.at("tallies").begin(); it != j.at("tallies").end(); ++it)
            e.tallies.add(it.key(), it.value().get<std::uint64_t>());
        e.elapsed_ms = j.at("elapsed_ms").get<std::uint64_t>();
        if (j.contains("reports"))
            for (const auto& rj : j.at("reports")) e.reports.push_back(CountReport::from_json(rj));
        // last writer wins per key
        entries_[j.at("key").get<std::string>()] = std::move(e);
    }
}

std::optional<CacheEntry> Cache::lookup(std::uint64_t q, const std::string& lambda,
                                        const std::string& operation) const {
    auto it = entries_.find(key(q, lambda, operation));
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void Cache::append(std::uint64_t q, const std::string& lambda, const std::string& operation,
                   const CacheEntry& entry) {
    std::string k = key(q, lambda, operation);
    entries_[k] = entry;
    if (path_.empty()) return;
    ordered_json j;
    j["schema"] = kCacheSchema;
    j["key"] = k;
    j["q"] = q;
    j["lambda"] = lambda;
    j["operation"] = operation;
    j["code_version"] = kCodeVersion;
    j["status"] = entry.complete ? "complete" : "partial";
    j["shard_count"] = entry.shard_count;
    j["done"] = entry.done;
    ordered_json tj;
    for (const auto& [name, v] : entry.tallies.counters) tj[name] = v;
    j["tallies"] = tj;
    j["elapsed_ms"] = entry.elapsed_ms;
    if (entry.complete) {
        ordered_json arr = ordered_json::array();
        for (const auto& r : entry.reports) arr.push_back(r.to_json());
        j["reports"] = arr;
    }
    std::ofstream out(path_, std::ios::app);
    out << j.dump() << "\n";
}

}  // namespace arc7
