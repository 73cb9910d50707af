// Job orchestration: one entry point per census kind, wired to the cache,
// the shard runner and the formula registry. The CLI is a thin argument
// parser over these.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arc7/orbits.hpp"
#include "arc7/report.hpp"

namespace arc7 {

struct HarnessOptions {
    int jobs = 0;                         // 0: hardware concurrency
    std::uint64_t budget_candidates = 0;  // 0: unlimited
    double budget_seconds = 0;            // 0: unlimited
    std::string cache_path;               // empty: no persistence
    bool resume = false;                  // consume partial cache entries
};

struct JobOutcome {
    std::vector<CountReport> reports;
    Tally tallies;
    bool complete = true;
    bool cache_hit = false;
    bool all_match = true;  // false if any report has match == false
    std::uint64_t elapsed_ms = 0;
    int shard_count = 1;
};

// q must be a prime power; returns (p, s) with p^s = q.
std::pair<int, int> split_prime_power(std::uint64_t q);

// |B_7^lambda|: candidate-stream filtering, or lexicographic backtracking
// with forbidden-point pruning for the trivial type.
JobOutcome run_census(std::uint64_t q, const CycleType& lambda, const HarnessOptions& opt);

// U / Delta_i / intersections census for 4+2+1, 3+3+1, 2+2+1+1+1 and 7.
JobOutcome run_delta_census(std::uint64_t q, const CycleType& lambda, const HarnessOptions& opt);

// Frobenius-invariant Fano planes of the given type.
JobOutcome run_fano_census(std::uint64_t q, const CycleType& lambda, const HarnessOptions& opt);

// Census plus formula comparison over a q-lambda product; ok means every
// comparable row matched.
struct VerifySummary {
    std::vector<CountReport> reports;
    bool ok = true;
    bool complete = true;
};
VerifySummary run_verify(const std::vector<std::uint64_t>& qs,
                         const std::vector<CycleType>& lambdas, const HarnessOptions& opt);

// The five registered arc-count rows evaluated at each q; with enumerate set the
// enumerated counts are attached next to the closed forms.
std::vector<CountReport> run_table(const std::vector<std::uint64_t>& qs, bool enumerate,
                                   const HarnessOptions& opt);

// Registry dump for external tooling.
nlohmann::ordered_json dump_formulas();

// Canonical row order: q ascending, lambda in canonical partition order,
// operation lexicographic.
void sort_reports(std::vector<CountReport>& reports);

}  // namespace arc7
