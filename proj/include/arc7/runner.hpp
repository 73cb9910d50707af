// Sharded parallel execution with wall-clock and candidate budgets.
//
// A job's index space is cut into fixed shards; workers pull shards from an
// atomic queue and tallies merge by exact addition, so totals are identical
// for any worker count. Budgets stop the scheduling of new shards; completed
// shards are reported through a callback so the cache can checkpoint them,
// which is what makes interrupted jobs resumable.

#pragma once

#include <cstdint>
#include <functional>
#include <set>

#include "arc7/arcs.hpp"

namespace arc7 {

struct RunOptions {
    int jobs = 0;                          // 0: hardware concurrency
    int shard_count = 0;                   // 0: derived from jobs and space
    std::uint64_t budget_candidates = 0;   // 0: unlimited
    double budget_seconds = 0;             // 0: unlimited
};

struct RunResult {
    Tally total;
    bool complete = false;
    std::set<int> shards_done;
    int shard_count = 0;
    std::uint64_t elapsed_ms = 0;
};

// fn(begin, end) evaluates one shard of [0, space). already_done shards are
// skipped and carried_total is folded into the result (resume path).
// on_shard_done runs under the merge lock after each shard completes.
RunResult run_sharded(
    std::uint64_t space, const RunOptions& opt, const std::set<int>& already_done,
    const Tally& carried_total,
    const std::function<Tally(std::uint64_t, std::uint64_t)>& fn,
    const std::function<void(const RunResult&)>& on_shard_done = nullptr);

}  // namespace arc7
