#include "arc7/runner.hpp"

#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>
#include <vector>

namespace arc7 {

RunResult run_sharded(std::uint64_t space, const RunOptions& opt,
                      const std::set<int>& already_done, const Tally& carried_total,
                      const std::function<Tally(std::uint64_t, std::uint64_t)>& fn,
                      const std::function<void(const RunResult&)>& on_shard_done) {
    using clock = std::chrono::steady_clock;
    auto t0 = clock::now();

    int jobs = opt.jobs > 0 ? opt.jobs : static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    int shards = opt.shard_count;
    if (shards <= 0) shards = static_cast<int>(std::min<std::uint64_t>(
        space ? space : 1, static_cast<std::uint64_t>(std::max(64, jobs * 8))));
    if (shards < 1) shards = 1;

    RunResult res;
    res.shard_count = shards;
    res.total = carried_total;
    res.shards_done = already_done;

    std::vector<int> todo;
    for (int i = 0; i < shards; ++i)
        if (!already_done.count(i)) todo.push_back(i);

    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};
    std::mutex merge_mu;

    auto budget_hit = [&]() {
        if (opt.budget_seconds > 0) {
            double sec = std::chrono::duration<double>(clock::now() - t0).count();
            if (sec >= opt.budget_seconds) return true;
        }
        if (opt.budget_candidates > 0 &&
            res.total.get("candidates") >= opt.budget_candidates)
            return true;
        return false;
    };

    auto worker = [&]() {
        while (!stop.load(std::memory_order_relaxed)) {
            std::size_t k = next.fetch_add(1);
            if (k >= todo.size()) return;
            int shard = todo[k];
            std::uint64_t begin = space * static_cast<std::uint64_t>(shard) / shards;
            std::uint64_t end = space * (static_cast<std::uint64_t>(shard) + 1) / shards;
            Tally t = fn(begin, end);
            std::lock_guard<std::mutex> lock(merge_mu);
            res.total.merge(t);
            res.shards_done.insert(shard);
            res.elapsed_ms = static_cast<std::uint64_t>(
                std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0).count());
            if (on_shard_done) on_shard_done(res);
            if (budget_hit()) stop.store(true, std::memory_order_relaxed);
        }
    };

    std::vector<std::thread> pool;
    int nthreads = std::min<int>(jobs, static_cast<int>(todo.size()));
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    res.elapsed_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0).count());
    res.complete = res.shards_done.size() == static_cast<std::size_t>(shards);
    return res;
}

}  // namespace arc7
