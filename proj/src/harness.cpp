#include "arc7/harness.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "arc7/fano.hpp"
#include "arc7/formulas.hpp"
#include "arc7/runner.hpp"

namespace arc7 {

std::pair<int, int> split_prime_power(std::uint64_t q) {
    if (q < 2) throw std::invalid_argument("q must be a prime power >= 2");
    for (int p = 2; static_cast<std::uint64_t>(p) <= q; ++p) {
        bool prime = true;
        for (int d = 2; d * d <= p; ++d)
            if (p % d == 0) { prime = false; break; }
        if (!prime || q % p != 0) continue;
        std::uint64_t t = q;
        int s = 0;
        while (t % p == 0) { t /= p; ++s; }
        if (t != 1) throw std::invalid_argument("q is not a prime power");
        return {p, s};
    }
    throw std::invalid_argument("q is not a prime power");
}

namespace {

struct JobContext {
    const Field* field = nullptr;
    std::uint64_t q = 0;
    int p = 0, s = 0;
    CycleType lambda;
};

JobContext make_context(std::uint64_t q, const CycleType& lambda) {
    JobContext ctx;
    auto [p, s] = split_prime_power(q);
    ctx.q = q;
    ctx.p = p;
    ctx.s = s;
    ctx.lambda = lambda;
    ctx.field = &make_field(p, s, lambda.lcm_parts());
    return ctx;
}

CountReport job_report(const JobContext& ctx, const std::string& operation, std::uint64_t raw,
                       const std::string& counting, const std::string& formula_key,
                       const JobOutcome& out) {
    CountReport r = make_report(ctx.q, ctx.p, ctx.s, ctx.lambda.str(), operation, raw, counting,
                                ctx.lambda.symmetry_factor(), formula_key);
    r.elapsed_ms = out.elapsed_ms;
    r.shard_count = out.shard_count;
    return r;
}

// Generic drive: cache lookup, shard run with checkpoint appends, report
// assembly through build_reports(tallies).
template <typename ShardFn, typename BuildFn>
JobOutcome drive(const JobContext& ctx, const std::string& operation, std::uint64_t space,
                 const HarnessOptions& opt, ShardFn&& shard_fn, BuildFn&& build_reports) {
    JobOutcome out;
    Cache cache(opt.cache_path);
    std::set<int> done;
    Tally carried;
    int resumed_shards = 0;
    if (auto hit = cache.lookup(ctx.q, ctx.lambda.str(), operation)) {
        if (hit->complete) {
            out.reports = hit->reports;
            out.tallies = hit->tallies;
            out.elapsed_ms = hit->elapsed_ms;
            out.shard_count = hit->shard_count;
            out.cache_hit = true;
            for (const auto& r : out.reports)
                if (r.match && !*r.match) out.all_match = false;
            return out;
        }
        if (opt.resume) {
            done = hit->done;
            carried = hit->tallies;
            resumed_shards = hit->shard_count;  // reuse the original grid
        }
    }

    RunOptions ropt;
    ropt.jobs = opt.jobs;
    ropt.budget_candidates = opt.budget_candidates;
    ropt.budget_seconds = opt.budget_seconds;
    ropt.shard_count = resumed_shards;

    RunResult res = run_sharded(space, ropt, done, carried, shard_fn,
                                [&](const RunResult& partial) {
                                    CacheEntry e;
                                    e.complete = false;
                                    e.shard_count = partial.shard_count;
                                    e.done = partial.shards_done;
                                    e.tallies = partial.total;
                                    e.elapsed_ms = partial.elapsed_ms;
                                    cache.append(ctx.q, ctx.lambda.str(), operation, e);
                                });

    out.tallies = res.total;
    out.complete = res.complete;
    out.elapsed_ms = res.elapsed_ms;
    out.shard_count = res.shard_count;
    out.reports = build_reports(out);
    sort_reports(out.reports);
    for (const auto& r : out.reports)
        if (r.match && !*r.match) out.all_match = false;

    CacheEntry e;
    e.complete = res.complete;
    e.shard_count = res.shard_count;
    e.done = res.shards_done;
    e.tallies = res.total;
    e.elapsed_ms = res.elapsed_ms;
    if (res.complete) e.reports = out.reports;
    cache.append(ctx.q, ctx.lambda.str(), operation, e);
    return out;
}

}  // namespace

JobOutcome run_census(std::uint64_t q, const CycleType& lambda, const HarnessOptions& opt) {
    JobContext ctx = make_context(q, lambda);
    Plane pl(*ctx.field);
    if (lambda.is_trivial()) {
        EBacktrack bt(pl);
        return drive(ctx, "census", bt.point_count(), opt,
                     [&](std::uint64_t b, std::uint64_t e) {
                         Tally t = bt.count_shard(b, e);
                         t.add("candidates", t.get("nodes"));  // budget accounting
                         return t;
                     },
                     [&](const JobOutcome& out) {
                         std::vector<CountReport> reports;
                         reports.push_back(job_report(ctx, "arcs", out.tallies.get("arcs"),
                                                      "sets", "arcs/" + lambda.str(), out));
                         reports.push_back(
                             job_report(ctx, "nodes", out.tallies.get("nodes"), "sets", "", out));
                         return reports;
                     });
    }
    CandidateStream cs(pl, lambda);
    return drive(ctx, "census", cs.outer_space(), opt,
                 [&](std::uint64_t b, std::uint64_t e) { return count_arcs_shard(pl, cs, b, e); },
                 [&](const JobOutcome& out) {
                     std::vector<CountReport> reports;
                     reports.push_back(job_report(ctx, "arcs", out.tallies.get("arcs"), "sets",
                                                  "arcs/" + lambda.str(), out));
                     reports.push_back(job_report(ctx, "candidates",
                                                  out.tallies.get("candidates"), "sets",
                                                  lambda.str() == "7" ? "u/7" : "", out));
                     return reports;
                 });
}

JobOutcome run_delta_census(std::uint64_t q, const CycleType& lambda,
                            const HarnessOptions& opt) {
    JobContext ctx = make_context(q, lambda);
    Plane pl(*ctx.field);
    CandidateStream cs(pl, lambda);
    bool set_counted = lambda.str() == "7";
    return drive(ctx, "delta-census", cs.outer_space(), opt,
                 [&](std::uint64_t b, std::uint64_t e) { return delta_census_shard(pl, cs, b, e); },
                 [&](const JobOutcome& out) {
                     std::vector<CountReport> reports;
                     for (const auto& [key, value] : out.tallies.counters) {
                         std::string counting =
                             set_counted || key == "arcs" || key == "candidates" ? "sets"
                                                                                 : "tuples";
                         std::string fkey = key + "/" + lambda.str();
                         if (key == "arcs") fkey = "arcs/" + lambda.str();
                         if (!find_formula(fkey)) fkey.clear();
                         reports.push_back(job_report(ctx, key, value, counting, fkey, out));
                     }
                     return reports;
                 });
}

JobOutcome run_fano_census(std::uint64_t q, const CycleType& lambda, const HarnessOptions& opt) {
    JobContext ctx = make_context(q, lambda);
    Plane pl(*ctx.field);
    CandidateStream cs(pl, lambda);
    return drive(ctx, "fano-census", cs.outer_space(), opt,
                 [&](std::uint64_t b, std::uint64_t e) { return fano_census_shard(pl, cs, b, e); },
                 [&](const JobOutcome& out) {
                     std::vector<CountReport> reports;
                     reports.push_back(job_report(ctx, "fano", out.tallies.get("fano"), "sets",
                                                  "fano/" + lambda.str(), out));
                     if (lambda.str() == "7") {
                         reports.push_back(job_report(ctx, "on_line",
                                                      out.tallies.get("on_line"), "sets",
                                                      "delta1/7", out));
                         reports.push_back(job_report(ctx, "fano3", out.tallies.get("fano3"),
                                                      "sets", "", out));
                         reports.push_back(job_report(ctx, "fano5", out.tallies.get("fano5"),
                                                      "sets", "", out));
                         reports.push_back(job_report(ctx, "fano_spot_mismatch",
                                                      out.tallies.get("fano_spot_mismatch"),
                                                      "sets", "", out));
                     }
                     return reports;
                 });
}

VerifySummary run_verify(const std::vector<std::uint64_t>& qs,
                         const std::vector<CycleType>& lambdas, const HarnessOptions& opt) {
    VerifySummary sum;
    for (std::uint64_t q : qs)
        for (const CycleType& lam : lambdas) {
            JobOutcome out = run_census(q, lam, opt);
            sum.ok = sum.ok && out.all_match;
            sum.complete = sum.complete && out.complete;
            for (auto& r : out.reports) sum.reports.push_back(std::move(r));
        }
    sort_reports(sum.reports);
    return sum;
}

std::vector<CountReport> run_table(const std::vector<std::uint64_t>& qs, bool enumerate,
                                   const HarnessOptions& opt) {
    static const char* rows[] = {"7", "4+2+1", "3+3+1", "2+2+1+1+1", "e"};
    std::vector<CountReport> out;
    for (std::uint64_t q : qs) {
        auto [p, s] = split_prime_power(q);
        for (const char* lam_s : rows) {
            CycleType lam = CycleType::parse(lam_s);
            CountReport r;
            r.q = q;
            r.p = p;
            r.s = s;
            r.lambda = lam.str();
            r.operation = "table";
            r.counting = "sets";
            r.symmetry = lam.symmetry_factor();
            r.formula_key = "arcs/" + lam.str();
            r.formula_value = table1_value(lam.str(), q);
            if (enumerate) {
                JobOutcome res = run_census(q, lam, opt);
                for (const auto& rr : res.reports)
                    if (rr.operation == "arcs") {
                        r.raw_count = rr.raw_count;
                        r.per_pgl = rr.per_pgl;
                        r.match = rr.match;
                        r.elapsed_ms = rr.elapsed_ms;
                        r.shard_count = rr.shard_count;
                    }
            } else {
                // formula-only row: raw shows the predicted count when it
                // fits the integer field; the exact value is formula_value
                r.per_pgl = *r.formula_value;
                BigInt predicted =
                    find_formula("arcs/" + lam.str())->expected_raw(q, lam.symmetry_factor());
                try {
                    r.raw_count = static_cast<std::uint64_t>(predicted.to_int64());
                } catch (const std::overflow_error&) {
                    r.raw_count = 0;
                }
            }
            out.push_back(std::move(r));
        }
    }
    sort_reports(out);
    return out;
}

namespace {

std::string render_expression(const std::vector<BigInt>& poly, const BigInt& den) {
    std::string num;
    int terms = 0;
    for (std::size_t k = poly.size(); k-- > 0;) {
        if (poly[k].is_zero()) continue;
        BigInt c = poly[k];
        bool neg = c.is_negative();
        if (neg) c = -c;
        num += num.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        bool unit = c == BigInt(1) && k > 0;
        if (!unit) num += c.to_string();
        if (k > 0) {
            if (!unit) num += "*";
            num += k == 1 ? "q" : "q^" + std::to_string(k);
        }
        ++terms;
    }
    if (num.empty()) num = "0";
    if (den == BigInt(1)) return num;
    if (terms > 1) num = "(" + num + ")";
    return num + "/" + den.to_string();
}

}  // namespace

nlohmann::ordered_json dump_formulas() {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const FormulaEntry& e : formula_registry()) {
        nlohmann::ordered_json j;
        j["key"] = e.key;
        j["lambda"] = e.lambda;
        j["expression"] = render_expression(e.poly, e.den);
        switch (e.norm) {
            case Norm::raw: j["normalization"] = "raw"; break;
            case Norm::per_pgl: j["normalization"] = "per_pgl"; break;
            case Norm::per_pgl_times_symmetry:
                j["normalization"] = "per_pgl_times_symmetry";
                break;
        }
        nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
        for (const BigInt& c : e.poly) coeffs.push_back(c.to_string());
        j["poly_ascending"] = coeffs;
        j["den"] = e.den.to_string();
        j["anchor"] = e.anchor;
        arr.push_back(j);
    }
    return arr;
}

void sort_reports(std::vector<CountReport>& reports) {
    auto canon = CycleType::all_of(7);
    auto lam_index = [&](const std::string& lam) {
        for (std::size_t i = 0; i < canon.size(); ++i)
            if (canon[i].str() == lam) return i;
        return canon.size();
    };
    std::stable_sort(reports.begin(), reports.end(),
                     [&](const CountReport& a, const CountReport& b) {
                         if (a.q != b.q) return a.q < b.q;
                         auto ia = lam_index(a.lambda), ib = lam_index(b.lambda);
                         if (ia != ib) return ia < ib;
                         return a.operation < b.operation;
                     });
}

}  // namespace arc7
