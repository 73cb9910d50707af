// arc7: exact census of Frobenius-invariant 7-point configurations in
// projective planes over characteristic-2 fields, checked against the
// closed-form registry.
//
// Subcommands: census, delta-census, fano-census, verify, table,
// dump-formulas. Exit codes: 0 ok, 1 bad arguments, 2 budget exhausted
// (partial results cached), 3 formula mismatch.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "arc7/fano.hpp"
#include "arc7/formulas.hpp"
#include "arc7/harness.hpp"

namespace {

using namespace arc7;

struct OutputOptions {
    std::string format = "table";  // table | json | csv
    std::string out;               // empty: stdout
};

void emit(const std::vector<CountReport>& reports, const OutputOptions& oopt) {
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!oopt.out.empty() && oopt.out != "-") {
        file.open(oopt.out);
        if (!file.is_open()) throw std::runtime_error("cannot open " + oopt.out);
        os = &file;
    }
    if (oopt.format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& r : reports) arr.push_back(r.to_json());
        *os << arr.dump(2) << "\n";
    } else if (oopt.format == "csv") {
        *os << CountReport::csv_header() << "\n";
        for (const auto& r : reports) *os << r.csv_row() << "\n";
    } else {
        char buf[256];
        std::snprintf(buf, sizeof(buf), "%-6s %-15s %-14s %14s %12s %12s %-6s %9s\n", "q",
                      "lambda", "operation", "raw_count", "per_pgl", "formula", "match",
                      "elapsed");
        *os << buf;
        for (const auto& r : reports) {
            std::snprintf(buf, sizeof(buf), "%-6llu %-15s %-14s %14llu %12s %12s %-6s %8llums\n",
                          static_cast<unsigned long long>(r.q), r.lambda.c_str(),
                          r.operation.c_str(), static_cast<unsigned long long>(r.raw_count),
                          r.per_pgl.to_string().c_str(),
                          r.formula_value ? r.formula_value->to_string().c_str() : "-",
                          r.match ? (*r.match ? "yes" : "NO") : "-",
                          static_cast<unsigned long long>(r.elapsed_ms));
            *os << buf;
        }
    }
}

int outcome_exit(const JobOutcome& out) {
    if (!out.complete) return 2;
    if (!out.all_match) return 3;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact 7-point configuration census over GF(2^k) projective planes"};
    app.require_subcommand(1);

    HarnessOptions hopt;
    OutputOptions oopt;
    std::string lambda_s;
    std::vector<std::uint64_t> qs;
    std::vector<std::string> lambda_list;
    std::uint64_t q = 2;

    auto add_common = [&](CLI::App* cmd, bool single_q, bool single_lambda) {
        if (single_q)
            cmd->add_option("--q", q, "field size, a power of 2")->default_val(2);
        else
            cmd->add_option("--q", qs, "field sizes, powers of 2");
        if (single_lambda)
            cmd->add_option("--lambda", lambda_s, "cycle type, e.g. 4+2+1 or e");
        else
            cmd->add_option("--lambda", lambda_list, "cycle types");
        cmd->add_option("--jobs", hopt.jobs, "worker threads (0: all cores)");
        cmd->add_option("--budget-seconds", hopt.budget_seconds, "wall-clock budget");
        cmd->add_option("--budget-candidates", hopt.budget_candidates,
                        "stop after this many candidates");
        cmd->add_option("--cache", hopt.cache_path, "JSON-lines result cache path");
        cmd->add_flag("--resume", hopt.resume, "resume a partially cached job");
        cmd->add_option("--format", oopt.format, "table | json | csv")
            ->check(CLI::IsMember({"table", "json", "csv"}));
        cmd->add_option("--out", oopt.out, "output file (default: stdout)");
    };

    CLI::App* census = app.add_subcommand("census", "count 7-arcs of one cycle type");
    add_common(census, true, true);
    CLI::App* delta = app.add_subcommand("delta-census",
                                         "candidate/defect census for one cycle type");
    add_common(delta, true, true);
    CLI::App* fano = app.add_subcommand("fano-census",
                                        "count invariant Fano planes (all types if no lambda)");
    add_common(fano, true, true);
    CLI::App* verify = app.add_subcommand("verify", "censuses plus formula comparison");
    add_common(verify, false, false);
    bool enumerate = false;
    CLI::App* table = app.add_subcommand("table", "the five arc-count rows at given q");
    add_common(table, false, false);
    table->add_flag("--enumerate", enumerate, "attach enumerated counts");
    CLI::App* dump = app.add_subcommand("dump-formulas", "emit the formula registry as JSON");
    dump->add_option("--out", oopt.out, "output file (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    if (hopt.cache_path.empty())
        if (const char* env = std::getenv("ARC7_CACHE")) hopt.cache_path = env;

    try {
        if (census->parsed()) {
            if (lambda_s.empty()) throw std::invalid_argument("--lambda is required");
            JobOutcome out = run_census(q, CycleType::parse(lambda_s), hopt);
            emit(out.reports, oopt);
            return outcome_exit(out);
        }
        if (delta->parsed()) {
            if (lambda_s.empty()) throw std::invalid_argument("--lambda is required");
            JobOutcome out = run_delta_census(q, CycleType::parse(lambda_s), hopt);
            emit(out.reports, oopt);
            return outcome_exit(out);
        }
        if (fano->parsed()) {
            std::vector<CycleType> lams;
            if (lambda_s.empty())
                lams = CycleType::all_of(7);
            else
                lams.push_back(CycleType::parse(lambda_s));
            std::vector<CountReport> reports;
            int rc = 0;
            for (const CycleType& lam : lams) {
                JobOutcome out = run_fano_census(q, lam, hopt);
                rc = std::max(rc, outcome_exit(out));
                for (auto& r : out.reports) reports.push_back(std::move(r));
            }
            sort_reports(reports);
            emit(reports, oopt);
            return rc;
        }
        if (verify->parsed()) {
            if (qs.empty()) qs = {2};
            std::vector<CycleType> lams;
            if (lambda_list.empty())
                for (const char* s : {"e", "2+2+1+1+1", "3+3+1", "4+2+1", "7"})
                    lams.push_back(CycleType::parse(s));
            else
                for (const auto& s : lambda_list) lams.push_back(CycleType::parse(s));
            VerifySummary sum = run_verify(qs, lams, hopt);
            emit(sum.reports, oopt);
            if (!sum.complete) return 2;
            return sum.ok ? 0 : 3;
        }
        if (table->parsed()) {
            if (qs.empty()) qs = {2, 4, 8, 16};
            emit(run_table(qs, enumerate, hopt), oopt);
            return 0;
        }
        if (dump->parsed()) {
            std::ostream* os = &std::cout;
            std::ofstream file;
            if (!oopt.out.empty() && oopt.out != "-") {
                file.open(oopt.out);
                os = &file;
            }
            *os << dump_formulas().dump(2) << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
