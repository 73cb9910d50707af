// Acceptance suite: every gate below is an exact integer or rational
// equality (tolerance zero) with its runtime ceiling stated inline. One
// verdict line prints per criterion; the process exits nonzero if any gate
// fails. The two long degree-7 runs at q=4 execute under --full (or
// ARC7_ACCEPTANCE_FULL=1) with their own budget, as noted in their lines.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <random>
#include <string>
#include <vector>

#include "arc7/fano.hpp"
#include "arc7/formulas.hpp"
#include "arc7/harness.hpp"
#include "arc7/runner.hpp"
#include "util.hpp"

using namespace arc7;

namespace {

int g_failures = 0;

struct Criterion {
    std::string name;
    bool ok = true;
    std::string detail;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    explicit Criterion(std::string n) : name(std::move(n)) {}
    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
    void expect_eq(std::uint64_t got, std::uint64_t want, const std::string& what) {
        expect(got == want, what + ": got " + std::to_string(got) + ", want " +
                                std::to_string(want));
    }
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
    void finish(double limit_seconds = 0) {
        double sec = seconds();
        if (limit_seconds > 0 && sec > limit_seconds) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + std::string("runtime ") +
                      std::to_string(sec) + "s exceeds " + std::to_string(limit_seconds) + "s";
        }
        std::printf("[%s] %s (%.1fs)%s%s\n", ok ? "PASS" : "FAIL", name.c_str(), sec,
                    detail.empty() ? "" : " -- ", detail.c_str());
        std::fflush(stdout);
        if (!ok) ++g_failures;
    }
};

HarnessOptions opts() {
    HarnessOptions o;
    o.jobs = 0;  // all cores
    return o;
}

std::uint64_t census_arcs(std::uint64_t q, const char* lam, JobOutcome* out_ptr = nullptr) {
    JobOutcome out = run_census(q, CycleType::parse(lam), opts());
    if (out_ptr) *out_ptr = out;
    for (const auto& r : out.reports)
        if (r.operation == "arcs") return r.raw_count;
    return ~std::uint64_t(0);
}

}  // namespace

int main(int argc, char** argv) {
    bool full = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--full") == 0) full = true;
    if (const char* env = std::getenv("ARC7_ACCEPTANCE_FULL"))
        if (env[0] == '1') full = true;

    // 1. The five registered arc-count rows at q = 2, enumerated and compared.
    {
        Criterion c("criterion 1: arc counts at q=2 reproduce all five rows");
        struct Row { const char* lam; std::uint64_t raw; } rows[] = {
            {"e", 0}, {"2+2+1+1+1", 0}, {"3+3+1", 112}, {"4+2+1", 336}, {"7", 2184}};
        for (const auto& row : rows) {
            JobOutcome out;
            std::uint64_t got = census_arcs(2, row.lam, &out);
            c.expect_eq(got, row.raw, std::string("lambda ") + row.lam);
            c.expect(out.all_match, std::string("registry mismatch at ") + row.lam);
            BigRat want = table1_value(row.lam, 2) * BigRat(pgl3_order(2));
            c.expect(want == BigRat(BigInt(static_cast<std::int64_t>(row.raw))),
                     std::string("frozen raw inconsistent with closed form at ") + row.lam);
        }
        c.finish(10.0);
    }

    // 2. Same at q = 4 for the four affordable rows; the 3.8e7-orbit type 7
    //    runs under --full with a one-hour budget.
    {
        Criterion c("criterion 2: arc counts at q=4 (e, 2+2+1+1+1, 3+3+1, 4+2+1)");
        struct Row { const char* lam; std::uint64_t raw; } rows[] = {
            {"e", 0}, {"2+2+1+1+1", 786240}, {"3+3+1", 8346240}, {"4+2+1", 25159680}};
        for (const auto& row : rows) {
            JobOutcome out;
            std::uint64_t got = census_arcs(4, row.lam, &out);
            c.expect_eq(got, row.raw, std::string("lambda ") + row.lam);
            c.expect(out.all_match, std::string("registry mismatch at ") + row.lam);
        }
        c.expect(table1_value("2+2+1+1+1", 4) == BigRat(BigInt(13)), "per-PGL value 13");
        c.finish(600.0);
    }
    {
        Criterion c(full ? "criterion 2 (opt-in): arc count at q=4, lambda 7"
                         : "criterion 2 (opt-in, skipped; enable with --full): lambda 7 at q=4");
        if (full) {
            HarnessOptions o = opts();
            o.budget_seconds = 3600;
            JobOutcome out = run_census(4, CycleType::parse("7"), o);
            c.expect(out.complete, "budget exhausted");
            for (const auto& r : out.reports)
                if (r.operation == "arcs") c.expect_eq(r.raw_count, 38283840, "lambda 7");
            c.expect(out.all_match, "registry mismatch");
            c.finish(3600.0);
        } else {
            c.finish();
        }
    }

    // 3. Backtracking enumeration of rational 7-arcs at q = 8.
    {
        Criterion c("criterion 3: rational 7-arc count at q=8 by backtracking");
        std::uint64_t got = census_arcs(8, "e");
        c.expect_eq(got, 3924480, "arcs");  // pgl3(8) * 1200 / 5040
        c.finish(300.0);
    }

    // 4. Ordered-count consistency with the degree-4 bracket formula, and
    //    the direction of its correction term.
    {
        Criterion c("criterion 4: ordered e-count consistency at q=8 fixes a(q)=1");
        BigRat ordered = BigRat(BigInt(5040)) * table1_value("e", 8) * BigRat(pgl3_order(8));
        c.expect(ordered.is_integer(), "ordered count not integral");
        c.expect(ordered.num() == BigInt(std::int64_t(19779379200)), "ordered count value");
        c.expect(ordered.num() == glynn_b7e(8, 1), "a(q)=1 must match");
        c.expect(!(ordered.num() == glynn_b7e(8, 0)), "a(q)=0 must NOT match");
        std::printf("       note: bracket count matches only with the correction applied in "
                    "characteristic 2 (a=1): %s vs a=0: %s\n",
                    glynn_b7e(8, 1).to_string().c_str(), glynn_b7e(8, 0).to_string().c_str());
        c.finish(10.0);
    }

    // 5. The Fano constant for single-orbit planes.
    {
        Criterion c("criterion 5: fano census at q=2, lambda 7");
        JobOutcome out = run_fano_census(2, CycleType::parse("7"), opts());
        std::uint64_t fano = 0, spot = 0;
        for (const auto& r : out.reports) {
            if (r.operation == "fano") fano = r.raw_count;
            if (r.operation == "fano_spot_mismatch") spot = r.raw_count;
        }
        c.expect_eq(fano, 48, "fano orbits");  // (2/7) * 168
        c.expect(BigRat(BigInt(48), pgl3_order(2)) == BigRat(BigInt(2), BigInt(7)),
                 "normalization 2/7");
        c.expect_eq(fano * 7, 336, "point-level count");
        c.expect_eq(spot, 0, "spot verification");
        c.finish(1.0);
    }
    {
        Criterion c(full ? "criterion 5 (opt-in): fano census at q=4, lambda 7"
                         : "criterion 5 (opt-in, skipped; enable with --full): q=4 lambda 7");
        if (full) {
            HarnessOptions o = opts();
            o.budget_seconds = 1800;
            JobOutcome out = run_fano_census(4, CycleType::parse("7"), o);
            c.expect(out.complete, "budget exhausted");
            for (const auto& r : out.reports)
                if (r.operation == "fano")
                    c.expect_eq(r.raw_count, 17280, "constant 2/7 of |PGL| at q=4");
            c.finish(1800.0);
        } else {
            c.finish();
        }
    }

    // 6. Zero certificates for the ten cycle types that admit no Fano plane,
    //    exhaustively at q = 2 and q = 4.
    {
        Criterion c("criterion 6: fano zero certificates at q=2 and q=4");
        for (std::uint64_t q : {std::uint64_t(2), std::uint64_t(4)}) {
            for (const CycleType& lam : CycleType::all_of(7)) {
                const std::string s = lam.str();
                if (s == "7" || s == "4+2+1" || s == "3+3+1" || s == "2+2+1+1+1" ||
                    s == "1+1+1+1+1+1+1")
                    continue;
                JobOutcome out = run_fano_census(q, lam, opts());
                for (const auto& r : out.reports)
                    if (r.operation == "fano")
                        c.expect_eq(r.raw_count, 0,
                                    "q=" + std::to_string(q) + " lambda " + s);
            }
        }
        c.finish(1200.0);
    }

    // 7. Generating-4-arc bijections with collision detection, both fields.
    {
        Criterion c("criterion 7: fano bijections at q=2 and q=4");
        struct Row { const char* lam; std::uint64_t q2; std::uint64_t q4; } rows[] = {
            {"4+2+1", 42, 15120}, {"3+3+1", 56, 20160}, {"2+2+1+1+1", 21, 7560}};
        for (const auto& row : rows)
            for (std::uint64_t q : {std::uint64_t(2), std::uint64_t(4)}) {
                CycleType lam = CycleType::parse(row.lam);
                auto [p, s] = split_prime_power(q);
                const Field& f = make_field(p, s, lam.lcm_parts());
                Plane pl(f);
                BijectionReport rep = fano_bijection_generate(pl, lam);
                std::uint64_t want = q == 2 ? row.q2 : row.q4;
                c.expect_eq(rep.four_arcs, want,
                            "4-arcs q=" + std::to_string(q) + " " + row.lam);
                c.expect(rep.injective, "injectivity " + std::string(row.lam));
                c.expect_eq(rep.invalid_images, 0, "image validity " + std::string(row.lam));
                JobOutcome out = run_fano_census(q, lam, opts());
                for (const auto& r : out.reports)
                    if (r.operation == "fano")
                        c.expect_eq(r.raw_count, want,
                                    "direct census q=" + std::to_string(q) + " " + row.lam);
            }
        // the 4+2+1 count at q=2 equals (1/4)|PGL|
        c.expect(BigRat(BigInt(42)) == BigRat(pgl3_order(2), BigInt(4)), "42 = |PGL|/4");
        c.finish(600.0);
    }

    // 8. The candidate/defect census against every registered expression,
    //    with the union identity checked pointwise on every candidate.
    {
        Criterion c("criterion 8: delta census matches all registered expressions at q=2,4");
        for (std::uint64_t q : {std::uint64_t(2), std::uint64_t(4)})
            for (const char* lam_s : {"4+2+1", "3+3+1", "2+2+1+1+1", "7"}) {
                JobOutcome out = run_delta_census(q, CycleType::parse(lam_s), opts());
                c.expect(out.all_match,
                         "expression mismatch q=" + std::to_string(q) + " " + lam_s);
                c.expect_eq(out.tallies.get("union_mismatch"), 0,
                            "union identity q=" + std::to_string(q) + " " + lam_s);
                c.expect_eq(out.tallies.get("spot_mismatch"), 0,
                            "classifier spot check q=" + std::to_string(q) + " " + lam_s);
                if (std::string(lam_s) == "4+2+1") {
                    // the two decisive triple intersections
                    std::uint64_t sym = 8;
                    BigInt d134 = find_formula("delta134/4+2+1")->expected_raw(q, sym);
                    c.expect(BigInt(static_cast<std::int64_t>(
                                 out.tallies.get("delta134"))) == d134,
                             "triple 134 at q=" + std::to_string(q));
                    c.expect_eq(out.tallies.get("delta234"), 0,
                                "triple 234 empty at q=" + std::to_string(q));
                    c.expect_eq(out.tallies.get("delta12"), 0,
                                "pair 12 empty at q=" + std::to_string(q));
                }
            }
        c.finish(600.0);
    }

    // 9. Ordered/unordered configuration double count at q = 2.
    {
        Criterion c("criterion 9: configuration product identity at q=2, all types");
        for (const CycleType& lam : CycleType::all_of(7)) {
            auto [p, s] = split_prime_power(2);
            const Field& f = make_field(p, s, lam.lcm_parts());
            Plane pl(f);
            ConfProductReport rep = conf_product_check(pl, lam);
            c.expect(rep.ok, "identity at " + lam.str());
            if (lam.str() == "2+2+1+1+1") {
                c.expect(rep.ordered == BigInt(8820), "ordered side 8820");
                c.expect_eq(rep.unordered, 735, "unordered side 735");
            }
        }
        c.finish(60.0);
    }

    // 10. Algebra and geometry property suites.
    {
        Criterion c("criterion 10: algebra/geometry property suites");
        // field axioms, exhaustive for every context up to 256 elements
        for (auto [p, s, L] : std::vector<std::array<int, 3>>{
                 {2, 1, 8}, {2, 2, 4}, {2, 4, 2}, {2, 2, 3}, {3, 1, 5}, {5, 1, 3}}) {
            const Field& f = make_field(p, s, L);
            std::uint64_t bad = 0;
            for (std::uint64_t i = 0; i < f.size(); ++i)
                for (std::uint64_t j = 0; j < f.size(); ++j) {
                    Fe a = f.from_index(i), b = f.from_index(j);
                    bad += !(f.mul(a, b) == f.mul(b, a));
                    bad += !(f.frobenius(f.mul(a, b)) ==
                             f.mul(f.frobenius(a), f.frobenius(b)));
                    bad += !(f.frobenius(f.add(a, b)) ==
                             f.add(f.frobenius(a), f.frobenius(b)));
                    if (j) bad += !(f.mul(f.mul(a, b), f.inv(b)) == a);
                }
            for (std::uint64_t i = 0; i < f.size(); ++i)
                for (std::uint64_t j = 0; j < f.size(); ++j)
                    for (std::uint64_t k = 0; k < f.size(); ++k) {
                        Fe a = f.from_index(i), b = f.from_index(j), cfe = f.from_index(k);
                        bad += !(f.mul(f.mul(a, b), cfe) == f.mul(a, f.mul(b, cfe)));
                        bad += !(f.mul(a, f.add(b, cfe)) ==
                                 f.add(f.mul(a, b), f.mul(a, cfe)));
                    }
            c.expect_eq(bad, 0, "axioms in GF(" + std::to_string(f.size()) + ")");
        }
        // join/meet/incidence duality, exhaustive over P2(F4)
        {
            const Field& f = make_field(2, 1, 2);
            Plane pl(f);
            std::uint64_t bad = 0;
            std::vector<Pt> pts;
            for (std::uint64_t i = 0; i < pl.point_count(); ++i) pts.push_back(pl.point_at(i));
            for (std::size_t i = 0; i < pts.size(); ++i)
                for (std::size_t j = i + 1; j < pts.size(); ++j) {
                    Ln l = pl.join(pts[i], pts[j]);
                    bad += !pl.incident(pts[i], l);
                    bad += !pl.incident(pts[j], l);
                    // duality: meet on the dual side is the same cross product
                    Pt dual = pl.meet(Ln{pts[i].x, pts[i].y, pts[i].z},
                                      Ln{pts[j].x, pts[j].y, pts[j].z});
                    bad += !(dual == Pt{l.a, l.b, l.c});
                    for (std::size_t k = 0; k < pts.size(); ++k)
                        bad += pl.collinear(pts[i], pts[j], pts[k]) !=
                               pl.incident(pts[k], l);
                }
            c.expect_eq(bad, 0, "duality over P2(F4)");
        }
        // symmetric arc test vs definition, exhaustive at q=2
        {
            std::uint64_t bad = 0;
            for (const CycleType& lam : CycleType::all_of(7)) {
                const Field& f = make_field(2, 1, lam.lcm_parts());
                Plane pl(f);
                CandidateStream cs(pl, lam);
                cs.for_each(0, cs.outer_space(), [&](const Candidate& cand) {
                    bad += is_arc(pl, cand.to_vector()) !=
                           is_arc_symmetric(pl, cand, cs.plan());
                });
            }
            c.expect_eq(bad, 0, "symmetric arc test");
        }
        // PGL invariance: 100 random matrices per field
        {
            std::mt19937_64 rng(424242);
            for (std::uint64_t q : {std::uint64_t(2), std::uint64_t(4)}) {
                auto [p, s] = split_prime_power(q);
                const Field& f = make_field(p, s, 7);
                Plane pl(f);
                CandidateStream cs(pl, CycleType::parse("7"));
                std::vector<Pt> arc;
                for (std::uint64_t b = 0; b < cs.outer_space() && arc.empty(); b += 65536)
                    cs.for_each(b, b + 65536, [&](const Candidate& cand) {
                        if (arc.empty() && is_arc_symmetric(pl, cand, cs.plan()))
                            arc = cand.to_vector();
                    });
                std::uint64_t bad = 0;
                for (int rep = 0; rep < 100; ++rep) {
                    testutil::Mat3 g = testutil::random_pgl(pl, rng);
                    std::vector<Pt> image;
                    for (const Pt& pt : arc) image.push_back(testutil::apply(pl, g, pt));
                    bad += !is_arc(pl, image);
                    bad += !(cycle_type_of(pl, image) == CycleType::parse("7"));
                }
                c.expect_eq(bad, 0, "PGL invariance at q=" + std::to_string(q));
            }
        }
        c.finish(300.0);
    }

    std::printf("%s: %d criterion(s) failed\n", g_failures ? "FAILURE" : "SUCCESS", g_failures);
    return g_failures ? 1 : 0;
}
