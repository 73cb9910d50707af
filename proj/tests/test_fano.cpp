#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "arc7/fano.hpp"
#include "arc7/formulas.hpp"
#include "util.hpp"

using namespace arc7;

namespace {

Pt mk(const Field& f, std::uint32_t x, std::uint32_t y, std::uint32_t z) {
    return Pt{Fe{x, f.id()}, Fe{y, f.id()}, Fe{z, f.id()}};
}

std::vector<Pt> projective_frame(const Plane& pl) {
    const Field& f = pl.field();
    return {mk(f, 1, 0, 0), mk(f, 0, 1, 0), mk(f, 0, 0, 1), mk(f, 1, 1, 1)};
}

std::uint64_t fano_count(int p, int s, const CycleType& lam) {
    const Field& f = make_field(p, s, lam.lcm_parts());
    Plane pl(f);
    CandidateStream cs(pl, lam);
    return fano_census_shard(pl, cs, 0, cs.outer_space()).get("fano");
}

}  // namespace

TEST_CASE("diagonal points of the frame over F2") {
    const Field& f = make_field(2, 1, 1);
    Plane pl(f);
    auto frame = projective_frame(pl);
    std::array<Pt, 4> lab = {frame[0], frame[1], frame[2], frame[3]};
    auto d = diagonal_points(pl, lab);
    std::set<std::array<std::uint32_t, 3>> ds;
    for (const Pt& q : d) ds.insert({q.x.v, q.y.v, q.z.v});
    std::set<std::array<std::uint32_t, 3>> expect = {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
    CHECK(ds == expect);
    // characteristic 2: the three diagonals are collinear
    CHECK(pl.collinear(d[0], d[1], d[2]));
}

TEST_CASE("diagonal 3-set is labeling independent") {
    const Field& f = make_field(2, 1, 2);
    Plane pl(f);
    auto frame = projective_frame(pl);
    std::array<Pt, 4> lab = {frame[0], frame[1], frame[2], frame[3]};
    std::sort(lab.begin(), lab.end(), pt_less);
    auto base = diagonal_points(pl, lab);
    std::set<std::array<std::uint32_t, 3>> base_set;
    for (const Pt& q : base) base_set.insert({q.x.v, q.y.v, q.z.v});
    std::array<int, 4> idx = {0, 1, 2, 3};
    do {
        std::array<Pt, 4> perm = {frame[idx[0]], frame[idx[1]], frame[idx[2]], frame[idx[3]]};
        auto d = diagonal_points(pl, perm);
        std::set<std::array<std::uint32_t, 3>> got;
        for (const Pt& q : d) got.insert({q.x.v, q.y.v, q.z.v});
        CHECK(got == base_set);
    } while (std::next_permutation(idx.begin(), idx.end()));
}

TEST_CASE("diagonals are not collinear in odd characteristic") {
    const Field& f = make_field(3, 1, 1);
    Plane pl(f);
    auto frame = projective_frame(pl);
    std::array<Pt, 4> lab = {frame[0], frame[1], frame[2], frame[3]};
    auto d = diagonal_points(pl, lab);
    CHECK_FALSE(pl.collinear(d[0], d[1], d[2]));
    CHECK_THROWS_AS(generate_fano(pl, std::span<const Pt>(frame.data(), 4)), std::domain_error);
}

TEST_CASE("diagonal points require a 4-arc") {
    const Field& f = make_field(2, 1, 1);
    Plane pl(f);
    std::array<Pt, 4> degenerate = {mk(f, 1, 0, 0), mk(f, 0, 1, 0), mk(f, 1, 1, 0),
                                    mk(f, 0, 0, 1)};
    CHECK_THROWS_AS(diagonal_points(pl, degenerate), std::invalid_argument);
}

TEST_CASE("the frame generates the whole rational plane over F2") {
    const Field& f = make_field(2, 1, 1);
    Plane pl(f);
    auto frame = projective_frame(pl);
    FanoPlane P = generate_fano(pl, frame);
    std::set<std::array<std::uint32_t, 3>> got;
    for (const Pt& q : P.points) got.insert({q.x.v, q.y.v, q.z.v});
    CHECK(got.size() == 7);
    CHECK(is_fano(pl, P.points));
    CHECK(is_fano_by_joins(pl, P.points));
    CHECK(fano_cycle_type(pl, P).is_trivial());
}

TEST_CASE("P2(F2) has exactly 7 4-arcs and each regenerates it") {
    const Field& f = make_field(2, 1, 1);
    Plane pl(f);
    std::vector<Pt> pts;
    for (std::uint64_t i = 0; i < 7; ++i) pts.push_back(pl.point_at(i));
    FanoPlane whole = generate_fano(pl, projective_frame(pl));
    auto whole_sig = fano_signature(whole);
    int four_arcs = 0;
    for (int a = 0; a < 7; ++a)
        for (int b = a + 1; b < 7; ++b)
            for (int c = b + 1; c < 7; ++c)
                for (int d = c + 1; d < 7; ++d) {
                    std::array<Pt, 4> sel = {pts[a], pts[b], pts[c], pts[d]};
                    bool arc4 = is_arc(pl, std::span<const Pt>(sel.data(), 4));
                    if (!arc4) continue;
                    ++four_arcs;
                    FanoPlane P = generate_fano(pl, std::span<const Pt>(sel.data(), 4));
                    CHECK(fano_signature(P) == whole_sig);
                }
    CHECK(four_arcs == 7);  // complements of the 7 lines
}

TEST_CASE("idempotence: every 4-arc inside a generated plane regenerates it") {
    const Field& f = make_field(2, 1, 2);
    Plane pl(f);
    // a 4-arc with degree-2 points: one degree-2 orbit pair plus two rationals
    OrbitClassIndex idx = orbit_classes(pl, 2);
    for (const Pt& rep : idx.classes) {
        Orbit o = orbit_of(pl, rep);
        for (std::uint64_t ci = 0; ci + 1 < pl.subplane_point_count(1); ++ci) {
            std::array<Pt, 4> sel = {o.members[0], o.members[1], pl.subplane_point_at(1, ci),
                                     pl.subplane_point_at(1, ci + 1)};
            if (!is_arc(pl, std::span<const Pt>(sel.data(), 4))) continue;
            FanoPlane P = generate_fano(pl, std::span<const Pt>(sel.data(), 4));
            auto sig = fano_signature(P);
            // all 4-arc subsets of P regenerate P
            for (int a = 0; a < 7; ++a)
                for (int b = a + 1; b < 7; ++b)
                    for (int c = b + 1; c < 7; ++c)
                        for (int d = c + 1; d < 7; ++d) {
                            std::array<Pt, 4> sub = {P.points[a], P.points[b], P.points[c],
                                                     P.points[d]};
                            if (!is_arc(pl, std::span<const Pt>(sub.data(), 4))) continue;
                            FanoPlane Q = generate_fano(pl, std::span<const Pt>(sub.data(), 4));
                            CHECK(fano_signature(Q) == sig);
                        }
            return;  // one instance suffices here; censuses cover the rest
        }
    }
    FAIL("no degree-2 4-arc found");
}

TEST_CASE("every 4-arc of the rational plane over F4 closes into a Fano plane") {
    const Field& f = make_field(2, 2, 1);  // base field F4, all points rational
    Plane pl(f);
    std::vector<Pt> pts;
    for (std::uint64_t i = 0; i < pl.point_count(); ++i) pts.push_back(pl.point_at(i));
    REQUIRE(pts.size() == 21);
    std::uint64_t four_arcs = 0, closed = 0;
    for (std::size_t a = 0; a < pts.size(); ++a)
        for (std::size_t b = a + 1; b < pts.size(); ++b)
            for (std::size_t c = b + 1; c < pts.size(); ++c)
                for (std::size_t d = c + 1; d < pts.size(); ++d) {
                    std::array<Pt, 4> sel = {pts[a], pts[b], pts[c], pts[d]};
                    if (!is_arc(pl, std::span<const Pt>(sel.data(), 4))) continue;
                    ++four_arcs;
                    FanoPlane P = generate_fano(pl, std::span<const Pt>(sel.data(), 4));
                    closed += is_fano(pl, P.points) && is_fano_by_joins(pl, P.points);
                }
    CHECK(four_arcs == closed);
    // ordered 4-arcs are a torsor under PGL: 4! * four_arcs = |PGL(3,F4)|
    CHECK(four_arcs * 24 == 60480);
}

TEST_CASE("generation commutes with Frobenius") {
    const Field& f = make_field(2, 1, 4);
    Plane pl(f);
    std::mt19937_64 rng(7);
    int done = 0;
    while (done < 20) {
        std::array<Pt, 4> sel;
        for (Pt& p : sel) p = pl.point_at(rng() % pl.point_count());
        bool distinct = true;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) distinct = distinct && !(sel[i] == sel[j]);
        if (!distinct || !is_arc(pl, std::span<const Pt>(sel.data(), 4))) continue;
        FanoPlane P = generate_fano(pl, std::span<const Pt>(sel.data(), 4));
        std::array<Pt, 4> fsel;
        for (int i = 0; i < 4; ++i) fsel[i] = pl.frobenius(sel[i]);
        FanoPlane FP = generate_fano(pl, std::span<const Pt>(fsel.data(), 4));
        std::array<Pt, 7> mapped;
        for (int i = 0; i < 7; ++i) mapped[i] = pl.frobenius(P.points[i]);
        std::sort(mapped.begin(), mapped.end(), pt_less);
        CHECK(mapped == FP.points);
        ++done;
    }
}

TEST_CASE("is_fano forms agree and reject arcs") {
    const Field& f = make_field(2, 1, 1);
    Plane pl(f);
    std::vector<Pt> pts;
    for (std::uint64_t i = 0; i < 7; ++i) pts.push_back(pl.point_at(i));
    CHECK(is_fano(pl, pts));
    CHECK(is_fano_by_joins(pl, pts));

    // a 7-arc is never a Fano plane
    const Field& f8 = make_field(2, 3, 1);
    Plane pl8(f8);
    std::vector<Pt> arc;
    for (std::uint64_t i = 0; i < 8 && arc.size() < 7; ++i) {
        Fe t = f8.from_index(i);
        arc.push_back(pl8.normalize_point(f8.one(), t, f8.mul(t, t)));
    }
    CHECK(is_arc(pl8, arc));
    CHECK_FALSE(is_fano(pl8, arc));
    CHECK_FALSE(is_fano_by_joins(pl8, arc));
}

TEST_CASE("both fano predicates agree across all candidate types at q=2") {
    for (const CycleType& lam : CycleType::all_of(7)) {
        const Field& f = make_field(2, 1, lam.lcm_parts());
        Plane pl(f);
        CandidateStream cs(pl, lam);
        std::uint64_t mism = 0;
        cs.for_each(0, cs.outer_space(), [&](const Candidate& c) {
            std::span<const Pt> pts(c.pts.data(), 7);
            mism += is_fano(pl, pts) != is_fano_by_joins(pl, pts);
        });
        CHECK(mism == 0);
    }
}

TEST_CASE("degree-7 orbit classifier agrees with the predicates, exhaustively at q=2") {
    const Field& f = make_field(2, 1, 7);
    Plane pl(f);
    OrbitClassIndex idx = orbit_classes(pl, 7);
    REQUIRE(idx.classes.size() == 2358);
    std::uint64_t n_arc = 0, n_fano = 0, n_line = 0, disagreements = 0;
    for (const Pt& rep : idx.classes) {
        OrbitTest7 r = orbit_fano_test_7(pl, rep);
        Orbit o = orbit_of(pl, rep);
        bool fano_full = is_fano(pl, o.members);
        bool arc_full = is_arc(pl, o.members);
        switch (r.verdict) {
            case OrbitClass7::arc:
                ++n_arc;
                disagreements += !arc_full || fano_full;
                break;
            case OrbitClass7::fano:
                ++n_fano;
                disagreements += !fano_full || arc_full;
                break;
            case OrbitClass7::on_line: {
                ++n_line;
                // whole orbit on one rational line
                Ln l = pl.join(o.members[0], o.members[1]);
                bool all_on = true;
                for (const Pt& m : o.members) all_on = all_on && pl.incident(m, l);
                disagreements += !all_on || !(pl.line_degree(l) == 1);
                break;
            }
        }
        // classification is invariant under the starting point of the orbit
        OrbitTest7 r2 = orbit_fano_test_7(pl, o.members[3]);
        disagreements += r2.verdict != r.verdict;
    }
    CHECK(disagreements == 0);
    CHECK(n_fano == 48);    // 336 points
    CHECK(n_line == 126);   // 882 points
    CHECK(n_arc == 2184);   // 15288 points
    CHECK(n_arc * 7 == 15288);
    CHECK(n_fano * 7 == 336);
}

TEST_CASE("orbit classifier rejects wrong degrees") {
    const Field& f = make_field(2, 1, 7);
    Plane pl(f);
    CHECK_THROWS_AS(orbit_fano_test_7(pl, pl.point_at(0)), std::invalid_argument);
}

TEST_CASE("fano censuses at q=2 for all cycle types") {
    // admitting types
    CHECK(fano_count(2, 1, CycleType::parse("7")) == 48);
    CHECK(fano_count(2, 1, CycleType::parse("4+2+1")) == 42);     // |PGL|/4
    CHECK(fano_count(2, 1, CycleType::parse("3+3+1")) == 56);     // |PGL|/3
    CHECK(fano_count(2, 1, CycleType::parse("2+2+1+1+1")) == 21); // |PGL|/8
    CHECK(fano_count(2, 1, CycleType::parse("e")) == 1);          // the plane itself
    // everything else is a zero certificate
    for (const CycleType& lam : CycleType::all_of(7)) {
        const std::string s = lam.str();
        if (s == "7" || s == "4+2+1" || s == "3+3+1" || s == "2+2+1+1+1" ||
            s == "1+1+1+1+1+1+1")
            continue;
        CHECK_MESSAGE(fano_count(2, 1, lam) == 0, s);
    }
}

TEST_CASE("rational fano census at q=2 reproduces the constant 30 in ordered form") {
    std::uint64_t sets = fano_count(2, 1, CycleType::parse("e"));
    // 5040 labelings per set, measured against |PGL(3,F_2)| = 168
    CHECK(BigInt(static_cast<std::int64_t>(sets * 5040)) == BigInt(30) * pgl3_order(2));
}

TEST_CASE("generating 4-arc bijections at q=2") {
    struct Row {
        const char* lambda;
        std::uint64_t expect;
    };
    for (Row row : {Row{"4+2+1", 42}, Row{"3+3+1", 56}, Row{"2+2+1+1+1", 21}}) {
        CycleType lam = CycleType::parse(row.lambda);
        const Field& f = make_field(2, 1, lam.lcm_parts());
        Plane pl(f);
        BijectionReport rep = fano_bijection_generate(pl, lam);
        CHECK(rep.four_arcs == row.expect);
        CHECK(rep.injective);
        CHECK(rep.invalid_images == 0);
        CHECK(rep.distinct_images == fano_count(2, 1, lam));  // onto
        CHECK(fano_bijection_check(pl, lam));
    }
}

TEST_CASE("duality of the two fano forms at q=2") {
    const Field& f = make_field(2, 1, 7);
    Plane pl(f);
    DualityReport rep = fano_form_duality_check(pl);
    CHECK(rep.balanced);
    CHECK(rep.fano_with_f3 == 24);
    CHECK(rep.fano_with_f5 == 24);
    CHECK(rep.points_with_f3 == 168);
    CHECK(rep.points_with_f5 == 168);
    CHECK(rep.points_with_f3 + rep.points_with_f5 == 336);
}

TEST_CASE("generate_fano argument checks") {
    const Field& f = make_field(2, 1, 1);
    Plane pl(f);
    auto frame = projective_frame(pl);
    std::vector<Pt> three(frame.begin(), frame.begin() + 3);
    CHECK_THROWS_AS(generate_fano(pl, three), std::invalid_argument);
}
