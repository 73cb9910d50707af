#include "arc7/arcs.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace arc7 {

TriplePlan TriplePlan::for_parts(const std::vector<int>& parts) {
    int n = 0;
    for (int p : parts) n += p;
    // Frobenius permutation on candidate indices: cyclic within each block.
    std::array<int, 7> perm{};
    int base = 0;
    for (int p : parts) {
        for (int i = 0; i < p; ++i) perm[base + i] = base + (i + 1) % p;
        base += p;
    }
    // id per sorted triple
    int id[7][7][7];
    std::vector<std::array<int, 3>> triples;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                id[i][j][k] = static_cast<int>(triples.size());
                triples.push_back({i, j, k});
            }
    TriplePlan plan;
    std::uint64_t visited = 0;
    for (std::size_t t = 0; t < triples.size(); ++t) {
        if (visited >> t & 1) continue;
        plan.reps.push_back(triples[t]);
        visited |= std::uint64_t(1) << t;
        std::array<int, 3> cur = triples[t];
        while (true) {
            std::array<int, 3> nxt = {perm[cur[0]], perm[cur[1]], perm[cur[2]]};
            std::sort(nxt.begin(), nxt.end());
            int tid = id[nxt[0]][nxt[1]][nxt[2]];
            if (visited >> tid & 1) break;
            visited |= std::uint64_t(1) << tid;
            cur = nxt;
        }
    }
    return plan;
}

bool is_arc(const Plane& pl, std::span<const Pt> pts) {
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i] == pts[j]) throw std::invalid_argument("is_arc: duplicate points");
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            for (std::size_t k = j + 1; k < pts.size(); ++k)
                if (pl.collinear(pts[i], pts[j], pts[k])) return false;
    return true;
}

bool is_arc_symmetric(const Plane& pl, const Candidate& c, const TriplePlan& plan) {
    for (const auto& t : plan.reps)
        if (pl.collinear(c.pts[t[0]], c.pts[t[1]], c.pts[t[2]])) return false;
    return true;
}

std::uint64_t binomial(std::uint64_t n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = static_cast<unsigned>(n - k);
    unsigned __int128 r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > ~std::uint64_t(0)) throw std::overflow_error("binomial overflow");
    }
    return static_cast<std::uint64_t>(r);
}

namespace {

void unrank_combination(std::uint64_t n, int m, std::uint64_t rank, std::vector<std::uint64_t>& out) {
    out.assign(m, 0);
    std::uint64_t c = 0;
    for (int t = 0; t < m; ++t) {
        while (true) {
            std::uint64_t block = binomial(n - 1 - c, static_cast<unsigned>(m - 1 - t));
            if (rank < block) break;
            rank -= block;
            ++c;
        }
        out[t] = c++;
    }
}

bool next_combination(std::vector<std::uint64_t>& c, std::uint64_t n) {
    int m = static_cast<int>(c.size());
    int i = m - 1;
    while (i >= 0 && c[i] == n - m + i) --i;
    if (i < 0) return false;
    ++c[i];
    for (int j = i + 1; j < m; ++j) c[j] = c[j - 1] + 1;
    return true;
}

}  // namespace

CandidateStream::CandidateStream(const Plane& pl, const CycleType& lambda,
                                 std::uint64_t materialize_limit)
    : pl_(pl), lambda_(lambda) {
    if (lambda.n() > 7) throw std::invalid_argument("cycle type too large");
    groups_ = lambda.groups();
    for (auto [m, s] : groups_)
        for (int i = 0; i < m; ++i) block_parts_.push_back(s);
    plan_ = TriplePlan::for_parts(block_parts_);

    class_counts_.assign(groups_.size(), 0);
    flat_.assign(groups_.size(), {});
    for (std::size_t g = 0; g < groups_.size(); ++g) {
        auto [m, s] = groups_[g];
        std::uint64_t span = stratum_index_count(pl_, s);
        if (span > materialize_limit) {
            if (g != 0 || m != 1)
                throw std::length_error("stratum too large to materialize for this cycle type");
            streamed_ = true;
            outer_space_ = span;
            continue;
        }
        std::vector<Pt>& flat = flat_[g];
        for_each_orbit_rep(pl_, s, 0, span, [&](const Pt& rep) {
            Pt t = rep;
            for (int i = 0; i < s; ++i) {
                flat.push_back(t);
                t = pl_.frobenius(t);
            }
        });
        class_counts_[g] = flat.size() / static_cast<std::uint64_t>(s);
    }
    if (!streamed_) outer_space_ = binomial(class_counts_[0], static_cast<unsigned>(groups_[0].first));
    for (std::size_t g = 1; g < groups_.size(); ++g)
        inner_count_ *= binomial(class_counts_[g], static_cast<unsigned>(groups_[g].first));
}

void CandidateStream::for_each(std::uint64_t begin, std::uint64_t end,
                               const std::function<void(const Candidate&)>& fn) const {
    if (end > outer_space_) end = outer_space_;
    if (begin >= end) return;

    Candidate cand;
    cand.n = lambda_.n();
    cand.n_orbits = static_cast<int>(block_parts_.size());
    int off = 0;
    for (std::size_t b = 0; b < block_parts_.size(); ++b) {
        cand.orbit_base[b] = off;
        cand.orbit_size[b] = block_parts_[b];
        off += block_parts_[b];
    }

    const std::size_t ngroups = groups_.size();
    std::vector<int> gblock(ngroups);
    int blk = 0;
    for (std::size_t g = 0; g < ngroups; ++g) {
        gblock[g] = blk;
        blk += groups_[g].first;
    }
    std::vector<std::vector<std::uint64_t>> combo(ngroups);

    auto fill_group = [&](std::size_t g) {
        auto [m, s] = groups_[g];
        for (int j = 0; j < m; ++j) {
            const Pt* src = &flat_[g][combo[g][j] * static_cast<std::uint64_t>(s)];
            Pt* dst = &cand.pts[cand.orbit_base[gblock[g] + j]];
            for (int i = 0; i < s; ++i) dst[i] = src[i];
        }
    };
    // Odometer over the combinations of groups 1.. around a filled group 0.
    std::function<void(std::size_t)> inner = [&](std::size_t g) {
        if (g == ngroups) {
            fn(cand);
            return;
        }
        auto [m, s] = groups_[g];
        (void)s;
        if (class_counts_[g] < static_cast<std::uint64_t>(m)) return;
        combo[g].resize(m);
        for (int j = 0; j < m; ++j) combo[g][j] = j;
        do {
            fill_group(g);
            inner(g + 1);
        } while (next_combination(combo[g], class_counts_[g]));
    };

    if (streamed_) {
        int s0 = groups_[0].second;
        for_each_orbit_rep(pl_, s0, begin, end, [&](const Pt& rep) {
            Pt t = rep;
            for (int i = 0; i < s0; ++i) {
                cand.pts[i] = t;
                t = pl_.frobenius(t);
            }
            inner(1);
        });
        return;
    }

    auto [m0, s0] = groups_[0];
    unrank_combination(class_counts_[0], m0, begin, combo[0]);
    for (std::uint64_t r = begin; r < end; ++r) {
        for (int j = 0; j < m0; ++j) {
            const Pt* src = &flat_[0][combo[0][j] * static_cast<std::uint64_t>(s0)];
            Pt* dst = &cand.pts[cand.orbit_base[j]];
            for (int i = 0; i < s0; ++i) dst[i] = src[i];
        }
        inner(1);
        if (r + 1 < end && !next_combination(combo[0], class_counts_[0]))
            throw std::logic_error("combination stream exhausted early");
    }
}

Tally count_arcs_shard(const Plane& pl, const CandidateStream& cs, std::uint64_t begin,
                       std::uint64_t end) {
    Tally t;
    std::uint64_t cands = 0, arcs = 0;
    const TriplePlan& plan = cs.plan();
    cs.for_each(begin, end, [&](const Candidate& c) {
        ++cands;
        if (is_arc_symmetric(pl, c, plan)) ++arcs;
    });
    t.add("candidates", cands);
    t.add("arcs", arcs);
    return t;
}

namespace {

// Flat shard accumulator; folded into the named tally once per shard.
struct DeltaAcc {
    std::uint64_t candidates = 0, u = 0, arcs = 0, delta = 0;
    std::uint64_t d[6] = {};                       // delta1..delta5 at [1..5]
    std::uint64_t pair[6][6] = {}, trip[5] = {};   // trip: 123,124,134,234 at [1..4]
    std::uint64_t quad = 0, union_mismatch = 0, spot_mismatch = 0;
};

void delta_421(const Plane& pl, const Candidate& c, const TriplePlan& plan, DeltaAcc& a) {
    auto col = [&](int i, int j, int k) { return pl.collinear(c.pts[i], c.pts[j], c.pts[k]); };
    ++a.candidates;
    // U: the degree-4 orbit forms a 4-arc
    if (col(0, 1, 2) || col(0, 1, 3) || col(0, 2, 3) || col(1, 2, 3)) return;
    const std::uint64_t w = 8;  // generator labelings per set
    a.u += w;
    bool d1 = col(0, 1, 4) || col(0, 1, 5);
    bool d2 = col(0, 2, 4) || col(0, 2, 5);
    bool d3 = col(0, 2, 6);
    bool d4 = col(4, 5, 6);
    bool arc = is_arc_symmetric(pl, c, plan);
    if (arc) ++a.arcs;
    bool flagged = d1 || d2 || d3 || d4;
    if (flagged != !arc) ++a.union_mismatch;
    if (flagged) a.delta += w;
    if (d1) a.d[1] += w;
    if (d2) a.d[2] += w;
    if (d3) a.d[3] += w;
    if (d4) a.d[4] += w;
    if (d1 && d2) a.pair[1][2] += w;
    if (d1 && d3) a.pair[1][3] += w;
    if (d1 && d4) a.pair[1][4] += w;
    if (d2 && d3) a.pair[2][3] += w;
    if (d2 && d4) a.pair[2][4] += w;
    if (d3 && d4) a.pair[3][4] += w;
    if (d1 && d2 && d3) a.trip[1] += w;
    if (d1 && d2 && d4) a.trip[2] += w;
    if (d1 && d3 && d4) a.trip[3] += w;
    if (d2 && d3 && d4) a.trip[4] += w;
    if (d1 && d2 && d3 && d4) a.quad += w;
}

void delta_331(const Plane& pl, const Candidate& c, const TriplePlan& plan, DeltaAcc& a) {
    auto col = [&](int i, int j, int k) { return pl.collinear(c.pts[i], c.pts[j], c.pts[k]); };
    ++a.candidates;
    bool arc = is_arc_symmetric(pl, c, plan);
    if (arc) ++a.arcs;
    const std::uint64_t w = 9;  // labelings per orbit assignment
    for (int x : {0, 3}) {
        int y = 3 - x;
        // U under this assignment: first orbit plus the rational point is a 4-arc
        if (col(x, x + 1, x + 2) || col(x, x + 1, 6) || col(x + 1, x + 2, 6) ||
            col(x, x + 2, 6))
            continue;
        a.u += w;
        bool d1 = col(x, x + 1, y) || col(x, x + 1, y + 1) || col(x, x + 1, y + 2);
        bool d2 = col(x, 6, y) || col(x, 6, y + 1) || col(x, 6, y + 2);
        bool d3 = col(y, y + 1, y + 2);
        bool d4 = col(y, y + 1, x) || col(y, y + 1, x + 1) || col(y, y + 1, x + 2);
        bool flagged = d1 || d2 || d3 || d4;
        if (flagged != !arc) ++a.union_mismatch;
        if (flagged) a.delta += w;
        if (d1) a.d[1] += w;
        if (d2) a.d[2] += w;
        if (d3) a.d[3] += w;
        if (d4) a.d[4] += w;
    }
}

void delta_22111(const Plane& pl, const Candidate& c, const TriplePlan& plan, DeltaAcc& a) {
    auto col = [&](int i, int j, int k) { return pl.collinear(c.pts[i], c.pts[j], c.pts[k]); };
    ++a.candidates;
    // U: the two degree-2 orbits together form a 4-arc
    if (col(0, 1, 2) || col(0, 1, 3) || col(0, 2, 3) || col(1, 2, 3)) return;
    bool arc = is_arc_symmetric(pl, c, plan);
    if (arc) ++a.arcs;
    // cross-line pairs between the orbits: {<a0,b0>,<a1,b1>} and {<a0,b1>,<a1,b0>}
    bool hit_pair[2] = {false, false};
    bool on_line[2] = {false, false};  // rational point on <a,Fa> resp. <b,Fb>
    for (int i = 4; i < 7; ++i) {
        hit_pair[0] = hit_pair[0] || (col(0, 2, i) && col(1, 3, i));
        hit_pair[1] = hit_pair[1] || (col(0, 3, i) && col(1, 2, i));
        on_line[0] = on_line[0] || col(0, 1, i);
        on_line[1] = on_line[1] || col(2, 3, i);
    }
    bool d5 = col(4, 5, 6);
    const std::uint64_t w = 12;  // labelings per (first orbit, line pair) pattern
    for (int first = 0; first < 2; ++first)
        for (int psel = 0; psel < 2; ++psel) {
            a.u += w;
            bool d1 = hit_pair[psel];
            bool d2 = hit_pair[1 - psel];
            bool d3 = on_line[first];
            bool d4 = on_line[1 - first];
            bool flagged = d1 || d2 || d3 || d4 || d5;
            if (flagged != !arc) ++a.union_mismatch;
            if (flagged) a.delta += w;
            if (d1) a.d[1] += w;
            if (d2) a.d[2] += w;
            if (d3) a.d[3] += w;
            if (d4) a.d[4] += w;
            if (d5) a.d[5] += w;
        }
}

void delta_7(const Plane& pl, const Candidate& c, const TriplePlan& plan, DeltaAcc& a) {
    auto col = [&](int i, int j, int k) { return pl.collinear(c.pts[i], c.pts[j], c.pts[k]); };
    ++a.candidates;
    ++a.u;
    bool c3 = col(0, 1, 3);
    bool c5 = col(0, 1, 5);
    if (c3 && c5) {
        ++a.d[1];  // orbit on a rational line
        ++a.delta;
    } else if (c3 || c5) {
        ++a.d[2];  // orbit closes into a Fano plane
        ++a.delta;
    } else {
        ++a.arcs;
    }
    // periodic spot check of the two-test classifier against the full plan
    if (a.candidates % 97 == 1) {
        bool arc_full = is_arc_symmetric(pl, c, plan);
        if (arc_full != !(c3 || c5)) ++a.spot_mismatch;
    }
}

}  // namespace

Tally delta_census_shard(const Plane& pl, const CandidateStream& cs, std::uint64_t begin,
                         std::uint64_t end) {
    const std::string lam = cs.type().str();
    const TriplePlan& plan = cs.plan();
    DeltaAcc a;
    Tally t;
    if (lam == "4+2+1") {
        cs.for_each(begin, end, [&](const Candidate& c) { delta_421(pl, c, plan, a); });
        t.add("delta3", a.d[3]);
        t.add("delta4", a.d[4]);
        t.add("delta12", a.pair[1][2]);
        t.add("delta13", a.pair[1][3]);
        t.add("delta14", a.pair[1][4]);
        t.add("delta23", a.pair[2][3]);
        t.add("delta24", a.pair[2][4]);
        t.add("delta34", a.pair[3][4]);
        t.add("delta123", a.trip[1]);
        t.add("delta124", a.trip[2]);
        t.add("delta134", a.trip[3]);
        t.add("delta234", a.trip[4]);
        t.add("delta1234", a.quad);
        t.add("union_mismatch", a.union_mismatch);
    } else if (lam == "3+3+1") {
        cs.for_each(begin, end, [&](const Candidate& c) { delta_331(pl, c, plan, a); });
        t.add("delta3", a.d[3]);
        t.add("delta4", a.d[4]);
        t.add("union_mismatch", a.union_mismatch);
    } else if (lam == "2+2+1+1+1") {
        cs.for_each(begin, end, [&](const Candidate& c) { delta_22111(pl, c, plan, a); });
        t.add("delta3", a.d[3]);
        t.add("delta4", a.d[4]);
        t.add("delta5", a.d[5]);
        t.add("union_mismatch", a.union_mismatch);
    } else if (lam == "7") {
        cs.for_each(begin, end, [&](const Candidate& c) { delta_7(pl, c, plan, a); });
        t.add("spot_mismatch", a.spot_mismatch);
    } else {
        throw std::invalid_argument("collinearity census is defined for 4+2+1, 3+3+1, "
                                    "2+2+1+1+1 and 7 only");
    }
    t.add("candidates", a.candidates);
    t.add("u", a.u);
    t.add("arcs", a.arcs);
    t.add("delta", a.delta);
    t.add("delta1", a.d[1]);
    t.add("delta2", a.d[2]);
    return t;
}

EBacktrack::EBacktrack(const Plane& pl) {
    std::uint64_t m = pl.subplane_point_count(1);
    if (m > 512) throw std::length_error("rational plane too large for backtracking masks");
    n_ = static_cast<int>(m);
    pts_.reserve(m);
    for (std::uint64_t i = 0; i < m; ++i) pts_.push_back(pl.subplane_point_at(1, i));
    std::map<std::array<std::uint32_t, 3>, std::uint16_t> line_id;
    pair_line_.assign(m * m, 0);
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) {
            Ln l = pl.join(pts_[i], pts_[j]);
            std::array<std::uint32_t, 3> key = {l.a.v, l.b.v, l.c.v};
            auto it = line_id.find(key);
            std::uint16_t id;
            if (it == line_id.end()) {
                id = static_cast<std::uint16_t>(line_mask_.size());
                line_id.emplace(key, id);
                Mask mask{};
                for (int k = 0; k < n_; ++k)
                    if (pl.incident(pts_[k], l)) mask[k / 64] |= std::uint64_t(1) << (k % 64);
                line_mask_.push_back(mask);
            } else {
                id = it->second;
            }
            pair_line_[i * m + j] = pair_line_[j * m + i] = id;
        }
}

Tally EBacktrack::count_shard(std::uint64_t begin, std::uint64_t end) const {
    if (end > static_cast<std::uint64_t>(n_)) end = n_;
    std::uint64_t arcs = 0, nodes = 0;
    int chosen[7];
    Mask forb[8] = {};
    auto bit = [](const Mask& mk, int v) { return mk[v / 64] >> (v % 64) & 1; };

    // depth d = number of points already chosen; forb[d] applies to the next pick
    std::function<void(int)> rec = [&](int d) {
        int last = chosen[d - 1];
        for (int v = last + 1; v < n_; ++v) {
            if (bit(forb[d], v)) continue;
            ++nodes;
            if (d == 6) {
                ++arcs;
                continue;
            }
            chosen[d] = v;
            Mask nf = forb[d];
            for (int u = 0; u < d; ++u) {
                const Mask& lm = line_mask_[pair_line_[chosen[u] * n_ + v]];
                for (int w = 0; w < kWords; ++w) nf[w] |= lm[w];
            }
            forb[d + 1] = nf;
            rec(d + 1);
        }
    };

    for (std::uint64_t first = begin; first < end; ++first) {
        chosen[0] = static_cast<int>(first);
        ++nodes;
        forb[1] = Mask{};
        rec(1);
    }
    Tally t;
    t.add("arcs", arcs);
    t.add("nodes", nodes);
    return t;
}

Tally count_arcs_e_naive(const Plane& pl) {
    std::uint64_t m = pl.subplane_point_count(1);
    if (binomial(m, 7) > (std::uint64_t(1) << 24))
        throw std::length_error("naive subset census too large");
    std::vector<Pt> pts;
    for (std::uint64_t i = 0; i < m; ++i) pts.push_back(pl.subplane_point_at(1, i));
    std::vector<std::uint64_t> c = {0, 1, 2, 3, 4, 5, 6};
    Tally t;
    std::uint64_t subsets = 0, arcs = 0;
    std::vector<Pt> sel(7);
    do {
        ++subsets;
        for (int i = 0; i < 7; ++i) sel[i] = pts[c[i]];
        if (is_arc(pl, sel)) ++arcs;
    } while (next_combination(c, m));
    t.add("subsets", subsets);
    t.add("arcs", arcs);
    return t;
}

ConfProductReport conf_product_check(const Plane& pl, const CycleType& lambda) {
    ConfProductReport rep;
    CandidateStream cs(pl, lambda);
    if (cs.outer_streamed())
        throw std::length_error("configuration product check needs materialized strata");
    rep.ordered = BigInt(1);
    BigInt mults(1);
    const auto& groups = lambda.groups();
    for (std::size_t g = 0; g < groups.size(); ++g) {
        auto [m, s] = groups[g];
        BigInt n(static_cast<std::int64_t>(cs.class_counts()[g]));
        for (int i = 0; i < m; ++i) rep.ordered *= n - BigInt(i);
        for (int i = 2; i <= m; ++i) mults *= BigInt(i);
    }
    std::uint64_t count = 0;
    cs.for_each(0, cs.outer_space(), [&](const Candidate&) { ++count; });
    rep.unordered = count;
    rep.mults_times_sets = mults * BigInt(static_cast<std::int64_t>(count));
    rep.ok = rep.ordered == rep.mults_times_sets;
    return rep;
}

}  // namespace arc7
