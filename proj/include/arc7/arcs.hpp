// 7-arc enumeration: the arc predicate, Frobenius-invariant candidate
// streams per cycle type, the collinearity-defect census, and the
// ordered/unordered configuration double count.
//
// A candidate is an unordered F-invariant 7-set produced exactly once as an
// unordered choice of orbit classes per part of the cycle type. Streams are
// addressed by an outer index (combination rank, or subplane index when the
// largest stratum is too big to materialize), which is the shard unit for
// parallel runs and resumption.

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "arc7/bigint.hpp"
#include "arc7/orbits.hpp"
#include "arc7/plane.hpp"

namespace arc7 {

struct Candidate {
    std::array<Pt, 7> pts{};  // grouped orbit-by-orbit: rep, F rep, ...
    int n = 0;
    int n_orbits = 0;
    std::array<int, 7> orbit_base{};
    std::array<int, 7> orbit_size{};

    std::vector<Pt> to_vector() const { return {pts.begin(), pts.begin() + n}; }
};

// One representative index-triple per orbit of the Frobenius permutation
// acting on the 35 triples; testing just these decides the arc property.
struct TriplePlan {
    std::vector<std::array<int, 3>> reps;
    static TriplePlan for_parts(const std::vector<int>& parts);
};

// Definition-level arc test: every triple of distinct points non-collinear.
// Throws if the points are not pairwise distinct.
bool is_arc(const Plane& pl, std::span<const Pt> pts);

// Same verdict as is_arc on an F-invariant candidate, testing only the
// plan's representative triples.
bool is_arc_symmetric(const Plane& pl, const Candidate& c, const TriplePlan& plan);

std::uint64_t binomial(std::uint64_t n, unsigned k);

class CandidateStream {
public:
    CandidateStream(const Plane& pl, const CycleType& lambda,
                    std::uint64_t materialize_limit = std::uint64_t(1) << 22);

    const CycleType& type() const { return lambda_; }
    const std::vector<int>& block_parts() const { return block_parts_; }
    const TriplePlan& plan() const { return plan_; }

    // Outer shard space: combination ranks of the first group, or the
    // subplane index space of its stratum when streamed.
    std::uint64_t outer_space() const { return outer_space_; }
    bool outer_streamed() const { return streamed_; }

    // Candidates per outer unit (exact for ranked outer; an upper bound of
    // zero-or-that for streamed outer indices).
    std::uint64_t inner_count() const { return inner_count_; }

    // Orbit-class counts per group; for a streamed outer group the count is
    // known only after a full pass, so it is absent (zero) there.
    const std::vector<std::uint64_t>& class_counts() const { return class_counts_; }

    void for_each(std::uint64_t begin, std::uint64_t end,
                  const std::function<void(const Candidate&)>& fn) const;

private:
    const Plane& pl_;
    CycleType lambda_;
    std::vector<std::pair<int, int>> groups_;  // (mult, part), part desc
    std::vector<int> block_parts_;
    TriplePlan plan_;
    bool streamed_ = false;
    std::uint64_t outer_space_ = 0;
    std::uint64_t inner_count_ = 1;
    std::vector<std::uint64_t> class_counts_;
    // flat[g]: orbit points of group g, class-major (class k occupies
    // positions [k*part, (k+1)*part)); empty for a streamed outer group.
    std::vector<std::vector<Pt>> flat_;
};

// Shard tallies: named exact counters merged by addition.
struct Tally {
    std::map<std::string, std::uint64_t> counters;
    void add(const std::string& k, std::uint64_t v = 1) { counters[k] += v; }
    std::uint64_t get(const std::string& k) const {
        auto it = counters.find(k);
        return it == counters.end() ? 0 : it->second;
    }
    Tally& merge(const Tally& o) {
        for (const auto& [k, v] : o.counters) counters[k] += v;
        return *this;
    }
};

// Arc census over one outer shard: counters "candidates" and "arcs".
Tally count_arcs_shard(const Plane& pl, const CandidateStream& cs, std::uint64_t begin,
                       std::uint64_t end);

// Collinearity-defect census over one outer shard. Counter conventions:
// for cycle type 7 all counters are orbit-set counts; for the other three
// admitting types the u/delta counters are labeled-tuple counts (weight =
// symmetry factor when a condition is labeling-invariant) while "arcs" and
// "candidates" stay set counts. "union_mismatch" counts candidates where the
// flag union disagrees with the arc predicate; it must stay zero.
Tally delta_census_shard(const Plane& pl, const CandidateStream& cs, std::uint64_t begin,
                         std::uint64_t end);

// Lexicographic backtracking enumeration of rational 7-arcs with forbidden-
// point pruning; the rational plane must have at most 512 points.
class EBacktrack {
public:
    explicit EBacktrack(const Plane& pl);
    std::uint64_t point_count() const { return pts_.size(); }
    // Shard over the first chosen point; counters "arcs" and "nodes".
    Tally count_shard(std::uint64_t begin, std::uint64_t end) const;

private:
    static constexpr int kWords = 8;
    using Mask = std::array<std::uint64_t, kWords>;
    std::vector<Pt> pts_;
    std::vector<Mask> line_mask_;
    std::vector<std::uint16_t> pair_line_;  // point-pair -> line id
    int n_ = 0;
};

// Definition-level census of rational 7-arcs by filtering all 7-subsets;
// counters "subsets" and "arcs". Only sensible for small planes.
Tally count_arcs_e_naive(const Plane& pl);

// Both sides of the ordered/unordered configuration-product identity.
struct ConfProductReport {
    BigInt ordered;           // product of falling factorials of class counts
    BigInt mults_times_sets;  // (prod m_i!) * streamed unordered count
    std::uint64_t unordered = 0;
    bool ok = false;
};
ConfProductReport conf_product_check(const Plane& pl, const CycleType& lambda);

}  // namespace arc7
