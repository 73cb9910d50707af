// Frobenius orbits, the strata D_q^n of points of exact degree n, their
// orbit-class quotients, and cycle types of F-invariant point sets.
//
// Strata are streamed: a stratum of degree n is carved out of the points
// fixed by Frobenius^n (the subplane over GF(q^n)) by exact-degree filtering,
// so no plane is ever scanned beyond the subplane that actually contains the
// stratum. Streams are index-addressable for sharding and resumption.

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "arc7/bigint.hpp"
#include "arc7/plane.hpp"

namespace arc7 {

// A partition of n stored as (multiplicity, part) pairs with parts strictly
// decreasing, e.g. 2+2+1+1+1 -> {(2,2),(3,1)}.
class CycleType {
public:
    CycleType() = default;
    explicit CycleType(const std::vector<int>& parts);  // any order, positive

    // "4+2+1" style; "e" is accepted as an alias for 1+...+1 of the given n
    // (n = 7 when unspecified).
    static CycleType parse(const std::string& text, int n = 7);
    std::string str() const;

    int n() const;                        // sum of parts
    std::vector<int> parts() const;       // expanded, decreasing
    const std::vector<std::pair<int, int>>& groups() const { return groups_; }
    int lcm_parts() const;
    // Number of generator labelings of an invariant set with this type:
    // prod m_i! * s_i^(m_i)  (the centralizer order in S_n).
    std::uint64_t symmetry_factor() const;
    bool is_trivial() const;              // all parts 1

    bool operator==(const CycleType&) const = default;

    // All partitions of n in the fixed canonical order (descending
    // lexicographic on part lists: 7, 6+1, ..., 2+1+1+1+1+1, e).
    static std::vector<CycleType> all_of(int n);

private:
    std::vector<std::pair<int, int>> groups_;  // (multiplicity, part), part desc
};

struct Orbit {
    Pt rep;                   // lexicographically least member
    int degree = 0;
    std::vector<Pt> members;  // rep, F rep, ..., F^(degree-1) rep
};

Orbit orbit_of(const Plane& pl, const Pt& a);

// Exact |D_q^n| by the divisor recursion seeded with |D_q^1| = q^2 + q + 1.
BigInt stratum_size_formula(std::uint64_t q, int n);

// Index space that for_each_stratum_point / for_each_orbit_rep iterate over:
// the subplane of points fixed by F^n.
std::uint64_t stratum_index_count(const Plane& pl, int n);

// Stream the points of exact degree n whose subplane index lies in
// [begin, end). Requires n | L.
void for_each_stratum_point(const Plane& pl, int n, std::uint64_t begin, std::uint64_t end,
                            const std::function<void(const Pt&)>& fn);

// Stream one canonical representative (the lexicographic orbit minimum) per
// degree-n orbit, restricted to representatives whose subplane index lies in
// [begin, end).
void for_each_orbit_rep(const Plane& pl, int n, std::uint64_t begin, std::uint64_t end,
                        const std::function<void(const Pt&)>& fn);

struct OrbitClassIndex {
    int degree = 0;
    std::vector<Pt> classes;  // canonical representatives
};

// Materialized class list; throws if the class count exceeds max_classes.
OrbitClassIndex orbit_classes(const Plane& pl, int n, std::uint64_t max_classes = 1u << 24);

// Orbit-size multiset of an F-invariant set; throws if S is not invariant
// or contains duplicates.
CycleType cycle_type_of(const Plane& pl, const std::vector<Pt>& pts);

}  // namespace arc7
