// Fano configurations: generation from 4-arcs through the diagonal points
// of the complete quadrangle, the Fano predicate, cycle-type censuses with
// zero certificates, and the generating-4-arc bijections.

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "arc7/arcs.hpp"
#include "arc7/orbits.hpp"
#include "arc7/plane.hpp"

namespace arc7 {

struct FanoPlane {
    std::array<Pt, 7> points;  // sorted in coordinate order
    std::array<Ln, 7> lines;
};

// The three diagonal points of the complete quadrangle on a labeled 4-arc:
// <p1p2>^<p3p4>, <p1p3>^<p2p4>, <p1p4>^<p2p3>. Throws if the input is not a
// 4-arc. The resulting 3-set does not depend on the labeling.
std::array<Pt, 3> diagonal_points(const Plane& pl, const std::array<Pt, 4>& labeled);

// The 4 points plus their diagonal points. Characteristic 2 only: there the
// diagonals are collinear and the union is a Fano plane; in odd
// characteristic no such plane exists and the call throws.
FanoPlane generate_fano(const Plane& pl, std::span<const Pt> four_arc);

// True iff the 21 pairwise joins form 7 lines with exactly 3 of the points
// on each. The hot form counts, for every pair, the third points on its
// join; is_fano_by_joins materializes the joins per the definition and is
// kept as the cross-check oracle.
bool is_fano(const Plane& pl, std::span<const Pt> pts);
bool is_fano_by_joins(const Plane& pl, std::span<const Pt> pts);

CycleType fano_cycle_type(const Plane& pl, const FanoPlane& P);

// Canonical signature for collision detection between generated planes.
std::array<std::uint32_t, 21> fano_signature(const FanoPlane& P);

enum class OrbitClass7 { arc, fano, on_line };
struct OrbitTest7 {
    OrbitClass7 verdict;
    bool with_f3;  // {a, Fa, F^3 a} collinear
    bool with_f5;  // {a, Fa, F^5 a} collinear
};
// Classification of a degree-7 orbit by the two decisive collinearity tests:
// both collinear means the orbit lies on a rational line, exactly one means
// it closes into a Fano plane, neither means it is a 7-arc.
OrbitTest7 orbit_fano_test_7(const Plane& pl, const Pt& a);

// Fano census over one candidate-stream shard. Counters: "candidates" and
// "fano"; for cycle type 7 additionally "on_line", "fano3", "fano5" (which
// decisive triple was collinear) and "fano_spot_mismatch" from re-verifying
// a sample of hits with the full predicate.
Tally fano_census_shard(const Plane& pl, const CandidateStream& cs, std::uint64_t begin,
                        std::uint64_t end);

// Enumerate the generating 4-arcs for the bijection cycle types
// (4+2+1 <- type 4, 2+2+1+1+1 <- type 2+2, 3+3+1 <- type 3+1), map each
// through generate_fano and record collisions and image validity.
struct BijectionReport {
    std::uint64_t four_arcs = 0;
    std::uint64_t distinct_images = 0;
    std::uint64_t invalid_images = 0;  // image not a Fano plane of the type
    bool injective = false;
};
BijectionReport fano_bijection_generate(const Plane& pl, const CycleType& lambda);

// Full double count: generating side injective with valid images, and the
// image count equals the direct census of Fano planes of the type.
bool fano_bijection_check(const Plane& pl, const CycleType& lambda);

// Orbit- and point-level split of the degree-7 Fano census by decisive
// triple; the duality claim is that the two halves are equal.
struct DualityReport {
    std::uint64_t fano_with_f3 = 0;
    std::uint64_t fano_with_f5 = 0;
    std::uint64_t points_with_f3 = 0;
    std::uint64_t points_with_f5 = 0;
    bool balanced = false;
};
DualityReport fano_form_duality_check(const Plane& pl);

}  // namespace arc7
