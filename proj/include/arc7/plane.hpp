// The projective plane P^2 over a field context and its dual.
//
// Points and lines are canonically normalized homogeneous triples: the
// leftmost nonzero coordinate equals 1. Equality of projective objects is
// plain equality of canonical triples, which keeps set membership O(1).
// The coordinatewise Frobenius of a canonical triple is already canonical
// (the leading 0s and 1 are fixed), so Frobenius never renormalizes.

#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "arc7/gf.hpp"

namespace arc7 {

struct Pt {
    Fe x, y, z;
    bool operator==(const Pt&) const = default;
};

struct Ln {
    Fe a, b, c;
    bool operator==(const Ln&) const = default;
};

// Deterministic coordinate order: lexicographic on packed values.
inline bool pt_less(const Pt& p, const Pt& q) {
    if (p.x.v != q.x.v) return p.x.v < q.x.v;
    if (p.y.v != q.y.v) return p.y.v < q.y.v;
    return p.z.v < q.z.v;
}

struct PtHash {
    std::size_t operator()(const Pt& p) const {
        std::uint64_t h = (std::uint64_t(p.x.v) << 40) ^ (std::uint64_t(p.y.v) << 20) ^ p.z.v;
        h ^= h >> 33;
        h *= 0xff51afd7ed558ccdULL;
        h ^= h >> 33;
        return static_cast<std::size_t>(h);
    }
};

class Plane {
public:
    explicit Plane(const Field& f) : f_(f) {}

    const Field& field() const { return f_; }

    // |P^2| = Q^2 + Q + 1 for Q = field size.
    std::uint64_t point_count() const;
    // Enumeration order: (0,0,1), then (0,1,a), then (1,a,b), with a and b
    // running through the fixed element order.
    Pt point_at(std::uint64_t idx) const;

    // Same shapes with coordinates restricted to the subfield GF(q^d), d | L.
    // These are exactly the points fixed by Frobenius^d.
    std::uint64_t subplane_point_count(int d) const;
    Pt subplane_point_at(int d, std::uint64_t idx) const;

    Pt normalize_point(Fe x, Fe y, Fe z) const;
    Ln normalize_line(Fe a, Fe b, Fe c) const;

    Ln join(const Pt& p, const Pt& q) const;   // throws on equal points
    Pt meet(const Ln& l, const Ln& m) const;   // throws on equal lines
    bool incident(const Pt& p, const Ln& l) const;
    // Determinant test; coincident points count as collinear.
    bool collinear(const Pt& p1, const Pt& p2, const Pt& p3) const;

    Pt frobenius(const Pt& p, unsigned i = 1) const;
    Ln frobenius(const Ln& l, unsigned i = 1) const;
    int point_degree(const Pt& p) const;
    int line_degree(const Ln& l) const;

private:
    const Field& f_;
};

}  // namespace arc7
