// Shared test helpers: random PGL(3, F_q) action on points of the extension
// plane (matrix entries drawn from the rational subfield so the action
// commutes with Frobenius).

#pragma once

#include <random>

#include "arc7/plane.hpp"

namespace arc7::testutil {

struct Mat3 {
    Fe m[3][3];
};

inline Fe mat_det(const Field& f, const Mat3& a) {
    auto mul = [&](Fe x, Fe y) { return f.mul(x, y); };
    Fe d1 = f.sub(mul(a.m[1][1], a.m[2][2]), mul(a.m[1][2], a.m[2][1]));
    Fe d2 = f.sub(mul(a.m[1][0], a.m[2][2]), mul(a.m[1][2], a.m[2][0]));
    Fe d3 = f.sub(mul(a.m[1][0], a.m[2][1]), mul(a.m[1][1], a.m[2][0]));
    return f.add(f.sub(mul(a.m[0][0], d1), mul(a.m[0][1], d2)), mul(a.m[0][2], d3));
}

inline Mat3 random_pgl(const Plane& pl, std::mt19937_64& rng) {
    const Field& f = pl.field();
    std::uint64_t q = f.subfield_size(1);
    while (true) {
        Mat3 a;
        for (auto& row : a.m)
            for (Fe& e : row) e = f.subfield_elem(1, rng() % q);
        if (!(mat_det(f, a) == f.zero())) return a;
    }
}

inline Pt apply(const Plane& pl, const Mat3& a, const Pt& p) {
    const Field& f = pl.field();
    Fe c[3];
    Fe in[3] = {p.x, p.y, p.z};
    for (int i = 0; i < 3; ++i) {
        c[i] = f.zero();
        for (int j = 0; j < 3; ++j) c[i] = f.add(c[i], f.mul(a.m[i][j], in[j]));
    }
    return pl.normalize_point(c[0], c[1], c[2]);
}

}  // namespace arc7::testutil
