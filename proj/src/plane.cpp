#include "arc7/plane.hpp"

#include <stdexcept>

namespace arc7 {

std::uint64_t Plane::point_count() const {
    std::uint64_t q = f_.size();
    return q * q + q + 1;
}

Pt Plane::point_at(std::uint64_t idx) const {
    std::uint64_t q = f_.size();
    if (idx == 0) return Pt{f_.zero(), f_.zero(), f_.one()};
    if (idx <= q) return Pt{f_.zero(), f_.one(), f_.from_index(idx - 1)};
    idx -= q + 1;
    if (idx >= q * q) throw std::invalid_argument("point index out of range");
    return Pt{f_.one(), f_.from_index(idx / q), f_.from_index(idx % q)};
}

std::uint64_t Plane::subplane_point_count(int d) const {
    std::uint64_t q = f_.subfield_size(d);
    return q * q + q + 1;
}

Pt Plane::subplane_point_at(int d, std::uint64_t idx) const {
    if (d == f_.ext_degree()) return point_at(idx);
    std::uint64_t q = f_.subfield_size(d);
    if (idx == 0) return Pt{f_.zero(), f_.zero(), f_.one()};
    if (idx <= q) return Pt{f_.zero(), f_.one(), f_.subfield_elem(d, idx - 1)};
    idx -= q + 1;
    if (idx >= q * q) throw std::invalid_argument("point index out of range");
    return Pt{f_.one(), f_.subfield_elem(d, idx / q), f_.subfield_elem(d, idx % q)};
}

Pt Plane::normalize_point(Fe x, Fe y, Fe z) const {
    if (x.v) {
        Fe s = f_.inv(x);
        return Pt{f_.one(), f_.mul(y, s), f_.mul(z, s)};
    }
    if (y.v) {
        Fe s = f_.inv(y);
        return Pt{x, f_.one(), f_.mul(z, s)};
    }
    if (z.v) return Pt{x, y, f_.one()};
    throw std::invalid_argument("cannot normalize the zero triple");
}

Ln Plane::normalize_line(Fe a, Fe b, Fe c) const {
    Pt p = normalize_point(a, b, c);
    return Ln{p.x, p.y, p.z};
}

Ln Plane::join(const Pt& p, const Pt& q) const {
    if (p == q) throw std::invalid_argument("join of equal points");
    const FeOps op{f_};
    std::uint32_t a = op.sub(op.mul(p.y.v, q.z.v), op.mul(p.z.v, q.y.v));
    std::uint32_t b = op.sub(op.mul(p.z.v, q.x.v), op.mul(p.x.v, q.z.v));
    std::uint32_t c = op.sub(op.mul(p.x.v, q.y.v), op.mul(p.y.v, q.x.v));
    return normalize_line(Fe{a, f_.id()}, Fe{b, f_.id()}, Fe{c, f_.id()});
}

Pt Plane::meet(const Ln& l, const Ln& m) const {
    if (l == m) throw std::invalid_argument("meet of equal lines");
    const FeOps op{f_};
    std::uint32_t x = op.sub(op.mul(l.b.v, m.c.v), op.mul(l.c.v, m.b.v));
    std::uint32_t y = op.sub(op.mul(l.c.v, m.a.v), op.mul(l.a.v, m.c.v));
    std::uint32_t z = op.sub(op.mul(l.a.v, m.b.v), op.mul(l.b.v, m.a.v));
    return normalize_point(Fe{x, f_.id()}, Fe{y, f_.id()}, Fe{z, f_.id()});
}

bool Plane::incident(const Pt& p, const Ln& l) const {
    const FeOps op{f_};
    std::uint32_t d = op.add(op.add(op.mul(p.x.v, l.a.v), op.mul(p.y.v, l.b.v)),
                             op.mul(p.z.v, l.c.v));
    return d == 0;
}

bool Plane::collinear(const Pt& p1, const Pt& p2, const Pt& p3) const {
    const FeOps op{f_};
    std::uint32_t m1 = op.sub(op.mul(p2.y.v, p3.z.v), op.mul(p2.z.v, p3.y.v));
    std::uint32_t m2 = op.sub(op.mul(p2.x.v, p3.z.v), op.mul(p2.z.v, p3.x.v));
    std::uint32_t m3 = op.sub(op.mul(p2.x.v, p3.y.v), op.mul(p2.y.v, p3.x.v));
    std::uint32_t det = op.add(op.sub(op.mul(p1.x.v, m1), op.mul(p1.y.v, m2)),
                               op.mul(p1.z.v, m3));
    return det == 0;
}

Pt Plane::frobenius(const Pt& p, unsigned i) const {
    return Pt{f_.frobenius(p.x, i), f_.frobenius(p.y, i), f_.frobenius(p.z, i)};
}

Ln Plane::frobenius(const Ln& l, unsigned i) const {
    return Ln{f_.frobenius(l.a, i), f_.frobenius(l.b, i), f_.frobenius(l.c, i)};
}

int Plane::point_degree(const Pt& p) const {
    int d = 1;
    Pt t = frobenius(p);
    while (!(t == p)) {
        t = frobenius(t);
        ++d;
    }
    return d;
}

int Plane::line_degree(const Ln& l) const {
    int d = 1;
    Ln t = frobenius(l);
    while (!(t == l)) {
        t = frobenius(t);
        ++d;
    }
    return d;
}

}  // namespace arc7
