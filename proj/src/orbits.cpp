#include "arc7/orbits.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace arc7 {

CycleType::CycleType(const std::vector<int>& parts) {
    std::map<int, int, std::greater<int>> mult;
    for (int p : parts) {
        if (p < 1) throw std::invalid_argument("cycle type parts must be positive");
        ++mult[p];
    }
    for (auto [s, m] : mult) groups_.emplace_back(m, s);
}

CycleType CycleType::parse(const std::string& text, int n) {
    if (text == "e") return CycleType(std::vector<int>(n, 1));
    std::vector<int> parts;
    std::size_t i = 0;
    while (i < text.size()) {
        std::size_t j = text.find('+', i);
        if (j == std::string::npos) j = text.size();
        if (j == i) throw std::invalid_argument("bad cycle type: " + text);
        parts.push_back(std::stoi(text.substr(i, j - i)));
        i = j + 1;
    }
    if (parts.empty()) throw std::invalid_argument("bad cycle type: " + text);
    return CycleType(parts);
}

std::string CycleType::str() const {
    std::string out;
    for (auto [m, s] : groups_)
        for (int i = 0; i < m; ++i) {
            if (!out.empty()) out += '+';
            out += std::to_string(s);
        }
    return out;
}

int CycleType::n() const {
    int t = 0;
    for (auto [m, s] : groups_) t += m * s;
    return t;
}

std::vector<int> CycleType::parts() const {
    std::vector<int> out;
    for (auto [m, s] : groups_)
        for (int i = 0; i < m; ++i) out.push_back(s);
    return out;
}

int CycleType::lcm_parts() const {
    int l = 1;
    for (auto [m, s] : groups_) l = std::lcm(l, s);
    return l;
}

std::uint64_t CycleType::symmetry_factor() const {
    std::uint64_t f = 1;
    for (auto [m, s] : groups_) {
        for (int i = 2; i <= m; ++i) f *= static_cast<std::uint64_t>(i);
        for (int i = 0; i < m; ++i) f *= static_cast<std::uint64_t>(s);
    }
    return f;
}

bool CycleType::is_trivial() const {
    return groups_.size() == 1 && groups_[0].second == 1;
}

std::vector<CycleType> CycleType::all_of(int n) {
    std::vector<CycleType> out;
    std::vector<int> cur;
    // descending-lex generation
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

Orbit orbit_of(const Plane& pl, const Pt& a) {
    Orbit o;
    o.members.push_back(a);
    Pt t = pl.frobenius(a);
    while (!(t == a)) {
        o.members.push_back(t);
        t = pl.frobenius(t);
    }
    o.degree = static_cast<int>(o.members.size());
    std::size_t best = 0;
    for (std::size_t i = 1; i < o.members.size(); ++i)
        if (pt_less(o.members[i], o.members[best])) best = i;
    std::rotate(o.members.begin(), o.members.begin() + best, o.members.end());
    o.rep = o.members.front();
    return o;
}

BigInt stratum_size_formula(std::uint64_t q, int n) {
    if (n < 1) throw std::invalid_argument("stratum degree must be positive");
    BigInt qn = BigInt::pow(BigInt(static_cast<std::int64_t>(q)), static_cast<unsigned>(n));
    BigInt total = qn * qn + qn + BigInt(1);  // |P^2(F_{q^n})|
    for (int d = 1; d < n; ++d)
        if (n % d == 0) total -= stratum_size_formula(q, d);
    return total;
}

std::uint64_t stratum_index_count(const Plane& pl, int n) {
    const Field& f = pl.field();
    if (n < 1 || f.ext_degree() % n != 0)
        throw std::invalid_argument("stratum degree must divide L");
    if (f.has_subfield_enum() || n == f.ext_degree()) return pl.subplane_point_count(n);
    return pl.point_count();  // generic p: scan the full plane and filter
}

namespace {

template <typename Fn>
void scan_stratum(const Plane& pl, int n, std::uint64_t begin, std::uint64_t end, Fn&& fn) {
    const Field& f = pl.field();
    bool sub = f.has_subfield_enum() || n == f.ext_degree();
    for (std::uint64_t i = begin; i < end; ++i) {
        Pt p = sub ? pl.subplane_point_at(n, i) : pl.point_at(i);
        if (pl.point_degree(p) == n) fn(p);
    }
}

}  // namespace

void for_each_stratum_point(const Plane& pl, int n, std::uint64_t begin, std::uint64_t end,
                            const std::function<void(const Pt&)>& fn) {
    std::uint64_t m = stratum_index_count(pl, n);
    if (end > m) end = m;
    scan_stratum(pl, n, begin, end, fn);
}

void for_each_orbit_rep(const Plane& pl, int n, std::uint64_t begin, std::uint64_t end,
                        const std::function<void(const Pt&)>& fn) {
    std::uint64_t m = stratum_index_count(pl, n);
    if (end > m) end = m;
    scan_stratum(pl, n, begin, end, [&](const Pt& p) {
        // emit only the orbit minimum, once
        Pt t = pl.frobenius(p);
        while (!(t == p)) {
            if (pt_less(t, p)) return;
            t = pl.frobenius(t);
        }
        fn(p);
    });
}

OrbitClassIndex orbit_classes(const Plane& pl, int n, std::uint64_t max_classes) {
    OrbitClassIndex idx;
    idx.degree = n;
    for_each_orbit_rep(pl, n, 0, stratum_index_count(pl, n), [&](const Pt& p) {
        if (idx.classes.size() >= max_classes)
            throw std::length_error("orbit class list exceeds limit");
        idx.classes.push_back(p);
    });
    return idx;
}

CycleType cycle_type_of(const Plane& pl, const std::vector<Pt>& pts) {
    std::vector<bool> seen(pts.size(), false);
    auto find = [&](const Pt& p) -> int {
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (pts[i] == p) return static_cast<int>(i);
        return -1;
    };
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i] == pts[j]) throw std::invalid_argument("duplicate point in set");
    std::vector<int> sizes;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        int cur = static_cast<int>(i);
        while (!seen[cur]) {
            seen[cur] = true;
            ++len;
            int nxt = find(pl.frobenius(pts[cur]));
            if (nxt < 0) throw std::invalid_argument("set is not Frobenius-invariant");
            cur = nxt;
        }
        sizes.push_back(len);
    }
    return CycleType(sizes);
}

}  // namespace arc7
