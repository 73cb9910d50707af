#include "arc7/gf.hpp"

#include <bit>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace arc7 {

namespace {

// One primitive polynomial over F_2 per degree 1..24, as bit vectors
// (bit i = coefficient of x^i). Primitivity lets x serve as the log-table
// generator; irreducibility is still re-verified on every construction.
constexpr std::uint32_t kModTable[25] = {
    0,
    0x3,        // x + 1
    0x7,        // x^2 + x + 1
    0xB,        // x^3 + x + 1
    0x13,       // x^4 + x + 1
    0x25,       // x^5 + x^2 + 1
    0x43,       // x^6 + x + 1
    0x83,       // x^7 + x + 1
    0x11D,      // x^8 + x^4 + x^3 + x^2 + 1
    0x211,      // x^9 + x^4 + 1
    0x409,      // x^10 + x^3 + 1
    0x805,      // x^11 + x^2 + 1
    0x1053,     // x^12 + x^6 + x^4 + x + 1
    0x201B,     // x^13 + x^4 + x^3 + x + 1
    0x4443,     // x^14 + x^10 + x^6 + x + 1
    0x8003,     // x^15 + x + 1
    0x1100B,    // x^16 + x^12 + x^3 + x + 1
    0x20009,    // x^17 + x^3 + 1
    0x40081,    // x^18 + x^7 + 1
    0x80027,    // x^19 + x^5 + x^2 + x + 1
    0x100009,   // x^20 + x^3 + 1
    0x200005,   // x^21 + x^2 + 1
    0x400003,   // x^22 + x + 1
    0x800021,   // x^23 + x^5 + 1
    0x1000087,  // x^24 + x^7 + x^2 + x + 1
};

// Log/antilog tables up to 2^22 elements (32 MB); larger fields fall back
// to carryless multiplication.
constexpr int kTableMaxBits = 22;

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

int poly_deg(std::uint64_t a) { return a ? 63 - std::countl_zero(a) : -1; }

std::uint64_t poly_mod_f2(std::uint64_t a, std::uint64_t f) {
    int df = poly_deg(f);
    for (int d = poly_deg(a); d >= df; d = poly_deg(a)) a ^= f << (d - df);
    return a;
}

std::uint64_t poly_mulmod_f2(std::uint64_t a, std::uint64_t b, std::uint64_t f) {
    a = poly_mod_f2(a, f);
    std::uint64_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        b >>= 1;
        a = poly_mod_f2(a << 1, f);
    }
    return r;
}

std::uint64_t poly_gcd_f2(std::uint64_t a, std::uint64_t b) {
    while (b) {
        std::uint64_t t = poly_mod_f2(a, b);
        a = b;
        b = t;
    }
    return a;
}

// Rabin test: f of degree n is irreducible iff x^(2^n) = x (mod f) and
// gcd(x^(2^(n/r)) - x, f) = 1 for every prime r | n.
bool is_irreducible_f2(std::uint64_t f) {
    int n = poly_deg(f);
    std::uint64_t x = poly_mod_f2(2, f);
    std::uint64_t t = x;
    for (int i = 0; i < n; ++i) t = poly_mulmod_f2(t, t, f);
    if (t != x) return false;
    for (int r = 2; r <= n; ++r) {
        if (n % r != 0) continue;
        bool rp = true;
        for (int d = 2; d * d <= r; ++d)
            if (r % d == 0) { rp = false; break; }
        if (!rp) continue;
        std::uint64_t u = x;
        for (int i = 0; i < n / r; ++i) u = poly_mulmod_f2(u, u, f);
        if (poly_deg(poly_gcd_f2(u ^ x, f)) != 0) return false;
    }
    return true;
}

// ---- generic F_p polynomial helpers (construction-time, p > 2) ----

using Poly = std::vector<int>;  // coefficients, lowest degree first

int pdeg(const Poly& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i]) return i;
    return -1;
}

// f must be monic
Poly pmod(Poly a, const Poly& f, int p) {
    int df = pdeg(f);
    for (int da = pdeg(a); da >= df; da = pdeg(a)) {
        int c = a[da];
        for (int j = 0; j <= df; ++j)
            a[da - df + j] = ((a[da - df + j] - c * f[j]) % p + p) % p;
    }
    a.resize(df > 0 ? df : 1, 0);
    return a;
}

Poly pmulmod(const Poly& a, const Poly& b, const Poly& f, int p) {
    Poly r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    return pmod(std::move(r), f, p);
}

Poly pgcd(Poly a, Poly b, int p) {
    auto monic = [p](Poly v) {
        int d = pdeg(v);
        if (d < 0) return v;
        // inverse of the leading coefficient by Fermat
        int base = v[d], exp = p - 2, inv = 1;
        while (exp) {
            if (exp & 1) inv = inv * base % p;
            base = base * base % p;
            exp >>= 1;
        }
        for (auto& c : v) c = c * inv % p;
        return v;
    };
    while (pdeg(b) >= 0) {
        Poly t = pmod(a, monic(b), p);
        a = std::move(b);
        b = std::move(t);
    }
    return a;
}

bool is_irreducible_fp(const Poly& f, int p) {
    int n = pdeg(f);
    Poly x = {0, 1};
    x = pmod(x, f, p);
    auto pow_pk = [&](const Poly& base, int k) {
        // base^(p^k) mod f by k successive p-th powers
        Poly t = base;
        for (int i = 0; i < k; ++i) {
            Poly acc = {1};
            Poly b = t;
            int e = p;
            while (e) {
                if (e & 1) acc = pmulmod(acc, b, f, p);
                b = pmulmod(b, b, f, p);
                e >>= 1;
            }
            t = std::move(acc);
        }
        return t;
    };
    Poly t = pow_pk(x, n);
    if (pmod(t, f, p) != pmod(x, f, p)) return false;
    for (int r = 2; r <= n; ++r) {
        if (n % r != 0) continue;
        bool rp = true;
        for (int d = 2; d * d <= r; ++d)
            if (r % d == 0) { rp = false; break; }
        if (!rp) continue;
        Poly u = pow_pk(x, n / r);
        Poly diff(std::max(u.size(), x.size()), 0);
        for (std::size_t i = 0; i < diff.size(); ++i) {
            int ui = i < u.size() ? u[i] : 0;
            int xi = i < x.size() ? x[i] : 0;
            diff[i] = ((ui - xi) % p + p) % p;
        }
        if (pdeg(pgcd(f, diff, p)) != 0) return false;
    }
    return true;
}

}  // namespace

Field::Field(int p, int s, int L, int max_degree) : p_(p), s_(s), L_(L), n_(s * L) {
    if (!is_prime(p)) throw std::invalid_argument("make_field: p must be prime");
    if (s < 1 || L < 1) throw std::invalid_argument("make_field: s and L must be positive");
    if (max_degree > 24) max_degree = 24;
    if (n_ > max_degree) throw std::invalid_argument("make_field: s*L exceeds degree cap");

    size_ = 1;
    for (int i = 0; i < n_; ++i) {
        size_ *= static_cast<std::uint64_t>(p_);
        if (size_ > (1u << 24)) throw std::invalid_argument("make_field: field too large");
    }
    base_size_ = 1;
    for (int i = 0; i < s_; ++i) base_size_ *= static_cast<std::uint64_t>(p_);
    group_order_ = size_ - 1;

    divisors_.clear();
    for (int d = 1; d <= L_; ++d)
        if (L_ % d == 0) divisors_.push_back(d);

    if (p_ == 2)
        init_char2();
    else
        init_generic();

    build_subfield_bases();
}

void Field::init_char2() {
    fbits_ = kModTable[n_];
    lowmask_ = (n_ == 32) ? ~0u : ((1u << n_) - 1);
    if (!is_irreducible_f2(fbits_))
        throw std::logic_error("built-in modulus failed irreducibility verification");

    one_raw_ = 1;
    gen_raw_ = static_cast<std::uint32_t>(poly_mod_f2(2, fbits_));

    // Reduction tables for the carryless-multiply path.
    for (int j = 0; j < 3; ++j)
        for (int b = 0; b < 256; ++b)
            red_tab_[j][b] = static_cast<std::uint32_t>(
                poly_mod_f2(static_cast<std::uint64_t>(b) << (n_ + 8 * j), fbits_));

    // Basis images of the F2-linear maps x -> x^2 and x -> x^q.
    std::uint64_t xq = poly_mod_f2(2, fbits_);
    for (int i = 0; i < s_; ++i) xq = poly_mulmod_f2(xq, xq, fbits_);
    std::uint32_t img_sq[32] = {}, img_fr[32] = {};
    std::uint64_t accs = 1, accf = 1;
    for (int k = 0; k < n_; ++k) {
        img_sq[k] = static_cast<std::uint32_t>(accs);
        img_fr[k] = static_cast<std::uint32_t>(accf);
        accs = poly_mulmod_f2(accs, poly_mod_f2(4, fbits_), fbits_);
        accf = poly_mulmod_f2(accf, xq, fbits_);
    }
    for (int j = 0; j < 3; ++j)
        for (int b = 0; b < 256; ++b) {
            std::uint32_t vs = 0, vf = 0;
            for (int i = 0; i < 8; ++i)
                if (b >> i & 1) {
                    int k = 8 * j + i;
                    if (k < n_) {
                        vs ^= img_sq[k];
                        vf ^= img_fr[k];
                    }
                }
            sq_tab_[j][b] = vs;
            frob_tab_[j][b] = vf;
        }

    tables_ = n_ <= kTableMaxBits;
    if (tables_) {
        antilog_.resize(group_order_);
        log_.assign(size_, 0xFFFFFFFFu);
        std::uint32_t e = 1;
        for (std::uint64_t i = 0; i < group_order_; ++i) {
            if (log_[e] != 0xFFFFFFFFu)
                throw std::logic_error("built-in modulus is not primitive");
            antilog_[i] = e;
            log_[e] = static_cast<std::uint32_t>(i);
            e <<= 1;
            if (e >> n_ & 1) e ^= fbits_;
        }
        // closing the cycle lands back on 1
        if (e != 1) throw std::logic_error("built-in modulus is not primitive");
    }
}

void Field::init_generic() {
    // Deterministic search for the lexicographically first monic irreducible
    // polynomial of degree n over F_p.
    std::uint64_t combos = 1;
    for (int i = 0; i < n_; ++i) combos *= static_cast<std::uint64_t>(p_);
    Poly f(n_ + 1, 0);
    f[n_] = 1;
    bool found = false;
    for (std::uint64_t c = 0; c < combos; ++c) {
        std::uint64_t t = c;
        for (int i = 0; i < n_; ++i) {
            f[i] = static_cast<int>(t % p_);
            t /= p_;
        }
        if (is_irreducible_fp(f, p_)) {
            found = true;
            break;
        }
    }
    if (!found) throw std::logic_error("no irreducible polynomial found");
    mod_coeffs_.assign(f.begin(), f.end());
    one_raw_ = 1;
    Poly x = pmod(Poly{0, 1}, f, p_);
    std::uint32_t g = 0;
    for (int i = pdeg(x); i >= 0; --i) g = g * p_ + x[i];
    gen_raw_ = g;
}

void Field::build_subfield_bases() {
    subfield_basis_.assign(L_ + 1, {});
    if (p_ != 2) return;
    for (int d : divisors_) {
        // Kernel of (Frob^d xor identity): exactly the subfield GF(q^d).
        std::vector<std::pair<std::uint32_t, std::uint32_t>> pivots;  // (image, preimage)
        std::vector<std::uint32_t> kernel;
        for (int k = 0; k < n_; ++k) {
            std::uint32_t pre = 1u << k;
            std::uint32_t img = pre;
            for (int i = 0; i < d; ++i) img = frob_raw(img);
            img ^= pre;
            for (const auto& [pi, pp] : pivots) {
                std::uint32_t msb = 1u << poly_deg(pi);
                if (img & msb) {
                    img ^= pi;
                    pre ^= pp;
                }
            }
            if (img == 0)
                kernel.push_back(pre);
            else
                pivots.emplace_back(img, pre);
        }
        if (kernel.size() != static_cast<std::size_t>(s_ * d))
            throw std::logic_error("subfield dimension mismatch");
        subfield_basis_[d] = std::move(kernel);
    }
}

std::vector<int> Field::modulus() const {
    std::vector<int> out(n_ + 1, 0);
    if (p_ == 2) {
        for (int i = 0; i <= n_; ++i) out[i] = fbits_ >> i & 1;
    } else {
        for (int i = 0; i <= n_; ++i) out[i] = mod_coeffs_[i];
    }
    return out;
}

void Field::check(Fe a) const {
    if (a.ctx != id_) throw std::invalid_argument("field context mismatch");
}

Fe Field::from_index(std::uint64_t idx) const {
    if (idx >= size_) throw std::invalid_argument("element index out of range");
    return make(static_cast<std::uint32_t>(idx));
}

std::uint64_t Field::index_of(Fe a) const {
    check(a);
    return a.v;
}

std::uint32_t Field::add_raw(std::uint32_t a, std::uint32_t b) const {
    if (p_ == 2) return a ^ b;
    std::uint32_t r = 0, m = 1;
    for (int i = 0; i < n_; ++i) {
        r += (a % p_ + b % p_) % p_ * m;
        a /= p_;
        b /= p_;
        m *= p_;
    }
    return r;
}

std::uint32_t Field::neg_raw(std::uint32_t a) const {
    if (p_ == 2) return a;
    std::uint32_t r = 0, m = 1;
    for (int i = 0; i < n_; ++i) {
        r += (p_ - a % p_) % p_ * m;
        a /= p_;
        m *= p_;
    }
    return r;
}

std::uint32_t Field::sub_raw(std::uint32_t a, std::uint32_t b) const {
    if (p_ == 2) return a ^ b;
    return add_raw(a, neg_raw(b));
}

std::uint32_t Field::clmul_reduce(std::uint32_t a, std::uint32_t b) const {
    std::uint64_t u[16];
    u[0] = 0;
    u[1] = a;
    for (int i = 2; i < 16; i += 2) {
        u[i] = u[i >> 1] << 1;
        u[i + 1] = u[i] ^ a;
    }
    std::uint64_t prod = 0;
    int shift = 0;
    while (b) {
        prod ^= u[b & 15] << shift;
        b >>= 4;
        shift += 4;
    }
    std::uint64_t hi = prod >> n_;
    std::uint32_t r = static_cast<std::uint32_t>(prod) & lowmask_;
    r ^= red_tab_[0][hi & 255];
    r ^= red_tab_[1][hi >> 8 & 255];
    r ^= red_tab_[2][hi >> 16 & 255];
    return r;
}

std::uint32_t Field::mul_raw(std::uint32_t a, std::uint32_t b) const {
    if (p_ == 2) {
        if (a == 0 || b == 0) return 0;
        if (tables_) {
            std::uint64_t t = static_cast<std::uint64_t>(log_[a]) + log_[b];
            if (t >= group_order_) t -= group_order_;
            return antilog_[t];
        }
        return clmul_reduce(a, b);
    }
    // generic digit path
    int da[32], db[32], acc[64] = {};
    std::uint32_t t = a;
    for (int i = 0; i < n_; ++i) { da[i] = t % p_; t /= p_; }
    t = b;
    for (int i = 0; i < n_; ++i) { db[i] = t % p_; t /= p_; }
    for (int i = 0; i < n_; ++i) {
        if (!da[i]) continue;
        for (int j = 0; j < n_; ++j) acc[i + j] = (acc[i + j] + da[i] * db[j]) % p_;
    }
    for (int i = 2 * n_ - 2; i >= n_; --i) {
        int c = acc[i];
        if (!c) continue;
        for (int j = 0; j <= n_; ++j)
            acc[i - n_ + j] = ((acc[i - n_ + j] - c * mod_coeffs_[j]) % p_ + p_) % p_;
    }
    std::uint32_t r = 0;
    for (int i = n_ - 1; i >= 0; --i) r = r * p_ + acc[i];
    return r;
}

std::uint32_t Field::pow_raw(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = one_raw_;
    while (e) {
        if (e & 1) r = mul_raw(r, a);
        a = mul_raw(a, a);
        e >>= 1;
    }
    return r;
}

std::uint32_t Field::sq_raw(std::uint32_t a) const {
    if (p_ == 2)
        return sq_tab_[0][a & 255] ^ sq_tab_[1][a >> 8 & 255] ^ sq_tab_[2][a >> 16 & 255];
    return mul_raw(a, a);
}

std::uint32_t Field::frob_raw(std::uint32_t a) const {
    if (p_ == 2)
        return frob_tab_[0][a & 255] ^ frob_tab_[1][a >> 8 & 255] ^ frob_tab_[2][a >> 16 & 255];
    return pow_raw(a, base_size_);
}

std::uint32_t Field::inv_raw(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    if (p_ == 2 && tables_) {
        std::uint64_t l = log_[a];
        return antilog_[(group_order_ - l) % group_order_];
    }
    return pow_raw(a, size_ - 2);
}

Fe Field::inv(Fe a) const {
    check(a);
    return make(inv_raw(a.v));
}

Fe Field::pow(Fe a, std::uint64_t e) const {
    check(a);
    return make(pow_raw(a.v, e));
}

Fe Field::frobenius(Fe a, unsigned i) const {
    check(a);
    std::uint32_t v = a.v;
    for (unsigned k = i % static_cast<unsigned>(L_); k > 0; --k) v = frob_raw(v);
    return make(v);
}

int Field::degree_over_base(Fe a) const {
    check(a);
    int d = 1;
    std::uint32_t v = frob_raw(a.v);
    while (v != a.v) {
        v = frob_raw(v);
        ++d;
    }
    if (L_ % d != 0) throw std::logic_error("element degree does not divide L");
    return d;
}

std::uint64_t Field::subfield_size(int d) const {
    if (d < 1 || L_ % d != 0) throw std::invalid_argument("subfield degree must divide L");
    std::uint64_t r = 1;
    for (int i = 0; i < s_ * d; ++i) r *= static_cast<std::uint64_t>(p_);
    return r;
}

Fe Field::subfield_elem(int d, std::uint64_t idx) const {
    if (!has_subfield_enum()) throw std::logic_error("subfield enumeration requires p = 2");
    if (d < 1 || L_ % d != 0) throw std::invalid_argument("subfield degree must divide L");
    const auto& basis = subfield_basis_[d];
    if (idx >> basis.size()) throw std::invalid_argument("subfield index out of range");
    std::uint32_t r = 0;
    while (idx) {
        r ^= basis[std::countr_zero(idx)];
        idx &= idx - 1;
    }
    return make(r);
}

const Field& make_field(int p, int s, int L, int max_degree) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, std::unique_ptr<Field>> registry;
    static std::uint32_t next_id = 1;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(p, s, L);
    auto it = registry.find(key);
    if (it == registry.end()) {
        auto f = std::make_unique<Field>(p, s, L, max_degree);
        f->id_ = next_id++;
        it = registry.emplace(key, std::move(f)).first;
    }
    return *it->second;
}

}  // namespace arc7
