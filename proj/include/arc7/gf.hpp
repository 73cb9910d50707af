// Finite field towers GF(q^L), q = p^s, with the Frobenius map x -> x^q.
//
// Elements are packed residues modulo a fixed irreducible polynomial of
// degree s*L over F_p. For p = 2 the packing is the bit vector of the
// polynomial and multiplication runs off log/antilog tables (small fields)
// or a windowed carryless multiply with byte-table reduction (large fields).
// A generic digit-vector path covers p > 2; it is correctness-only.
//
// All cross-degree reasoning downstream happens inside one top field via
// Frobenius fixed-point tests, so no embedding maps exist anywhere.

#pragma once

#include <cstdint>
#include <vector>

namespace arc7 {

// A field element: packed value plus the id of its owning context.
// Arithmetic between elements of different contexts throws.
struct Fe {
    std::uint32_t v = 0;
    std::uint32_t ctx = 0;
    bool operator==(const Fe&) const = default;
};

class Field {
public:
    // See make_field(); construct through it so contexts are interned.
    Field(int p, int s, int L, int max_degree);

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

    int p() const { return p_; }
    int s() const { return s_; }
    int ext_degree() const { return L_; }
    int poly_degree() const { return n_; }           // s*L
    std::uint32_t id() const { return id_; }
    std::uint64_t size() const { return size_; }     // p^(s*L)
    std::uint64_t base_size() const { return base_size_; }  // q = p^s

    // Modulus coefficients, lowest degree first, length s*L + 1, monic.
    std::vector<int> modulus() const;

    Fe zero() const { return Fe{0, id_}; }
    Fe one() const { return make(one_raw_); }
    // The residue class of x (a generator of the multiplicative group for
    // the built-in p = 2 moduli).
    Fe gen() const { return make(gen_raw_); }

    // Deterministic element order used by every enumeration: index 0..size-1.
    Fe from_index(std::uint64_t idx) const;
    std::uint64_t index_of(Fe a) const;

    Fe add(Fe a, Fe b) const { check2(a, b); return make(add_raw(a.v, b.v)); }
    Fe sub(Fe a, Fe b) const { check2(a, b); return make(sub_raw(a.v, b.v)); }
    Fe neg(Fe a) const { check(a); return make(neg_raw(a.v)); }
    Fe mul(Fe a, Fe b) const { check2(a, b); return make(mul_raw(a.v, b.v)); }
    Fe inv(Fe a) const;                    // throws std::domain_error on zero
    Fe pow(Fe a, std::uint64_t e) const;

    // x -> x^(q^i); i reduces mod L since Frobenius has order L.
    Fe frobenius(Fe a, unsigned i = 1) const;
    // Least d >= 1 with a^(q^d) = a; always divides L.
    int degree_over_base(Fe a) const;

    // Subfield GF(q^d) inside this field, for d | L: element count and a
    // deterministic index -> element map (p = 2 only; used by the stratum
    // streams so that large planes are never scanned wholesale).
    bool has_subfield_enum() const { return p_ == 2; }
    std::uint64_t subfield_size(int d) const;
    Fe subfield_elem(int d, std::uint64_t idx) const;

    const std::vector<int>& divisors_of_L() const { return divisors_; }

private:
    int p_, s_, L_, n_;
    std::uint32_t id_ = 0;
    std::uint64_t size_ = 0, base_size_ = 0, group_order_ = 0;
    std::uint32_t one_raw_ = 0, gen_raw_ = 0;

    // p = 2 state
    std::uint32_t fbits_ = 0;       // modulus bit vector, bit n set
    std::uint32_t lowmask_ = 0;     // n low bits
    bool tables_ = false;
    std::vector<std::uint32_t> antilog_, log_;
    std::uint32_t frob_tab_[3][256] = {};   // x -> x^q, F2-linear
    std::uint32_t sq_tab_[3][256] = {};     // x -> x^2, F2-linear
    std::uint32_t red_tab_[3][256] = {};    // clmul reduction of bits >= n
    std::vector<std::vector<std::uint32_t>> subfield_basis_;  // indexed by d

    // p > 2 state: monic modulus, coefficients lowest first, length n+1
    std::vector<std::uint8_t> mod_coeffs_;

    std::vector<int> divisors_;

    Fe make(std::uint32_t raw) const { return Fe{raw, id_}; }
    void check(Fe a) const;
    void check2(Fe a, Fe b) const { check(a); check(b); }

    std::uint32_t add_raw(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub_raw(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg_raw(std::uint32_t a) const;
    std::uint32_t mul_raw(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv_raw(std::uint32_t a) const;
    std::uint32_t pow_raw(std::uint32_t a, std::uint64_t e) const;
    std::uint32_t frob_raw(std::uint32_t a) const;
    std::uint32_t sq_raw(std::uint32_t a) const;
    std::uint32_t clmul_reduce(std::uint32_t a, std::uint32_t b) const;

    void init_char2();
    void init_generic();
    void build_subfield_bases();

    friend class Plane;
    friend struct FeOps;
    friend const Field& make_field(int, int, int, int);
};

// Interned context lookup: repeated calls with the same (p, s, L) return the
// same immutable instance, safe to share across threads.
const Field& make_field(int p, int s, int L, int max_degree = 24);

// Unchecked raw-value operations for hot loops that already hold the field.
struct FeOps {
    const Field& f;
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return f.add_raw(a, b); }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return f.sub_raw(a, b); }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return f.mul_raw(a, b); }
    std::uint32_t frob(std::uint32_t a) const { return f.frob_raw(a); }
};

}  // namespace arc7
