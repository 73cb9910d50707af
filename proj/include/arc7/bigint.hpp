// Arbitrary-precision signed integers and exact rationals.
//
// The enumeration counters all fit in 64 bits, but the closed-form side of
// the census (polynomial values, |PGL| products, normalized counts) must be
// exact at any q, so the formula registry works over BigInt / BigRat.

#pragma once

#include <cstdint>
#include <compare>
#include <string>
#include <vector>

namespace arc7 {

class BigInt {
public:
    BigInt() = default;
    BigInt(std::int64_t v);
    static BigInt from_string(const std::string& s);

    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator-() const;
    BigInt operator*(const BigInt& o) const;
    // Truncated toward zero, like built-in integer division.
    BigInt operator/(const BigInt& o) const;
    BigInt operator%(const BigInt& o) const;

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    bool operator==(const BigInt& o) const;
    std::strong_ordering operator<=>(const BigInt& o) const;

    bool is_zero() const { return mag_.empty(); }
    bool is_negative() const { return neg_; }
    int sign() const { return mag_.empty() ? 0 : (neg_ ? -1 : 1); }

    // Value must fit; throws std::overflow_error otherwise.
    std::int64_t to_int64() const;
    std::string to_string() const;

    static BigInt pow(const BigInt& base, unsigned exp);
    static BigInt gcd(BigInt a, BigInt b);
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

private:
    // Base 2^32 little-endian magnitude; empty means zero. neg_ never set for zero.
    std::vector<std::uint32_t> mag_;
    bool neg_ = false;

    void trim();
    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
};

// Exact rational, always normalized: gcd(num, den) = 1, den > 0, zero is 0/1.
class BigRat {
public:
    BigRat() : num_(0), den_(1) {}
    BigRat(BigInt n) : num_(std::move(n)), den_(1) {}
    BigRat(std::int64_t n) : num_(n), den_(1) {}
    BigRat(BigInt n, BigInt d);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    BigRat operator+(const BigRat& o) const;
    BigRat operator-(const BigRat& o) const;
    BigRat operator*(const BigRat& o) const;
    BigRat operator/(const BigRat& o) const;
    bool operator==(const BigRat& o) const { return num_ == o.num_ && den_ == o.den_; }

    bool is_integer() const { return den_ == BigInt(1); }
    bool is_zero() const { return num_.is_zero(); }

    // "num/den", or just "num" when the denominator is 1.
    std::string to_string() const;
    static BigRat from_string(const std::string& s);

private:
    BigInt num_, den_;
    void normalize();
};

}  // namespace arc7
