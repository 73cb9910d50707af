#include "arc7/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace arc7 {

BigInt::BigInt(std::int64_t v) {
    neg_ = v < 0;
    std::uint64_t m = neg_ ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
    while (m) {
        mag_.push_back(static_cast<std::uint32_t>(m));
        m >>= 32;
    }
    if (mag_.empty()) neg_ = false;
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) neg_ = false;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r;
    r.reserve(std::max(a.size(), b.size()) + 1);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        std::uint64_t s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        r.push_back(static_cast<std::uint32_t>(s));
        carry = s >> 32;
    }
    if (carry) r.push_back(static_cast<std::uint32_t>(carry));
    return r;
}

// Requires |a| >= |b|.
std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r(a.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        borrow = d < 0;
        if (d < 0) d += (std::int64_t(1) << 32);
        r[i] = static_cast<std::uint32_t>(d);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
    BigInt r;
    if (neg_ == o.neg_) {
        r.mag_ = add_mag(mag_, o.mag_);
        r.neg_ = neg_;
    } else {
        int c = cmp_mag(mag_, o.mag_);
        if (c == 0) return BigInt();
        if (c > 0) {
            r.mag_ = sub_mag(mag_, o.mag_);
            r.neg_ = neg_;
        } else {
            r.mag_ = sub_mag(o.mag_, mag_);
            r.neg_ = o.neg_;
        }
    }
    r.trim();
    return r;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    if (!r.mag_.empty()) r.neg_ = !r.neg_;
    return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    if (is_zero() || o.is_zero()) return BigInt();
    BigInt r;
    r.mag_.assign(mag_.size() + o.mag_.size(), 0);
    for (std::size_t i = 0; i < mag_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < o.mag_.size(); ++j) {
            std::uint64_t cur = r.mag_[i + j] +
                                static_cast<std::uint64_t>(mag_[i]) * o.mag_[j] + carry;
            r.mag_[i + j] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        std::size_t k = i + o.mag_.size();
        while (carry) {
            std::uint64_t cur = r.mag_[k] + carry;
            r.mag_[k] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
            ++k;
        }
    }
    r.neg_ = neg_ != o.neg_;
    r.trim();
    return r;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
    // Schoolbook long division over bits; magnitudes are small here.
    q = BigInt();
    r = BigInt();
    if (cmp_mag(a.mag_, b.mag_) < 0) {
        r = a;
        if (!r.mag_.empty()) r.neg_ = false;
        // fallthrough to sign fixup below
    } else {
        std::size_t nbits = a.mag_.size() * 32;
        q.mag_.assign(a.mag_.size(), 0);
        for (std::size_t i = nbits; i-- > 0;) {
            // r = r*2 + bit i of |a|
            std::uint32_t carry = 0;
            for (std::size_t w = 0; w < r.mag_.size(); ++w) {
                std::uint32_t nc = r.mag_[w] >> 31;
                r.mag_[w] = (r.mag_[w] << 1) | carry;
                carry = nc;
            }
            if (carry) r.mag_.push_back(1);
            if ((a.mag_[i / 32] >> (i % 32)) & 1u) {
                if (r.mag_.empty()) r.mag_.push_back(1);
                else {
                    std::size_t w = 0;
                    while (true) {
                        if (w == r.mag_.size()) { r.mag_.push_back(1); break; }
                        if (++r.mag_[w] != 0) break;
                        ++w;
                    }
                }
            }
            if (cmp_mag(r.mag_, b.mag_) >= 0) {
                r.mag_ = sub_mag(r.mag_, b.mag_);
                q.mag_[i / 32] |= (1u << (i % 32));
            }
        }
        q.trim();
        r.trim();
    }
    q.neg_ = !q.mag_.empty() && (a.neg_ != b.neg_);
    r.neg_ = !r.mag_.empty() && a.neg_;
}

BigInt BigInt::operator/(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return q;
}

BigInt BigInt::operator%(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return r;
}

bool BigInt::operator==(const BigInt& o) const {
    return neg_ == o.neg_ && mag_ == o.mag_;
}

std::strong_ordering BigInt::operator<=>(const BigInt& o) const {
    if (neg_ != o.neg_) return neg_ ? std::strong_ordering::less : std::strong_ordering::greater;
    int c = cmp_mag(mag_, o.mag_);
    if (neg_) c = -c;
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::int64_t BigInt::to_int64() const {
    std::uint64_t m = 0;
    if (mag_.size() > 2) throw std::overflow_error("BigInt: does not fit in int64");
    for (std::size_t i = mag_.size(); i-- > 0;) m = (m << 32) | mag_[i];
    if (!neg_ && m > static_cast<std::uint64_t>(INT64_MAX))
        throw std::overflow_error("BigInt: does not fit in int64");
    if (neg_ && m > static_cast<std::uint64_t>(INT64_MAX) + 1)
        throw std::overflow_error("BigInt: does not fit in int64");
    return neg_ ? -static_cast<std::int64_t>(m) : static_cast<std::int64_t>(m);
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    std::string digits;
    std::vector<std::uint32_t> m = mag_;
    while (!m.empty()) {
        // Divide magnitude by 10^9, emit remainder.
        std::uint64_t rem = 0;
        for (std::size_t i = m.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | m[i];
            m[i] = static_cast<std::uint32_t>(cur / 1000000000u);
            rem = cur % 1000000000u;
        }
        while (!m.empty() && m.back() == 0) m.pop_back();
        std::string chunk = std::to_string(rem);
        if (!m.empty()) chunk = std::string(9 - chunk.size(), '0') + chunk;
        digits = chunk + digits;
    }
    return (neg_ ? "-" : "") + digits;
}

BigInt BigInt::from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("BigInt: empty string");
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '-' || s[0] == '+') {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) throw std::invalid_argument("BigInt: no digits");
    BigInt r(0);
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
        r = r * BigInt(10) + BigInt(s[i] - '0');
    }
    if (neg) r = -r;
    return r;
}

BigInt BigInt::pow(const BigInt& base, unsigned exp) {
    BigInt r(1), b = base;
    while (exp) {
        if (exp & 1u) r = r * b;
        b = b * b;
        exp >>= 1;
    }
    return r;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    if (a.is_negative()) a = -a;
    if (b.is_negative()) b = -b;
    while (!b.is_zero()) {
        BigInt t = a % b;
        a = b;
        b = t;
    }
    return a;
}

BigRat::BigRat(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::domain_error("BigRat: zero denominator");
    normalize();
}

void BigRat::normalize() {
    if (den_.is_negative()) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    num_ = num_ / g;
    den_ = den_ / g;
}

BigRat BigRat::operator+(const BigRat& o) const {
    return BigRat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
BigRat BigRat::operator-(const BigRat& o) const {
    return BigRat(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}
BigRat BigRat::operator*(const BigRat& o) const {
    return BigRat(num_ * o.num_, den_ * o.den_);
}
BigRat BigRat::operator/(const BigRat& o) const {
    if (o.num_.is_zero()) throw std::domain_error("BigRat: division by zero");
    return BigRat(num_ * o.den_, den_ * o.num_);
}

std::string BigRat::to_string() const {
    if (is_integer()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

BigRat BigRat::from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return BigRat(BigInt::from_string(s));
    return BigRat(BigInt::from_string(s.substr(0, slash)),
                  BigInt::from_string(s.substr(slash + 1)));
}

}  // namespace arc7
