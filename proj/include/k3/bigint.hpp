// bigint.hpp -- arbitrary-precision signed integers and rationals.
// Sign-magnitude, base 2^32 limbs. Only the operations the lattice
// algebra needs: ring ops, truncated divmod, gcd, comparisons, printing.
#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace k3 {

class BigInt {
public:
    BigInt() = default;
    BigInt(long long v) {
        if (v == 0) return;
        sgn_ = v > 0 ? 1 : -1;
        unsigned long long u = v > 0 ? static_cast<unsigned long long>(v)
                                     : 0ULL - static_cast<unsigned long long>(v);
        while (u) {
            mag_.push_back(static_cast<uint32_t>(u & 0xffffffffULL));
            u >>= 32;
        }
    }

    bool is_zero() const { return sgn_ == 0; }
    int sign() const { return sgn_; }

    BigInt abs() const {
        BigInt r = *this;
        if (r.sgn_ < 0) r.sgn_ = 1;
        return r;
    }

    BigInt operator-() const {
        BigInt r = *this;
        r.sgn_ = -r.sgn_;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sgn_ == 0) return b;
        if (b.sgn_ == 0) return a;
        BigInt r;
        if (a.sgn_ == b.sgn_) {
            r.mag_ = add_mag(a.mag_, b.mag_);
            r.sgn_ = a.sgn_;
        } else {
            int c = cmp_mag(a.mag_, b.mag_);
            if (c == 0) return BigInt();
            if (c > 0) {
                r.mag_ = sub_mag(a.mag_, b.mag_);
                r.sgn_ = a.sgn_;
            } else {
                r.mag_ = sub_mag(b.mag_, a.mag_);
                r.sgn_ = b.sgn_;
            }
        }
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sgn_ == 0 || b.sgn_ == 0) return BigInt();
        BigInt r;
        r.sgn_ = a.sgn_ * b.sgn_;
        r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
        for (size_t i = 0; i < a.mag_.size(); ++i) {
            uint64_t carry = 0;
            for (size_t j = 0; j < b.mag_.size(); ++j) {
                uint64_t cur = static_cast<uint64_t>(a.mag_[i]) * b.mag_[j] +
                               r.mag_[i + j] + carry;
                r.mag_[i + j] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
            }
            size_t k = i + b.mag_.size();
            while (carry) {
                uint64_t cur = r.mag_[k] + carry;
                r.mag_[k] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
                ++k;
            }
        }
        r.trim();
        return r;
    }

    // Truncated division: a = q*b + r with |r| < |b| and sign(r) = sign(a).
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.sgn_ == 0) throw std::domain_error("BigInt: division by zero");
        if (a.sgn_ == 0) { q = BigInt(); r = BigInt(); return; }
        if (cmp_mag(a.mag_, b.mag_) < 0) { q = BigInt(); r = a; return; }
        std::vector<uint32_t> quot(a.mag_.size(), 0);
        std::vector<uint32_t> rem;
        int bits = static_cast<int>(a.mag_.size()) * 32 - 1;
        while (bits >= 0 && !bit_at(a.mag_, bits)) --bits;
        for (int i = bits; i >= 0; --i) {
            shl1(rem);
            if (bit_at(a.mag_, i)) {
                if (rem.empty()) rem.push_back(1);
                else rem[0] |= 1;
            }
            if (cmp_mag(rem, b.mag_) >= 0) {
                rem = sub_mag(rem, b.mag_);
                quot[i / 32] |= (1u << (i % 32));
            }
        }
        q.mag_ = std::move(quot);
        q.trim();
        q.sgn_ = q.mag_.empty() ? 0 : a.sgn_ * b.sgn_;
        r.mag_ = std::move(rem);
        r.trim();
        r.sgn_ = r.mag_.empty() ? 0 : a.sgn_;
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    BigInt& operator+=(const BigInt& o) { *this = *this + o; return *this; }
    BigInt& operator-=(const BigInt& o) { *this = *this - o; return *this; }
    BigInt& operator*=(const BigInt& o) { *this = *this * o; return *this; }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sgn_ == b.sgn_ && a.mag_ == b.mag_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) {
        if (a.sgn_ != b.sgn_) return a.sgn_ < b.sgn_;
        int c = cmp_mag(a.mag_, b.mag_);
        return a.sgn_ >= 0 ? c < 0 : c > 0;
    }
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

    bool fits_i64() const {
        if (mag_.size() > 2) return false;
        unsigned long long u = to_u64_mag();
        if (sgn_ >= 0) return u <= 0x7fffffffffffffffULL;
        return u <= 0x8000000000000000ULL;
    }
    long long to_i64() const {
        if (!fits_i64()) throw std::overflow_error("BigInt: does not fit in 64 bits");
        unsigned long long u = to_u64_mag();
        return sgn_ >= 0 ? static_cast<long long>(u)
                         : -static_cast<long long>(u - 1) - 1;
    }

    std::string to_string() const {
        if (sgn_ == 0) return "0";
        std::string out;
        BigInt t = abs();
        const BigInt chunk(1000000000LL);
        std::vector<uint32_t> parts;
        while (!t.is_zero()) {
            BigInt q, r;
            divmod(t, chunk, q, r);
            parts.push_back(r.mag_.empty() ? 0u : r.mag_[0]);
            t = q;
        }
        out = std::to_string(parts.back());
        for (auto it = parts.rbegin() + 1; it != parts.rend(); ++it) {
            std::string p = std::to_string(*it);
            out += std::string(9 - p.size(), '0') + p;
        }
        if (sgn_ < 0) out = "-" + out;
        return out;
    }

private:
    int sgn_ = 0;
    std::vector<uint32_t> mag_;  // little-endian, no leading zero limb

    void trim() {
        while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
        if (mag_.empty()) sgn_ = 0;
    }
    unsigned long long to_u64_mag() const {
        unsigned long long u = 0;
        if (mag_.size() > 1) u = static_cast<unsigned long long>(mag_[1]) << 32;
        if (!mag_.empty()) u |= mag_[0];
        return u;
    }
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        const auto& hi = a.size() >= b.size() ? a : b;
        const auto& lo = a.size() >= b.size() ? b : a;
        std::vector<uint32_t> r = hi;
        uint64_t carry = 0;
        for (size_t i = 0; i < r.size(); ++i) {
            uint64_t cur = static_cast<uint64_t>(r[i]) + (i < lo.size() ? lo[i] : 0) + carry;
            r[i] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
            if (carry == 0 && i >= lo.size()) break;
        }
        if (carry) r.push_back(static_cast<uint32_t>(carry));
        return r;
    }
    // requires a >= b
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r = a;
        int64_t borrow = 0;
        for (size_t i = 0; i < r.size(); ++i) {
            int64_t cur = static_cast<int64_t>(r[i]) - (i < b.size() ? b[i] : 0) - borrow;
            if (cur < 0) { cur += (1LL << 32); borrow = 1; } else borrow = 0;
            r[i] = static_cast<uint32_t>(cur);
            if (borrow == 0 && i >= b.size()) break;
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
    static bool bit_at(const std::vector<uint32_t>& m, int i) {
        size_t limb = static_cast<size_t>(i) / 32;
        if (limb >= m.size()) return false;
        return (m[limb] >> (i % 32)) & 1u;
    }
    static void shl1(std::vector<uint32_t>& m) {
        uint32_t carry = 0;
        for (auto& limb : m) {
            uint32_t next = limb >> 31;
            limb = (limb << 1) | carry;
            carry = next;
        }
        if (carry) m.push_back(carry);
    }
};

inline BigInt gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = b;
        b = r;
    }
    return a;
}

// Division known to be exact; throws if it is not.
inline BigInt exact_div(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    if (!r.is_zero()) throw std::domain_error("exact_div: remainder nonzero");
    return q;
}

// Exact rational with positive reduced denominator.
struct Rat {
    BigInt num;
    BigInt den = BigInt(1);

    Rat() = default;
    Rat(BigInt n) : num(std::move(n)) {}
    Rat(BigInt n, BigInt d) : num(std::move(n)), den(std::move(d)) { normalize(); }
    Rat(long long n) : num(n) {}

    void normalize() {
        if (den.is_zero()) throw std::domain_error("Rat: zero denominator");
        if (den.sign() < 0) { num = -num; den = -den; }
        if (num.is_zero()) { den = BigInt(1); return; }
        BigInt g = gcd(num, den);
        num = exact_div(num, g);
        den = exact_div(den, g);
    }
    bool is_zero() const { return num.is_zero(); }
    bool is_integer() const { return den == BigInt(1); }
    int sign() const { return num.sign(); }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return Rat(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return Rat(a.num * b.num, a.den * b.den);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero()) throw std::domain_error("Rat: division by zero");
        return Rat(a.num * b.den, a.den * b.num);
    }
    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }

    std::string to_string() const {
        return is_integer() ? num.to_string() : num.to_string() + "/" + den.to_string();
    }
};

}  // namespace k3
