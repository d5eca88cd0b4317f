#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fakequadric {

// Arbitrary-precision signed integer, sign-magnitude over 64-bit limbs.
// Only what the lattice formulas need: ring arithmetic, divmod, shifts,
// gcd, integer square root. No floating point anywhere.
class BigInt {
public:
    BigInt() = default;

    BigInt(long long v) { // implicit: formulas mix classes and literals
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        // two's-complement-safe magnitude (handles LLONG_MIN)
        const std::uint64_t mag =
            v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
        limbs_.push_back(mag);
    }

    BigInt(int v) : BigInt(static_cast<long long>(v)) {}

    static BigInt from_string(std::string_view s) {
        std::size_t pos = 0;
        int sign = 1;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        }
        if (pos == s.size())
            throw std::invalid_argument("BigInt::from_string: no digits in '" + std::string(s) + "'");
        BigInt out;
        for (; pos < s.size();) {
            // consume up to 18 digits at a time
            std::uint64_t chunk = 0;
            std::uint64_t scale = 1;
            std::size_t taken = 0;
            while (pos < s.size() && taken < 18) {
                const char c = s[pos];
                if (c < '0' || c > '9')
                    throw std::invalid_argument("BigInt::from_string: invalid digit in '" +
                                                std::string(s) + "'");
                chunk = chunk * 10 + static_cast<std::uint64_t>(c - '0');
                scale *= 10;
                ++pos;
                ++taken;
            }
            out.mul_small_inplace(scale);
            out.add_small_inplace(chunk);
        }
        if (!out.limbs_.empty()) out.sign_ = sign;
        return out;
    }

    int sign() const { return sign_; }
    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    bool is_even() const { return limbs_.empty() || (limbs_[0] & 1u) == 0; }

    BigInt abs() const {
        BigInt r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    BigInt operator-() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.limbs_ = add_mag(a.limbs_, b.limbs_);
            r.sign_ = a.sign_;
        } else {
            const int c = cmp_mag(a.limbs_, b.limbs_);
            if (c == 0) return r; // zero
            if (c > 0) {
                r.limbs_ = sub_mag(a.limbs_, b.limbs_);
                r.sign_ = a.sign_;
            } else {
                r.limbs_ = sub_mag(b.limbs_, a.limbs_);
                r.sign_ = b.sign_;
            }
        }
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
        BigInt r;
        r.limbs_ = mul_mag(a.limbs_, b.limbs_);
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    // Truncated division: quotient rounds toward zero, remainder takes the
    // sign of the dividend, |remainder| < |divisor|.
    static std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b) {
        if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
        if (a.sign_ == 0) return {BigInt(), BigInt()};
        auto [qm, rm] = divmod_mag(a.limbs_, b.limbs_);
        BigInt q, r;
        q.limbs_ = std::move(qm);
        r.limbs_ = std::move(rm);
        if (!q.limbs_.empty()) q.sign_ = a.sign_ * b.sign_;
        if (!r.limbs_.empty()) r.sign_ = a.sign_;
        return {std::move(q), std::move(r)};
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) { return divmod(a, b).first; }
    friend BigInt operator%(const BigInt& a, const BigInt& b) { return divmod(a, b).second; }

    friend bool operator==(const BigInt& a, const BigInt& b) = default;

    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
        const int c = cmp_mag(a.limbs_, b.limbs_);
        const int signed_c = a.sign_ < 0 ? -c : c;
        return signed_c <=> 0;
    }

    // Left shift of the magnitude; sign preserved.
    BigInt operator<<(std::size_t bits) const {
        if (sign_ == 0) return BigInt();
        BigInt r;
        r.limbs_ = shl_mag(limbs_, bits);
        r.sign_ = sign_;
        return r;
    }

    // Right shift; only defined for nonnegative values (floor == truncation).
    BigInt operator>>(std::size_t bits) const {
        if (sign_ < 0) throw std::domain_error("BigInt: right shift of negative value");
        if (sign_ == 0) return BigInt();
        BigInt r;
        r.limbs_ = shr_mag(limbs_, bits);
        if (!r.limbs_.empty()) r.sign_ = 1;
        return r;
    }

    std::size_t bit_length() const {
        if (limbs_.empty()) return 0;
        return 64 * (limbs_.size() - 1) +
               (64 - static_cast<std::size_t>(std::countl_zero(limbs_.back())));
    }

    bool fits_int64() const {
        if (limbs_.size() > 1) return false;
        if (limbs_.empty()) return true;
        const std::uint64_t lim =
            sign_ < 0 ? static_cast<std::uint64_t>(1) << 63
                      : (static_cast<std::uint64_t>(1) << 63) - 1;
        return limbs_[0] <= lim;
    }

    long long to_int64() const {
        if (!fits_int64()) throw std::overflow_error("BigInt: value does not fit in 64 bits");
        if (limbs_.empty()) return 0;
        if (sign_ < 0) return static_cast<long long>(~limbs_[0] + 1);
        return static_cast<long long>(limbs_[0]);
    }

    std::string to_string() const {
        if (sign_ == 0) return "0";
        std::vector<std::uint64_t> chunks; // base 10^18, little-endian
        std::vector<std::uint64_t> mag = limbs_;
        while (!mag.empty()) {
            auto [q, rem] = divmod_mag_u64(mag, 1000000000000000000ull);
            chunks.push_back(rem);
            mag = std::move(q);
        }
        std::string out;
        if (sign_ < 0) out.push_back('-');
        out += std::to_string(chunks.back());
        for (std::size_t i = chunks.size() - 1; i-- > 0;) {
            std::string part = std::to_string(chunks[i]);
            out.append(18 - part.size(), '0');
            out += part;
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const BigInt& v) {
        return os << v.to_string();
    }

private:
    using Mag = std::vector<std::uint64_t>;

    int sign_ = 0; // -1, 0, +1; zero iff limbs_ empty
    Mag limbs_;    // little-endian, no trailing zero limbs

    static void trim(Mag& m) {
        while (!m.empty() && m.back() == 0) m.pop_back();
    }

    static int cmp_mag(const Mag& a, const Mag& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        }
        return 0;
    }

    static Mag add_mag(const Mag& a, const Mag& b) {
        const Mag& lo = a.size() < b.size() ? a : b;
        const Mag& hi = a.size() < b.size() ? b : a;
        Mag r;
        r.reserve(hi.size() + 1);
        unsigned __int128 carry = 0;
        for (std::size_t i = 0; i < hi.size(); ++i) {
            unsigned __int128 s = carry + hi[i];
            if (i < lo.size()) s += lo[i];
            r.push_back(static_cast<std::uint64_t>(s));
            carry = s >> 64;
        }
        if (carry) r.push_back(static_cast<std::uint64_t>(carry));
        return r;
    }

    // requires |a| >= |b|
    static Mag sub_mag(const Mag& a, const Mag& b) {
        Mag r;
        r.reserve(a.size());
        std::uint64_t borrow = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            const std::uint64_t bi = i < b.size() ? b[i] : 0;
            const std::uint64_t t = a[i] - bi;
            const std::uint64_t b1 = static_cast<std::uint64_t>(t > a[i]);
            const std::uint64_t t2 = t - borrow;
            const std::uint64_t b2 = static_cast<std::uint64_t>(t2 > t);
            r.push_back(t2);
            borrow = b1 | b2;
        }
        trim(r);
        return r;
    }

    static Mag mul_mag(const Mag& a, const Mag& b) {
        Mag r(a.size() + b.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.size(); ++j) {
                unsigned __int128 cur = static_cast<unsigned __int128>(a[i]) * b[j] +
                                        r[i + j] + carry;
                r[i + j] = static_cast<std::uint64_t>(cur);
                carry = static_cast<std::uint64_t>(cur >> 64);
            }
            r[i + b.size()] += carry;
        }
        trim(r);
        return r;
    }

    static Mag shl_mag(const Mag& a, std::size_t bits) {
        if (a.empty()) return {};
        const std::size_t limb_shift = bits / 64;
        const std::size_t bit_shift = bits % 64;
        Mag r(limb_shift, 0);
        if (bit_shift == 0) {
            r.insert(r.end(), a.begin(), a.end());
            return r;
        }
        std::uint64_t carry = 0;
        for (const std::uint64_t limb : a) {
            r.push_back((limb << bit_shift) | carry);
            carry = limb >> (64 - bit_shift);
        }
        if (carry) r.push_back(carry);
        return r;
    }

    static Mag shr_mag(const Mag& a, std::size_t bits) {
        const std::size_t limb_shift = bits / 64;
        if (limb_shift >= a.size()) return {};
        const std::size_t bit_shift = bits % 64;
        Mag r(a.begin() + static_cast<std::ptrdiff_t>(limb_shift), a.end());
        if (bit_shift != 0) {
            for (std::size_t i = 0; i + 1 < r.size(); ++i)
                r[i] = (r[i] >> bit_shift) | (r[i + 1] << (64 - bit_shift));
            r.back() >>= bit_shift;
        }
        trim(r);
        return r;
    }

    static std::pair<Mag, std::uint64_t> divmod_mag_u64(const Mag& a, std::uint64_t d) {
        Mag q(a.size(), 0);
        unsigned __int128 rem = 0;
        for (std::size_t i = a.size(); i-- > 0;) {
            const unsigned __int128 cur = (rem << 64) | a[i];
            q[i] = static_cast<std::uint64_t>(cur / d);
            rem = cur % d;
        }
        trim(q);
        return {std::move(q), static_cast<std::uint64_t>(rem)};
    }

    // Knuth algorithm D.
    static std::pair<Mag, Mag> divmod_mag(const Mag& u, const Mag& v) {
        if (cmp_mag(u, v) < 0) return {Mag{}, u};
        if (v.size() == 1) {
            auto [q, r] = divmod_mag_u64(u, v[0]);
            Mag rm;
            if (r) rm.push_back(r);
            return {std::move(q), std::move(rm)};
        }
        const std::size_t s = static_cast<std::size_t>(std::countl_zero(v.back()));
        Mag vn = shl_mag(v, s);
        Mag un = shl_mag(u, s);
        if (un.size() == u.size()) un.push_back(0); // spare top limb for D
        const std::size_t n = vn.size();
        const std::size_t m = un.size() - n - 1;
        Mag q(m + 1, 0);
        const unsigned __int128 base = static_cast<unsigned __int128>(1) << 64;
        for (std::size_t j = m + 1; j-- > 0;) {
            const unsigned __int128 num =
                (static_cast<unsigned __int128>(un[j + n]) << 64) | un[j + n - 1];
            unsigned __int128 qhat = num / vn[n - 1];
            unsigned __int128 rhat = num % vn[n - 1];
            while (qhat >= base ||
                   qhat * vn[n - 2] > ((rhat << 64) | un[j + n - 2])) {
                --qhat;
                rhat += vn[n - 1];
                if (rhat >= base) break;
            }
            // multiply and subtract
            std::uint64_t borrow = 0;
            std::uint64_t mul_carry = 0;
            const std::uint64_t qh = static_cast<std::uint64_t>(qhat);
            for (std::size_t i = 0; i < n; ++i) {
                const unsigned __int128 p =
                    static_cast<unsigned __int128>(qh) * vn[i] + mul_carry;
                mul_carry = static_cast<std::uint64_t>(p >> 64);
                const std::uint64_t plo = static_cast<std::uint64_t>(p);
                const std::uint64_t cur = un[i + j];
                const std::uint64_t t = cur - plo;
                const std::uint64_t b1 = static_cast<std::uint64_t>(t > cur);
                const std::uint64_t t2 = t - borrow;
                const std::uint64_t b2 = static_cast<std::uint64_t>(t2 > t);
                un[i + j] = t2;
                borrow = b1 | b2;
            }
            const std::uint64_t top = un[j + n];
            const std::uint64_t sub = mul_carry + borrow;
            un[j + n] = top - sub;
            std::uint64_t qj = qh;
            if (top < sub) { // went negative: add back once
                --qj;
                std::uint64_t carry = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    const unsigned __int128 ssum =
                        static_cast<unsigned __int128>(un[i + j]) + vn[i] + carry;
                    un[i + j] = static_cast<std::uint64_t>(ssum);
                    carry = static_cast<std::uint64_t>(ssum >> 64);
                }
                un[j + n] += carry;
            }
            q[j] = qj;
        }
        trim(q);
        un.resize(n);
        Mag r = shr_mag(un, s);
        return {std::move(q), std::move(r)};
    }

    void mul_small_inplace(std::uint64_t f) {
        if (limbs_.empty()) return;
        if (f == 0) {
            limbs_.clear();
            sign_ = 0;
            return;
        }
        std::uint64_t carry = 0;
        for (auto& limb : limbs_) {
            const unsigned __int128 cur = static_cast<unsigned __int128>(limb) * f + carry;
            limb = static_cast<std::uint64_t>(cur);
            carry = static_cast<std::uint64_t>(cur >> 64);
        }
        if (carry) limbs_.push_back(carry);
    }

    void add_small_inplace(std::uint64_t v) {
        if (v == 0) return;
        if (limbs_.empty()) {
            limbs_.push_back(v);
            sign_ = 1; // caller fixes sign afterwards (parsing only)
            return;
        }
        unsigned __int128 carry = v;
        for (auto& limb : limbs_) {
            const unsigned __int128 cur = carry + limb;
            limb = static_cast<std::uint64_t>(cur);
            carry = cur >> 64;
            if (!carry) break;
        }
        if (carry) limbs_.push_back(static_cast<std::uint64_t>(carry));
    }
};

inline BigInt gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Floor of the square root; bit-descent, division free.
inline BigInt isqrt(const BigInt& n) {
    if (n.is_negative()) throw std::domain_error("isqrt: negative argument");
    if (n < BigInt(2)) return n;
    BigInt rem = n;
    BigInt res;
    std::size_t shift = n.bit_length();
    shift -= shift % 2; // largest even power not above bit length
    BigInt bit = BigInt(1) << shift;
    while (bit > n) bit = bit >> 2;
    while (!bit.is_zero()) {
        const BigInt t = res + bit;
        if (rem >= t) {
            rem -= t;
            res = (res >> 1) + bit;
        } else {
            res = res >> 1;
        }
        bit = bit >> 2;
    }
    return res;
}

inline bool is_perfect_square(const BigInt& n) {
    if (n.is_negative()) return false;
    const BigInt r = isqrt(n);
    return r * r == n;
}

} // namespace fakequadric
