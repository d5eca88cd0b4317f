#pragma once

#include <string>
#include <utility>

#include "fakequadric/bigint.hpp"

namespace fakequadric {

// Exact rational number, always reduced, denominator > 0.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {} // implicit
    Rational(long long n) : num_(n), den_(1) {}
    Rational(int n) : num_(n), den_(1) {}

    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
        if (den_.is_negative()) {
            num_ = -num_;
            den_ = -den_;
        }
        reduce();
    }

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }
    bool is_integer() const { return den_ == BigInt(1); }

    Rational operator-() const {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }

    friend bool operator==(const Rational& a, const Rational& b) = default;

    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

    std::string to_string() const {
        if (is_integer()) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& v) {
        return os << v.to_string();
    }

private:
    BigInt num_;
    BigInt den_;

    void reduce() {
        if (num_.is_zero()) {
            den_ = BigInt(1);
            return;
        }
        const BigInt g = gcd(num_, den_);
        if (g != BigInt(1)) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }
};

} // namespace fakequadric
