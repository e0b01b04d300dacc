#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace polyidp {

/// Raised by SmallRational when an exact result does not fit in 64 bits.
class RationalOverflow : public std::overflow_error {
public:
    RationalOverflow() : std::overflow_error("rational overflow") {}
};

/// Exact rational with 64-bit numerator and denominator. Every operation
/// computes in 128 bits, reduces, and throws RationalOverflow if the reduced
/// result does not fit. Never rounds.
class SmallRational {
public:
    constexpr SmallRational() = default;
    constexpr SmallRational(std::int64_t n) : num_(n), den_(1) {}
    SmallRational(std::int64_t n, std::int64_t d) { assign(n, d); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    int sign() const { return (num_ > 0) - (num_ < 0); }

    friend SmallRational operator+(const SmallRational& a, const SmallRational& b) {
        if (a.den_ == b.den_) return from128(static_cast<__int128>(a.num_) + b.num_, a.den_);
        return from128(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                       static_cast<__int128>(a.den_) * b.den_);
    }
    friend SmallRational operator-(const SmallRational& a, const SmallRational& b) {
        if (a.den_ == b.den_) return from128(static_cast<__int128>(a.num_) - b.num_, a.den_);
        return from128(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
                       static_cast<__int128>(a.den_) * b.den_);
    }
    friend SmallRational operator*(const SmallRational& a, const SmallRational& b) {
        return from128(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
    }
    friend SmallRational operator/(const SmallRational& a, const SmallRational& b) {
        if (b.num_ == 0) throw std::domain_error("division by zero");
        return from128(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
    }
    SmallRational operator-() const {
        if (num_ == INT64_MIN) throw RationalOverflow();
        SmallRational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    SmallRational& operator+=(const SmallRational& o) { return *this = *this + o; }
    SmallRational& operator-=(const SmallRational& o) { return *this = *this - o; }
    SmallRational& operator*=(const SmallRational& o) { return *this = *this * o; }
    SmallRational& operator/=(const SmallRational& o) { return *this = *this / o; }

    friend bool operator==(const SmallRational& a, const SmallRational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator<(const SmallRational& a, const SmallRational& b) {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }
    friend bool operator>(const SmallRational& a, const SmallRational& b) { return b < a; }
    friend bool operator<=(const SmallRational& a, const SmallRational& b) { return !(b < a); }
    friend bool operator>=(const SmallRational& a, const SmallRational& b) { return !(a < b); }

    mpq_class to_mpq() const {
        static_assert(sizeof(long) == sizeof(std::int64_t));
        return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
    }

private:
    static __int128 gcd128(__int128 a, __int128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static SmallRational from128(__int128 n, __int128 d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        if (n == 0) return SmallRational(0);
        if (d != 1) {
            const __int128 g = gcd128(n, d);
            if (g > 1) {
                n /= g;
                d /= g;
            }
        }
        constexpr __int128 lim = INT64_MAX;
        if (n > lim || n < -lim || d > lim) throw RationalOverflow();
        SmallRational r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }

    void assign(std::int64_t n, std::int64_t d) {
        if (d == 0) throw std::domain_error("zero denominator");
        *this = from128(n, d);
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline int sign_of(const SmallRational& q) { return q.sign(); }
inline int sign_of(const mpq_class& q) { return sgn(q); }

inline mpq_class to_mpq(const SmallRational& q) { return q.to_mpq(); }
inline mpq_class to_mpq(const mpq_class& q) { return q; }

std::string to_string(const mpq_class& q);

} // namespace polyidp
