// Exact arithmetic in the quadratic field Q[sqrt(2)].
//
// A value is stored as the canonical pair (a, b) meaning a + b*sqrt(2).
// The pair determines the value uniquely because sqrt(2) is irrational,
// which also makes the sign exactly decidable: in the mixed-sign case
// compare a^2 against 2 b^2.

#ifndef TORUSSPEC_QSQRT2_HPP
#define TORUSSPEC_QSQRT2_HPP

#include "torusspec/rational.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace torusspec {

class QSqrt2 {
public:
    QSqrt2() = default;
    QSqrt2(long long v) : a_(v) {}                      // NOLINT(google-explicit-constructor)
    QSqrt2(Rat a) : a_(std::move(a)) {}                 // NOLINT(google-explicit-constructor)
    QSqrt2(Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)) {}

    static QSqrt2 sqrt2() { return QSqrt2(Rat(0), Rat(1)); }

    // 2^{k/2} for any integer k; lands in Q[sqrt(2)] (odd k picks up a sqrt2).
    static QSqrt2 half_power_of_two(long long k) {
        if (k % 2 == 0) return QSqrt2(rat_pow2(k / 2));
        // odd k = 2q + 1: 2^{k/2} = 2^q * sqrt2, and k - 1 is even so the
        // division below is exact for either sign of k
        return QSqrt2(Rat(0), rat_pow2((k - 1) / 2));
    }

    const Rat& rational_part() const { return a_; }
    const Rat& sqrt2_part() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    friend QSqrt2 operator+(const QSqrt2& x, const QSqrt2& y) {
        return QSqrt2(x.a_ + y.a_, x.b_ + y.b_);
    }
    friend QSqrt2 operator-(const QSqrt2& x, const QSqrt2& y) {
        return QSqrt2(x.a_ - y.a_, x.b_ - y.b_);
    }
    QSqrt2 operator-() const { return QSqrt2(-a_, -b_); }
    friend QSqrt2 operator*(const QSqrt2& x, const QSqrt2& y) {
        return QSqrt2(x.a_ * y.a_ + 2 * (x.b_ * y.b_), x.a_ * y.b_ + x.b_ * y.a_);
    }
    friend QSqrt2 operator/(const QSqrt2& x, const QSqrt2& y) { return x * y.inverse(); }

    QSqrt2& operator+=(const QSqrt2& o) { a_ += o.a_; b_ += o.b_; return *this; }
    QSqrt2& operator-=(const QSqrt2& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
    QSqrt2& operator*=(const QSqrt2& o) { *this = *this * o; return *this; }
    QSqrt2& operator/=(const QSqrt2& o) { *this = *this / o; return *this; }

    QSqrt2 conjugate() const { return QSqrt2(a_, -b_); }

    // (a + b sqrt2)^{-1} = (a - b sqrt2) / (a^2 - 2 b^2); the norm vanishes
    // only at zero since sqrt(2) is irrational.
    QSqrt2 inverse() const {
        if (is_zero()) throw std::domain_error("division by zero in Q[sqrt(2)]");
        Rat norm = a_ * a_ - 2 * (b_ * b_);
        return QSqrt2(a_ / norm, -b_ / norm);
    }

    int sign() const {
        int sa = sign_of(a_), sb = sign_of(b_);
        if (sa == 0) return sb;
        if (sb == 0) return sa;
        if (sa == sb) return sa;
        // mixed signs: |a| vs |b| sqrt2  <=>  a^2 vs 2 b^2
        Rat d = a_ * a_ - 2 * (b_ * b_);
        int sd = sign_of(d); // sign of (a - b sqrt2)(a + b sqrt2); a - b sqrt2 has sign sa
        return sa * sd;
    }

    friend bool operator==(const QSqrt2& x, const QSqrt2& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const QSqrt2& x, const QSqrt2& y) { return !(x == y); }
    friend bool operator<(const QSqrt2& x, const QSqrt2& y) { return (x - y).sign() < 0; }
    friend bool operator>(const QSqrt2& x, const QSqrt2& y) { return (x - y).sign() > 0; }
    friend bool operator<=(const QSqrt2& x, const QSqrt2& y) { return (x - y).sign() <= 0; }
    friend bool operator>=(const QSqrt2& x, const QSqrt2& y) { return (x - y).sign() >= 0; }

    double to_double() const {
        return rat_to_double(a_) + rat_to_double(b_) * std::sqrt(2.0);
    }

    std::string to_string() const {
        if (b_.is_zero()) return rat_to_string(a_);
        std::string s;
        if (!a_.is_zero()) s = rat_to_string(a_) + (sign_of(b_) > 0 ? "+" : "");
        s += rat_to_string(b_) + "*sqrt2";
        return s;
    }

private:
    Rat a_, b_;
};

inline QSqrt2 qs2_from_strings(const std::string& a, const std::string& b) {
    return QSqrt2(rat_from_string(a), rat_from_string(b));
}

} // namespace torusspec

#endif
