#pragma once

#include "skew46/bigint.hpp"

#include <compare>
#include <string>

namespace skew46 {

// Exact rational: reduced, denominator > 0.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(long v) : num_(v), den_(1) {}
    Rational(int v) : num_(v), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d);
    Rational(long long n, long long d) : Rational(BigInt(n), BigInt(d)) {}

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_.is_one(); }
    int sign() const { return num_.sign(); }

    Rational operator-() const;
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& o) { *this = *this + o; return *this; }
    Rational& operator-=(const Rational& o) { *this = *this - o; return *this; }
    Rational& operator*=(const Rational& o) { *this = *this * o; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    double to_double() const;
    std::string to_string() const; // "p/q", or "p" when integral
    static Rational from_string(std::string_view s);

    // Fractional part in [0,1): x - floor(x).
    Rational frac() const;
    BigInt floor() const;

private:
    BigInt num_, den_;
    void reduce();
};

inline Rational operator+(const Rational& a, long long b) { return a + Rational(b); }
inline Rational operator-(const Rational& a, long long b) { return a - Rational(b); }
inline Rational operator-(long long a, const Rational& b) { return Rational(a) - b; }
inline Rational operator*(const Rational& a, long long b) { return a * Rational(b); }

} // namespace skew46
