#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace skew46 {

// Arbitrary-precision signed integer, sign + magnitude in 64-bit limbs
// (little-endian, no leading zero limb). Zone labels grow like the
// Tribonacci constant to the depth, so fixed-width integers are not an
// option for the deeper parts of the tree.
class BigInt {
public:
    BigInt() = default;
    BigInt(int v) : BigInt(static_cast<long long>(v)) {}
    BigInt(long v) : BigInt(static_cast<long long>(v)) {}
    BigInt(long long v);
    BigInt(unsigned int v) : BigInt(static_cast<unsigned long long>(v)) {}
    BigInt(unsigned long v) : BigInt(static_cast<unsigned long long>(v)) {}
    BigInt(unsigned long long v);

    static BigInt from_string(std::string_view s);
    std::string to_string() const;
    double to_double() const;

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    int sign() const { return sign_; }
    bool is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }
    bool is_even() const { return sign_ == 0 || (mag_[0] & 1u) == 0; }

    bool fits_int64() const;
    // Throws std::overflow_error when the value does not fit.
    std::int64_t to_int64() const;

    std::size_t limb_count() const { return mag_.size(); }

    BigInt operator-() const;
    BigInt abs() const;

    BigInt& operator+=(const BigInt& o);
    BigInt& operator-=(const BigInt& o);
    BigInt& operator*=(const BigInt& o) { *this = *this * o; return *this; }

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);

    // Truncating division: q rounds toward zero, r has the sign of a.
    // a == q*b + r and |r| < |b|.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

    static BigInt gcd(BigInt a, BigInt b);

    friend bool operator==(const BigInt& a, const BigInt& b);
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b);

    BigInt& operator<<=(unsigned bits);

private:
    int sign_ = 0;                 // -1, 0, +1
    std::vector<std::uint64_t> mag_;

    void trim();
    static int cmp_mag(const std::vector<std::uint64_t>& a,
                       const std::vector<std::uint64_t>& b);
    static void add_mag(std::vector<std::uint64_t>& a,
                        const std::vector<std::uint64_t>& b);
    // Requires |a| >= |b|.
    static void sub_mag(std::vector<std::uint64_t>& a,
                        const std::vector<std::uint64_t>& b);
    static std::vector<std::uint64_t> mul_mag(const std::vector<std::uint64_t>& a,
                                              const std::vector<std::uint64_t>& b);
    static void divmod_mag(const std::vector<std::uint64_t>& a,
                           const std::vector<std::uint64_t>& b,
                           std::vector<std::uint64_t>& q,
                           std::vector<std::uint64_t>& r);
};

inline BigInt operator+(const BigInt& a, long long b) { return a + BigInt(b); }
inline BigInt operator-(const BigInt& a, long long b) { return a - BigInt(b); }
inline BigInt operator*(const BigInt& a, long long b) { return a * BigInt(b); }
inline bool operator==(const BigInt& a, long long b) { return a == BigInt(b); }

} // namespace skew46
