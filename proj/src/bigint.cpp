#include "skew46/bigint.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace skew46 {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    // Negate via unsigned to survive LLONG_MIN.
    u64 m = v < 0 ? ~static_cast<u64>(v) + 1u : static_cast<u64>(v);
    mag_.push_back(m);
}

BigInt::BigInt(unsigned long long v) {
    if (v == 0) return;
    sign_ = 1;
    mag_.push_back(v);
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<u64>& a, const std::vector<u64>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

void BigInt::add_mag(std::vector<u64>& a, const std::vector<u64>& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    u64 carry = 0;
    std::size_t i = 0;
    for (; i < b.size(); ++i) {
        u64 s = a[i] + carry;
        carry = s < carry ? 1 : 0;
        a[i] = s + b[i];
        carry += a[i] < s ? 1 : 0;
    }
    for (; carry && i < a.size(); ++i) {
        a[i] += carry;
        carry = a[i] == 0 ? 1 : 0;
    }
    if (carry) a.push_back(carry);
}

void BigInt::sub_mag(std::vector<u64>& a, const std::vector<u64>& b) {
    u64 borrow = 0;
    std::size_t i = 0;
    for (; i < b.size(); ++i) {
        u64 d = a[i] - borrow;
        borrow = d > a[i] ? 1 : 0;
        u64 r = d - b[i];
        borrow += r > d ? 1 : 0;
        a[i] = r;
    }
    for (; borrow && i < a.size(); ++i) {
        u64 r = a[i] - borrow;
        borrow = r > a[i] ? 1 : 0;
        a[i] = r;
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::vector<u64> BigInt::mul_mag(const std::vector<u64>& a, const std::vector<u64>& b) {
    if (a.empty() || b.empty()) return {};
    if (a.size() == 1 && b.size() == 1) {
        u128 p = static_cast<u128>(a[0]) * b[0];
        std::vector<u64> r{static_cast<u64>(p)};
        if (u64 hi = static_cast<u64>(p >> 64)) r.push_back(hi);
        return r;
    }
    std::vector<u64> r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        u64 carry = 0;
        u64 ai = a[i];
        if (ai == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            u128 cur = static_cast<u128>(ai) * b[j] + r[i + j] + carry;
            r[i + j] = static_cast<u64>(cur);
            carry = static_cast<u64>(cur >> 64);
        }
        std::size_t k = i + b.size();
        while (carry) {
            u128 cur = static_cast<u128>(r[k]) + carry;
            r[k] = static_cast<u64>(cur);
            carry = static_cast<u64>(cur >> 64);
            ++k;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// Knuth algorithm D with 64-bit limbs. Quotient estimation uses the top
// 128 bits of the running remainder against the normalized top limb of
// the divisor, followed by the usual at-most-two corrections.
void BigInt::divmod_mag(const std::vector<u64>& a, const std::vector<u64>& b,
                        std::vector<u64>& q, std::vector<u64>& r) {
    q.clear();
    r.clear();
    if (b.empty()) throw std::domain_error("BigInt: division by zero");
    if (cmp_mag(a, b) < 0) {
        r = a;
        return;
    }
    if (b.size() == 1) {
        u64 d = b[0];
        q.assign(a.size(), 0);
        u128 rem = 0;
        for (std::size_t i = a.size(); i-- > 0;) {
            u128 cur = (rem << 64) | a[i];
            q[i] = static_cast<u64>(cur / d);
            rem = cur % d;
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        if (rem) r.push_back(static_cast<u64>(rem));
        return;
    }

    const int shift = std::countl_zero(b.back());
    const std::size_t n = b.size();
    const std::size_t m = a.size() - n;

    // Normalized copies: u has an extra high limb.
    std::vector<u64> u(a.size() + 1, 0), v(n);
    if (shift == 0) {
        for (std::size_t i = 0; i < a.size(); ++i) u[i] = a[i];
        v = b;
    } else {
        for (std::size_t i = a.size(); i-- > 0;) {
            u[i + 1] |= a[i] >> (64 - shift);
            u[i] = a[i] << shift;
        }
        for (std::size_t i = n; i-- > 0;) {
            v[i] = b[i] << shift;
            if (i > 0) v[i] |= b[i - 1] >> (64 - shift);
        }
    }

    q.assign(m + 1, 0);
    const u64 vtop = v[n - 1];
    const u64 vsecond = v[n - 2];

    for (std::size_t j = m + 1; j-- > 0;) {
        u128 top = (static_cast<u128>(u[j + n]) << 64) | u[j + n - 1];
        u128 qhat = top / vtop;
        u128 rhat = top % vtop;
        if (qhat > ~static_cast<u64>(0)) {
            qhat = ~static_cast<u64>(0);
            rhat = top - qhat * vtop;
        }
        while (rhat <= ~static_cast<u64>(0) &&
               qhat * vsecond > ((rhat << 64) | u[j + n - 2])) {
            --qhat;
            rhat += vtop;
        }

        // u[j .. j+n] -= qhat * v
        u64 borrow = 0, carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
            u128 p = static_cast<u128>(static_cast<u64>(qhat)) * v[i] + carry;
            carry = static_cast<u64>(p >> 64);
            u64 lo = static_cast<u64>(p);
            u64 d = u[j + i] - lo;
            u64 bor2 = d > u[j + i] ? 1 : 0;
            u64 d2 = d - borrow;
            bor2 += d2 > d ? 1 : 0;
            u[j + i] = d2;
            borrow = bor2;
        }
        u64 d = u[j + n] - carry;
        u64 bor2 = d > u[j + n] ? 1 : 0;
        u64 d2 = d - borrow;
        bor2 += d2 > d ? 1 : 0;
        u[j + n] = d2;

        if (bor2) {
            // qhat was one too large: add v back.
            --qhat;
            u64 c = 0;
            for (std::size_t i = 0; i < n; ++i) {
                u64 s = u[j + i] + c;
                c = s < c ? 1 : 0;
                u[j + i] = s + v[i];
                c += u[j + i] < s ? 1 : 0;
            }
            u[j + n] += c;
        }
        q[j] = static_cast<u64>(qhat);
    }

    while (!q.empty() && q.back() == 0) q.pop_back();
    r.assign(u.begin(), u.begin() + n);
    if (shift) {
        for (std::size_t i = 0; i + 1 < n; ++i)
            r[i] = (r[i] >> shift) | (r[i + 1] << (64 - shift));
        r[n - 1] >>= shift;
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

BigInt& BigInt::operator+=(const BigInt& o) {
    if (o.sign_ == 0) return *this;
    if (sign_ == 0) { *this = o; return *this; }
    if (sign_ == o.sign_) {
        add_mag(mag_, o.mag_);
        return *this;
    }
    int c = cmp_mag(mag_, o.mag_);
    if (c == 0) { sign_ = 0; mag_.clear(); return *this; }
    if (c > 0) {
        sub_mag(mag_, o.mag_);
    } else {
        std::vector<u64> tmp = o.mag_;
        sub_mag(tmp, mag_);
        mag_ = std::move(tmp);
        sign_ = o.sign_;
    }
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) {
    if (o.sign_ == 0) return *this;
    if (this == &o) { sign_ = 0; mag_.clear(); return *this; }
    BigInt neg = o;
    neg.sign_ = -neg.sign_;
    return *this += neg;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    BigInt r = a;
    r += b;
    return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) {
    BigInt r = a;
    r -= b;
    return r;
}

BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt r;
    if (a.sign_ == 0 || b.sign_ == 0) return r;
    r.mag_ = BigInt::mul_mag(a.mag_, b.mag_);
    r.sign_ = a.sign_ * b.sign_;
    return r;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    std::vector<u64> qm, rm;
    divmod_mag(a.mag_, b.mag_, qm, rm);
    q.mag_ = std::move(qm);
    r.mag_ = std::move(rm);
    q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
    r.sign_ = r.mag_.empty() ? 0 : a.sign_;
}

BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return r;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a.sign_ = a.mag_.empty() ? 0 : 1;
    b.sign_ = b.mag_.empty() ? 0 : 1;
    if (a.fits_int64() && b.fits_int64())
        return BigInt(std::gcd(a.to_int64(), b.to_int64()));
    while (!b.is_zero()) {
        BigInt q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.mag_ == b.mag_;
}

std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_)
        return a.sign_ < b.sign_ ? std::strong_ordering::less
                                 : std::strong_ordering::greater;
    int c = BigInt::cmp_mag(a.mag_, b.mag_) * (a.sign_ == 0 ? 0 : a.sign_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

BigInt& BigInt::operator<<=(unsigned bits) {
    if (sign_ == 0 || bits == 0) return *this;
    const unsigned limbs = bits / 64, rem = bits % 64;
    if (rem) {
        u64 carry = 0;
        for (auto& limb : mag_) {
            u64 next = limb >> (64 - rem);
            limb = (limb << rem) | carry;
            carry = next;
        }
        if (carry) mag_.push_back(carry);
    }
    if (limbs) mag_.insert(mag_.begin(), limbs, 0);
    return *this;
}

bool BigInt::fits_int64() const {
    if (mag_.size() > 1) return false;
    if (mag_.empty()) return true;
    if (sign_ > 0) return mag_[0] <= static_cast<u64>(INT64_MAX);
    return mag_[0] <= static_cast<u64>(INT64_MAX) + 1u;
}

std::int64_t BigInt::to_int64() const {
    if (!fits_int64()) throw std::overflow_error("BigInt: does not fit int64");
    if (mag_.empty()) return 0;
    if (sign_ > 0) return static_cast<std::int64_t>(mag_[0]);
    return static_cast<std::int64_t>(~mag_[0] + 1u);
}

double BigInt::to_double() const {
    double r = 0.0;
    for (std::size_t i = mag_.size(); i-- > 0;)
        r = r * 18446744073709551616.0 + static_cast<double>(mag_[i]);
    return sign_ < 0 ? -r : r;
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    static const u64 chunk = 10000000000000000000ull; // 10^19
    std::vector<u64> digits;
    std::vector<u64> cur = mag_;
    while (!cur.empty()) {
        u128 rem = 0;
        for (std::size_t i = cur.size(); i-- > 0;) {
            u128 x = (rem << 64) | cur[i];
            cur[i] = static_cast<u64>(x / chunk);
            rem = x % chunk;
        }
        while (!cur.empty() && cur.back() == 0) cur.pop_back();
        digits.push_back(static_cast<u64>(rem));
    }
    std::string s = sign_ < 0 ? "-" : "";
    s += std::to_string(digits.back());
    for (std::size_t i = digits.size() - 1; i-- > 0;) {
        std::string part = std::to_string(digits[i]);
        s += std::string(19 - part.size(), '0') + part;
    }
    return s;
}

BigInt BigInt::from_string(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("BigInt: empty string");
    bool neg = false;
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+') {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) throw std::invalid_argument("BigInt: no digits");
    BigInt r;
    BigInt ten_pow(1);
    // Consume in 18-digit chunks to limit the number of big multiplies.
    while (i < s.size()) {
        std::size_t take = std::min<std::size_t>(18, s.size() - i);
        u64 chunk = 0, scale = 1;
        for (std::size_t k = 0; k < take; ++k, ++i) {
            char c = s[i];
            if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit");
            chunk = chunk * 10 + static_cast<u64>(c - '0');
            scale *= 10;
        }
        r = r * BigInt(scale) + BigInt(chunk);
    }
    if (neg && !r.is_zero()) r.sign_ = -1;
    return r;
}

} // namespace skew46
