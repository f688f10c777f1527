#include "skew46/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace skew46 {

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    reduce();
}

void Rational::reduce() {
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
}

namespace {

// Mantissa of the top two limbs plus a power-of-two exponent, so huge
// values survive the trip through double.
double top_mantissa(const BigInt& x, long& exp2) {
    std::size_t limbs = x.limb_count();
    if (limbs <= 15) {
        exp2 = 0;
        return x.to_double();
    }
    BigInt q, r;
    // Shift down by 64*(limbs-2) bits via division; exact enough for a
    // 53-bit result.
    BigInt shift(1);
    shift <<= static_cast<unsigned>(64 * (limbs - 2));
    BigInt::divmod(x, shift, q, r);
    exp2 = static_cast<long>(64 * (limbs - 2));
    return q.to_double();
}

} // namespace

double Rational::to_double() const {
    long en = 0, ed = 0;
    double mn = top_mantissa(num_, en);
    double md = top_mantissa(den_, ed);
    return std::ldexp(mn / md, static_cast<int>(en - ed));
}

std::string Rational::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

Rational Rational::from_string(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(BigInt::from_string(s));
    return Rational(BigInt::from_string(s.substr(0, slash)),
                    BigInt::from_string(s.substr(slash + 1)));
}

BigInt Rational::floor() const {
    BigInt q, r;
    BigInt::divmod(num_, den_, q, r);
    if (!r.is_zero() && num_.sign() < 0) q -= BigInt(1);
    return q;
}

Rational Rational::frac() const {
    return *this - Rational(floor());
}

} // namespace skew46
