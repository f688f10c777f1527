#include "skew46/measure.hpp"

#include "skew46/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace skew46::measure {

Rational weight_density(const Rational& u, const Rational& v) {
    Rational zero(0), one(1);
    if (u < zero || v < zero || u + v > one)
        throw Error(ErrorCode::DomainViolation,
                    "weight_density: (u,v) outside the parameter triangle");
    Rational s = one + u + v;
    return one / (s * s);
}

Rational c_k(std::int64_t k) {
    if (k < 0) throw std::domain_error("c_k: k must be >= 0");
    if (k == 0) return Rational(1, 4);
    return Rational(BigInt(4), BigInt(k + 2) * BigInt(k + 3) * BigInt(k + 3));
}

double c_k_integrand(std::int64_t k, double u, double v) {
    double s = 1.0 + u + v;
    double d1 = u + static_cast<double>(k + 2) * (v + 1.0);
    double d2 = u + static_cast<double>(k + 1) * (v + 1.0);
    return s * s / (d1 * d1 * d2);
}

namespace {

constexpr double kGolden = 0.6180339887498949;

// Golden-section maximization of a 1-d slice.
template <class F>
double golden_max(F f, double lo, double hi, int iters = 80) {
    double a = lo, b = hi;
    double x1 = b - kGolden * (b - a), x2 = a + kGolden * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < iters; ++i) {
        if (f1 < f2) {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + kGolden * (b - a);
            f2 = f(x2);
        } else {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - kGolden * (b - a);
            f1 = f(x1);
        }
    }
    return (a + b) / 2;
}

} // namespace

NumericMax c_k_numeric(std::int64_t k, int grid) {
    if (k < 0) throw std::domain_error("c_k_numeric: k must be >= 0");
    double best = -1.0, bu = 0.0, bv = 0.0;
    const double h = 1.0 / grid;
    for (int i = 0; i <= grid; ++i) {
        double u = i * h;
        for (int j = 0; j <= grid - i; ++j) {
            double v = j * h;
            double val = c_k_integrand(k, u, v);
            if (val > best) { best = val; bu = u; bv = v; }
        }
    }
    // Local refinement: alternate golden-section sweeps in u and v inside
    // the neighborhood of the best cell, clamped to the triangle.
    double u = bu, v = bv;
    for (int pass = 0; pass < 4; ++pass) {
        double ulo = std::max(0.0, u - 2 * h), uhi = std::min(1.0 - v, u + 2 * h);
        u = golden_max([&](double x) { return c_k_integrand(k, x, v); }, ulo, uhi);
        double vlo = std::max(0.0, v - 2 * h), vhi = std::min(1.0 - u, v + 2 * h);
        v = golden_max([&](double y) { return c_k_integrand(k, u, y); }, vlo, vhi);
    }
    double refined = c_k_integrand(k, u, v);
    if (refined > best) { best = refined; bu = u; bv = v; }
    return {best, bu, bv};
}

ClosedFormSum c_sum_closed_form() {
    ClosedFormSum s;
    s.rational_part = Rational(253, 36);
    s.pi2_coeff = Rational(-2, 3);
    const double pi = 3.14159265358979323846264338327950288;
    s.value = s.rational_part.to_double() + s.pi2_coeff.to_double() * pi * pi;
    return s;
}

SumCertificate c_sum_certificate(std::int64_t K) {
    if (K < 0) throw std::domain_error("c_sum_certificate: K must be >= 0");
    // Running sum num/den with den maintained as the lcm of all term
    // denominators: adding a/b to n/d via g = gcd(d, b) keeps d growing
    // multiplicatively by b/g only, so no big-by-big gcd is ever needed.
    BigInt num(1), den(4); // c_0
    for (std::int64_t k = 1; k <= K; ++k) {
        BigInt b = BigInt(k + 2) * BigInt(k + 3) * BigInt(k + 3);
        BigInt g = BigInt::gcd(den, b);
        BigInt scale = b / g;
        num = num * scale + BigInt(4) * (den / g);
        den = den * scale;
    }
    SumCertificate cert;
    cert.terms = K;
    cert.head = Rational(num, den);
    // 4/((k+2)(k+3)^2) <= 2/(k+2)^2 - 2/(k+3)^2 termwise, so the tail
    // past K telescopes to at most 2/(K+3)^2.
    cert.tail_bound = Rational(BigInt(2), BigInt(K + 3) * BigInt(K + 3));
    cert.below_half = cert.head + cert.tail_bound < Rational(1, 2);
    return cert;
}

double c_partial_sum_float(std::int64_t K) {
    // Kahan summation from the small end so the tiny tail terms are not lost.
    double sum = 0.0, comp = 0.0;
    for (std::int64_t k = K; k >= 1; --k) {
        double term = 4.0 / (static_cast<double>(k + 2) * (k + 3) * (k + 3));
        double y = term - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum + 0.25;
}

std::pair<Rational, Rational> f_k_map(std::int64_t k, const Rational& u, const Rational& v) {
    if (k < 0) throw std::domain_error("f_k_map: k must be >= 0");
    Rational zero(0), one(1);
    if (u < zero || v < zero || u + v > one)
        throw Error(ErrorCode::DomainViolation, "f_k_map: (u,v) outside the parameter triangle");
    Rational denom = u + Rational(k + 1) * (v + one);
    return {v / denom, one / denom};
}

} // namespace skew46::measure
