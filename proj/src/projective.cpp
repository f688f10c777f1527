#include "skew46/projective.hpp"

#include <cmath>

namespace skew46::proj {

BigInt det3(const Int3& a, const Int3& b, const Int3& c) {
    return a.h1 * (b.h2 * c.h3 - b.h3 * c.h2)
         - a.h2 * (b.h1 * c.h3 - b.h3 * c.h1)
         + a.h3 * (b.h1 * c.h2 - b.h2 * c.h1);
}

int det3_sign(const Int3& a, const Int3& b, const Int3& c) {
    // Fast path: with every entry below 2^30 the cofactor expansion fits
    // comfortably in __int128.
    bool small = true;
    std::int64_t v[3][3];
    const Int3* rows[3] = {&a, &b, &c};
    for (int i = 0; i < 3 && small; ++i)
        for (int j = 0; j < 3; ++j) {
            const BigInt& x = (*rows[i])[j];
            if (!x.fits_int64()) { small = false; break; }
            v[i][j] = x.to_int64();
            if (v[i][j] > (1ll << 30) || v[i][j] < -(1ll << 30)) { small = false; break; }
        }
    if (small) {
        __int128 d = static_cast<__int128>(v[0][0]) * (static_cast<__int128>(v[1][1]) * v[2][2] - static_cast<__int128>(v[1][2]) * v[2][1])
                   - static_cast<__int128>(v[0][1]) * (static_cast<__int128>(v[1][0]) * v[2][2] - static_cast<__int128>(v[1][2]) * v[2][0])
                   + static_cast<__int128>(v[0][2]) * (static_cast<__int128>(v[1][0]) * v[2][1] - static_cast<__int128>(v[1][1]) * v[2][0]);
        return d > 0 ? 1 : d < 0 ? -1 : 0;
    }
    return det3(a, b, c).sign();
}

Int3 cross(const Int3& a, const Int3& b) {
    return {a.h2 * b.h3 - a.h3 * b.h2,
            a.h3 * b.h1 - a.h1 * b.h3,
            a.h1 * b.h2 - a.h2 * b.h1};
}

ProjPoint::ProjPoint(Int3 t) : c_(std::move(t)) {
    if (c_.h1.is_zero() && c_.h2.is_zero() && c_.h3.is_zero())
        throw Error(ErrorCode::ZeroTriple, "projective point from zero triple");
    BigInt g = BigInt::gcd(BigInt::gcd(c_.h1, c_.h2), c_.h3);
    if (!g.is_one()) {
        c_.h1 = c_.h1 / g;
        c_.h2 = c_.h2 / g;
        c_.h3 = c_.h3 / g;
    }
    int lead = !c_.h1.is_zero() ? c_.h1.sign()
             : !c_.h2.is_zero() ? c_.h2.sign()
                                : c_.h3.sign();
    if (lead < 0) {
        c_.h1 = -c_.h1;
        c_.h2 = -c_.h2;
        c_.h3 = -c_.h3;
    }
}

std::strong_ordering operator<=>(const ProjPoint& a, const ProjPoint& b) {
    if (auto c = a.c_.h1 <=> b.c_.h1; c != 0) return c;
    if (auto c = a.c_.h2 <=> b.c_.h2; c != 0) return c;
    return a.c_.h3 <=> b.c_.h3;
}

std::string ProjPoint::to_string() const {
    return c_.h1.to_string() + ":" + c_.h2.to_string() + ":" + c_.h3.to_string();
}

Int3 CubicalSymmetry::apply(const Int3& t) const {
    Int3 r;
    for (int i = 0; i < 3; ++i) {
        r[i] = t[perm[i]];
        if (sgn[i] < 0) r[i] = -r[i];
    }
    return r;
}

CubicalSymmetry CubicalSymmetry::compose(const CubicalSymmetry& o) const {
    // (this o o)(t): first o, then this.
    CubicalSymmetry r;
    for (int i = 0; i < 3; ++i) {
        r.perm[i] = o.perm[perm[i]];
        r.sgn[i] = static_cast<std::int8_t>(sgn[i] * o.sgn[perm[i]]);
    }
    return r;
}

CubicalSymmetry CubicalSymmetry::inverse() const {
    CubicalSymmetry r;
    for (int i = 0; i < 3; ++i) {
        r.perm[perm[i]] = static_cast<std::uint8_t>(i);
        r.sgn[perm[i]] = sgn[i];
    }
    return r;
}

std::vector<CubicalSymmetry> CubicalSymmetry::all() {
    std::vector<CubicalSymmetry> out;
    std::array<std::uint8_t, 3> p{0, 1, 2};
    do {
        for (int mask = 0; mask < 8; ++mask) {
            CubicalSymmetry s;
            s.perm = p;
            for (int i = 0; i < 3; ++i)
                s.sgn[i] = (mask >> i) & 1 ? -1 : 1;
            out.push_back(s);
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

Int3 psi_raw(int i, const Int3& t) {
    switch (i) {
        case 1: return {t.h1, t.h2 + t.h1, t.h3 + t.h1};
        case 2: return {t.h1 + t.h2, t.h2, t.h3 + t.h2};
        case 3: return {t.h1 + t.h3, t.h2 + t.h3, t.h3};
        default: throw std::out_of_range("psi index");
    }
}

Int3 psi_inverse_raw(int i, const Int3& t) {
    switch (i) {
        case 1: return {t.h1, t.h2 - t.h1, t.h3 - t.h1};
        case 2: return {t.h1 - t.h2, t.h2, t.h3 - t.h2};
        case 3: return {t.h1 - t.h3, t.h2 - t.h3, t.h3};
        default: throw std::out_of_range("psi index");
    }
}

ProjPoint psi(int i, const ProjPoint& p) { return ProjPoint(psi_raw(i, p.coords())); }

ProjPoint psi_inverse(int i, const ProjPoint& p) {
    return ProjPoint(psi_inverse_raw(i, p.coords()));
}

Int3 apply_word_raw(std::span<const std::uint8_t> word, Int3 t) {
    for (std::size_t k = word.size(); k-- > 0;)
        t = psi_raw(word[k], t);
    return t;
}

ProjPoint apply_word(std::span<const std::uint8_t> word, const ProjPoint& p) {
    return ProjPoint(apply_word_raw(word, p.coords()));
}

ReductionTrace phi_reduce(const ProjPoint& p) {
    if (!p.nonnegative())
        throw Error(ErrorCode::NegativeCoordinate, "phi_reduce needs nonnegative coordinates");
    ReductionTrace tr;
    Int3 t = p.coords();
    while (!t.h1.is_zero() && !t.h2.is_zero() && !t.h3.is_zero()) {
        if (t.h1 <= t.h2 && t.h1 <= t.h3) {
            t.h2 -= t.h1;
            t.h3 -= t.h1;
            tr.steps.push_back(ReductionTrace::Step::Subtract);
        } else {
            std::swap(t.h1, t.h2);
            std::swap(t.h2, t.h3);
            tr.steps.push_back(ReductionTrace::Step::Rotate);
        }
    }
    tr.terminal = ProjPoint(std::move(t));
    return tr;
}

std::pair<ProjPoint, CubicalSymmetry> symmetry_reduce(const ProjPoint& p) {
    CubicalSymmetry g;
    Int3 t = p.coords();
    bool flipped = false;
    for (int i = 0; i < 3; ++i) {
        if (t[i].sign() < 0) {
            t[i] = -t[i];
            g.sgn[i] = -1;
            flipped = true;
        }
    }
    if (!flipped) g = CubicalSymmetry{};
    return {ProjPoint(std::move(t)), g};
}

Rat3 asymptotic_direction(const ProjPoint& soul, const Rat3& H) {
    const Int3& L = soul.coords();
    Rational lx(L.h1), ly(L.h2), lz(L.h3);
    Rat3 v{ly * H.z - lz * H.y, lz * H.x - lx * H.z, lx * H.y - ly * H.x};
    if (v.x.is_zero() && v.y.is_zero() && v.z.is_zero())
        throw Error(ErrorCode::CollinearInputs, "soul and H are proportional");
    return v;
}

std::pair<Rational, Rational> chart_z1(const ProjPoint& p) {
    const Int3& t = p.coords();
    if (t.h3.is_zero())
        throw Error(ErrorCode::ChartDomain, "z=1 chart needs h3 != 0");
    return {Rational(t.h1, t.h3), Rational(t.h2, t.h3)};
}

std::pair<double, double> chart_disc(const Int3& t) {
    double x = t.h1.to_double(), y = t.h2.to_double(), z = t.h3.to_double();
    double n = std::sqrt(x * x + y * y + z * z);
    x /= n; y /= n; z /= n;
    if (z < 0 || (z == 0 && (y < 0 || (y == 0 && x < 0)))) {
        x = -x; y = -y;
    }
    return {x, y};
}

std::pair<double, double> chart_disc(const ProjPoint& p) { return chart_disc(p.coords()); }

Int3 area_chart_triple(const Int3& t) {
    return {-t.h1 + t.h2 + t.h3,
             t.h1 + t.h2 - t.h3,
             t.h1 + t.h2 + t.h3};
}

std::pair<Rational, Rational> chart_area(const ProjPoint& p) {
    Int3 m = area_chart_triple(p.coords());
    if (m.h3.is_zero())
        throw Error(ErrorCode::ChartDomain, "area chart: point on the image of the line at infinity");
    return {Rational(m.h1, m.h3), Rational(m.h2, m.h3)};
}

std::pair<Rational, Rational> chart_uv(const ProjPoint& p) {
    // Inverts (u,v) |-> (1-v : 1-u : u+v) on the triangle Delta.
    const Int3& t = p.coords();
    BigInt s = t.h1 + t.h2 + t.h3;
    if (s.is_zero() || t.h1.sign() < 0 || t.h2.sign() < 0 || t.h3.sign() < 0)
        throw Error(ErrorCode::ChartDomain, "uv chart: point not in Delta");
    Rational u = Rational(1) - Rational(t.h2 * 2, s);
    Rational v = Rational(1) - Rational(t.h1 * 2, s);
    Rational zero(0), one(1);
    if (u < zero || v < zero || u + v > one)
        throw Error(ErrorCode::ChartDomain, "uv chart: point not in Delta");
    return {u, v};
}

TribonacciConstants tribonacci_constants() {
    // Newton's iteration on x^3 - x^2 - x - 1 from 1.8 converges in a
    // handful of steps to full double precision.
    double x = 1.8;
    for (int it = 0; it < 60; ++it) {
        double f = ((x - 1) * x - 1) * x - 1;
        double df = (3 * x - 2) * x - 1;
        double nx = x - f / df;
        if (nx == x) break;
        x = nx;
    }
    // x^3 - x^2 - x - 1 = (x - a)(x^2 + px + q), p = a - 1, q = 1/a.
    double pcoef = x - 1;
    double q = 1.0 / x;
    double disc = pcoef * pcoef - 4 * q;
    std::complex<double> root_disc = std::sqrt(std::complex<double>(disc, 0.0));
    std::complex<double> beta = (-pcoef + root_disc) / 2.0;
    std::complex<double> beta_bar = (-pcoef - root_disc) / 2.0;
    return {x, beta, beta_bar};
}

double tribonacci_alpha_radicals() {
    double s = 3.0 * std::sqrt(33.0);
    return (1.0 + std::cbrt(19.0 - s) + std::cbrt(19.0 + s)) / 3.0;
}

} // namespace skew46::proj
