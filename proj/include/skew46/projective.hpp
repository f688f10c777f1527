#pragma once

#include "skew46/bigint.hpp"
#include "skew46/error.hpp"
#include "skew46/rational.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace skew46::proj {

// Integer triple of homogeneous coordinates.
struct Int3 {
    BigInt h1, h2, h3;

    friend Int3 operator+(const Int3& a, const Int3& b) {
        return {a.h1 + b.h1, a.h2 + b.h2, a.h3 + b.h3};
    }
    friend Int3 operator-(const Int3& a, const Int3& b) {
        return {a.h1 - b.h1, a.h2 - b.h2, a.h3 - b.h3};
    }
    friend bool operator==(const Int3& a, const Int3& b) = default;
    const BigInt& operator[](int i) const { return i == 0 ? h1 : i == 1 ? h2 : h3; }
    BigInt& operator[](int i) { return i == 0 ? h1 : i == 1 ? h2 : h3; }
};

BigInt det3(const Int3& a, const Int3& b, const Int3& c);
int det3_sign(const Int3& a, const Int3& b, const Int3& c);
Int3 cross(const Int3& a, const Int3& b);

// Point of the rational projective plane. Canonical representative:
// primitive (gcd 1) with the first nonzero coordinate positive, so
// projective equality is plain triple comparison.
class ProjPoint {
public:
    ProjPoint() : c_{BigInt(1), BigInt(0), BigInt(0)} {}
    explicit ProjPoint(Int3 t);
    ProjPoint(long long a, long long b, long long c)
        : ProjPoint(Int3{BigInt(a), BigInt(b), BigInt(c)}) {}

    const Int3& coords() const { return c_; }
    const BigInt& operator[](int i) const { return c_[i]; }

    bool nonnegative() const {
        return c_.h1.sign() >= 0 && c_.h2.sign() >= 0 && c_.h3.sign() >= 0;
    }

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) = default;
    friend std::strong_ordering operator<=>(const ProjPoint& a, const ProjPoint& b);

    std::string to_string() const; // "a:b:c"

private:
    Int3 c_;
};

inline ProjPoint normalize(Int3 t) { return ProjPoint(std::move(t)); }

// Signed coordinate permutation (full cubic symmetry group, 48 elements;
// -id acts trivially on the projective plane).
struct CubicalSymmetry {
    std::array<std::uint8_t, 3> perm{0, 1, 2}; // image coordinate i is taken from slot perm[i]
    std::array<std::int8_t, 3> sgn{1, 1, 1};

    Int3 apply(const Int3& t) const;
    ProjPoint apply(const ProjPoint& p) const { return ProjPoint(apply(p.coords())); }
    CubicalSymmetry compose(const CubicalSymmetry& o) const; // this after o
    CubicalSymmetry inverse() const;
    bool is_identity() const { return perm == std::array<std::uint8_t, 3>{0, 1, 2} && sgn == std::array<std::int8_t, 3>{1, 1, 1}; }
    friend bool operator==(const CubicalSymmetry&, const CubicalSymmetry&) = default;

    static std::vector<CubicalSymmetry> all();
};

// psi_i(h) adds h_i to the other two coordinates; unimodular.
ProjPoint psi(int i, const ProjPoint& p);
ProjPoint psi_inverse(int i, const ProjPoint& p);
Int3 psi_raw(int i, const Int3& t);
Int3 psi_inverse_raw(int i, const Int3& t);

// word = (i1,...,ik): applies psi_{ik} first, psi_{i1} last.
ProjPoint apply_word(std::span<const std::uint8_t> word, const ProjPoint& p);
Int3 apply_word_raw(std::span<const std::uint8_t> word, Int3 t);

struct ReductionTrace {
    enum class Step : std::uint8_t { Subtract, Rotate };
    std::vector<Step> steps;
    ProjPoint terminal; // has a zero coordinate
};

// Iterates h -> (h1, h2-h1, h3-h1) when 0 <= h1 <= h2,h3, else the cyclic
// shift (h2,h3,h1), until a coordinate vanishes. Subtract is taken on ties.
ReductionTrace phi_reduce(const ProjPoint& p);

// Returns (q, g) with q in the closed positive octant and g(q) == p.
std::pair<ProjPoint, CubicalSymmetry> symmetry_reduce(const ProjPoint& p);

struct Rat3 {
    Rational x, y, z;
    friend bool operator==(const Rat3&, const Rat3&) = default;
};

// soul x H; throws CollinearInputs when the cross product vanishes.
Rat3 asymptotic_direction(const ProjPoint& soul, const Rat3& H);

enum class Chart { Z1, Disc, AreaChart, Uv };

// Affine charts return exact rationals; the disc model is float-only.
std::pair<Rational, Rational> chart_z1(const ProjPoint& p);
std::pair<double, double> chart_disc(const ProjPoint& p);
std::pair<double, double> chart_disc(const Int3& t);
std::pair<Rational, Rational> chart_area(const ProjPoint& p);
std::pair<Rational, Rational> chart_uv(const ProjPoint& p);

// The fixed unimodular-column matrix behind the area chart: columns
// (-1,1,1), (1,1,1), (1,-1,1); maps the triangle Delta onto the corner
// triangle with affine vertices (0,0), (1,0), (0,1).
Int3 area_chart_triple(const Int3& t);

struct TribonacciConstants {
    double alpha;                 // real root of x^3 - x^2 - x - 1
    std::complex<double> beta;    // complex pair
    std::complex<double> beta_bar;
};

TribonacciConstants tribonacci_constants();
double tribonacci_alpha_radicals(); // closed radical form

} // namespace skew46::proj
