#pragma once

#include "skew46/rational.hpp"

#include <cstdint>
#include <utility>

namespace skew46::measure {

using skew46::BigInt;
using skew46::Rational;

// Density of the weighted area measure du dv / (1+u+v)^2 on the
// parameter triangle u,v >= 0, u+v <= 1; strictly positive there, with
// total mass ln 2 - 1/2.
Rational weight_density(const Rational& u, const Rational& v);

// Contraction coefficients of the zero-measure argument:
// c_0 = 1/4, c_k = 4/((k+2)(k+3)^2) for k >= 1.
Rational c_k(std::int64_t k);

struct NumericMax {
    double value;
    double u, v; // argmax on the closed parameter triangle
};

// Maximizes (1+u+v)^2 / ((u+(k+2)(v+1))^2 (u+(k+1)(v+1))) on the closed
// triangle u,v >= 0, u+v <= 1, by a dense grid plus coordinate-wise
// golden-section refinement around the best grid point.
NumericMax c_k_numeric(std::int64_t k, int grid = 2000);

// The integrand above (exposed for the finite-difference Jacobian check).
double c_k_integrand(std::int64_t k, double u, double v);

struct ClosedFormSum {
    Rational rational_part; // 253/36
    Rational pi2_coeff;     // -2/3
    double value;           // rational_part + pi2_coeff * pi^2
};

ClosedFormSum c_sum_closed_form();

// Exact certificate: head = sum_{k<=K} c_k as an exact rational
// (denominators tracked as a running lcm so the head stays reduced),
// tail_bound = 2/(K+3)^2 >= sum_{k>K} c_k, and the comparison
// head + tail_bound < 1/2 carried out in exact arithmetic.
struct SumCertificate {
    std::int64_t terms;
    Rational head;
    Rational tail_bound;
    bool below_half;
};

SumCertificate c_sum_certificate(std::int64_t K = 10000);

// Float partial sum for large K (display only; the certificate above is
// the exact statement).
double c_partial_sum_float(std::int64_t K);

// f_k in the (u,v) parametrization of Delta:
// f_k(u,v) = (v, 1) / (u + (k+1)(v+1)). Exact; throws DomainViolation
// outside the closed parameter triangle.
std::pair<Rational, Rational> f_k_map(std::int64_t k, const Rational& u, const Rational& v);

} // namespace skew46::measure
