#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skew46/projective.hpp"

#include <random>

using namespace skew46;
using namespace skew46::proj;

namespace {
ProjPoint pp(long long a, long long b, long long c) { return ProjPoint(a, b, c); }
} // namespace

TEST_CASE("normalize") {
    CHECK(pp(2, 4, 6) == pp(1, 2, 3));
    CHECK(pp(0, -2, -4) == pp(0, 1, 2));
    CHECK(pp(1, 1, 1) == pp(1, 1, 1));
    CHECK(pp(-1, -1, -1) == pp(1, 1, 1));
    CHECK(pp(0, 0, -5) == pp(0, 0, 1));
    CHECK_THROWS_AS(ProjPoint(Int3{BigInt(0), BigInt(0), BigInt(0)}), Error);
}

TEST_CASE("psi examples and unimodularity") {
    CHECK(psi(1, pp(1, 0, 0)) == pp(1, 1, 1));
    CHECK(psi(2, pp(0, 1, 0)) == pp(1, 1, 1));
    CHECK(psi(3, pp(0, 0, 1)) == pp(1, 1, 1));
    CHECK(psi(3, pp(1, 1, 1)) == pp(2, 2, 1));

    // determinant of each psi matrix is exactly 1
    for (int i = 1; i <= 3; ++i) {
        Int3 c0 = psi_raw(i, {1, 0, 0});
        Int3 c1 = psi_raw(i, {0, 1, 0});
        Int3 c2 = psi_raw(i, {0, 0, 1});
        CHECK(det3(c0, c1, c2) == BigInt(1));
    }
}

TEST_CASE("psi inverse") {
    CHECK(psi_inverse(1, pp(1, 1, 1)) == pp(1, 0, 0));
    CHECK(psi_inverse(2, pp(2, 1, 2)) == pp(1, 1, 1));
    CHECK(psi(3, psi_inverse(3, pp(2, 3, 4))) == pp(2, 3, 4));

    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long long> d(-50, 50);
    for (int it = 0; it < 5000; ++it) {
        long long a = d(rng), b = d(rng), c = d(rng);
        if (!a && !b && !c) continue;
        ProjPoint p(a, b, c);
        for (int i = 1; i <= 3; ++i) {
            CHECK(psi_inverse(i, psi(i, p)) == p);
            CHECK(psi(i, psi_inverse(i, p)) == p);
        }
    }
}

TEST_CASE("psi maps primitive triples to primitive triples") {
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<long long> d(-40, 40);
    for (int it = 0; it < 3000; ++it) {
        long long a = d(rng), b = d(rng), c = d(rng);
        if (!a && !b && !c) continue;
        ProjPoint p(a, b, c); // primitive by construction
        for (int i = 1; i <= 3; ++i) {
            Int3 img = psi_raw(i, p.coords());
            BigInt g = BigInt::gcd(BigInt::gcd(img.h1, img.h2), img.h3);
            CHECK(g == BigInt(1));
        }
    }
}

TEST_CASE("apply_word composes outermost-first") {
    std::vector<std::uint8_t> w{1, 2};
    CHECK(apply_word(w, pp(1, 1, 1)) == pp(2, 3, 4));
    CHECK(apply_word(std::span<const std::uint8_t>{}, pp(5, 7, 9)) == pp(5, 7, 9));
    std::vector<std::uint8_t> w3{3};
    CHECK(apply_word(w3, pp(0, 0, 1)) == pp(1, 1, 1));
}

TEST_CASE("phi_reduce traces") {
    using Step = ReductionTrace::Step;
    auto tr = phi_reduce(pp(2, 3, 4));
    CHECK(tr.steps == std::vector<Step>{Step::Subtract, Step::Rotate, Step::Subtract,
                                        Step::Subtract});
    CHECK(tr.terminal == pp(1, 0, 0));

    tr = phi_reduce(pp(1, 0, 0));
    CHECK(tr.steps.empty());
    CHECK(tr.terminal == pp(1, 0, 0));

    tr = phi_reduce(pp(1, 1, 1));
    CHECK(tr.steps == std::vector<Step>{Step::Subtract});
    CHECK(tr.terminal == pp(1, 0, 0));

    CHECK_THROWS_AS(phi_reduce(pp(1, -2, 3)), Error);
}

TEST_CASE("phi terminal always has a zero coordinate") {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<long long> d(0, 300);
    for (int it = 0; it < 3000; ++it) {
        long long a = d(rng), b = d(rng), c = d(rng);
        if (!a && !b && !c) continue;
        auto tr = phi_reduce(ProjPoint(a, b, c));
        const Int3& t = tr.terminal.coords();
        CHECK((t.h1.is_zero() || t.h2.is_zero() || t.h3.is_zero()));
    }
}

TEST_CASE("phi composed with psi_1 is the identity where Subtract applies") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> d(1, 60);
    for (int it = 0; it < 2000; ++it) {
        long long a = d(rng), b = d(rng), c = d(rng);
        ProjPoint p(a, b, c);
        Int3 up = psi_raw(1, p.coords());
        // psi_1 image always satisfies h1 <= h2, h3, so phi subtracts once.
        Int3 back = {up.h1, up.h2 - up.h1, up.h3 - up.h1};
        CHECK(ProjPoint(back) == p);
    }
}

TEST_CASE("cubical symmetry group") {
    auto all = CubicalSymmetry::all();
    CHECK(all.size() == 48);
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int it = 0; it < 2000; ++it) {
        const auto& g = all[pick(rng)];
        const auto& h = all[pick(rng)];
        auto gh = g.compose(h);
        // closure
        CHECK(std::find(all.begin(), all.end(), gh) != all.end());
        // inverse round trip on points
        ProjPoint p(3, -5, 7);
        CHECK(g.inverse().apply(g.apply(p)) == p);
        CHECK(g.compose(g.inverse()).is_identity());
        // action respects composition
        CHECK(gh.apply(p) == g.apply(h.apply(p)));
    }
}

TEST_CASE("symmetry_reduce round trip") {
    CHECK(symmetry_reduce(pp(1, -2, 3)).first == pp(1, 2, 3));
    CHECK(symmetry_reduce(pp(1, 2, 3)).second.is_identity());
    CHECK(symmetry_reduce(pp(-1, -1, -1)).first == pp(1, 1, 1));

    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long long> d(-100, 100);
    for (int it = 0; it < 10000; ++it) {
        long long a = d(rng), b = d(rng), c = d(rng);
        if (!a && !b && !c) continue;
        ProjPoint p(a, b, c);
        auto [q, g] = symmetry_reduce(p);
        CHECK(q.nonnegative());
        CHECK(g.apply(q) == p);
    }
}

TEST_CASE("asymptotic_direction") {
    Rat3 H{Rational(1), Rational(2), Rational(5)};
    Rat3 v = asymptotic_direction(pp(0, 0, 1), H);
    CHECK(v.x == Rational(-2));
    CHECK(v.y == Rational(1));
    CHECK(v.z == Rational(0));

    // orthogonality to both inputs
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<long long> d(-40, 40);
    for (int it = 0; it < 2000; ++it) {
        long long a = d(rng), b = d(rng), c = d(rng);
        if (!a && !b && !c) continue;
        ProjPoint soul(a, b, c);
        Rat3 Hr{Rational(d(rng)), Rational(d(rng)), Rational(d(rng) + 41)};
        try {
            Rat3 w = asymptotic_direction(soul, Hr);
            Rational ds = w.x * Rational(soul.coords().h1) + w.y * Rational(soul.coords().h2) +
                          w.z * Rational(soul.coords().h3);
            Rational dh = w.x * Hr.x + w.y * Hr.y + w.z * Hr.z;
            CHECK(ds == Rational(0));
            CHECK(dh == Rational(0));
        } catch (const Error& e) {
            CHECK(e.code == ErrorCode::CollinearInputs);
        }
    }

    Rat3 Hc{Rational(1), Rational(1), Rational(1)};
    CHECK_THROWS_AS(asymptotic_direction(pp(1, 1, 1), Hc), Error);
}

TEST_CASE("charts") {
    // z = 1
    auto [zx, zy] = chart_z1(pp(1, 2, 4));
    CHECK(zx == Rational(1, 4));
    CHECK(zy == Rational(1, 2));
    CHECK_THROWS_AS(chart_z1(pp(1, 1, 0)), Error);

    // area chart pins three points
    CHECK(ProjPoint(area_chart_triple({1, 0, 1})) == pp(0, 0, 1));
    CHECK(ProjPoint(area_chart_triple({0, 1, 1})) == pp(1, 0, 1));
    CHECK(ProjPoint(area_chart_triple({1, 1, 0})) == pp(0, 1, 1));
    auto [ax, ay] = chart_area(pp(1, 0, 1));
    CHECK(ax == Rational(0));
    CHECK(ay == Rational(0));
    // |det M| = 4
    BigInt dm = det3(area_chart_triple({1, 0, 0}), area_chart_triple({0, 1, 0}),
                     area_chart_triple({0, 0, 1}));
    CHECK(dm.abs() == BigInt(4));

    // uv chart inverts the parametrization
    auto [u0, v0] = chart_uv(pp(1, 1, 0));
    CHECK(u0 == Rational(0));
    CHECK(v0 == Rational(0));
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long long> d(0, 60);
    for (int it = 0; it < 2000; ++it) {
        // random (u,v) in the rational triangle
        long long du = d(rng) + 1, nu = d(rng) % du;
        long long dv = d(rng) + 1, nv = d(rng) % dv;
        Rational u(nu, du), v(nv, dv);
        if (u + v > Rational(1)) continue;
        // point (1-v : 1-u : u+v)
        Rational p1 = Rational(1) - v, p2 = Rational(1) - u, p3 = u + v;
        BigInt den = p1.den() * p2.den() * p3.den();
        Int3 t{(p1 * Rational(den)).num(), (p2 * Rational(den)).num(),
               (p3 * Rational(den)).num()};
        if (t.h1.is_zero() && t.h2.is_zero() && t.h3.is_zero()) continue;
        auto [u2, v2] = chart_uv(ProjPoint(t));
        CHECK(u2 == u);
        CHECK(v2 == v);
    }
    CHECK_THROWS_AS(chart_uv(pp(5, 1, 1)), Error); // outside Delta
}

TEST_CASE("disc model") {
    auto [cx, cy] = chart_disc(pp(0, 0, 1)); // the z axis sits at the center
    CHECK(cx == doctest::Approx(0.0));
    CHECK(cy == doctest::Approx(0.0));
    auto [ex, ey] = chart_disc(pp(1, 0, 0)); // boundary point on the equator
    CHECK(std::abs(ex) == doctest::Approx(1.0));
    CHECK(ey == doctest::Approx(0.0));
    // antipodal representatives agree
    auto a = chart_disc(Int3{3, -4, 5});
    auto b = chart_disc(Int3{-3, 4, -5});
    CHECK(a.first == doctest::Approx(b.first));
    CHECK(a.second == doctest::Approx(b.second));
    // always inside the closed unit disc
    std::mt19937_64 rng(6);
    std::uniform_int_distribution<long long> d(-30, 30);
    for (int it = 0; it < 1000; ++it) {
        long long x = d(rng), y = d(rng), z = d(rng);
        if (!x && !y && !z) continue;
        auto [px, py] = chart_disc(pp(x, y, z));
        CHECK(px * px + py * py <= 1.0 + 1e-12);
    }
}

TEST_CASE("tribonacci constants") {
    auto tc = tribonacci_constants();
    CHECK(tc.alpha == doctest::Approx(1.8392867552141612).epsilon(1e-14));
    double res = ((tc.alpha - 1) * tc.alpha - 1) * tc.alpha - 1;
    CHECK(std::abs(res) < 1e-12);
    CHECK(std::abs(tc.alpha - tribonacci_alpha_radicals()) < 1e-12);
    CHECK(std::abs(tc.beta) < tc.alpha);
    // complex roots satisfy the cubic
    auto cube = [](std::complex<double> z) { return ((z - 1.0) * z - 1.0) * z - 1.0; };
    CHECK(std::abs(cube(tc.beta)) < 1e-12);
    CHECK(std::abs(cube(tc.beta_bar)) < 1e-12);

    // recurrence residual for powers
    double a1 = tc.alpha, a2 = a1 * a1, a3 = a2 * a1;
    double p0 = 1, p1 = a1, p2 = a2, p3 = a3;
    for (int n = 3; n <= 50; ++n) {
        double expect = p2 * a1;
        CHECK(std::abs((p0 + p1 + p2) - expect) / expect < 1e-10);
        p0 = p1;
        p1 = p2;
        p2 = expect;
    }
    (void)p3;
}
