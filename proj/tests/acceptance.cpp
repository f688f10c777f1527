// Acceptance suite: one pass/fail line per criterion, exit code = number
// of failures. Expected wall time is a few minutes in a release build.

#include "skew46/fractal.hpp"
#include "skew46/measure.hpp"
#include "skew46/parallel.hpp"
#include "skew46/section.hpp"
#include "skew46/surface.hpp"
#include "skew46/zones.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>

using namespace skew46;

namespace {

int failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion, detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

char buf[512];

// ---------------------------------------------------------------- 1
void criterion_census() {
    Timer t;
    std::array<long, 13> per{};
    long total = 0;
    zones::visit_zones(12, [&](const zones::ZoneFrame& f) {
        ++per[static_cast<std::size_t>(f.depth)];
        ++total;
    });
    bool ok = total == 797161;
    long expect = 1;
    for (int d = 0; d <= 12; ++d) {
        ok = ok && per[static_cast<std::size_t>(d)] == expect;
        expect *= 3;
    }
    double secs = t.seconds();
    ok = ok && secs < 60.0;
    std::snprintf(buf, sizeof buf,
                  "zone census: %ld zones through depth 12 (3^k per level), %.2fs (< 60s)",
                  total, secs);
    report(1, ok, buf);
}

// ---------------------------------------------------------------- 2
void criterion_oracle_equivalence() {
    Timer t;
    const long NMAX = 200;
    std::vector<std::array<long, 3>> dirs;
    for (long N = 3; N <= NMAX; ++N)
        for (long m = 2; m < N; ++m)
            for (long n = 1; n < m; ++n)
                if (std::gcd(std::gcd(m, n), N) == 1) dirs.push_back({m, n, N});

    std::vector<unsigned char> resolved(dirs.size(), 0), mismatch(dirs.size(), 0);
    parallel_for(static_cast<std::int64_t>(dirs.size()), [&](std::int64_t i) {
        auto [m, n, N] = dirs[static_cast<std::size_t>(i)];
        proj::ProjPoint p(m, n, N);
        zones::TreeResolution tr = zones::resolve_direction_in_tree(p, 12);
        if (!tr.resolved) return;
        resolved[static_cast<std::size_t>(i)] = 1;
        if (tr.souls != zones::soul_of_direction(p)) mismatch[static_cast<std::size_t>(i)] = 1;
    });
    long nres = std::count(resolved.begin(), resolved.end(), 1);
    long nbad = std::count(mismatch.begin(), mismatch.end(), 1);
    double secs = t.seconds();
    bool ok = nbad == 0 && secs < 120.0 && nres > 0;
    std::snprintf(buf, sizeof buf,
                  "exact labeling: %zu primitive directions (N<=200), %ld tree-resolved, "
                  "%ld disagreements, %.1fs (< 120s)",
                  dirs.size(), nres, nbad, secs);
    report(2, ok, buf);
}

// ---------------------------------------------------------------- 3
void criterion_tracer_agreement() {
    Timer t;
    const long N = 100;
    std::vector<std::array<long, 2>> dirs;
    for (long m = 2; m < N; ++m)
        for (long n = 1; n < m; ++n)
            if (std::gcd(std::gcd(m, n), N) == 1) dirs.push_back({m, n});

    std::vector<unsigned char> labeled(dirs.size(), 0), mismatch(dirs.size(), 0);
    parallel_for(static_cast<std::int64_t>(dirs.size()), [&](std::int64_t i) {
        auto [m, n] = dirs[static_cast<std::size_t>(i)];
        section::SoulOutcome s = section::numerical_soul(section::Direction(m, n, N));
        if (!s.labeled()) return;
        labeled[static_cast<std::size_t>(i)] = 1;
        zones::SoulSet exact = zones::soul_of_direction(proj::ProjPoint(m, n, N));
        if (std::find(exact.begin(), exact.end(), *s.soul) == exact.end())
            mismatch[static_cast<std::size_t>(i)] = 1;
    });
    long nlab = std::count(labeled.begin(), labeled.end(), 1);
    long nbad = std::count(mismatch.begin(), mismatch.end(), 1);
    double frac = static_cast<double>(nlab) / static_cast<double>(dirs.size());
    double secs = t.seconds();
    bool ok = nbad == 0 && frac >= 0.90 && secs < 600.0;
    std::snprintf(buf, sizeof buf,
                  "tracer agreement: grid 0<n<m<N=100, %zu directions, %.1f%% labeled "
                  "(>= 90%%), %ld mismatches, %.1fs (< 600s)",
                  dirs.size(), 100 * frac, nbad, secs);
    report(3, ok, buf);
}

// ---------------------------------------------------------------- 4
void criterion_measure() {
    measure::SumCertificate cert = measure::c_sum_certificate(10000);
    measure::ClosedFormSum closed = measure::c_sum_closed_form();
    bool ok = cert.below_half;
    ok = ok && (cert.head + cert.tail_bound) * Rational(2) < Rational(1);
    double approx = cert.head.to_double();
    ok = ok && std::abs(approx - closed.value) < 5e-4;
    double worst = 0;
    for (int k = 0; k <= 20; ++k)
        worst = std::max(worst,
                         std::abs(measure::c_k_numeric(k).value - measure::c_k(k).to_double()));
    ok = ok && worst < 1e-9;
    std::snprintf(buf, sizeof buf,
                  "measure certificate: exact head(k<=1e4)+tail < 1/2 %s; value %.9f vs "
                  "closed %.9f (tol 5e-4); grid-max deviation %.2e (tol 1e-9, k<=20)",
                  cert.below_half ? "holds" : "FAILS", approx, closed.value, worst);
    report(4, ok, buf);
}

// ---------------------------------------------------------------- 5
void criterion_zone_asymptotics() {
    Timer t;
    double alpha = proj::tribonacci_constants().alpha;
    long area_viol = 0, norm_viol = 0, count = 0;
    zones::visit_zones(12, [&](const zones::ZoneFrame& f) {
        ++count;
        zones::ZoneMetrics m = zones::zone_metrics_frame(f);
        Rational scaled = m.area * Rational(m.linf * m.linf * m.linf);
        if (scaled < Rational(1) || scaled > Rational(8)) ++area_viol;
        if (f.depth >= 1) {
            proj::ProjPoint soul(f.soul_rep);
            const proj::Int3& s = soul.coords();
            BigInt norm2 = s.h1 * s.h1 + s.h2 * s.h2 + s.h3 * s.h3;
            long k = f.depth;
            if (norm2 < BigInt(2 * (k + 1) * (k + 1) + 1)) ++norm_viol;
            if (norm2.to_double() > 3.0 * std::pow(alpha, 2.0 * k) * (1 + 1e-12)) ++norm_viol;
        }
    });
    bool ok = area_viol == 0 && norm_viol == 0 && count == 797161;
    std::snprintf(buf, sizeof buf,
                  "zone asymptotics: %ld zones, area bound violations %ld, label-norm "
                  "violations %ld, %.1fs",
                  count, area_viol, norm_viol, t.seconds());
    report(5, ok, buf);
}

// ---------------------------------------------------------------- 6
void criterion_tribonacci() {
    std::array<proj::ProjPoint, 3> seeds{proj::ProjPoint(1, 0, 0), proj::ProjPoint(0, 1, 0),
                                         proj::ProjPoint(0, 0, 1)};
    auto seq = zones::tribonacci_sequence(seeds, 40);
    bool ok = seq[4] == proj::ProjPoint(1, 2, 2) && seq[5] == proj::ProjPoint(2, 3, 4) &&
              seq[6] == proj::ProjPoint(4, 6, 7) && seq[7] == proj::ProjPoint(7, 11, 13) &&
              seq[8] == proj::ProjPoint(13, 20, 24);
    double alpha = proj::tribonacci_constants().alpha;
    double lx = alpha * alpha - alpha - 1, ly = alpha - 1;
    auto [cx, cy] = proj::chart_z1(seq.back());
    double dx = std::abs(cx.to_double() - lx), dy = std::abs(cy.to_double() - ly);
    ok = ok && dx < 1e-3 && dy < 1e-3;
    std::snprintf(buf, sizeof buf,
                  "tribonacci: labels (1:2:2)...(13:20:24) reproduced; chart at n=40 within "
                  "(%.1e, %.1e) of (%.3f, %.3f) (tol 1e-3)",
                  dx, dy, lx, ly);
    report(6, ok, buf);
}

// ---------------------------------------------------------------- 7
void criterion_dimension() {
    Timer tb;
    fractal::DimensionSeries box = fractal::box_count_series(12, 12, 6, 12);
    std::vector<std::pair<double, double>> pts;
    for (const auto& e : box.entries) pts.emplace_back(e.n, std::log2(e.value));
    double slope = fractal::fit_slope(pts, 6, 12);
    double box_secs = tb.seconds();

    Timer tm;
    fractal::NeighborhoodModel model = fractal::NeighborhoodModel::from_tree(12);
    fractal::DimensionSeries mink =
        fractal::minkowski_series(model, zones::delta_chart_metrics(), 1.2, 50, 15, 40);
    double mink_secs = tm.seconds();

    bool ok = std::abs(slope - 1.72) <= 0.1 && mink.plateau_mean >= 1.6 &&
              mink.plateau_mean <= 1.8 && box_secs < 300.0 && mink_secs < 300.0;
    std::snprintf(buf, sizeof buf,
                  "dimension: box-count slope n=6..12 is %.4f (1.72 +- 0.1, %.1fs); "
                  "minkowski plateau n=15..40 mean %.4f in [1.6, 1.8] (%.1fs)",
                  slope, box_secs, mink.plateau_mean, mink_secs);
    report(7, ok, buf);
}

// ---------------------------------------------------------------- 8
void criterion_structural() {
    bool ok = true;
    std::string what;

    // surface invariants
    const surf::SurfaceMesh& mesh = surf::build_surface();
    if (mesh.faces.size() != 12 || mesh.edges.size() != 24 || mesh.vertices4.size() != 8)
        ok = false, what += " mesh-counts";
    {
        std::array<int, 8> deg{};
        for (const surf::Face& f : mesh.faces)
            for (const auto& c : surf::face_corners4(f)) {
                int idx = 0, bit = 1;
                for (int i = 0; i < 3; ++i, bit <<= 1)
                    if (c[static_cast<std::size_t>(i)] % 4 == 3) idx |= bit;
                ++deg[static_cast<std::size_t>(idx)];
            }
        for (int d : deg)
            if (d != 6) ok = false, what += " vertex-degree";
    }

    // psi unimodularity and inverse identities
    {
        std::mt19937_64 rng(31337);
        std::uniform_int_distribution<long long> d(-80, 80);
        for (int i = 1; i <= 3; ++i) {
            proj::Int3 c0 = proj::psi_raw(i, {1, 0, 0});
            proj::Int3 c1 = proj::psi_raw(i, {0, 1, 0});
            proj::Int3 c2 = proj::psi_raw(i, {0, 0, 1});
            if (!(proj::det3(c0, c1, c2) == BigInt(1))) ok = false, what += " psi-det";
        }
        for (int it = 0; it < 2000; ++it) {
            long long a = d(rng), b = d(rng), c = d(rng);
            if (!a && !b && !c) continue;
            proj::ProjPoint p(a, b, c);
            for (int i = 1; i <= 3; ++i)
                if (!(proj::psi_inverse(i, proj::psi(i, p)) == p)) ok = false, what += " psi-inv";
        }
    }

    // geography correspondence on 1000 random draws
    {
        std::mt19937_64 rng(777);
        std::uniform_int_distribution<long long> num(0, 50), den(1, 10), cell(-3, 3);
        for (int it = 0; it < 1000; ++it) {
            Rational alpha(num(rng), den(rng)), beta(num(rng), den(rng)), c(num(rng), den(rng));
            std::int64_t j = cell(rng), k = cell(rng), m = cell(rng);
            for (auto axis : {section::HalfAxis::X, section::HalfAxis::Y}) {
                auto before = section::classify_cell(alpha, beta, c, axis, j, k, m);
                auto after = section::classify_cell(alpha + Rational(1), beta + Rational(1), c,
                                                    axis, j, k, m - j - k - 1);
                bool b1 = before == section::CellClass::Bridge,
                     b2 = after == section::CellClass::Bridge;
                bool i1 = before == section::CellClass::Island,
                     i2 = after == section::CellClass::Island;
                if (b1 != b2 || i1 != i2) ok = false, what += " geography";
            }
        }
    }

    // loop-class invariance under re-rooting and reversal
    {
        section::TraceOptions opt;
        opt.keep_segments = true;
        for (auto [m, n, N] : {std::array<long, 3>{9, 13, 19}, {5, 9, 11}, {51, 23, 101}}) {
            section::Direction H(m, n, N);
            for (int ray = 0; ray < 6; ++ray) {
                section::Arc a = section::trace_arc(H, ray, opt);
                if (a.status != section::TraceStatus::Ok) continue;
                section::Arc rev = section::trace_arc(H, a.end_ray, opt);
                for (int i = 0; i < 3; ++i) {
                    if (rev.displacement[static_cast<std::size_t>(i)] !=
                        -a.displacement[static_cast<std::size_t>(i)])
                        ok = false, what += " reversal";
                }
                // telescoped class from segments is rotation invariant
                Rational sx(0), sy(0), sz(0);
                for (const auto& s : a.segments) {
                    sx += s.exit.x - s.entry.x;
                    sy += s.exit.y - s.entry.y;
                    sz += s.exit.z - s.entry.z;
                }
                if (!(sx == Rational(a.displacement[0]) && sy == Rational(a.displacement[1]) &&
                      sz == Rational(a.displacement[2])))
                    ok = false, what += " telescope";
            }
        }
    }

    std::snprintf(buf, sizeof buf, "structural suites:%s", ok ? " all pass" : what.c_str());
    report(8, ok, buf);
}

} // namespace

int main() {
    criterion_census();
    criterion_oracle_equivalence();
    criterion_tracer_agreement();
    criterion_measure();
    criterion_zone_asymptotics();
    criterion_tribonacci();
    criterion_dimension();
    criterion_structural();
    std::printf("%d of 8 criteria failed\n", failures);
    return failures;
}
