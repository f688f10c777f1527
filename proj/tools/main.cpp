#include "skew46/fractal.hpp"
#include "skew46/io.hpp"
#include "skew46/measure.hpp"
#include "skew46/parallel.hpp"
#include "skew46/section.hpp"
#include "skew46/svg.hpp"
#include "skew46/zones.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>

namespace {

using namespace skew46;

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw Error(ErrorCode::Io, "cannot open output file: " + path);
    return f;
}

// ---------------------------------------------------------------- zones

int cmd_zones(int depth, int max_depth, const std::string& format,
              const std::string& chart_name, const std::string& color_by,
              const std::string& viewport, const std::string& out_path) {
    if (depth < 0 || depth > max_depth) {
        std::cerr << "zones: depth " << depth << " exceeds the cap " << max_depth
                  << " (raise --max-depth)\n";
        return 1;
    }
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!out_path.empty()) {
        file = open_out(out_path);
        os = &file;
    }
    if (format == "json") {
        io::write_zones_json(*os, depth);
    } else if (format == "csv") {
        io::write_zones_csv(*os, depth);
    } else if (format == "svg") {
        proj::Chart chart = chart_name == "disc"  ? proj::Chart::Disc
                            : chart_name == "area" ? proj::Chart::AreaChart
                                                    : proj::Chart::Z1;
        svg::RenderSpec spec = svg::RenderSpec::for_chart(chart, depth);
        spec.max_depth = max_depth;
        spec.color_by = color_by == "soul-hash" ? svg::ColorBy::SoulHash : svg::ColorBy::Depth;
        if (!viewport.empty()) {
            double x0, y0, x1, y1;
            if (std::sscanf(viewport.c_str(), "%lf,%lf,%lf,%lf", &x0, &y0, &x1, &y1) != 4 ||
                x1 <= x0 || y1 <= y0) {
                std::cerr << "zones: --viewport expects x0,y0,x1,y1 with x0<x1, y0<y1\n";
                return 1;
            }
            spec.x0 = x0; spec.y0 = y0; spec.x1 = x1; spec.y1 = y1;
        }
        svg::render_zones(*os, spec);
    } else {
        std::cerr << "zones: unknown format " << format << "\n";
        return 1;
    }
    return 0;
}

// ----------------------------------------------------------------- soul

int cmd_soul(std::int64_t a, std::int64_t b, std::int64_t c, const std::string& method) {
    proj::ProjPoint p(a, b, c);
    bool want_exact = method == "exact" || method == "both";
    bool want_trace = method == "trace" || method == "both";
    zones::SoulSet exact;
    if (want_exact) {
        exact = zones::soul_of_direction(p);
        std::cout << "exact: {" << io::soul_set_string(exact) << "}\n";
    }
    if (!want_trace) return 0;
    if (a < 1 || b < 1 || c < 1) {
        std::cerr << "soul: the tracer needs strictly positive coordinates\n";
        return 1;
    }
    std::int64_t g = std::gcd(std::gcd(a, b), c);
    section::SoulOutcome traced = section::numerical_soul(section::Direction(a / g, b / g, c / g));
    if (traced.labeled()) {
        std::cout << "traced: " << traced.soul->to_string() << "\n";
    } else {
        std::cout << "traced: no label (" << section::to_string(traced.reason) << ")\n";
    }
    if (method == "both") {
        if (traced.labeled()) {
            bool agree = std::find(exact.begin(), exact.end(), *traced.soul) != exact.end();
            std::cout << "agreement: " << (agree ? "yes" : "NO") << "\n";
            if (!agree) return 1;
        } else {
            std::cout << "agreement: not applicable\n";
        }
    }
    return traced.labeled() ? 0 : 2;
}

// ---------------------------------------------------------------- trace

int cmd_trace(const std::string& dir_str, const std::string& json_path, bool with_points,
              std::size_t step_cap) {
    std::int64_t m, n, N;
    if (std::sscanf(dir_str.c_str(), "%ld,%ld,%ld", &m, &n, &N) != 3) {
        std::cerr << "trace: --direction expects m,n,N\n";
        return 1;
    }
    section::Direction dir(m, n, N);
    section::TraceOptions opt;
    opt.step_cap = step_cap;
    opt.keep_segments = with_points;
    section::TraceResult res = section::trace_critical_loops(dir, opt);
    std::string out = io::trace_json(dir, res, with_points);
    if (json_path.empty()) {
        std::cout << out << "\n";
    } else {
        open_out(json_path) << out << "\n";
    }
    return res.status == section::TraceStatus::Ok ? 0 : 2;
}

// ---------------------------------------------------------------- sweep

int cmd_sweep(std::int64_t max_N, const std::string& csv_path, std::size_t step_cap) {
    std::vector<std::array<std::int64_t, 3>> dirs;
    for (std::int64_t m = 1; m < max_N; ++m)
        for (std::int64_t n = 1; n < m; ++n)
            if (std::gcd(std::gcd(m, n), max_N) == 1) dirs.push_back({m, n, max_N});

    std::vector<io::SweepRow> rows(dirs.size());
    std::int64_t mismatches = 0, unlabeled = 0;
    parallel_for(static_cast<std::int64_t>(dirs.size()), [&](std::int64_t i) {
        auto [m, n, N] = dirs[static_cast<std::size_t>(i)];
        io::SweepRow& row = rows[static_cast<std::size_t>(i)];
        row.m = m;
        row.n = n;
        row.N = N;
        zones::SoulSet exact = zones::soul_of_direction(proj::ProjPoint(m, n, N));
        row.exact_soul = io::soul_set_string(exact);
        section::TraceOptions opt;
        opt.step_cap = step_cap;
        section::SoulOutcome traced = section::numerical_soul(section::Direction(m, n, N), opt);
        if (traced.labeled()) {
            row.traced_soul = traced.soul->to_string();
            bool agree = std::find(exact.begin(), exact.end(), *traced.soul) != exact.end();
            row.status = agree ? "ok" : "mismatch";
        } else {
            row.status = section::to_string(traced.reason);
        }
    });
    for (const auto& r : rows) {
        if (r.status == "mismatch") ++mismatches;
        if (r.traced_soul.empty()) ++unlabeled;
    }
    if (csv_path.empty()) {
        io::write_sweep_csv(std::cout, rows);
    } else {
        auto f = open_out(csv_path);
        io::write_sweep_csv(f, rows);
    }
    std::int64_t total = static_cast<std::int64_t>(rows.size());
    std::fprintf(stderr, "sweep: %ld directions, %ld labeled (%.2f%%), %ld mismatches\n",
                 total, total - unlabeled,
                 total ? 100.0 * (total - unlabeled) / total : 0.0, mismatches);
    if (mismatches) return 1;
    return unlabeled ? 2 : 0;
}

// ------------------------------------------------------------ dimension

int cmd_dimension(const std::string& method, int depth, int levels,
                  const std::string& csv_path, double base, int window_lo, int window_hi) {
    fractal::DimensionSeries series;
    if (method == "minkowski") {
        auto model = fractal::NeighborhoodModel::from_tree(depth);
        series = fractal::minkowski_series(model, zones::delta_chart_metrics(), base, levels,
                                           window_lo, window_hi);
        std::printf("minkowski: plateau over n in [%d,%d]: mean %.4f (min %.4f, max %.4f)\n",
                    series.window_lo, series.window_hi, series.plateau_mean,
                    series.plateau_min, series.plateau_max);
    } else if (method == "boxcount") {
        series = fractal::box_count_series(depth, levels, window_lo, window_hi);
        std::vector<std::pair<double, double>> pts;
        for (const auto& e : series.entries)
            pts.emplace_back(e.n, std::log2(e.value));
        double slope = fractal::fit_slope(pts, window_lo, window_hi);
        std::printf("boxcount: log2 N_n slope over n in [%d,%d]: %.4f\n", window_lo,
                    window_hi, slope);
    } else {
        std::cerr << "dimension: unknown method " << method << "\n";
        return 1;
    }
    if (!csv_path.empty()) {
        auto f = open_out(csv_path);
        io::write_dimension_csv(f, series);
    } else {
        io::write_dimension_csv(std::cout, series);
    }
    return 0;
}

// ---------------------------------------------------------- measure-check

int cmd_measure_check(std::int64_t terms, std::int64_t exact_head) {
    std::printf("c_k table (closed form %s):\n", "c_0 = 1/4, c_k = 4/((k+2)(k+3)^2)");
    for (std::int64_t k = 0; k <= 10; ++k) {
        Rational ck = measure::c_k(k);
        std::printf("  c_%-2ld = %-12s = %.12f\n", k, ck.to_string().c_str(), ck.to_double());
    }
    std::int64_t K = std::min(terms, exact_head);
    measure::SumCertificate cert = measure::c_sum_certificate(K);
    double head = cert.head.to_double();
    double total = head;
    if (terms > K) total = measure::c_partial_sum_float(terms);
    measure::ClosedFormSum closed = measure::c_sum_closed_form();
    std::printf("partial sum (k <= %ld, exact head k <= %ld): %.12f\n", terms, K, total);
    std::printf("2*sum bound: %.12f (must stay < 1)\n", 2 * (head + cert.tail_bound.to_double()));
    std::printf("exact tail bound past k=%ld: %s = %.3e\n", K,
                cert.tail_bound.to_string().c_str(), cert.tail_bound.to_double());
    std::printf("closed form: 253/36 - (2/3) pi^2 = %.12f\n", closed.value);
    std::printf("sum < 1/2: %s\n", cert.below_half ? "PASS" : "FAIL");
    return cert.below_half ? 0 : 1;
}

// ------------------------------------------------------------ tribonacci

int cmd_tribonacci(int count, const std::string& chart) {
    std::array<proj::ProjPoint, 3> seeds{proj::ProjPoint(1, 0, 0), proj::ProjPoint(0, 1, 0),
                                         proj::ProjPoint(0, 0, 1)};
    auto seq = zones::tribonacci_sequence(seeds, count);
    for (std::size_t i = 0; i < seq.size(); ++i) {
        std::printf("%3zu  %s", i, seq[i].to_string().c_str());
        if (chart == "z1" && !seq[i].coords().h3.is_zero()) {
            auto [x, y] = proj::chart_z1(seq[i]);
            std::printf("   (%.9f, %.9f)", x.to_double(), y.to_double());
        }
        std::printf("\n");
    }
    auto tc = proj::tribonacci_constants();
    double lx = tc.alpha * tc.alpha - tc.alpha - 1, ly = tc.alpha - 1;
    std::printf("limit: (alpha^2-alpha-1 : alpha-1 : 1), chart (%.9f, %.9f)\n", lx, ly);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"stability zones, souls and the chaotic-direction fractal of the "
                 "skew polyhedron {4,6|4}"};
    app.require_subcommand(1);

    // Primary outputs are deterministic; the seed only matters for
    // Monte-Carlo cross-checks, none of which run in this tool.
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "seed for Monte-Carlo cross-checks (primary outputs ignore it)");

    // zones
    auto* zc = app.add_subcommand("zones", "generate the stability-zone tree");
    int depth = 6, max_depth = 12;
    std::string format = "json", chart = "z1", color_by = "depth", out_path;
    zc->add_option("--depth", depth, "tree depth");
    zc->add_option("--max-depth", max_depth, "depth cap");
    zc->add_option("--format", format, "json|csv|svg");
    zc->add_option("--chart", chart, "z1|disc|area (svg only)");
    zc->add_option("--color-by", color_by, "depth|soul-hash (svg only)");
    std::string viewport;
    zc->add_option("--viewport", viewport, "x0,y0,x1,y1 chart window (svg only)");
    zc->add_option("-o,--out", out_path, "output file (stdout when omitted)");

    // soul
    auto* sc = app.add_subcommand("soul", "label one direction");
    std::int64_t sa = 0, sb = 0, scc = 0;
    std::string method = "both";
    sc->add_option("h1", sa, "first coordinate")->required();
    sc->add_option("h2", sb, "second coordinate")->required();
    sc->add_option("h3", scc, "third coordinate")->required();
    sc->add_option("--method", method, "exact|trace|both");

    // trace
    auto* tc = app.add_subcommand("trace", "trace the critical loops of one direction");
    std::string dir_str, trace_json_path;
    bool with_points = false;
    std::size_t step_cap = 10'000'000;
    tc->add_option("--direction", dir_str, "m,n,N")->required();
    tc->add_option("--json", trace_json_path, "output file (stdout when omitted)");
    tc->add_flag("--with-points", with_points, "include exact segment coordinates");
    tc->add_option("--step-cap", step_cap, "maximum segments per arc");

    // sweep
    auto* wc = app.add_subcommand("sweep", "label the grid 0<n<m<N, N fixed");
    std::int64_t max_N = 100;
    std::string sweep_csv;
    std::size_t sweep_cap = 10'000'000;
    wc->add_option("--max-N", max_N, "fixed third coordinate N");
    wc->add_option("--csv", sweep_csv, "output file (stdout when omitted)");
    wc->add_option("--step-cap", sweep_cap, "maximum segments per arc");

    // dimension
    auto* dc = app.add_subcommand("dimension", "estimate the fractal dimension");
    std::string dmethod = "boxcount", dim_csv;
    int ddepth = 12, dlevels = 12, dwin_lo = -1, dwin_hi = -1;
    double dbase = 1.2;
    dc->add_option("--method", dmethod, "minkowski|boxcount");
    dc->add_option("--depth", ddepth, "zone tree depth");
    dc->add_option("--levels", dlevels, "number of scales");
    dc->add_option("--csv", dim_csv, "output file (stdout when omitted)");
    dc->add_option("--base", dbase, "scale base for minkowski (eps = base^-n)");
    dc->add_option("--window-lo", dwin_lo, "estimate window lower n");
    dc->add_option("--window-hi", dwin_hi, "estimate window upper n");

    // measure-check
    auto* mc = app.add_subcommand("measure-check", "verify the measure-zero certificate");
    std::int64_t terms = 1'000'000, exact_head = 10'000;
    mc->add_option("--terms", terms, "partial-sum length");
    mc->add_option("--exact-head", exact_head, "exact-arithmetic head length");

    // tribonacci
    auto* bc = app.add_subcommand("tribonacci", "label sequence of the spiral construction");
    int count = 9;
    std::string tchart = "z1";
    bc->add_option("--count", count, "number of labels (seeds included)");
    bc->add_option("--chart", tchart, "z1|none");

    // mesh
    auto* xc = app.add_subcommand("mesh", "export the surface mesh as JSON");
    std::string mesh_path;
    xc->add_option("--json", mesh_path, "output file (stdout when omitted)");

    std::atexit([] { std::fflush(nullptr); });

    CLI11_PARSE(app, argc, argv);

    try {
        if (zc->parsed()) return cmd_zones(depth, max_depth, format, chart, color_by, viewport, out_path);
        if (sc->parsed()) return cmd_soul(sa, sb, scc, method);
        if (tc->parsed()) return cmd_trace(dir_str, trace_json_path, with_points, step_cap);
        if (wc->parsed()) return cmd_sweep(max_N, sweep_csv, sweep_cap);
        if (dc->parsed()) {
            if (dwin_lo < 0) dwin_lo = dmethod == "boxcount" ? 6 : 15;
            if (dwin_hi < 0) dwin_hi = dmethod == "boxcount" ? 12 : 40;
            return cmd_dimension(dmethod, ddepth, dlevels, dim_csv, dbase, dwin_lo, dwin_hi);
        }
        if (mc->parsed()) return cmd_measure_check(terms, exact_head);
        if (bc->parsed()) return cmd_tribonacci(count, tchart);
        if (xc->parsed()) {
            if (mesh_path.empty())
                std::cout << io::mesh_json() << "\n";
            else
                open_out(mesh_path) << io::mesh_json() << "\n";
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
