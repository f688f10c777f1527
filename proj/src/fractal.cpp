#include "skew46/fractal.hpp"

#include "skew46/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace skew46::fractal {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
}

NeighborhoodModel NeighborhoodModel::from_metrics(std::vector<std::array<double, 3>> apr) {
    std::sort(apr.begin(), apr.end(),
              [](const auto& x, const auto& y) { return x[2] > y[2]; });
    NeighborhoodModel m;
    m.inradius.reserve(apr.size());
    m.pre_p.resize(apr.size() + 1, 0.0);
    m.pre_a.resize(apr.size() + 1, 0.0);
    m.pre_c.resize(apr.size() + 1, 0.0);
    for (std::size_t i = 0; i < apr.size(); ++i) {
        m.inradius.push_back(apr[i][2]);
        m.pre_a[i + 1] = m.pre_a[i] + apr[i][0];
        m.pre_p[i + 1] = m.pre_p[i] + apr[i][1];
        m.pre_c[i + 1] = m.pre_c[i] + apr[i][1] * apr[i][1] / (4.0 * apr[i][0]);
    }
    return m;
}

NeighborhoodModel NeighborhoodModel::from_tree(int depth) {
    std::vector<std::array<double, 3>> apr;
    zones::visit_zones(depth, [&](const zones::ZoneFrame& f) {
        zones::ZoneMetrics zm = zones::zone_metrics_frame(f);
        apr.push_back({zm.area.to_double(), zm.perimeter, zm.inradius});
    });
    return from_metrics(std::move(apr));
}

std::size_t NeighborhoodModel::count_at(double eps) const {
    // inradius sorted descending: first index with value < eps.
    auto it = std::lower_bound(inradius.begin(), inradius.end(), eps,
                               [](double r, double e) { return r >= e; });
    return static_cast<std::size_t>(it - inradius.begin());
}

VolumeBreakdown minkowski_volume(const NeighborhoodModel& zones,
                                 const zones::OuterMetrics& outer, double eps) {
    VolumeBreakdown v;
    v.k = zones.count_at(eps);
    v.outer_band = outer.perimeter * eps;
    v.zone_bands = eps * zones.pre_p[v.k];
    v.residual_area = outer.area - zones.pre_a[v.k];
    v.corner_term = eps * eps * (kPi - zones.pre_c[v.k]);
    v.total = v.outer_band + v.zone_bands + v.residual_area + v.corner_term;
    return v;
}

namespace {

void finish_series(DimensionSeries& s, int window_lo, int window_hi) {
    s.window_lo = window_lo;
    s.window_hi = window_hi;
    double sum = 0, mn = 0, mx = 0;
    int cnt = 0;
    for (const auto& e : s.entries) {
        if (e.n < window_lo || e.n > window_hi) continue;
        if (cnt == 0) { mn = mx = e.est_quotient; }
        mn = std::min(mn, e.est_quotient);
        mx = std::max(mx, e.est_quotient);
        sum += e.est_quotient;
        ++cnt;
    }
    if (cnt > 0) {
        s.plateau_mean = sum / cnt;
        s.plateau_min = mn;
        s.plateau_max = mx;
    }
}

} // namespace

DimensionSeries minkowski_series(const NeighborhoodModel& zones,
                                 const zones::OuterMetrics& outer, double base,
                                 int n_max, int window_lo, int window_hi) {
    DimensionSeries s;
    double prev_logv = 0, prev_logeps = 0;
    for (int n = 1; n <= n_max; ++n) {
        double eps = std::pow(base, -n);
        VolumeBreakdown v = minkowski_volume(zones, outer, eps);
        SeriesEntry e;
        e.n = n;
        e.scale = eps;
        e.value = v.total;
        double logv = std::log(v.total), logeps = std::log(eps);
        e.est_quotient = 2.0 - logv / logeps;
        e.est_diff = n == 1 ? e.est_quotient
                            : 2.0 - (logv - prev_logv) / (logeps - prev_logeps);
        prev_logv = logv;
        prev_logeps = logeps;
        s.entries.push_back(e);
    }
    finish_series(s, window_lo, window_hi);
    return s;
}

namespace {

using I3 = std::array<std::int64_t, 3>;

inline I3 add(const I3& a, const I3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }

inline int det_sign(const I3& x, const I3& y, const I3& z) {
    __int128 d = static_cast<__int128>(x[0]) * (static_cast<__int128>(y[1]) * z[2] - static_cast<__int128>(y[2]) * z[1])
               - static_cast<__int128>(x[1]) * (static_cast<__int128>(y[0]) * z[2] - static_cast<__int128>(y[2]) * z[0])
               + static_cast<__int128>(x[2]) * (static_cast<__int128>(y[0]) * z[1] - static_cast<__int128>(y[1]) * z[0]);
    return d > 0 ? 1 : d < 0 ? -1 : 0;
}

inline bool tri_contains(const I3& a, const I3& b, const I3& c, const I3& p) {
    int s0 = det_sign(a, b, p);
    int s1 = det_sign(b, c, p);
    int s2 = det_sign(c, a, p);
    return (s0 >= 0 && s1 >= 0 && s2 >= 0) || (s0 <= 0 && s1 <= 0 && s2 <= 0);
}

inline bool tri_contains_all(const I3& a, const I3& b, const I3& c, const I3 (&pts)[4]) {
    for (const I3& p : pts)
        if (!tri_contains(a, b, c, p)) return false;
    return true;
}

// Chart-space reps of Delta: the area-chart matrix applied to the root
// representatives (1,1,0), (1,0,1), (0,1,1). The vertex-sum recursion
// commutes with the chart, so the whole walk runs on these.
constexpr I3 kChartRoot[3] = {{0, 2, 2}, {0, 0, 2}, {2, 0, 2}};

bool covered_by_zone(const I3& t0, const I3& t1, const I3& t2, int depth_left,
                     const I3 (&pts)[4]) {
    I3 w0 = add(t1, t2), w1 = add(t2, t0), w2 = add(t0, t1);
    if (tri_contains_all(w0, w1, w2, pts)) return true;
    if (depth_left == 0) return false;
    if (tri_contains_all(w1, w0, t2, pts))
        return covered_by_zone(w1, w0, t2, depth_left - 1, pts);
    if (tri_contains_all(w2, t1, w0, pts))
        return covered_by_zone(w2, t1, w0, depth_left - 1, pts);
    if (tri_contains_all(t0, w2, w1, pts))
        return covered_by_zone(t0, w2, w1, depth_left - 1, pts);
    return false;
}

// Counts uncovered cells inside the block of side 2^size_log cells whose
// lower-left cell is (i0,j0) on the 2^n grid.
std::uint64_t count_block(std::int64_t i0, std::int64_t j0, int size_log, int n,
                          int tree_depth) {
    const std::int64_t side = std::int64_t{1} << n;
    if (i0 + j0 >= side) return 0; // entirely outside Delta's image
    const std::int64_t bs = std::int64_t{1} << size_log;
    const I3 corners[4] = {{i0, j0, side},
                           {i0 + bs, j0, side},
                           {i0, j0 + bs, side},
                           {i0 + bs, j0 + bs, side}};
    if (covered_by_zone(kChartRoot[0], kChartRoot[1], kChartRoot[2], tree_depth, corners))
        return 0;
    if (size_log == 0) return 1;
    const std::int64_t h = bs / 2;
    return count_block(i0, j0, size_log - 1, n, tree_depth) +
           count_block(i0 + h, j0, size_log - 1, n, tree_depth) +
           count_block(i0, j0 + h, size_log - 1, n, tree_depth) +
           count_block(i0 + h, j0 + h, size_log - 1, n, tree_depth);
}

} // namespace

std::vector<ChartTriangle> collect_chart_triangles(int depth) {
    std::vector<ChartTriangle> out;
    zones::visit_zones(depth, [&](const zones::ZoneFrame& f) {
        ChartTriangle t;
        for (int i = 0; i < 3; ++i) {
            proj::Int3 m = proj::area_chart_triple(f.zone[static_cast<std::size_t>(i)]);
            t.v[static_cast<std::size_t>(i)] = {m.h1.to_int64(), m.h2.to_int64(), m.h3.to_int64()};
        }
        out.push_back(t);
    });
    return out;
}

std::uint64_t box_count(int tree_depth, int n) {
    return count_block(0, 0, n, n, tree_depth);
}

std::uint64_t box_count_list(const std::vector<ChartTriangle>& tris, int n) {
    const std::int64_t side = std::int64_t{1} << n;
    std::uint64_t count = 0;
    for (std::int64_t i = 0; i < side; ++i) {
        for (std::int64_t j = 0; j + i < side; ++j) {
            const I3 corners[4] = {{i, j, side},
                                   {i + 1, j, side},
                                   {i, j + 1, side},
                                   {i + 1, j + 1, side}};
            bool covered = false;
            for (const auto& t : tris) {
                if (tri_contains_all(t.v[0], t.v[1], t.v[2], corners)) {
                    covered = true;
                    break;
                }
            }
            if (!covered) ++count;
        }
    }
    return count;
}

DimensionSeries box_count_series(int tree_depth, int n_max, int window_lo, int window_hi) {
    DimensionSeries s;
    double prev_log2 = 0;
    for (int n = 1; n <= n_max; ++n) {
        SeriesEntry e;
        e.n = n;
        e.scale = std::pow(2.0, -n);
        e.value = static_cast<double>(box_count(tree_depth, n));
        e.est_quotient = std::log2(e.value) / n;
        e.est_diff = n == 1 ? e.est_quotient : std::log2(e.value) - prev_log2;
        prev_log2 = std::log2(e.value);
        s.entries.push_back(e);
    }
    finish_series(s, window_lo, window_hi);
    return s;
}

double fit_slope(const std::vector<std::pair<double, double>>& pts, double x_lo,
                 double x_hi) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (const auto& [x, y] : pts) {
        if (x < x_lo || x > x_hi) continue;
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++n;
    }
    if (n < 3)
        throw Error(ErrorCode::InsufficientPoints, "fit_slope needs at least 3 points in range");
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

} // namespace skew46::fractal
