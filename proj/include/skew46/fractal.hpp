#pragma once

#include "skew46/zones.hpp"

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace skew46::fractal {

// Per-zone chart metrics arranged for epsilon-neighborhood sums: zones
// sorted by inradius descending, with prefix sums of perimeter, area and
// the corner defect p^2/(4a).
struct NeighborhoodModel {
    std::vector<double> inradius;
    std::vector<double> pre_p, pre_a, pre_c; // pre_x[k] = sum over the first k zones

    static NeighborhoodModel from_tree(int depth);
    // entries are (area, perimeter, inradius) in any order
    static NeighborhoodModel from_metrics(std::vector<std::array<double, 3>> apr);
    std::size_t count_at(double eps) const; // zones with inradius >= eps
};

struct VolumeBreakdown {
    double total;
    double outer_band;    // p * eps
    double zone_bands;    // eps * sum p_i
    double residual_area; // A - sum a_i
    double corner_term;   // eps^2 (pi - sum p_i^2 / (4 a_i)); the only term that can go negative
    std::size_t k;        // zones included (inradius >= eps)
};

VolumeBreakdown minkowski_volume(const NeighborhoodModel& zones,
                                 const zones::OuterMetrics& outer, double eps);

struct SeriesEntry {
    int n;
    double scale;
    double value;        // V(E_eps) or N_n
    double est_quotient; // pointwise estimate
    double est_diff;     // successive-difference estimate
};

struct DimensionSeries {
    std::vector<SeriesEntry> entries;
    int window_lo = 0, window_hi = 0;
    double plateau_mean = 0, plateau_min = 0, plateau_max = 0;
};

// d_n = 2 - log V(E_{base^-n}) / log(base^-n), n = 1..n_max; the plateau
// statistic is taken over the given window of n.
DimensionSeries minkowski_series(const NeighborhoodModel& zones,
                                 const zones::OuterMetrics& outer,
                                 double base = 1.2, int n_max = 50,
                                 int window_lo = 15, int window_hi = 40);

// Zone triangles mapped to the area chart, as integer projective reps.
struct ChartTriangle {
    std::array<std::array<std::int64_t, 3>, 3> v;
};

std::vector<ChartTriangle> collect_chart_triangles(int depth);

// Number of grid squares of side 2^-n that meet the chart image of Delta
// and are not entirely inside a single zone of the depth-limited tree.
// Exact rational corner tests; a square is inside a (convex) zone
// triangle iff its four corners are.
std::uint64_t box_count(int tree_depth, int n);

// Reference implementation over an explicit triangle list (slow; used to
// cross-check the tree walk and its order independence).
std::uint64_t box_count_list(const std::vector<ChartTriangle>& tris, int n);

DimensionSeries box_count_series(int tree_depth, int n_max,
                                 int window_lo = 6, int window_hi = 12);

// Least-squares slope over the points with x in [x_lo, x_hi]; throws
// InsufficientPoints when fewer than three remain.
double fit_slope(const std::vector<std::pair<double, double>>& pts,
                 double x_lo, double x_hi);

} // namespace skew46::fractal
