#pragma once

#include "skew46/projective.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

namespace skew46::zones {

using skew46::BigInt;
using proj::Int3;
using proj::ProjPoint;
using skew46::Rational;

// Triangle of the subdivision tree, as the integer representatives the
// generation rule actually carries (normalization happens only for
// equality tests and output).
struct Triangle {
    std::array<Int3, 3> v;
};

// Root triangle Delta with vertices (1:1:0), (1:0:1), (0:1:1).
Triangle delta();

struct Zone {
    std::vector<std::uint8_t> word; // digits over {1,2,3}
    int depth = 0;
    ProjPoint soul;
    std::array<ProjPoint, 3> vertices;
};

// Streaming view of a zone during tree traversal. `tri` is the enclosing
// triangle, `zone` the pairwise vertex sums (the zone's own triangle),
// `soul_rep` the unnormalized vertex sum.
struct ZoneFrame {
    const std::vector<std::uint8_t>* word;
    int depth;
    const std::array<Int3, 3>* tri;
    std::array<Int3, 3> zone;
    Int3 soul_rep;
};

// Depth-first traversal (children in psi order 1,2,3). Zones of every
// depth <= max_depth are visited; order is preorder.
void visit_zones(int max_depth, const std::function<void(const ZoneFrame&)>& fn);

// Same zones, delivered in breadth-first order (depth by depth, words in
// lexicographic order within a depth).
void visit_zones_bfs(int max_depth, const std::function<void(const ZoneFrame&)>& fn);

Zone make_zone(const ZoneFrame& f);

// 3^0 + ... + 3^d zones; meant for moderate depths.
std::vector<Zone> generate_zones(int max_depth);

// Enclosing triangle Delta_a = psi_a(Delta).
Triangle zone_triangle(std::span<const std::uint8_t> word);

// Closed point-in-triangle via three determinant signs.
bool contains(const Triangle& t, const ProjPoint& p);
bool contains(const Zone& z, const ProjPoint& p);
bool contains_reps(const std::array<Int3, 3>& v, const Int3& p);

// Exact soul(s) of a rational direction: symmetry-reduce into the
// positive octant, run the phi reduction, classify the terminal point
// against the three square zones, and pull the label set back through
// the recorded trace (Subtract steps become psi_1, Rotate steps the
// inverse cyclic shift).
using SoulSet = std::vector<ProjPoint>; // sorted, unique, 1..3 entries

SoulSet soul_of_direction(const ProjPoint& p);

// Which of the three square zones h_i >= |h_j| + |h_k| contain p.
std::vector<int> square_zones_containing(const ProjPoint& p);

// Resolves p against the depth-limited zone tree: souls of every tree
// zone whose closed triangle contains p, plus square labels. `resolved`
// is false when some branch still contained p at max_depth without
// having met a zone, i.e. the finite tree cannot rule out deeper zones.
struct TreeResolution {
    SoulSet souls;
    bool resolved = true;
    int zone_hits = 0;
};

TreeResolution resolve_direction_in_tree(const ProjPoint& p, int max_depth);

struct ZoneMetrics {
    Rational area;    // exact area in the area chart
    double perimeter; // affine chart perimeter
    double inradius;  // 2*area/perimeter
    BigInt linf;      // z0+z1+z2 over the enclosing triangle's primitive chart reps
};

ZoneMetrics zone_metrics(const Zone& z);
ZoneMetrics zone_metrics_frame(const ZoneFrame& f);
// Paper-style product form 1/((z0+z1)(z1+z2)(z2+z0)); used as a cross-check.
Rational zone_area_product_form(const ZoneFrame& f);

// Metrics of the root triangle Delta itself in the area chart.
struct OuterMetrics {
    double area;
    double perimeter;
};
OuterMetrics delta_chart_metrics();

// l_k = normalize(l_{k-1} + l_{k-2} + l_{k-3}); returns n terms, seeds included.
std::vector<ProjPoint> tribonacci_sequence(const std::array<ProjPoint, 3>& seeds, int n);

struct EPointEstimate {
    double x, y;          // centroid of the nested triangle, z=1 chart
    double error_bound;   // its diameter
};

// Word must contain each of 1,2,3 at least once; the nested triangle
// diameter is then a rigorous bound for the limit of any extension.
EPointEstimate e_point_estimate(std::span<const std::uint8_t> word);

} // namespace skew46::zones
