#pragma once

#include "skew46/projective.hpp"
#include "skew46/rational.hpp"
#include "skew46/surface.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace skew46::section {

using proj::ProjPoint;
using skew46::BigInt;
using skew46::Rational;

// Positive primitive plane direction (m,n,N).
struct Direction {
    std::int64_t m, n, N;
    Direction(std::int64_t m_, std::int64_t n_, std::int64_t N_);
};

struct Segment {
    int face;
    std::array<std::int64_t, 3> lattice;
    proj::Rat3 entry, exit; // exact cover coordinates
};

// One critical loop through the saddle P: a separatrix arc from a lift
// of P back to a lift of P, closed through the saddle. Intermediate
// vertices with only two level rays (plain crossings of the level curve
// for a direction in the open positive octant) are passed through; the
// displacement of the lift endpoints is the loop's homology class.
struct CriticalLoop {
    int start_ray = -1, end_ray = -1; // indices into SurfaceMesh::p_corners
    std::array<std::int64_t, 3> displacement{0, 0, 0}; // T^3 homology class
    std::array<std::int64_t, 3> crossings{0, 0, 0};    // signed counts against b_1,b_2,b_3
    std::size_t segment_count = 0;
    std::vector<Segment> segments; // kept only on request
};

enum class TraceStatus { Ok, SaddleConnection, StepLimit };

struct TraceOptions {
    std::size_t step_cap = 10'000'000; // segments per arc
    bool keep_segments = false;
};

struct TraceResult {
    TraceStatus status = TraceStatus::Ok;
    std::array<CriticalLoop, 3> loops; // valid when status == Ok
    // Saddle-connection diagnostics: the mod-1 quarter class of the
    // foliation saddle the separatrix ran into, and the ray it left from.
    std::array<int, 3> sc_vertex{0, 0, 0};
    int sc_ray = -1;
};

// Single separatrix arc from P; ends at the first arrival at a lift of
// P. Tracing from the paired ray yields the reversed arc. Exposed for
// the structural tests; crossings exclude the loop-closing corner.
struct Arc {
    TraceStatus status = TraceStatus::Ok;
    int start_ray = -1, end_ray = -1;
    std::array<std::int64_t, 3> displacement{0, 0, 0};
    std::array<std::int64_t, 3> crossings{0, 0, 0};
    std::size_t segment_count = 0;
    std::vector<Segment> segments;
    std::array<int, 3> sc_vertex{0, 0, 0};
};

Arc trace_arc(const Direction& H, int ray, const TraceOptions& opt = {});

// Traces the six separatrix rays at P, pairing them into three loops;
// the corner at the closing saddle is resolved by pushing the loop off
// the vertex into the adjacent sectors (both ways around agree).
TraceResult trace_critical_loops(const Direction& H, const TraceOptions& opt = {});

std::array<std::int64_t, 3> loop_class(const CriticalLoop& loop);

long long intersection_number(const CriticalLoop& loop, const surf::BasisCycle& b);

enum class NoLabelReason {
    None,
    SaddleConnection,
    AllLoopsNullHomologous,
    MultipleNonzeroLoops,
    StepLimit,
};

const char* to_string(NoLabelReason r);

struct SoulOutcome {
    std::optional<ProjPoint> soul;
    NoLabelReason reason = NoLabelReason::None;
    std::size_t total_segments = 0;
    bool labeled() const { return soul.has_value(); }
};

// Steps N0-N4: trace, classify, and read the soul off the intersection
// numbers of the unique loop with nonzero class.
SoulOutcome numerical_soul(const Direction& H, const TraceOptions& opt = {});

// Geography of the projected section (Lemma-2 style cell classifier).
enum class CellClass { Cape, Bridge, Island, Empty };
enum class HalfAxis { X, Y }; // which coordinate carries the +1/2 cell offset

const char* to_string(CellClass c);

CellClass classify_cell(const Rational& alpha, const Rational& beta, const Rational& c,
                        HalfAxis axis, std::int64_t j, std::int64_t k, std::int64_t m);

} // namespace skew46::section
