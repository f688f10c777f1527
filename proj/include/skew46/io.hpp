#pragma once

#include "skew46/fractal.hpp"
#include "skew46/section.hpp"
#include "skew46/surface.hpp"
#include "skew46/zones.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace skew46::io {

inline constexpr int kFormatVersion = 1;

// Breadth-first zone records. All projective coordinates are written as
// decimal strings; labels grow exponentially with depth and must survive
// a round trip.
void write_zones_json(std::ostream& os, int depth);

// depth,soul,area,perimeter,inradius (area exact, floats for the rest).
void write_zones_csv(std::ostream& os, int depth);

struct SweepRow {
    std::int64_t m, n, N;
    std::string exact_soul;  // "a:b:c" or "a:b:c|d:e:f"
    std::string traced_soul; // empty when unlabeled
    std::string status;      // ok | saddle_connection | ...
};

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);

void write_dimension_csv(std::ostream& os, const fractal::DimensionSeries& s);

std::string trace_json(const section::Direction& dir, const section::TraceResult& res,
                       bool with_segments);

std::string mesh_json();

std::string soul_set_string(const zones::SoulSet& s);

} // namespace skew46::io
