#pragma once

#include "skew46/projective.hpp"
#include "skew46/rational.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace skew46::surf {

using proj::Rat3;
using skew46::Rational;

// Level function of the surface: mid(|2x1-1|, |2x2-1|, |2x3-1|) - 1/2,
// coordinates taken mod 1. The zero set is the polyhedron.
Rational theta(const Rat3& x);

// Side classification of the complement: a point is in N- when at least
// two of the fractional parts {x_i - 1/4} lie in [0, 1/2].
bool in_n_minus(const Rat3& x);

// All face/edge geometry is stored in quarter units: the canonical face
// box lives in [1,5) quarters, i.e. coordinates in [1/4, 5/4).
struct Face {
    int id;
    int axis;            // normal axis
    int offset4;         // plane position in quarters: 1 or 3
    std::array<int, 2> span_axes; // ascending
    std::array<int, 2> corner4;   // span lower corners in quarters: one 1, one 3
    int normal_sign;     // oriented normal (N- to N+) is normal_sign * e_axis
};

struct Edge {
    int dir_axis;
    int start4;              // span start along dir_axis: 1 or 3
    std::array<int, 2> fixed4; // quarter positions mod 4 of the two fixed axes (ascending axis order)
    std::array<int, 2> faces;
    bool on_basis_line;      // both fixed quarters == 1
};

// Adjacency record for one of the four sides of a face.
struct SideAdj {
    int edge;            // index into SurfaceMesh::edges
    int neighbor_face;
    int neighbor_slot;   // side index within the neighbor
    std::array<std::int64_t, 3> lattice_delta; // neighbor lift = this lift + delta
    int dir_axis;        // edge direction
    int fixed_axis;      // the in-plane axis held fixed on this side
    bool fixed_low;      // side at the low end of the fixed-axis span
    bool on_basis_line;
    // Signed contribution to the crossing count with b_{dir_axis} when a
    // curve enters *this* face through this side.
    int enter_sign;
};

// One of the six face corners meeting the saddle P = (1/4,1/4,1/4):
// face `face` lifted by `lift` has P0 as the box corner `corner_high`.
struct VertexUse {
    int face;
    std::array<std::int64_t, 3> lift;
    std::array<bool, 2> corner_high; // per span axis: corner at the high end
};

struct BasisCycle {
    int axis;
    std::array<int, 2> edges;
    std::array<int, 3> homology; // e_axis
};

struct SurfaceMesh {
    std::array<Face, 12> faces;
    std::vector<Edge> edges;                         // 24
    std::array<std::array<SideAdj, 4>, 12> sides;    // slot order: span0-low, span0-high, span1-low, span1-high
    std::array<std::array<int, 3>, 8> vertices4;     // quarter coords in {1,3}^3
    std::vector<VertexUse> p_corners;                // 6 entries, deterministic order
    // Ray structure at P: ray id = axis*2 + (sign<0); ray_corners[r] are
    // the two entries of p_corners whose faces share that edge-ray. The
    // rising rays +e_d bound the three sectors where <H,.> exceeds the
    // critical value (H has positive coordinates), one sector per axis.
    std::array<std::array<int, 2>, 6> ray_corners;

    const Face& face(int id) const { return faces[static_cast<std::size_t>(id)]; }
};

// Deterministic construction; all invariants (two faces per edge, vertex
// degree six, Euler characteristic -4) are asserted.
const SurfaceMesh& build_surface();

std::array<BasisCycle, 3> basis_cycles(const SurfaceMesh& mesh);

// Corner points of a face in cover coordinates (quarters), order:
// (low,low), (high,low), (high,high), (low,high) in span order.
std::array<std::array<int, 3>, 4> face_corners4(const Face& f);

Rat3 face_centroid(const Face& f);

} // namespace skew46::surf
