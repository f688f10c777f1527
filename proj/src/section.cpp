#include "skew46/section.hpp"

#include "skew46/error.hpp"

#include <numeric>
#include <stdexcept>

namespace skew46::section {

using surf::SurfaceMesh;

Direction::Direction(std::int64_t m_, std::int64_t n_, std::int64_t N_)
    : m(m_), n(n_), N(N_) {
    if (m < 1 || n < 1 || N < 1)
        throw Error(ErrorCode::InvalidDirection, "direction coordinates must be >= 1");
    if (std::gcd(std::gcd(m, n), N) != 1)
        throw Error(ErrorCode::InvalidDirection, "direction must be primitive");
}

namespace {

// All tracing is done in coordinates scaled by 4*m*n*N. Every point the
// level polyline meets lies on an edge line of the lifted polyhedron,
// where two coordinates are quarter-integers and the third has
// denominator dividing 4*h_i, so the scaled coordinates are integers and
// the whole trace is integer arithmetic.
//
// The plane through the saddle P always meets further vertices of the
// polyhedron (on-level vertex classes are the kernel of the parity form
// ma+nb+Nc mod 2). For H in the open positive octant only the classes
// (1,1,1) and (3,3,3) (quarters mod 4) are genuine saddles of the
// induced foliation; the level curve crosses the remaining classes like
// regular points, entering along one of two rays and leaving along the
// other. The tracer therefore walks through those vertices, ends its arc
// at the first lift of P, and reports a saddle connection only for hits
// on the opposite saddle class.
struct Tracer {
    const SurfaceMesh& mesh;
    std::array<BigInt, 3> h;
    BigInt Sq;   // m*n*N; quarter unit in scaled coordinates
    BigInt S4;   // 4*m*n*N; full unit
    BigInt C;    // plane level <H, P0> scaled

    // Level rays per vertex class (coordinates mod 1, bit set = 3/4):
    // for a direction in the open positive octant only two classes are
    // genuine saddles of the induced foliation; the rest are plain
    // crossings of the level curve. Computed from the face structure, not
    // assumed.
    std::array<int, 8> class_rays{};

    explicit Tracer(const Direction& d)
        : mesh(surf::build_surface()),
          h{BigInt(d.m), BigInt(d.n), BigInt(d.N)},
          Sq(BigInt(d.m) * BigInt(d.n) * BigInt(d.N)) {
        S4 = Sq * BigInt(4);
        C = Sq * BigInt(d.m + d.n + d.N);
        for (int bits = 0; bits < 8; ++bits) {
            std::array<int, 3> cls{bits & 1 ? 3 : 1, bits & 2 ? 3 : 1, bits & 4 ? 3 : 1};
            int rays = 0;
            for (const surf::Face& f : mesh.faces) {
                if (f.offset4 != cls[static_cast<std::size_t>(f.axis)]) continue;
                bool low0 = cls[static_cast<std::size_t>(f.span_axes[0])] == f.corner4[0] % 4;
                bool low1 = cls[static_cast<std::size_t>(f.span_axes[1])] == f.corner4[1] % 4;
                if (low0 != low1) ++rays;
            }
            class_rays[static_cast<std::size_t>(bits)] = rays;
        }
    }

    static int class_bits(const std::array<std::int64_t, 3>& quarters) {
        int bits = 0;
        for (int i = 0; i < 3; ++i) {
            std::int64_t cls = ((quarters[static_cast<std::size_t>(i)] % 4) + 4) % 4;
            if (cls == 3) bits |= 1 << i;
        }
        return bits;
    }

    static BigInt exact_div(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        if (!r.is_zero()) throw std::logic_error("tracer: non-exact division");
        return q;
    }

    struct Cursor {
        int face;
        std::array<std::int64_t, 3> lattice;
        std::array<BigInt, 3> pos; // scaled cover coordinates
    };

    struct StepOut {
        bool at_vertex = false;
        // vertex data (valid when at_vertex): which spans sit at their low
        // bound, quarter coordinates of the vertex
        std::array<bool, 2> span_low{};
        std::array<std::int64_t, 3> vertex_quarters{};
    };

    // Advances the cursor along one face chord; applies the crossing
    // bookkeeping when the exit is an edge-interior point.
    StepOut step(Cursor& cur, std::array<std::int64_t, 3>& cross_counts) const {
        const surf::Face& f = mesh.face(cur.face);
        const int a = f.axis, j = f.span_axes[0], k = f.span_axes[1];
        const BigInt axis_pos = Sq * BigInt(f.offset4 + 4 * cur.lattice[a]);
        const BigInt lo_j = Sq * BigInt(f.corner4[0] + 4 * cur.lattice[j]);
        const BigInt lo_k = Sq * BigInt(f.corner4[1] + 4 * cur.lattice[k]);
        const BigInt hi_j = lo_j + Sq + Sq;
        const BigInt hi_k = lo_k + Sq + Sq;
        const BigInt R = C - h[a] * axis_pos;

        // Chord endpoints as (X_j, X_k); E1 minimizes X_j.
        BigInt e1j, e1k, e2j, e2k;
        BigInt t1 = exact_div(R - h[k] * hi_k, h[j]);
        if (t1 >= lo_j) {
            e1j = t1;
            e1k = hi_k;
        } else {
            e1j = lo_j;
            e1k = exact_div(R - h[j] * lo_j, h[k]);
        }
        BigInt t2 = exact_div(R - h[k] * lo_k, h[j]);
        if (t2 <= hi_j) {
            e2j = t2;
            e2k = lo_k;
        } else {
            e2j = hi_j;
            e2k = exact_div(R - h[j] * hi_j, h[k]);
        }

        const BigInt& qj = cur.pos[j];
        const BigInt& qk = cur.pos[k];
        BigInt xj, xk;
        if (qj == e1j && qk == e1k) {
            xj = e2j;
            xk = e2k;
        } else if (qj == e2j && qk == e2k) {
            xj = e1j;
            xk = e1k;
        } else {
            throw std::logic_error("tracer: entry point is not a chord endpoint");
        }

        const bool on_lo_j = xj == lo_j, on_hi_j = xj == hi_j;
        const bool on_lo_k = xk == lo_k, on_hi_k = xk == hi_k;

        cur.pos[j] = xj;
        cur.pos[k] = xk;

        StepOut out;
        if ((on_lo_j || on_hi_j) && (on_lo_k || on_hi_k)) {
            out.at_vertex = true;
            out.span_low = {on_lo_j, on_lo_k};
            for (int i = 0; i < 3; ++i)
                out.vertex_quarters[i] = exact_div(cur.pos[i], Sq).to_int64();
            return out;
        }

        int slot;
        if (on_lo_j) slot = 0;
        else if (on_hi_j) slot = 1;
        else if (on_lo_k) slot = 2;
        else if (on_hi_k) slot = 3;
        else throw std::logic_error("tracer: exit not on the face boundary");

        cross_edge(cur, slot, cross_counts);
        return out;
    }

    // Moves the cursor through side `slot` of its current face; returns
    // the side of the neighbor we entered through.
    int cross_edge(Cursor& cur, int slot, std::array<std::int64_t, 3>& cross_counts) const {
        const surf::SideAdj& adj = mesh.sides[static_cast<std::size_t>(cur.face)]
                                             [static_cast<std::size_t>(slot)];
        if (adj.on_basis_line) {
            const surf::SideAdj& in = mesh.sides[static_cast<std::size_t>(adj.neighbor_face)]
                                                [static_cast<std::size_t>(adj.neighbor_slot)];
            cross_counts[static_cast<std::size_t>(adj.dir_axis)] += in.enter_sign;
        }
        for (int i = 0; i < 3; ++i) cur.lattice[static_cast<std::size_t>(i)] += adj.lattice_delta[static_cast<std::size_t>(i)];
        cur.face = adj.neighbor_face;
        return adj.neighbor_slot;
    }

    // Whether the cursor's face holds vertex w at its low end per span.
    std::array<bool, 2> corner_lows(int face, const std::array<std::int64_t, 3>& wq) const {
        const surf::Face& f = mesh.face(face);
        std::array<bool, 2> low{};
        for (int s = 0; s < 2; ++s) {
            std::int64_t c = wq[static_cast<std::size_t>(f.span_axes[static_cast<std::size_t>(s)])];
            int cls = static_cast<int>(((c % 4) + 4) % 4);
            low[static_cast<std::size_t>(s)] = cls == f.corner4[static_cast<std::size_t>(s)] % 4;
        }
        return low;
    }

    // Resolves a vertex hit to the rising side. The function grows along
    // the corner edge of the span held at its low bound, so the first
    // crossing leaves through the other span's (high) side; the walk then
    // continues around the vertex link until it reaches a face whose
    // corner is mixed, i.e. holds the next level ray.
    void turn(Cursor& cur, const StepOut& v, std::array<std::int64_t, 3>& cross_counts) const {
        if (v.span_low[0] == v.span_low[1])
            throw std::logic_error("tracer: vertex arrival at a non-mixed corner");
        int low_span = v.span_low[0] ? 0 : 1;
        int slot = (1 - low_span) * 2 + 1; // other span, high side
        for (int guard = 0; guard < 6; ++guard) {
            int entered = cross_edge(cur, slot, cross_counts);
            auto low = corner_lows(cur.face, v.vertex_quarters);
            if (low[0] != low[1]) return; // this face carries the next ray
            // No ray here: leave through the corner side we did not enter.
            int entered_span = entered / 2;
            slot = (1 - entered_span) * 2 + (low[static_cast<std::size_t>(1 - entered_span)] ? 0 : 1);
        }
        throw std::logic_error("tracer: vertex walk failed to find the next ray");
    }

    proj::Rat3 to_rat3(const std::array<BigInt, 3>& p) const {
        return {Rational(p[0], S4), Rational(p[1], S4), Rational(p[2], S4)};
    }
};

} // namespace

Arc trace_arc(const Direction& H, int ray, const TraceOptions& opt) {
    Tracer tr(H);
    const SurfaceMesh& mesh = tr.mesh;
    if (ray < 0 || ray >= 6) throw std::out_of_range("trace_arc: ray index");
    const surf::VertexUse& u = mesh.p_corners[static_cast<std::size_t>(ray)];

    Arc arc;
    arc.start_ray = ray;

    Tracer::Cursor cur;
    cur.face = u.face;
    cur.lattice = u.lift;
    cur.pos = {tr.Sq, tr.Sq, tr.Sq}; // P0 = (1/4,1/4,1/4)

    while (true) {
        if (arc.segment_count >= opt.step_cap) {
            arc.status = TraceStatus::StepLimit;
            return arc;
        }
        std::array<BigInt, 3> entry_pos = cur.pos;
        int face_before = cur.face;
        auto lattice_before = cur.lattice;
        Tracer::StepOut so = tr.step(cur, arc.crossings);
        ++arc.segment_count;
        if (opt.keep_segments) {
            Segment s;
            s.face = face_before;
            s.lattice = lattice_before;
            s.entry = tr.to_rat3(entry_pos);
            s.exit = tr.to_rat3(cur.pos);
            arc.segments.push_back(std::move(s));
        }
        if (!so.at_vertex) continue;

        const int bits = Tracer::class_bits(so.vertex_quarters);

        if (bits == 0) {
            // Lift of P: the separatrix arc ends at the saddle it started
            // from; the loop closes through it.
            std::array<std::int64_t, 3> disp{};
            for (int i = 0; i < 3; ++i)
                disp[static_cast<std::size_t>(i)] =
                    (so.vertex_quarters[static_cast<std::size_t>(i)] - 1) / 4;
            arc.displacement = disp;
            arc.end_ray = -1;
            for (std::size_t i = 0; i < mesh.p_corners.size(); ++i) {
                const surf::VertexUse& v = mesh.p_corners[i];
                bool match = v.face == cur.face;
                for (int c = 0; c < 3 && match; ++c)
                    match = v.lift[static_cast<std::size_t>(c)] ==
                            cur.lattice[static_cast<std::size_t>(c)] - disp[static_cast<std::size_t>(c)];
                if (match) {
                    arc.end_ray = static_cast<int>(i);
                    break;
                }
            }
            if (arc.end_ray < 0 || arc.end_ray == ray)
                throw std::logic_error("tracer: arrival sector not incident to the saddle");
            return arc;
        }

        // A vertex with more than two level rays is a saddle of the
        // foliation on the critical level: a genuine saddle connection.
        if (tr.class_rays[static_cast<std::size_t>(bits)] > 2) {
            arc.status = TraceStatus::SaddleConnection;
            for (int i = 0; i < 3; ++i)
                arc.sc_vertex[static_cast<std::size_t>(i)] = bits & (1 << i) ? 3 : 1;
            return arc;
        }

        // Plain crossing: the level curve passes through.
        tr.turn(cur, so, arc.crossings);
    }
}

namespace {

// Signed b-crossings of the loop-closing corner at a lift of P, resolved
// by pushing the corner off the vertex: walk around the vertex from the
// arrival sector to the (translated) departure sector, crossing the
// edge-rays in between. Every edge at a lift of P lies on a basis line.
// The walk starts towards the rising side and both directions agree (the
// full circle around the vertex crosses each basis line twice with
// cancelling signs; the structural tests pin this down).
std::array<std::int64_t, 3> closing_corner_crossings(const Tracer& tr, int arrival_ray,
                                                     int departure_ray) {
    const SurfaceMesh& mesh = tr.mesh;
    const surf::VertexUse& from = mesh.p_corners[static_cast<std::size_t>(arrival_ray)];
    const surf::VertexUse& to = mesh.p_corners[static_cast<std::size_t>(departure_ray)];

    std::array<std::int64_t, 3> counts{0, 0, 0};
    Tracer::Cursor cur;
    cur.face = from.face;
    cur.lattice = from.lift;

    // First crossing towards the rising side, then keep rotating the same
    // way: leave each face through the corner side not entered. At a lift
    // of P a face corner sits at the low end of a span exactly when that
    // span's corner quarter is 1.
    int low_span = from.corner_high[0] ? 1 : 0;
    int slot = (1 - low_span) * 2 + 1;
    for (int guard = 0; guard < 7; ++guard) {
        if (cur.face == to.face && cur.lattice == to.lift) return counts;
        int entered = tr.cross_edge(cur, slot, counts);
        int entered_span = entered / 2;
        const surf::Face& f = mesh.face(cur.face);
        bool other_low = f.corner4[static_cast<std::size_t>(1 - entered_span)] % 4 == 1;
        slot = (1 - entered_span) * 2 + (other_low ? 0 : 1);
    }
    throw std::logic_error("tracer: corner walk did not reach the departure sector");
}

} // namespace

TraceResult trace_critical_loops(const Direction& H, const TraceOptions& opt) {
    Tracer tr(H);
    TraceResult res;
    std::array<bool, 6> paired{};
    int nloops = 0;
    for (int ray = 0; ray < 6; ++ray) {
        if (paired[static_cast<std::size_t>(ray)]) continue;
        Arc arc = trace_arc(H, ray, opt);
        if (arc.status != TraceStatus::Ok) {
            res.status = arc.status;
            res.sc_vertex = arc.sc_vertex;
            res.sc_ray = ray;
            return res;
        }
        if (arc.end_ray == ray || paired[static_cast<std::size_t>(arc.end_ray)])
            throw std::logic_error("tracer: sector pairing is not a perfect matching");
        paired[static_cast<std::size_t>(ray)] = true;
        paired[static_cast<std::size_t>(arc.end_ray)] = true;

        CriticalLoop loop;
        loop.start_ray = arc.start_ray;
        loop.end_ray = arc.end_ray;
        loop.displacement = arc.displacement;
        loop.crossings = arc.crossings;
        auto corner = closing_corner_crossings(tr, arc.end_ray, arc.start_ray);
        for (int i = 0; i < 3; ++i)
            loop.crossings[static_cast<std::size_t>(i)] += corner[static_cast<std::size_t>(i)];
        loop.segment_count = arc.segment_count;
        loop.segments = std::move(arc.segments);
        res.loops[static_cast<std::size_t>(nloops++)] = std::move(loop);
    }
    if (nloops != 3) throw std::logic_error("tracer: expected exactly three loops");
    return res;
}

std::array<std::int64_t, 3> loop_class(const CriticalLoop& loop) {
    return loop.displacement;
}

long long intersection_number(const CriticalLoop& loop, const surf::BasisCycle& b) {
    return loop.crossings[static_cast<std::size_t>(b.axis)];
}

const char* to_string(NoLabelReason r) {
    switch (r) {
        case NoLabelReason::None: return "none";
        case NoLabelReason::SaddleConnection: return "saddle_connection";
        case NoLabelReason::AllLoopsNullHomologous: return "all_loops_null_homologous";
        case NoLabelReason::MultipleNonzeroLoops: return "multiple_nonzero_loops";
        case NoLabelReason::StepLimit: return "step_limit";
    }
    return "?";
}

SoulOutcome numerical_soul(const Direction& H, const TraceOptions& opt) {
    SoulOutcome out;
    TraceResult tr = trace_critical_loops(H, opt);
    if (tr.status == TraceStatus::SaddleConnection) {
        out.reason = NoLabelReason::SaddleConnection;
        return out;
    }
    if (tr.status == TraceStatus::StepLimit) {
        out.reason = NoLabelReason::StepLimit;
        return out;
    }
    int count = 0;
    std::vector<int> nulls;
    for (int i = 0; i < 3; ++i) {
        out.total_segments += tr.loops[static_cast<std::size_t>(i)].segment_count;
        const auto& d = tr.loops[static_cast<std::size_t>(i)].displacement;
        if (d[0] || d[1] || d[2])
            ++count;
        else
            nulls.push_back(i);
    }
    if (count == 0) {
        out.reason = NoLabelReason::AllLoopsNullHomologous;
        return out;
    }
    if (count == 1) {
        // The other two loops are the closed cutting leaves bounding the
        // absorbing tori; their intersection vector with the basis cycles
        // is the torus class, i.e. the soul. (The nonzero loop's vector
        // shifts with H under any fixed choice of basis representatives;
        // the null loops' does not.)
        const auto& c0 = tr.loops[static_cast<std::size_t>(nulls[0])].crossings;
        const auto& c1 = tr.loops[static_cast<std::size_t>(nulls[1])].crossings;
        if (!c0[0] && !c0[1] && !c0[2])
            throw std::logic_error("numerical_soul: cutting loop with zero intersection vector");
        ProjPoint s0(c0[0], c0[1], c0[2]);
        ProjPoint s1(c1[0], c1[1], c1[2]);
        if (!(s0 == s1))
            throw std::logic_error("numerical_soul: cutting loops with inconsistent classes");
        out.soul = s0;
        return out;
    }
    // Resonant directions (the asymptotic direction is a short integer
    // vector) have no null loop: the closed leaves themselves show up as
    // a pair of critical loops with matching classes, and the cutting
    // cycle is their difference. Read the soul from it when available.
    std::optional<ProjPoint> soul;
    bool consistent = true;
    for (int i = 0; i < 3 && consistent; ++i) {
        for (int j = i + 1; j < 3 && consistent; ++j) {
            const auto& a = tr.loops[static_cast<std::size_t>(i)];
            const auto& b = tr.loops[static_cast<std::size_t>(j)];
            bool eq = a.displacement == b.displacement;
            bool op = a.displacement[0] == -b.displacement[0] &&
                      a.displacement[1] == -b.displacement[1] &&
                      a.displacement[2] == -b.displacement[2];
            if (!eq && !op) continue;
            std::array<std::int64_t, 3> d{};
            for (int c = 0; c < 3; ++c)
                d[static_cast<std::size_t>(c)] =
                    eq ? a.crossings[static_cast<std::size_t>(c)] - b.crossings[static_cast<std::size_t>(c)]
                       : a.crossings[static_cast<std::size_t>(c)] + b.crossings[static_cast<std::size_t>(c)];
            if (!d[0] && !d[1] && !d[2]) continue;
            ProjPoint s(d[0], d[1], d[2]);
            if (soul && !(*soul == s))
                consistent = false;
            else
                soul = s;
        }
    }
    if (!consistent || !soul) {
        out.reason = NoLabelReason::MultipleNonzeroLoops;
        return out;
    }
    out.soul = *soul;
    return out;
}

const char* to_string(CellClass c) {
    switch (c) {
        case CellClass::Cape: return "cape";
        case CellClass::Bridge: return "bridge";
        case CellClass::Island: return "island";
        case CellClass::Empty: return "empty";
    }
    return "?";
}

CellClass classify_cell(const Rational& alpha, const Rational& beta, const Rational& c,
                        HalfAxis axis, std::int64_t j, std::int64_t k, std::int64_t m) {
    if (alpha.sign() < 0 || beta.sign() < 0 || c.sign() < 0)
        throw Error(ErrorCode::DomainViolation, "classify_cell: alpha, beta, c must be >= 0");
    const Rational half(1, 2);
    const Rational rj(j), rk(k), rm(m);
    Rational lo_end, hi_end, gmin, gmax;
    if (axis == HalfAxis::X) {
        // Cell [j+1/2, j+1] x [k, k+1/2] against the strip m <= c-ax-by <= m+1/2.
        lo_end = c - alpha * (rj + half) - beta * (rk + half) - half;
        hi_end = c - alpha * (rj + 1) - beta * rk;
        gmax = c - alpha * (rj + half) - beta * rk;
        gmin = c - alpha * (rj + 1) - beta * (rk + half);
    } else {
        lo_end = c - alpha * (rj + half) - beta * (rk + half) - half;
        hi_end = c - alpha * rj - beta * (rk + 1);
        gmax = c - alpha * rj - beta * (rk + half);
        gmin = c - alpha * (rj + half) - beta * (rk + 1);
    }
    if (rm > gmax || rm + half < gmin) return CellClass::Empty;
    if (lo_end <= rm && rm <= hi_end) return CellClass::Bridge;
    if (lo_end >= rm && rm >= hi_end) return CellClass::Island;
    return CellClass::Cape;
}

} // namespace skew46::section
