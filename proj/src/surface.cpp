#include "skew46/surface.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace skew46::surf {

Rational theta(const Rat3& x) {
    const Rational* c[3] = {&x.x, &x.y, &x.z};
    std::array<Rational, 3> a;
    for (int i = 0; i < 3; ++i) {
        Rational t = c[i]->frac();
        a[i] = (t * 2 - 1).abs();
    }
    std::sort(a.begin(), a.end());
    return a[1] - Rational(1, 2);
}

bool in_n_minus(const Rat3& x) {
    const Rational* c[3] = {&x.x, &x.y, &x.z};
    Rational half(1, 2), quarter(1, 4);
    int count = 0;
    for (int i = 0; i < 3; ++i) {
        Rational t = (*c[i] - quarter).frac();
        if (t <= half) ++count;
    }
    return count >= 2;
}

std::array<std::array<int, 3>, 4> face_corners4(const Face& f) {
    std::array<std::array<int, 3>, 4> out;
    const int lo0 = f.corner4[0], lo1 = f.corner4[1];
    const int pos[4][2] = {{lo0, lo1}, {lo0 + 2, lo1}, {lo0 + 2, lo1 + 2}, {lo0, lo1 + 2}};
    for (int c = 0; c < 4; ++c) {
        std::array<int, 3> p{};
        p[static_cast<std::size_t>(f.axis)] = f.offset4;
        p[static_cast<std::size_t>(f.span_axes[0])] = pos[c][0];
        p[static_cast<std::size_t>(f.span_axes[1])] = pos[c][1];
        out[static_cast<std::size_t>(c)] = p;
    }
    return out;
}

Rat3 face_centroid(const Face& f) {
    std::array<Rational, 3> v;
    v[static_cast<std::size_t>(f.axis)] = Rational(f.offset4, 4);
    v[static_cast<std::size_t>(f.span_axes[0])] = Rational(f.corner4[0] + 1, 4);
    v[static_cast<std::size_t>(f.span_axes[1])] = Rational(f.corner4[1] + 1, 4);
    return {v[0], v[1], v[2]};
}

namespace {

int levi_civita(int i, int j, int k) {
    if (i == j || j == k || i == k) return 0;
    // even permutations of (0,1,2)
    if ((i == 0 && j == 1) || (i == 1 && j == 2) || (i == 2 && j == 0)) return 1;
    return -1;
}

struct EdgeKey {
    int dir, start4, fa, pa, fb, pb; // fixed axes ascending with their mod-4 positions
    auto operator<=>(const EdgeKey&) const = default;
};

SurfaceMesh construct() {
    SurfaceMesh m;

    // 12 faces: axis x offset x (which span holds the low corner).
    int id = 0;
    for (int axis = 0; axis < 3; ++axis) {
        int s0 = axis == 0 ? 1 : 0;
        int s1 = axis == 2 ? 1 : 2;
        for (int offset4 : {1, 3}) {
            for (int pattern = 0; pattern < 2; ++pattern) {
                Face f;
                f.id = id;
                f.axis = axis;
                f.offset4 = offset4;
                f.span_axes = {s0, s1};
                f.corner4 = pattern == 0 ? std::array<int, 2>{1, 3}
                                         : std::array<int, 2>{3, 1};
                // Orientation from the N- rule, evaluated at the centroid.
                Rat3 c = face_centroid(f);
                Rational eighth(1, 8);
                Rat3 plus = c, minus = c;
                (axis == 0 ? plus.x : axis == 1 ? plus.y : plus.z) += eighth;
                (axis == 0 ? minus.x : axis == 1 ? minus.y : minus.z) -= eighth;
                bool plus_in = in_n_minus(plus), minus_in = in_n_minus(minus);
                if (plus_in == minus_in)
                    throw std::logic_error("surface: face does not separate N- from N+");
                f.normal_sign = minus_in ? 1 : -1;
                m.faces[static_cast<std::size_t>(id)] = f;
                ++id;
            }
        }
    }

    // Vertices: the orbit of P under quarter translations, {1,3}^3.
    int vi = 0;
    for (int a : {1, 3})
        for (int b : {1, 3})
            for (int c : {1, 3}) m.vertices4[static_cast<std::size_t>(vi++)] = {a, b, c};

    // Edges via canonical keys; each key must be hit by exactly two face sides.
    std::map<EdgeKey, std::vector<std::pair<int, int>>> by_key; // (face, slot)
    std::map<std::pair<int, int>, std::array<std::int64_t, 3>> wrap; // per (face, slot)

    for (const Face& f : m.faces) {
        for (int slot = 0; slot < 4; ++slot) {
            int fixed_span = slot / 2;      // which span axis is held fixed
            bool low = (slot % 2) == 0;
            int fixed_axis = f.span_axes[static_cast<std::size_t>(fixed_span)];
            int dir_axis = f.span_axes[static_cast<std::size_t>(1 - fixed_span)];
            int pos = f.corner4[static_cast<std::size_t>(fixed_span)] + (low ? 0 : 2);
            std::array<std::int64_t, 3> w{0, 0, 0};
            int pos4 = pos;
            if (pos4 >= 4) {
                pos4 -= 4;
                w[static_cast<std::size_t>(fixed_axis)] = 1;
            }
            int start4 = f.corner4[static_cast<std::size_t>(1 - fixed_span)];
            int axA = std::min(f.axis, fixed_axis), axB = std::max(f.axis, fixed_axis);
            int posA = axA == f.axis ? f.offset4 : pos4;
            int posB = axB == f.axis ? f.offset4 : pos4;
            EdgeKey key{dir_axis, start4, axA, posA, axB, posB};
            by_key[key].push_back({f.id, slot});
            wrap[{f.id, slot}] = w;
        }
    }
    if (by_key.size() != 24) throw std::logic_error("surface: expected 24 edges");

    int ei = 0;
    for (auto& [key, uses] : by_key) {
        if (uses.size() != 2) throw std::logic_error("surface: edge not shared by two faces");
        Edge e;
        e.dir_axis = key.dir;
        e.start4 = key.start4;
        e.fixed4 = {key.pa, key.pb};
        e.faces = {uses[0].first, uses[1].first};
        e.on_basis_line = key.pa == 1 && key.pb == 1;
        m.edges.push_back(e);
        for (int u = 0; u < 2; ++u) {
            auto [fid, slot] = uses[static_cast<std::size_t>(u)];
            auto [gid, gslot] = uses[static_cast<std::size_t>(1 - u)];
            SideAdj& adj = m.sides[static_cast<std::size_t>(fid)][static_cast<std::size_t>(slot)];
            adj.edge = ei;
            adj.neighbor_face = gid;
            adj.neighbor_slot = gslot;
            const auto& wf = wrap[{fid, slot}];
            const auto& wg = wrap[{gid, gslot}];
            for (int i = 0; i < 3; ++i) adj.lattice_delta[static_cast<std::size_t>(i)] = wf[static_cast<std::size_t>(i)] - wg[static_cast<std::size_t>(i)];
            int fixed_span = slot / 2;
            adj.dir_axis = key.dir;
            adj.fixed_axis = m.faces[static_cast<std::size_t>(fid)].span_axes[static_cast<std::size_t>(fixed_span)];
            adj.fixed_low = (slot % 2) == 0;
            adj.on_basis_line = e.on_basis_line;
            const Face& f = m.faces[static_cast<std::size_t>(fid)];
            int n_in = adj.fixed_low ? 1 : -1;
            adj.enter_sign = n_in * f.normal_sign *
                             levi_civita(adj.fixed_axis, adj.dir_axis, f.axis);
        }
        ++ei;
    }

    // The six face corners at P=(1/4,1/4,1/4): faces with offset 1 in
    // their own axis, lifted so that the mixed corner lands at P.
    for (const Face& f : m.faces) {
        auto corners = face_corners4(f);
        for (int c = 0; c < 4; ++c) {
            const auto& p = corners[static_cast<std::size_t>(c)];
            if (p[0] % 4 == 1 && p[1] % 4 == 1 && p[2] % 4 == 1) {
                VertexUse u;
                u.face = f.id;
                for (int i = 0; i < 3; ++i)
                    u.lift[static_cast<std::size_t>(i)] = (1 - p[static_cast<std::size_t>(i)]) / 4;
                u.corner_high = {c == 1 || c == 2, c == 2 || c == 3};
                m.p_corners.push_back(u);
            }
        }
    }
    if (m.p_corners.size() != 6) throw std::logic_error("surface: P must meet six faces");

    // Ray structure at P. Ray id: axis*2 + (sign<0). Each ray belongs to
    // exactly two of the six corners.
    std::array<int, 6> ray_count{};
    for (int i = 0; i < 6; ++i) {
        const VertexUse& u = m.p_corners[static_cast<std::size_t>(i)];
        const Face& f = m.faces[static_cast<std::size_t>(u.face)];
        for (int s = 0; s < 2; ++s) {
            int axis = f.span_axes[static_cast<std::size_t>(s)];
            int rid = axis * 2 + (u.corner_high[static_cast<std::size_t>(s)] ? 1 : 0);
            if (ray_count[static_cast<std::size_t>(rid)] >= 2)
                throw std::logic_error("surface: ray incident to more than two faces");
            m.ray_corners[static_cast<std::size_t>(rid)][static_cast<std::size_t>(
                ray_count[static_cast<std::size_t>(rid)]++)] = i;
        }
    }
    for (int r = 0; r < 6; ++r)
        if (ray_count[static_cast<std::size_t>(r)] != 2)
            throw std::logic_error("surface: ray not shared by two faces");

    return m;
}

} // namespace

const SurfaceMesh& build_surface() {
    static const SurfaceMesh mesh = construct();
    return mesh;
}

std::array<BasisCycle, 3> basis_cycles(const SurfaceMesh& mesh) {
    std::array<BasisCycle, 3> out;
    for (int axis = 0; axis < 3; ++axis) {
        BasisCycle b;
        b.axis = axis;
        b.homology = {axis == 0, axis == 1, axis == 2};
        int found = 0;
        for (std::size_t e = 0; e < mesh.edges.size(); ++e) {
            const Edge& ed = mesh.edges[e];
            if (ed.dir_axis == axis && ed.on_basis_line) {
                if (found >= 2) throw std::logic_error("surface: basis line has two edges");
                b.edges[static_cast<std::size_t>(found++)] = static_cast<int>(e);
            }
        }
        if (found != 2) throw std::logic_error("surface: basis line missing edges");
        out[static_cast<std::size_t>(axis)] = b;
    }
    return out;
}

} // namespace skew46::surf
