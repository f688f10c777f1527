#include "skew46/svg.hpp"

#include "skew46/error.hpp"
#include "skew46/zones.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <vector>

namespace skew46::svg {

using proj::Chart;
using proj::Int3;

RenderSpec RenderSpec::for_chart(Chart c, int depth) {
    RenderSpec s;
    s.chart = c;
    s.depth = depth;
    switch (c) {
        case Chart::Z1: s.x0 = 0; s.y0 = 0; s.x1 = 1; s.y1 = 1; break;
        case Chart::Disc: s.x0 = -1.05; s.y0 = -1.05; s.x1 = 1.05; s.y1 = 1.05; break;
        case Chart::AreaChart: s.x0 = -0.05; s.y0 = -0.05; s.x1 = 1.05; s.y1 = 1.05; break;
        case Chart::Uv: s.x0 = -0.05; s.y0 = -0.05; s.x1 = 1.05; s.y1 = 1.05; break;
    }
    return s;
}

namespace {

struct Pt {
    double x, y;
    bool ok;
};

Pt map_point(Chart chart, const Int3& t) {
    double a = t.h1.to_double(), b = t.h2.to_double(), c = t.h3.to_double();
    switch (chart) {
        case Chart::Z1:
            if (c == 0) return {0, 0, false};
            return {a / c, b / c, true};
        case Chart::Disc: {
            auto [x, y] = proj::chart_disc(t);
            return {x, y, true};
        }
        case Chart::AreaChart: {
            double mx = -a + b + c, my = a + b - c, mz = a + b + c;
            if (mz == 0) return {0, 0, false};
            return {mx / mz, my / mz, true};
        }
        case Chart::Uv: {
            double s = a + b + c;
            if (s == 0) return {0, 0, false};
            return {1 - 2 * b / s, 1 - 2 * a / s, true};
        }
    }
    return {0, 0, false};
}

// Projective segment sampler; straight in affine charts, subdivided in
// the disc model where projective lines bend.
void sample_edge(Chart chart, const Int3& from, const Int3& to, std::vector<Pt>& out) {
    int steps = chart == Chart::Disc ? 16 : 1;
    out.push_back(map_point(chart, from));
    for (int s = 1; s < steps; ++s) {
        double t = static_cast<double>(s) / steps;
        double a = from.h1.to_double() * (1 - t) + to.h1.to_double() * t;
        double b = from.h2.to_double() * (1 - t) + to.h2.to_double() * t;
        double c = from.h3.to_double() * (1 - t) + to.h3.to_double() * t;
        if (chart == Chart::Disc) {
            double n = std::sqrt(a * a + b * b + c * c);
            double x = a / n, y = b / n, z = c / n;
            if (z < 0) { x = -x; y = -y; }
            out.push_back({x, y, true});
        } else if (c != 0) {
            out.push_back({a / c, b / c, true});
        } else {
            out.push_back({0, 0, false});
        }
    }
    out.push_back(map_point(chart, to));
}

struct Writer {
    std::ostream& os;
    const RenderSpec& spec;
    double sx, sy;

    Writer(std::ostream& o, const RenderSpec& s) : os(o), spec(s) {
        sx = spec.pixels / (spec.x1 - spec.x0);
        sy = spec.pixels / (spec.y1 - spec.y0);
    }

    void header() {
        os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
           << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.pixels
           << "\" height=\"" << spec.pixels << "\" viewBox=\"0 0 " << spec.pixels << " "
           << spec.pixels << "\">\n"
           << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
    }

    void footer() { os << "</svg>\n"; }

    double px(double x) const { return (x - spec.x0) * sx; }
    double py(double y) const { return (spec.y1 - y) * sy; }

    void polygon(const std::vector<Pt>& pts, const std::string& fill) {
        int usable = 0;
        for (const auto& p : pts)
            if (p.ok) ++usable;
        if (usable < 3) return;
        os << "<polygon fill=\"" << fill << "\" stroke=\"#333333\" stroke-width=\"0.3\" points=\"";
        char buf[64];
        bool first = true;
        for (const auto& p : pts) {
            if (!p.ok) continue;
            std::snprintf(buf, sizeof buf, "%.3f,%.3f", px(p.x), py(p.y));
            if (!first) os << ' ';
            first = false;
            os << buf;
        }
        os << "\"/>\n";
    }
};

std::uint32_t fnv1a(const std::string& s) {
    std::uint32_t h = 2166136261u;
    for (unsigned char c : s) {
        h ^= c;
        h *= 16777619u;
    }
    return h;
}

std::string hsl_fill(double hue, double sat, double light) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "hsl(%.0f,%.0f%%,%.0f%%)", hue, sat * 100, light * 100);
    return buf;
}

std::string zone_fill(const RenderSpec& spec, int depth, const proj::ProjPoint& soul) {
    if (spec.color_by == ColorBy::Depth)
        return hsl_fill(std::fmod(depth * 47.0 + 120.0, 360.0), 0.65, 0.55);
    return hsl_fill(fnv1a(soul.to_string()) % 360, 0.65, 0.55);
}

// Square zone h_i >= |h_j| + |h_k|: 4-gon through the neighbouring axis
// points.
std::array<Int3, 4> square_corners(int axis) {
    auto unit = [](int i, int s1, int s2, int axis_) {
        Int3 t{0, 0, 0};
        t[axis_] = BigInt(1);
        t[(axis_ + 1) % 3] = BigInt(s1);
        t[(axis_ + 2) % 3] = BigInt(s2);
        (void)i;
        return t;
    };
    return {unit(0, 1, 0, axis), unit(1, 0, 1, axis), unit(2, -1, 0, axis),
            unit(3, 0, -1, axis)};
}

} // namespace

void render_zones(std::ostream& os, const RenderSpec& spec) {
    if (spec.depth > spec.max_depth)
        throw Error(ErrorCode::DepthCapExceeded, "render depth exceeds the configured cap");
    Writer w(os, spec);
    w.header();

    // The three square zones.
    for (int axis = 0; axis < 3; ++axis) {
        auto corners = square_corners(axis);
        std::vector<Pt> pts;
        for (int e = 0; e < 4; ++e)
            sample_edge(spec.chart, corners[e], corners[(e + 1) % 4], pts);
        w.polygon(pts, "#d9d9d9");
    }

    // Sign classes: the positive octant picture for affine charts of the
    // fractal triangle; all four symmetric copies in the disc model.
    std::vector<std::array<int, 3>> signs{{1, 1, 1}};
    if (spec.chart == Chart::Disc)
        signs = {{1, 1, 1}, {1, 1, -1}, {1, -1, 1}, {1, -1, -1}};

    zones::visit_zones_bfs(spec.depth, [&](const zones::ZoneFrame& f) {
        proj::ProjPoint soul(f.soul_rep);
        std::string fill = zone_fill(spec, f.depth, soul);
        for (const auto& sg : signs) {
            std::array<Int3, 3> v;
            for (int i = 0; i < 3; ++i) {
                v[i] = f.zone[i];
                for (int c = 0; c < 3; ++c)
                    if (sg[c] < 0) v[i][c] = -v[i][c];
            }
            std::vector<Pt> pts;
            for (int e = 0; e < 3; ++e) sample_edge(spec.chart, v[e], v[(e + 1) % 3], pts);
            w.polygon(pts, fill);
        }
    });

    w.footer();
}

} // namespace skew46::svg
