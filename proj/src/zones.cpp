#include "skew46/zones.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace skew46::zones {

Triangle delta() {
    return Triangle{{Int3{1, 1, 0}, Int3{1, 0, 1}, Int3{0, 1, 1}}};
}

namespace {

// Child i of a triangle equals the node composed with psi_i; in terms of
// the vertex sums w_i = v_j + v_k the ordered representatives are
//   child1 = (w2, w1, v3), child2 = (w3, v2, w1), child3 = (v1, w3, w2),
// which keeps node(word) == psi_word(Delta) exact on representatives.
struct DfsVisitor {
    int max_depth;
    const std::function<void(const ZoneFrame&)>* fn;
    int only_depth = -1; // emit all depths when negative
    std::vector<std::uint8_t> word;

    void run(const std::array<Int3, 3>& tri, int depth) {
        std::array<Int3, 3> w{tri[1] + tri[2], tri[2] + tri[0], tri[0] + tri[1]};
        if (only_depth < 0 || depth == only_depth) {
            ZoneFrame f;
            f.word = &word;
            f.depth = depth;
            f.tri = &tri;
            f.zone = w;
            f.soul_rep = tri[0] + tri[1] + tri[2];
            (*fn)(f);
        }
        if (depth >= max_depth || (only_depth >= 0 && depth >= only_depth)) return;
        word.push_back(1);
        run({w[1], w[0], tri[2]}, depth + 1);
        word.back() = 2;
        run({w[2], tri[1], w[0]}, depth + 1);
        word.back() = 3;
        run({tri[0], w[2], w[1]}, depth + 1);
        word.pop_back();
    }
};

} // namespace

void visit_zones(int max_depth, const std::function<void(const ZoneFrame&)>& fn) {
    DfsVisitor v{max_depth, &fn, -1, {}};
    v.run(delta().v, 0);
}

void visit_zones_bfs(int max_depth, const std::function<void(const ZoneFrame&)>& fn) {
    for (int d = 0; d <= max_depth; ++d) {
        DfsVisitor v{max_depth, &fn, d, {}};
        v.run(delta().v, 0);
    }
}

Zone make_zone(const ZoneFrame& f) {
    Zone z;
    z.word = *f.word;
    z.depth = f.depth;
    z.soul = ProjPoint(f.soul_rep);
    for (int i = 0; i < 3; ++i) z.vertices[i] = ProjPoint(f.zone[i]);
    return z;
}

std::vector<Zone> generate_zones(int max_depth) {
    std::vector<Zone> out;
    out.reserve(static_cast<std::size_t>((std::pow(3.0, max_depth + 1) - 1) / 2));
    visit_zones_bfs(max_depth, [&](const ZoneFrame& f) { out.push_back(make_zone(f)); });
    return out;
}

Triangle zone_triangle(std::span<const std::uint8_t> word) {
    Triangle t = delta();
    for (auto& v : t.v) v = proj::apply_word_raw(word, v);
    return t;
}

bool contains_reps(const std::array<Int3, 3>& v, const Int3& p) {
    int s0 = proj::det3_sign(v[0], v[1], p);
    int s1 = proj::det3_sign(v[1], v[2], p);
    int s2 = proj::det3_sign(v[2], v[0], p);
    return (s0 >= 0 && s1 >= 0 && s2 >= 0) || (s0 <= 0 && s1 <= 0 && s2 <= 0);
}

bool contains(const Triangle& t, const ProjPoint& p) {
    return contains_reps(t.v, p.coords());
}

bool contains(const Zone& z, const ProjPoint& p) {
    return contains_reps({z.vertices[0].coords(), z.vertices[1].coords(),
                          z.vertices[2].coords()},
                         p.coords());
}

std::vector<int> square_zones_containing(const ProjPoint& p) {
    const Int3& t = p.coords();
    BigInt a[3] = {t.h1.abs(), t.h2.abs(), t.h3.abs()};
    std::vector<int> out;
    for (int i = 0; i < 3; ++i)
        if (a[i] >= a[(i + 1) % 3] + a[(i + 2) % 3]) out.push_back(i + 1);
    return out;
}

namespace {

Int3 rotate_back(const Int3& t) { return {t.h3, t.h1, t.h2}; }

} // namespace

SoulSet soul_of_direction(const ProjPoint& p) {
    auto [q, g] = proj::symmetry_reduce(p);
    proj::ReductionTrace tr = proj::phi_reduce(q);

    const Int3& t = tr.terminal.coords();
    BigInt sum = t.h1 + t.h2 + t.h3;
    std::vector<Int3> labels;
    for (int i = 0; i < 3; ++i) {
        if (t[i] + t[i] >= sum) {
            Int3 e{0, 0, 0};
            e[i] = BigInt(1);
            labels.push_back(e);
        }
    }

    for (std::size_t k = tr.steps.size(); k-- > 0;) {
        if (tr.steps[k] == proj::ReductionTrace::Step::Subtract) {
            for (auto& l : labels) l = proj::psi_raw(1, l);
        } else {
            for (auto& l : labels) l = rotate_back(l);
        }
    }

    SoulSet out;
    out.reserve(labels.size());
    for (auto& l : labels) out.push_back(ProjPoint(g.apply(l)));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

// int64 triples with __int128 determinant accumulation; valid while
// every entry stays below 2^31, which holds for tree depths <= 16 and
// grid directions far beyond the acceptance ranges.
struct I3 {
    std::int64_t a, b, c;
    friend I3 operator+(const I3& x, const I3& y) { return {x.a + y.a, x.b + y.b, x.c + y.c}; }
};

inline int det3s(const I3& x, const I3& y, const I3& z) {
    __int128 d = static_cast<__int128>(x.a) * (static_cast<__int128>(y.b) * z.c - static_cast<__int128>(y.c) * z.b)
               - static_cast<__int128>(x.b) * (static_cast<__int128>(y.a) * z.c - static_cast<__int128>(y.c) * z.a)
               + static_cast<__int128>(x.c) * (static_cast<__int128>(y.a) * z.b - static_cast<__int128>(y.b) * z.a);
    return d > 0 ? 1 : d < 0 ? -1 : 0;
}

inline bool contains_i64(const I3& v0, const I3& v1, const I3& v2, const I3& p) {
    int s0 = det3s(v0, v1, p);
    int s1 = det3s(v1, v2, p);
    int s2 = det3s(v2, v0, p);
    return (s0 >= 0 && s1 >= 0 && s2 >= 0) || (s0 <= 0 && s1 <= 0 && s2 <= 0);
}

ProjPoint normalize_i64(const I3& t) {
    return ProjPoint(t.a, t.b, t.c);
}

void walk_i64(const I3& t0, const I3& t1, const I3& t2, int depth, int max_depth,
              const I3& p, TreeResolution& res) {
    I3 w0 = t1 + t2, w1 = t2 + t0, w2 = t0 + t1;
    if (contains_i64(w0, w1, w2, p)) {
        res.souls.push_back(normalize_i64(t0 + t1 + t2));
        ++res.zone_hits;
    }
    if (depth >= max_depth) {
        if (contains_i64(w1, w0, t2, p) || contains_i64(w2, t1, w0, p) ||
            contains_i64(t0, w2, w1, p))
            res.resolved = false;
        return;
    }
    if (contains_i64(w1, w0, t2, p)) walk_i64(w1, w0, t2, depth + 1, max_depth, p, res);
    if (contains_i64(w2, t1, w0, p)) walk_i64(w2, t1, w0, depth + 1, max_depth, p, res);
    if (contains_i64(t0, w2, w1, p)) walk_i64(t0, w2, w1, depth + 1, max_depth, p, res);
}

void walk_big(const std::array<Int3, 3>& tri, int depth, int max_depth,
              const Int3& p, TreeResolution& res) {
    std::array<Int3, 3> w{tri[1] + tri[2], tri[2] + tri[0], tri[0] + tri[1]};
    if (contains_reps(w, p)) {
        res.souls.push_back(ProjPoint(tri[0] + tri[1] + tri[2]));
        ++res.zone_hits;
    }
    std::array<Int3, 3> kids[3] = {{w[1], w[0], tri[2]},
                                   {w[2], tri[1], w[0]},
                                   {tri[0], w[2], w[1]}};
    for (auto& kid : kids) {
        if (contains_reps(kid, p)) {
            if (depth >= max_depth)
                res.resolved = false;
            else
                walk_big(kid, depth + 1, max_depth, p, res);
        }
    }
}

} // namespace

TreeResolution resolve_direction_in_tree(const ProjPoint& p, int max_depth) {
    auto [q, g] = proj::symmetry_reduce(p);
    TreeResolution res;
    for (int i : square_zones_containing(q)) {
        Int3 e{0, 0, 0};
        e[i - 1] = BigInt(1);
        res.souls.push_back(ProjPoint(e));
    }
    Triangle d = delta();
    if (contains(d, q)) {
        const Int3& qc = q.coords();
        bool small = max_depth <= 16 && qc.h1.fits_int64() && qc.h2.fits_int64() &&
                     qc.h3.fits_int64() && qc.h1.to_int64() < (1ll << 31) &&
                     qc.h2.to_int64() < (1ll << 31) && qc.h3.to_int64() < (1ll << 31);
        if (small) {
            I3 pi{qc.h1.to_int64(), qc.h2.to_int64(), qc.h3.to_int64()};
            walk_i64({1, 1, 0}, {1, 0, 1}, {0, 1, 1}, 0, max_depth, pi, res);
        } else {
            walk_big(d.v, 0, max_depth, qc, res);
        }
    }
    for (auto& s : res.souls) s = ProjPoint(g.apply(s.coords()));
    std::sort(res.souls.begin(), res.souls.end());
    res.souls.erase(std::unique(res.souls.begin(), res.souls.end()), res.souls.end());
    return res;
}

namespace {

// Primitive area-chart representative with positive last coordinate.
Int3 chart_primitive(const Int3& t) {
    Int3 m = proj::area_chart_triple(t);
    if (m.h3.is_zero())
        throw Error(ErrorCode::DegenerateChart,
                    "zone vertex maps to the line at infinity in the area chart");
    BigInt g = BigInt::gcd(BigInt::gcd(m.h1, m.h2), m.h3);
    m.h1 = m.h1 / g;
    m.h2 = m.h2 / g;
    m.h3 = m.h3 / g;
    if (m.h3.sign() < 0) {
        m.h1 = -m.h1;
        m.h2 = -m.h2;
        m.h3 = -m.h3;
    }
    return m;
}

ZoneMetrics metrics_from_reps(const std::array<Int3, 3>& tri,
                              const std::array<Int3, 3>& zone) {
    std::array<Int3, 3> tz, zz;
    for (int i = 0; i < 3; ++i) {
        tz[i] = chart_primitive(tri[i]);
        zz[i] = chart_primitive(zone[i]);
    }
    ZoneMetrics m;
    m.linf = tz[0].h3 + tz[1].h3 + tz[2].h3;

    BigInt d = proj::det3(zz[0], zz[1], zz[2]);
    if (d.sign() < 0) d = -d;
    m.area = Rational(d, zz[0].h3 * zz[1].h3 * zz[2].h3 * BigInt(2));

    double px[3], py[3];
    for (int i = 0; i < 3; ++i) {
        double z = zz[i].h3.to_double();
        px[i] = zz[i].h1.to_double() / z;
        py[i] = zz[i].h2.to_double() / z;
    }
    double per = 0;
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3;
        per += std::hypot(px[j] - px[i], py[j] - py[i]);
    }
    m.perimeter = per;
    m.inradius = 2.0 * m.area.to_double() / per;
    return m;
}

} // namespace

ZoneMetrics zone_metrics_frame(const ZoneFrame& f) {
    return metrics_from_reps(*f.tri, f.zone);
}

ZoneMetrics zone_metrics(const Zone& z) {
    Triangle t = zone_triangle(z.word);
    std::array<Int3, 3> w{t.v[1] + t.v[2], t.v[2] + t.v[0], t.v[0] + t.v[1]};
    return metrics_from_reps(t.v, w);
}

Rational zone_area_product_form(const ZoneFrame& f) {
    std::array<Int3, 3> tz;
    for (int i = 0; i < 3; ++i) tz[i] = chart_primitive((*f.tri)[i]);
    return Rational(BigInt(1), (tz[0].h3 + tz[1].h3) * (tz[1].h3 + tz[2].h3) *
                                   (tz[2].h3 + tz[0].h3));
}

OuterMetrics delta_chart_metrics() {
    // Delta maps to the affine triangle (0,0), (1,0), (0,1).
    return {0.5, 2.0 + std::sqrt(2.0)};
}

std::vector<ProjPoint> tribonacci_sequence(const std::array<ProjPoint, 3>& seeds, int n) {
    if (seeds[0] == seeds[1] || seeds[1] == seeds[2] || seeds[0] == seeds[2])
        throw Error(ErrorCode::DomainViolation, "tribonacci seeds must be pairwise distinct");
    std::vector<ProjPoint> out;
    out.reserve(static_cast<std::size_t>(std::max(n, 0)));
    for (int i = 0; i < n && i < 3; ++i) out.push_back(seeds[i]);
    while (static_cast<int>(out.size()) < n) {
        std::size_t k = out.size();
        Int3 s = out[k - 1].coords() + out[k - 2].coords() + out[k - 3].coords();
        out.push_back(ProjPoint(std::move(s)));
    }
    return out;
}

EPointEstimate e_point_estimate(std::span<const std::uint8_t> word) {
    bool seen[4] = {false, false, false, false};
    for (auto d : word)
        if (d >= 1 && d <= 3) seen[d] = true;
    if (!(seen[1] && seen[2] && seen[3]))
        throw Error(ErrorCode::PrefixIncomplete,
                    "word prefix must contain each of 1,2,3 for the nested "
                    "triangles to shrink to a point");
    Triangle t = zone_triangle(word);
    std::array<Rational, 3> x, y;
    for (int i = 0; i < 3; ++i) {
        auto [cx, cy] = proj::chart_z1(ProjPoint(t.v[static_cast<std::size_t>(i)]));
        x[static_cast<std::size_t>(i)] = cx;
        y[static_cast<std::size_t>(i)] = cy;
    }
    EPointEstimate e;
    e.x = ((x[0] + x[1] + x[2]) / Rational(3)).to_double();
    e.y = ((y[0] + y[1] + y[2]) / Rational(3)).to_double();
    // Edge lengths from exact differences, so deep nests keep their true
    // tiny diameters instead of double cancellation noise; the rounding
    // of the returned centroid itself is covered by an epsilon floor.
    double diam = 0.0;
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3;
        Rational dx = x[static_cast<std::size_t>(j)] - x[static_cast<std::size_t>(i)];
        Rational dy = y[static_cast<std::size_t>(j)] - y[static_cast<std::size_t>(i)];
        diam = std::max(diam, std::sqrt((dx * dx + dy * dy).to_double()));
    }
    e.error_bound = diam + 8 * std::numeric_limits<double>::epsilon() *
                               (1.0 + std::abs(e.x) + std::abs(e.y));
    return e;
}

} // namespace skew46::zones
