#include "skew46/io.hpp"

#include "skew46/fractal.hpp"

#include <json.hpp>

#include <ostream>
#include <sstream>

namespace skew46::io {

using nlohmann::json;

namespace {

json triple_json(const proj::Int3& t) {
    return json::array({t.h1.to_string(), t.h2.to_string(), t.h3.to_string()});
}

std::string rat_str(const Rational& r) { return r.to_string(); }

} // namespace

void write_zones_json(std::ostream& os, int depth) {
    os << "{\"format_version\":" << kFormatVersion << ",\"surface\":\"{4,6|4}\",\"depth\":"
       << depth << ",\"zones\":[";
    bool first = true;
    zones::visit_zones_bfs(depth, [&](const zones::ZoneFrame& f) {
        json rec;
        rec["word"] = *f.word;
        rec["depth"] = f.depth;
        rec["soul"] = triple_json(proj::ProjPoint(f.soul_rep).coords());
        json verts = json::array();
        for (const auto& v : f.zone) verts.push_back(triple_json(proj::ProjPoint(v).coords()));
        rec["vertices"] = verts;
        if (!first) os << ",";
        first = false;
        os << rec.dump();
    });
    os << "]}";
}

void write_zones_csv(std::ostream& os, int depth) {
    os << "# format_version " << kFormatVersion << "\n";
    os << "depth,soul,area,perimeter,inradius\n";
    char buf[64];
    zones::visit_zones_bfs(depth, [&](const zones::ZoneFrame& f) {
        zones::ZoneMetrics m = zones::zone_metrics_frame(f);
        os << f.depth << ',' << proj::ProjPoint(f.soul_rep).to_string() << ','
           << rat_str(m.area) << ',';
        std::snprintf(buf, sizeof buf, "%.12g,%.12g\n", m.perimeter, m.inradius);
        os << buf;
    });
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
    os << "# format_version " << kFormatVersion << "\n";
    os << "m,n,N,exact_soul,traced_soul,status\n";
    for (const auto& r : rows) {
        os << r.m << ',' << r.n << ',' << r.N << ',' << r.exact_soul << ','
           << r.traced_soul << ',' << r.status << '\n';
    }
}

void write_dimension_csv(std::ostream& os, const fractal::DimensionSeries& s) {
    os << "# format_version " << kFormatVersion << "\n";
    os << "n,scale,value,estimate\n";
    char buf[128];
    for (const auto& e : s.entries) {
        std::snprintf(buf, sizeof buf, "%d,%.12g,%.12g,%.12g\n", e.n, e.scale, e.value,
                      e.est_quotient);
        os << buf;
    }
}

std::string soul_set_string(const zones::SoulSet& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += "|";
        out += s[i].to_string();
    }
    return out;
}

namespace {

json rat3_json(const proj::Rat3& v) {
    return json::array({v.x.to_string(), v.y.to_string(), v.z.to_string()});
}

} // namespace

std::string trace_json(const section::Direction& dir, const section::TraceResult& res,
                       bool with_segments) {
    json j;
    j["format_version"] = kFormatVersion;
    j["direction"] = {dir.m, dir.n, dir.N};
    switch (res.status) {
        case section::TraceStatus::Ok: j["status"] = "ok"; break;
        case section::TraceStatus::SaddleConnection: j["status"] = "saddle_connection"; break;
        case section::TraceStatus::StepLimit: j["status"] = "step_limit"; break;
    }
    if (res.status == section::TraceStatus::SaddleConnection) {
        j["saddle_vertex_quarters"] = res.sc_vertex;
        j["from_ray"] = res.sc_ray;
        return j.dump(2);
    }
    if (res.status == section::TraceStatus::Ok) {
        json loops = json::array();
        for (const auto& l : res.loops) {
            json lj;
            lj["start_ray"] = l.start_ray;
            lj["end_ray"] = l.end_ray;
            lj["class"] = l.displacement;
            lj["intersections_b"] = l.crossings;
            lj["segments"] = l.segment_count;
            if (with_segments) {
                json segs = json::array();
                for (const auto& s : l.segments) {
                    json sj;
                    sj["face"] = s.face;
                    sj["lattice"] = s.lattice;
                    sj["entry"] = rat3_json(s.entry);
                    sj["exit"] = rat3_json(s.exit);
                    segs.push_back(sj);
                }
                lj["points"] = segs;
            }
            loops.push_back(lj);
        }
        j["loops"] = loops;
    }
    return j.dump(2);
}

std::string mesh_json() {
    const surf::SurfaceMesh& m = surf::build_surface();
    json j;
    j["format_version"] = kFormatVersion;
    j["surface"] = "{4,6|4}";
    json faces = json::array();
    for (const auto& f : m.faces) {
        json fj;
        fj["id"] = f.id;
        fj["axis"] = f.axis;
        fj["normal_sign"] = f.normal_sign;
        json corners = json::array();
        for (const auto& c : surf::face_corners4(f)) {
            corners.push_back(json::array({Rational(c[0], 4).to_string(),
                                           Rational(c[1], 4).to_string(),
                                           Rational(c[2], 4).to_string()}));
        }
        fj["corners"] = corners;
        faces.push_back(fj);
    }
    j["faces"] = faces;
    json verts = json::array();
    for (const auto& v : m.vertices4)
        verts.push_back(json::array({Rational(v[0], 4).to_string(),
                                     Rational(v[1], 4).to_string(),
                                     Rational(v[2], 4).to_string()}));
    j["vertices"] = verts;
    j["edge_count"] = m.edges.size();
    return j.dump(2);
}

} // namespace skew46::io
