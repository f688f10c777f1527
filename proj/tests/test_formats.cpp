#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skew46/io.hpp"
#include "skew46/svg.hpp"

#include <json.hpp>

#include <sstream>

using namespace skew46;
using nlohmann::json;

TEST_CASE("zone json records") {
    std::ostringstream os;
    io::write_zones_json(os, 2);
    json j = json::parse(os.str());
    CHECK(j["format_version"] == 1);
    CHECK(j["zones"].size() == 13);
    const auto& root = j["zones"][0];
    CHECK(root["depth"] == 0);
    CHECK(root["word"].empty());
    CHECK(root["soul"] == json::array({"1", "1", "1"}));
    CHECK(root["vertices"].size() == 3);
    // breadth-first: depths are nondecreasing
    int prev = 0;
    for (const auto& rec : j["zones"]) {
        int d = rec["depth"];
        CHECK(d >= prev);
        prev = d;
        CHECK(rec["word"].size() == static_cast<std::size_t>(d));
    }
}

TEST_CASE("zone csv single row at depth 0") {
    std::ostringstream os;
    io::write_zones_csv(os, 0);
    std::string s = os.str();
    CHECK(s.find("# format_version 1\ndepth,soul,area,perimeter,inradius\n") == 0);
    CHECK(s.find("0,1:1:1,1/8,") != std::string::npos);
    CHECK(std::count(s.begin(), s.end(), '\n') == 3);
}

TEST_CASE("deterministic output") {
    std::ostringstream a, b;
    io::write_zones_json(a, 3);
    io::write_zones_json(b, 3);
    CHECK(a.str() == b.str());

    svg::RenderSpec spec = svg::RenderSpec::for_chart(proj::Chart::Disc, 1);
    std::ostringstream sa, sb;
    svg::render_zones(sa, spec);
    svg::render_zones(sb, spec);
    CHECK(sa.str() == sb.str());
}

TEST_CASE("disc svg at depth 0 shows three squares and four central triangles") {
    svg::RenderSpec spec = svg::RenderSpec::for_chart(proj::Chart::Disc, 0);
    std::ostringstream os;
    svg::render_zones(os, spec);
    std::string s = os.str();
    std::size_t count = 0, pos = 0;
    while ((pos = s.find("<polygon", pos)) != std::string::npos) {
        ++count;
        pos += 8;
    }
    CHECK(count == 7);
    CHECK(s.find("<svg") != std::string::npos);
    CHECK(s.rfind("</svg>") != std::string::npos);
}

TEST_CASE("depth cap is enforced") {
    svg::RenderSpec spec = svg::RenderSpec::for_chart(proj::Chart::Z1, 13);
    spec.max_depth = 12;
    std::ostringstream os;
    CHECK_THROWS_AS(svg::render_zones(os, spec), Error);
}

TEST_CASE("trace json") {
    section::Direction d(1, 1, 4);
    section::TraceResult tr = section::trace_critical_loops(d);
    std::string s = io::trace_json(d, tr, false);
    json j = json::parse(s);
    CHECK(j["status"] == "ok");
    CHECK(j["loops"].size() == 3);
    CHECK(j["direction"] == json::array({1, 1, 4}));
}

TEST_CASE("mesh json") {
    json j = json::parse(io::mesh_json());
    CHECK(j["faces"].size() == 12);
    CHECK(j["edge_count"] == 24);
    CHECK(j["vertices"].size() == 8);
    CHECK(j["faces"][0]["corners"].size() == 4);
}

TEST_CASE("sweep and dimension csv shapes") {
    std::vector<io::SweepRow> rows{{3, 2, 7, "3:2:7", "3:2:7", "ok"}};
    std::ostringstream os;
    io::write_sweep_csv(os, rows);
    CHECK(os.str() ==
          "# format_version 1\nm,n,N,exact_soul,traced_soul,status\n3,2,7,3:2:7,3:2:7,ok\n");

    fractal::DimensionSeries s;
    s.entries.push_back({1, 0.5, 3.0, 1.58, 1.58});
    std::ostringstream od;
    io::write_dimension_csv(od, s);
    CHECK(od.str().find("# format_version 1\nn,scale,value,estimate\n1,") == 0);
}

TEST_CASE("soul set rendering") {
    zones::SoulSet s{proj::ProjPoint(1, 0, 0), proj::ProjPoint(1, 1, 1)};
    CHECK(io::soul_set_string(s) == "1:0:0|1:1:1");
}
