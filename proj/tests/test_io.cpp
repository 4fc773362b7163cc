#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "contig/distance.hpp"
#include "contig/io.hpp"

using namespace contig;

namespace {
const std::string kData = CONTIG_DATA_DIR;
}

TEST_CASE("parse_complex_text on the figure files") {
    Complex k = parse_complex_text("0,1\n0,2\n1,2\n");
    CHECK(k.vertex_count() == 3);
    CHECK(k.face_count() == 6);

    Complex point = parse_complex_text("a\n");
    CHECK(point.vertex_count() == 1);

    // the redundant facet line is absorbed
    Complex edge = parse_complex_text("0,1\n1\n");
    CHECK(edge.facet_count() == 1);

    // comments and blank lines
    Complex commented = parse_complex_text("# triangle\n\n0,1 # an edge\n0,2\n1,2\n");
    CHECK(commented == k);
}

TEST_CASE("parse errors carry line numbers") {
    try {
        parse_complex_text("0,1\n0,,2\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
    CHECK_THROWS_AS(parse_complex_text("# nothing\n"), Error);
    try {
        Complex k = parse_complex_text("0,1\n");
        parse_map_text("0 - 1\n", k, k);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
    }
}

TEST_CASE("map parsing matches the figure maps") {
    Complex k = parse_complex_file(kData + "/fig32.cx");
    SimplicialMap phi = parse_map_file(kData + "/fig32_phi.map", k, k);
    CHECK(phi.apply(0) == 1);
    CHECK(phi.apply(1) == 2);
    CHECK(phi.apply(2) == 0);

    SimplicialMap c0 = parse_map_text("0 -> 0\n1 -> 0\n2 -> 0\n", k, k);
    CHECK(c0 == SimplicialMap::constant(k, k, 0));

    // totality is enforced
    CHECK_THROWS_AS(parse_map_text("0 -> 0\n1 -> 0\n", k, k), Error);
    // and simpliciality, with a witness
    Complex two = parse_complex_text("a\nb\n");
    CHECK_THROWS_AS(parse_map_text("0 -> a\n1 -> a\n2 -> b\n", k, two), NotSimplicialError);
}

TEST_CASE("round trip is byte identical for canonical files") {
    for (const std::string name : {"fig31.cx", "fig32.cx", "fig33.cx"}) {
        Complex k = parse_complex_file(kData + "/" + name);
        std::string once = emit_complex_text(k);
        CHECK(emit_complex_text(parse_complex_text(once)) == once);
    }
    Complex k = parse_complex_file(kData + "/fig32.cx");
    SimplicialMap phi = parse_map_file(kData + "/fig32_phi.map", k, k);
    std::string once = emit_map_text(phi);
    CHECK(emit_map_text(parse_map_text(once, k, k)) == once);
}

TEST_CASE("bundled figure data loads into the paper values") {
    Complex fig31 = parse_complex_file(kData + "/fig31.cx");
    CHECK(fig31.vertex_count() == 5);
    CHECK(fig31.face_count() == 15);

    Complex fig33 = parse_complex_file(kData + "/fig33.cx");
    CHECK(fig33.vertex_count() == 6);
    CHECK(fig33.facet_count() == 7);
}

TEST_CASE("distance report JSON shape") {
    Complex k = parse_complex_file(kData + "/fig32.cx");
    auto id = SimplicialMap::identity(k);
    auto c0 = SimplicialMap::constant(k, k, 0);
    auto phi = parse_map_file(kData + "/fig32_phi.map", k, k);
    DistanceReport r = contiguity_distance({id, c0, phi});
    nlohmann::json j = distance_report_json(r);
    CHECK(j["value"] == 1);
    CHECK(j["mode"] == "all");
    CHECK(j["pieces"].is_array());
    CHECK(j["pieces"].size() == 2);
    CHECK(j["certificates"].size() == 2);
    CHECK(j["stats"]["budget_hit"] == false);

    DistanceReport inf = contiguity_distance(
        {SimplicialMap::constant(parse_complex_text("a\nb\n"), parse_complex_text("a\nb\n"), 0),
         SimplicialMap::constant(parse_complex_text("a\nb\n"), parse_complex_text("a\nb\n"), 1)});
    CHECK(distance_report_json(inf)["value"] == "infinite");
}

TEST_CASE("error JSON carries the typed payloads") {
    try {
        parse_complex_text("0,1\n,\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        nlohmann::json j = error_json(e);
        CHECK(j["error"] == "ParseError");
        CHECK(j["line"] == 2);
    }
}
