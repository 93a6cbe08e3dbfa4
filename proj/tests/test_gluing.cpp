#include <doctest.h>

#include <cmath>
#include <random>

#include "conewright/gluing.hpp"

using namespace cw;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("shipped four-copy gluing: shape of the data") {
    const GluingSpec& w = builtin_weave4();
    CHECK(w.copies == 4);
    REQUIRE(w.mirrored.size() == 4);
    CHECK(!w.mirrored[0]);
    CHECK(!w.mirrored[1]);
    CHECK(w.mirrored[2]);
    CHECK(w.mirrored[3]);
    CHECK(w.faces.size() == 8);
    CHECK(w.pairings.size() == 16);
    CHECK(w.edge_cycles.size() == 20);
    CHECK(w.meridians.size() == 4);
    CHECK(w.longitudes.size() == 4);
    int cone = 0, identity = 0;
    for (const auto& e : w.edge_cycles) (e.identity_target ? identity : cone)++;
    CHECK(cone == 8);
    CHECK(identity == 12);
}

TEST_CASE("anchor resolution: named, mirrored, literal") {
    const TrapezohedronGeometry g = build_geometry(BParams({1.4, 0.9, 0.8, 1.0 / 1.008}, 1.2));
    const BPoint p1 = resolve_anchor(g, "P1", false);
    CHECK(std::abs(p1.z - g.P[0]) < 1e-15);
    const BPoint p1m = resolve_anchor(g, "P1", true);
    CHECK(std::abs(p1m.z - std::conj(g.P[0])) < 1e-15);
    const BPoint s3 = resolve_anchor(g, "S3", false);
    CHECK(std::abs(s3.z - g.S[2]) < 1e-15);
    CHECK(resolve_anchor(g, "inf", false).inf);
    CHECK(std::abs(resolve_anchor(g, "O", true).z) < 1e-15);
    const BPoint lit = resolve_anchor(g, "0.25,-1.5", false);
    CHECK(lit.z == complexd(0.25, -1.5));
    CHECK_THROWS(resolve_anchor(g, "P5", false));
    CHECK_THROWS(resolve_anchor(g, "banana", false));
}

TEST_CASE("pairing isometries carry their carrier planes") {
    const TrapezohedronGeometry g = build_geometry(BParams({1, 1, 1, 1}, 1.0));
    const GluingSpec& w = builtin_weave4();
    // pairing_isometry itself verifies plane-onto-plane; just exercise all 16
    for (const auto& pr : w.pairings) CHECK_NOTHROW(pairing_isometry(w, g, pr.id));
}

TEST_CASE("edge geodesics land on the claimed carriers") {
    const TrapezohedronGeometry g = build_geometry(BParams({1.2, 1.0, 0.9, 1.0 / 1.08}, 1.1));
    for (int i = 1; i <= 4; ++i) {
        const Geodesic v = edge_geodesic(g, "vertical", i);
        CHECK(v.p1.inf);
        CHECK(std::abs(v.p0.z - g.P[i - 1]) < 1e-14);

        const Geodesic bot = edge_geodesic(g, "bottom", i);
        CHECK(std::abs(bot.p0.z) < 1e-14);
        CHECK(std::abs(bot.p1.z - g.S[i - 1]) < 1e-14);

        const Geodesic cone = edge_geodesic(g, "cone", i);
        // endpoints lie on both the wall line and the dome circle
        CHECK(on_plane_boundary(g.wall[i - 1], cone.p0, 1e-9));
        CHECK(on_plane_boundary(g.wall[i - 1], cone.p1, 1e-9));
        CHECK(on_plane_boundary(g.dome[i - 1], cone.p0, 1e-9));
        CHECK(on_plane_boundary(g.dome[i - 1], cone.p1, 1e-9));

        const Geodesic sl = edge_geodesic(g, "slant", i);
        const int j = i % 4;  // dome shared by walls i-1 and i (0-based j)
        CHECK(on_plane_boundary(g.dome[j], sl.p0, 1e-9));
        CHECK(on_plane_boundary(g.dome[j], sl.p1, 1e-9));
    }
    CHECK_THROWS(edge_geodesic(g, "cone", 5));
    CHECK_THROWS(edge_geodesic(g, "sideways", 1));
}

TEST_CASE("every edge cycle of the shipped gluing closes up") {
    std::mt19937_64 rng(404);
    for (int s = 0; s < 5; ++s) {
        const TrapezohedronGeometry g = build_geometry(random_b_nonholed(rng, 0.15));
        const GluingSpec& w = builtin_weave4();
        const auto reports = check_all_edges(w, g);
        CHECK(reports.size() == 20);
        for (const auto& r : reports) {
            INFO("edge ", r.edge_id);
            CHECK(r.pass);
            CHECK(r.deviation < 1e-9);
            if (!r.identity_target) {
                CHECK(r.cls.kind == IsomClass::Kind::Elliptic);
                CHECK(r.endpoints_fixed);
            }
        }
    }
}

TEST_CASE("cone cycles produce rotation by twice the cone angle") {
    std::mt19937_64 rng(505);
    const BParams b = random_b_nonholed(rng, 0.3);
    const TrapezohedronGeometry g = build_geometry(b);
    const GluingSpec& w = builtin_weave4();
    for (int i = 1; i <= 4; ++i) {
        const EdgeReport r = edge_cycle_composite(w, g, "cone" + std::to_string(i) + "a");
        CHECK(r.cls.kind == IsomClass::Kind::Elliptic);
        const double twice = 2.0 * g.alpha[i - 1];
        const double folded = twice <= kPi ? twice : 2 * kPi - twice;
        CHECK(r.cls.angle == doctest::Approx(folded).epsilon(1e-9));
        // the composite fixes the cone-edge geodesic
        const Geodesic ax = edge_geodesic(g, "cone", i);
        CHECK(boundary_dist(apply_boundary(r.composite, ax.p0), ax.p0) < 1e-9);
        CHECK(boundary_dist(apply_boundary(r.composite, ax.p1), ax.p1) < 1e-9);
    }
}

TEST_CASE("meridian and longitude words commute and share an axis") {
    std::mt19937_64 rng(606);
    const TrapezohedronGeometry g = build_geometry(random_b_nonholed(rng, 0.25));
    const GluingSpec& w = builtin_weave4();
    for (int i = 0; i < 4; ++i) {
        const Isometry mu = holonomy_word(w, g, w.meridians[i].steps);
        const Isometry la = holonomy_word(w, g, w.longitudes[i].steps);
        CHECK(psl_distance(compose(mu, la), compose(la, mu)) < 1e-9);
        CHECK(classify(mu).kind == IsomClass::Kind::Elliptic);
        const IsomClass lc = classify(la);
        CHECK(lc.kind == IsomClass::Kind::Loxodromic);
        // both fix the cone edge of their locus
        const Geodesic ax = edge_geodesic(g, "cone", w.meridians[i].locus);
        for (const Isometry* m : {&mu, &la}) {
            CHECK(boundary_dist(apply_boundary(*m, ax.p0), ax.p0) < 1e-8);
            CHECK(boundary_dist(apply_boundary(*m, ax.p1), ax.p1) < 1e-8);
        }
    }
}

TEST_CASE("wedge gluings compose to rotation by the total angle") {
    const TrapezohedronGeometry ctx = build_geometry(BParams());
    for (int k : {2, 3, 5}) {
        const double theta = 0.7;
        const GluingSpec w = wedge_spec(k, theta);
        std::vector<GluingStep> word;
        for (int j = 0; j < k; ++j) word.push_back({"W" + std::to_string(j), 1});
        const Isometry comp = holonomy_word(w, ctx, word);
        const double raw = std::fmod(k * theta, 2 * kPi);
        const IsomClass cls = classify(comp);
        CHECK(cls.kind == IsomClass::Kind::Elliptic);
        CHECK(cls.angle == doctest::Approx(std::min(raw, 2 * kPi - raw)).epsilon(1e-10));
    }
    CHECK_THROWS(wedge_spec(0, 1.0));
    CHECK_THROWS(wedge_spec(3, 0.0));
    CHECK_THROWS(wedge_spec(3, 2 * kPi));
}

TEST_CASE("word conventions: empty word, inverse step, round trip") {
    const TrapezohedronGeometry g = build_geometry(BParams({1, 1, 1, 1}, 1.0));
    const GluingSpec& w = builtin_weave4();
    CHECK(psl_distance(holonomy_word(w, g, {}), Isometry::identity()) < 1e-15);
    const std::vector<GluingStep> there_and_back = {{"V1a", 1}, {"V1a", -1}};
    CHECK(psl_distance(holonomy_word(w, g, there_and_back), Isometry::identity()) < 1e-12);
    CHECK_THROWS(holonomy_word(w, g, {{"nope", 1}}));
}

TEST_CASE("spec parsing rejects malformed input") {
    CHECK_THROWS_AS(parse_gluing_spec("{"), std::invalid_argument);
    CHECK_THROWS_AS(parse_gluing_spec(R"({"schema": "other/9"})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_gluing_spec(R"({"schema": "gluing/1", "copies": 0})"), std::invalid_argument);
}
