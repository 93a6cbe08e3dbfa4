#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "conewright/json_io.hpp"
#include "conewright/mesh_io.hpp"
#include "conewright/volume.hpp"

using namespace cw;

namespace {

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("geometry serialization is repeatable byte for byte") {
    const TrapezohedronGeometry g = build_geometry(BParams({1.3, 0.7, 1.1, 1.0 / 1.001}, 1.9));
    const std::string once = to_json(g).dump(2);
    const std::string twice = to_json(build_geometry(BParams({1.3, 0.7, 1.1, 1.0 / 1.001}, 1.9))).dump(2);
    CHECK(once == twice);
    // stable key order: schema tag leads
    CHECK(once.find("\"schema\"") < once.find("\"b\""));
    const auto parsed = nlohmann::json::parse(once);
    CHECK(parsed.at("schema") == "geometry/1");
    CHECK(parsed.at("P").size() == 4);
    CHECK(parsed.at("alpha").size() == 4);
    CHECK(parsed.at("holed").size() == 4);
}

TEST_CASE("shape parameters round trip through JSON") {
    const BParams b({0.8, 1.25, 1.0, 1.0}, 2.2);
    const ojson j = to_json(b);
    const BParams back = bparams_from_json(nlohmann::json::parse(j.dump()));
    for (int i = 0; i < 4; ++i) CHECK(back.q[i] == doctest::Approx(b.q[i]).epsilon(1e-15));
    CHECK(back.t == doctest::Approx(b.t).epsilon(1e-15));

    CHECK_THROWS_AS(bparams_from_json(nlohmann::json::parse(R"({"q": [1, 1, 1], "t": 1})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(bparams_from_json(nlohmann::json::parse(R"({"schema": "geometry/1", "q": [1,1,1,1], "t": 1})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(bparams_from_json(nlohmann::json::parse(R"({"t": 1})")), std::invalid_argument);
}

TEST_CASE("angle parameters parse and validate") {
    const AngleParams a = angleparams_from_json(nlohmann::json::parse(R"({"alpha": [1.0, 1.5, 2.0, 0.9]})"));
    CHECK(a.alpha[2] == 2.0);
    CHECK_THROWS(angleparams_from_json(nlohmann::json::parse(R"({"alpha": [1.0]})")));
}

TEST_CASE("handle data parses from JSON") {
    const char* text = R"({
        "schema": "handles/1",
        "n": 2, "m": 1, "r": 1,
        "a": [[3, -1]],
        "c": [[1]]
    })";
    const HandleData h = handles_from_json(nlohmann::json::parse(text));
    CHECK(h.n == 2);
    CHECK(h.a[0][1] == -1);
    CHECK(h.c[0][0] == 1);
    const ojson out = to_json(h);
    CHECK(out.at("schema") == "handles/1");
}

TEST_CASE("representation input: floating and exact paths") {
    const char* text = R"({
        "schema": "rep/1",
        "generators": ["a", "b"],
        "relators": [],
        "images": {
            "a": [0, 1, 0, 0, 0, 0, 0, -1],
            "b": [1, 0, 1, 0, -2, 0, -1, 0]
        },
        "exact": true,
        "mu": "a",
        "lambda": "b"
    })";
    const RepInput in = rep_from_json(nlohmann::json::parse(text));
    CHECK(in.rep.exact);
    CHECK(in.mu == "a");
    CHECK(in.lambda == "b");
    CHECK(in.rep.exact_images.at("a").a == GaussInt{0, 1});
    CHECK(in.rep.images.count("a") == 1);

    // non-unit determinant is rejected on the exact path
    const char* bad = R"({
        "generators": ["a"],
        "relators": [],
        "images": {"a": [2, 0, 0, 0, 0, 0, 1, 0]},
        "exact": true
    })";
    CHECK_THROWS_AS(rep_from_json(nlohmann::json::parse(bad)), std::invalid_argument);

    // relators referencing unknown generators are rejected
    const char* orphan = R"({
        "generators": ["a"],
        "relators": [[["q", 1]]],
        "images": {"a": [1, 0, 0, 0, 0, 0, 1, 0]}
    })";
    CHECK_THROWS_AS(rep_from_json(nlohmann::json::parse(orphan)), std::invalid_argument);
}

TEST_CASE("path input parses with default step count") {
    const char* text = R"({
        "schema": "path/1",
        "from": {"q": [1, 1, 1, 1], "t": 0.5},
        "to":   {"q": [1, 1, 1, 1], "t": 1.5}
    })";
    const PathInput p = path_from_json(nlohmann::json::parse(text));
    CHECK(p.steps == 1000);
    CHECK(p.from.t == 0.5);
    CHECK(p.to.t == 1.5);
}

TEST_CASE("OBJ export and import round trip the mesh") {
    const SurfaceMesh mesh = boundary_mesh(build_geometry(BParams({1, 1, 1, 1}, 0.9)));
    const auto obj = temp_path("cw_test_mesh.obj");
    const MeshExportInfo info = write_obj(mesh, obj.string(), 12.0);
    CHECK(info.vertices == static_cast<int>(mesh.vertices.size()));
    CHECK(info.triangles == static_cast<int>(mesh.triangles.size()));
    CHECK(std::filesystem::exists(info.obj_path));
    CHECK(std::filesystem::exists(info.sidecar_path));

    const SurfaceMesh back = read_obj(obj.string());
    REQUIRE(back.vertices.size() == mesh.vertices.size());
    REQUIRE(back.triangles.size() == mesh.triangles.size());
    for (size_t i = 0; i < mesh.vertices.size(); ++i)
        CHECK(back.vertices[i].kind == mesh.vertices[i].kind);
    const double v0 = enclosed_volume(mesh).value;
    const double v1 = enclosed_volume(back).value;
    CHECK(v1 == doctest::Approx(v0).epsilon(1e-12));

    // sidecar carries extra metadata verbatim
    std::ifstream side(info.sidecar_path);
    const auto sj = nlohmann::json::parse(side);
    CHECK(sj.at("schema") == "mesh/1");
    CHECK(sj.at("clip_height") == 12.0);

    std::filesystem::remove(info.obj_path);
    std::filesystem::remove(info.sidecar_path);
}

TEST_CASE("OBJ import without a sidecar treats all vertices as finite") {
    const auto obj = temp_path("cw_test_plain.obj");
    {
        std::ofstream out(obj);
        out << "v 0 0 1\nv 1 0 1\nv 0 1 1\nf 1 2 3\n";
    }
    const SurfaceMesh m = read_obj(obj.string());
    REQUIRE(m.vertices.size() == 3);
    CHECK(m.vertices[0].kind == MeshVertex::Kind::Finite);
    CHECK(m.vertices[1].x == 1.0);
    REQUIRE(m.triangles.size() == 1);
    CHECK(m.triangles[0] == std::array<int, 3>{0, 1, 2});
    std::filesystem::remove(obj);

    CHECK_THROWS(read_obj(temp_path("cw_missing_file.obj").string()));
}

TEST_CASE("text reader loads files") {
    const auto p = temp_path("cw_test_text.json");
    {
        std::ofstream out(p);
        out << "{\"q\": [1,1,1,1], \"t\": 1}";
    }
    const std::string text = read_text_file_or_stdin(p.string());
    CHECK(bparams_from_json(nlohmann::json::parse(text)).t == 1.0);
    std::filesystem::remove(p);
    CHECK_THROWS(read_text_file_or_stdin(temp_path("cw_absent.json").string()));
}

TEST_CASE("isometry and verdict serialization shapes") {
    const Isometry g(1.0, complexd(0.5, -2.0), 0.0, 1.0);
    const ojson j = to_json(g);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 8);
    CHECK(j[2] == 0.5);
    CHECK(j[3] == -2.0);

    ConeVerdict v;
    v.kind = ConeVerdict::Kind::ParabolicRankTwo;
    const ojson vj = to_json(v);
    CHECK(vj.at("kind") == "parabolic-rank-two");
}
