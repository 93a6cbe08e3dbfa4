#include "conewright/mesh_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cw {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

const char* kind_tag(MeshVertex::Kind k) {
    switch (k) {
        case MeshVertex::Kind::Finite: return "finite";
        case MeshVertex::Kind::IdealPlanar: return "ideal";
        case MeshVertex::Kind::IdealInf: return "inf";
    }
    return "finite";
}

MeshVertex::Kind kind_from_tag(const std::string& tag) {
    if (tag == "finite") return MeshVertex::Kind::Finite;
    if (tag == "ideal") return MeshVertex::Kind::IdealPlanar;
    if (tag == "inf") return MeshVertex::Kind::IdealInf;
    throw std::invalid_argument("unknown vertex kind in mesh sidecar: " + tag);
}

}  // namespace

MeshExportInfo write_obj(const SurfaceMesh& mesh, const std::string& path, double clip_height,
                         const nlohmann::ordered_json& extra) {
    if (!(clip_height > 0)) throw std::invalid_argument("clip height must be positive");
    std::ofstream obj(path, std::ios::binary);
    if (!obj) throw std::invalid_argument("cannot write file: " + path);

    obj << "# triangulated boundary surface; heights in the third column\n";
    for (const auto& v : mesh.vertices) {
        double x = v.x, y = v.y, z = v.h;
        if (v.kind == MeshVertex::Kind::IdealInf) {
            x = 0.0;
            y = 0.0;
            z = clip_height;
        } else if (v.kind == MeshVertex::Kind::IdealPlanar) {
            z = 1.0 / clip_height;
        }
        obj << "v " << fmt(x) << ' ' << fmt(y) << ' ' << fmt(z) << '\n';
    }
    for (const auto& t : mesh.triangles)
        obj << "f " << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1 << '\n';
    obj.close();
    if (!obj) throw std::runtime_error("failed writing file: " + path);

    nlohmann::ordered_json side;
    side["schema"] = "mesh/1";
    side["clip_height"] = clip_height;
    nlohmann::ordered_json kinds = nlohmann::ordered_json::array();
    for (const auto& v : mesh.vertices) kinds.push_back(kind_tag(v.kind));
    side["vertex_kinds"] = kinds;
    for (const auto& [key, value] : extra.items()) side[key] = value;

    MeshExportInfo info;
    info.obj_path = path;
    info.sidecar_path = path + ".json";
    info.vertices = static_cast<int>(mesh.vertices.size());
    info.triangles = static_cast<int>(mesh.triangles.size());

    std::ofstream sc(info.sidecar_path, std::ios::binary);
    if (!sc) throw std::invalid_argument("cannot write file: " + info.sidecar_path);
    sc << side.dump(2) << '\n';
    sc.close();
    if (!sc) throw std::runtime_error("failed writing file: " + info.sidecar_path);
    return info;
}

SurfaceMesh read_obj(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot read file: " + path);
    SurfaceMesh mesh;
    std::string line;
    int lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string tag;
        if (!(ss >> tag)) continue;
        if (tag == "v") {
            double x = 0, y = 0, z = 0;
            if (!(ss >> x >> y >> z))
                throw std::invalid_argument("malformed vertex on line " + std::to_string(lineno));
            mesh.vertices.push_back(MeshVertex::finite(x, y, z));
        } else if (tag == "f") {
            std::vector<int> idx;
            std::string token;
            while (ss >> token) {
                const auto slash = token.find('/');
                if (slash != std::string::npos) token = token.substr(0, slash);
                int i = 0;
                try {
                    i = std::stoi(token);
                } catch (const std::exception&) {
                    throw std::invalid_argument("malformed face on line " + std::to_string(lineno));
                }
                if (i <= 0 || i > static_cast<int>(mesh.vertices.size()))
                    throw std::invalid_argument("face index out of range on line " + std::to_string(lineno));
                idx.push_back(i - 1);
            }
            if (idx.size() != 3)
                throw std::invalid_argument("only triangular faces are supported (line " +
                                            std::to_string(lineno) + ")");
            mesh.triangles.push_back({idx[0], idx[1], idx[2]});
        }
    }

    std::ifstream sc(path + ".json");
    if (sc) {
        nlohmann::json side;
        try {
            sc >> side;
        } catch (const nlohmann::json::parse_error& e) {
            throw std::invalid_argument(std::string("malformed mesh sidecar: ") + e.what());
        }
        if (side.contains("vertex_kinds")) {
            const auto& kinds = side.at("vertex_kinds");
            if (kinds.size() != mesh.vertices.size())
                throw std::invalid_argument("mesh sidecar vertex count does not match the OBJ file");
            for (size_t i = 0; i < mesh.vertices.size(); ++i) {
                const MeshVertex::Kind k = kind_from_tag(kinds.at(i).get<std::string>());
                mesh.vertices[i].kind = k;
                if (k != MeshVertex::Kind::Finite) mesh.vertices[i].h = 0.0;
                if (k == MeshVertex::Kind::IdealInf) {
                    mesh.vertices[i].x = 0.0;
                    mesh.vertices[i].y = 0.0;
                }
            }
        }
    }
    return mesh;
}

}  // namespace cw
