#pragma once

// Wavefront OBJ export/import for boundary meshes, with a JSON sidecar
// ("schema": "mesh/1", written next to the OBJ as <path>.json) recording
// which vertices are ideal so a round trip preserves them exactly.  For
// display purposes the infinite vertex is exported at (0, 0, clip_height)
// and planar ideal vertices are lifted to height 1/clip_height.

#include <json.hpp>

#include <string>

#include "conewright/polyhedron.hpp"

namespace cw {

struct MeshExportInfo {
    std::string obj_path;
    std::string sidecar_path;
    int vertices = 0;
    int triangles = 0;
};

MeshExportInfo write_obj(const SurfaceMesh& mesh, const std::string& path, double clip_height = 10.0,
                         const nlohmann::ordered_json& extra = nlohmann::ordered_json::object());

// Reads vertices and triangular faces; restores ideal vertex kinds from the
// sidecar when one is present, otherwise every vertex is finite with height
// taken from the third coordinate.
SurfaceMesh read_obj(const std::string& path);

}  // namespace cw
