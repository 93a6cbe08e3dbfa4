// Python bindings: thin wrappers over the C++ core.  Structured results are
// returned as JSON text (stable key order, shortest-round-trip numbers) and
// decoded on the Python side, so both languages report identical values.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <string>

#include "conewright/gluing.hpp"
#include "conewright/json_io.hpp"
#include "conewright/lobachevsky.hpp"
#include "conewright/volume.hpp"

namespace py = pybind11;
using namespace cw;

namespace {

BParams make_b(const std::array<double, 4>& q, double t) { return BParams(q, t); }

std::string build_geometry_json(const std::array<double, 4>& q, double t) {
    return to_json(build_geometry(make_b(q, t))).dump();
}

std::array<double, 4> angles_of(const std::array<double, 4>& q, double t) {
    return angles_from_b(make_b(q, t)).alpha;
}

py::tuple b_of_angles(const std::array<double, 4>& alpha) {
    AngleParams a;
    a.alpha = alpha;
    const BParams b = b_from_angles(a);
    return py::make_tuple(b.q, b.t);
}

double volume_of(const std::array<double, 4>& q, double t) {
    return structure_volume(make_b(q, t)).value;
}

double sphere_volume(double radius, int refinement) {
    return enclosed_volume(geodesic_sphere_mesh(radius, refinement)).value;
}

std::string schlafli_json(const std::array<double, 4>& q0, double t0,
                          const std::array<double, 4>& q1, double t1, int steps) {
    return to_json(schlafli_check(make_b(q0, t0), make_b(q1, t1), steps)).dump();
}

std::string check_weave4_json(const std::array<double, 4>& q, double t) {
    const TrapezohedronGeometry g = build_geometry(make_b(q, t));
    ojson arr = ojson::array();
    for (const auto& rep : check_all_edges(builtin_weave4(), g)) arr.push_back(to_json(rep));
    return arr.dump();
}

std::string classify_json(const std::array<double, 8>& m) {
    const Isometry g(complexd(m[0], m[1]), complexd(m[2], m[3]), complexd(m[4], m[5]),
                     complexd(m[6], m[7]));
    return to_json(classify(g)).dump();
}

std::string lift_check_json(const std::string& rep_text) {
    const RepInput in = rep_from_json(nlohmann::json::parse(rep_text));
    ojson out;
    out["verified"] = verify_presentation(in.pres, in.rep);
    out["lift"] = to_json(lift_obstruction(in.pres, in.rep));
    return out.dump();
}

std::string cone_check_json(const std::string& rep_text) {
    const RepInput in = rep_from_json(nlohmann::json::parse(rep_text));
    if (in.mu.empty() || in.lambda.empty())
        throw std::invalid_argument("representation must name mu and lambda");
    return to_json(cone_conditions(in.rep.images.at(in.mu), in.rep.images.at(in.lambda))).dump();
}

std::string framing_group_json(const std::string& handles_text) {
    const HandleData h = handles_from_json(nlohmann::json::parse(handles_text));
    return to_json(framing_group(h)).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "hyperbolic polyhedra: volumes, gluings, holonomy and framing checks";

    m.def("lobachevsky", &lobachevsky, py::arg("theta"),
          "The odd pi-periodic clover-area function.");
    m.def("build_geometry_json", &build_geometry_json, py::arg("q"), py::arg("t"),
          "Full derived geometry of the shape, as JSON text.");
    m.def("angles_from_b", &angles_of, py::arg("q"), py::arg("t"),
          "The four cone-edge dihedral angles.");
    m.def("b_from_angles", &b_of_angles, py::arg("alpha"),
          "Inverse of angles_from_b: returns (q, t).");
    m.def("structure_volume", &volume_of, py::arg("q"), py::arg("t"),
          "Hyperbolic volume enclosed by the shape's boundary.");
    m.def("sphere_volume", &sphere_volume, py::arg("radius"), py::arg("refinement") = 3,
          "Volume of a triangulated geodesic sphere.");
    m.def("schlafli_json", &schlafli_json, py::arg("q0"), py::arg("t0"), py::arg("q1"),
          py::arg("t1"), py::arg("steps") = 1000,
          "First-variation check along a parameter path, as JSON text.");
    m.def("check_weave4_json", &check_weave4_json, py::arg("q"), py::arg("t"),
          "Edge-cycle reports of the shipped four-copy gluing, as JSON text.");
    m.def("classify_json", &classify_json, py::arg("matrix"),
          "Conjugacy class of a matrix given as eight reals, as JSON text.");
    m.def("lift_check_json", &lift_check_json, py::arg("rep_json"),
          "Relator verification plus the sign-lift decision, as JSON text.");
    m.def("cone_check_json", &cone_check_json, py::arg("rep_json"),
          "Cone-pair / cusp classification of the named peripheral pair.");
    m.def("framing_group_json", &framing_group_json, py::arg("handles_json"),
          "Structure of the unobstructed correction group, as JSON text.");
}
