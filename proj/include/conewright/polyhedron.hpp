#pragma once

// A one-parameter family of hyperbolic polyhedra: four vertical walls over an
// axis-aligned rectangle and four hemispheres through the origin, meeting in
// right angles everywhere except along four "cone" edges whose dihedral
// angles are prescribed by the parameters.

#include <array>
#include <random>
#include <vector>

#include "conewright/hypgeo.hpp"

namespace cw {

// Shape parameters (q1..q4, t): side ratios q_i > 0 with product one, and a
// height parameter t >= max_i (q_i - 1/q_i)/2, t >= 0.  The constructor
// renormalizes the product via the geometric mean and validates t.
struct BParams {
    std::array<double, 4> q{1.0, 1.0, 1.0, 1.0};
    double t = 1.0;

    BParams() = default;
    BParams(const std::array<double, 4>& q, double t);

    // Smallest admissible t for given side ratios.
    static double t_min(const std::array<double, 4>& q);
};

// Cone-edge dihedral angles alpha_i = arccos((q_i - t)/sqrt(1 + t^2)),
// each in [0, pi).
struct AngleParams {
    std::array<double, 4> alpha{0, 0, 0, 0};
};

AngleParams angles_from_b(const BParams& b);

// Inverse of angles_from_b: unique (q, t) realizing the given angles.
// Monotone one-dimensional root find; throws when any angle is outside
// [0, pi).
BParams b_from_angles(const AngleParams& a);

// Fully built geometry.  Index arithmetic is mod 4 throughout.
struct TrapezohedronGeometry {
    BParams b;
    double scale = 1.0;

    std::array<double, 4> p{};        // corner scales, p[0] = scale
    std::array<complexd, 4> P{};      // rectangle corners on the boundary
    std::array<complexd, 4> R{};      // hemisphere centers
    std::array<double, 4> rad{};      // hemisphere radii |R[i]|
    std::array<complexd, 4> S{};      // second intersection of circles i, i+1
    std::array<complexd, 4> Q{};      // cone-edge feet: line O-S[i] meets P[i]P[i+1]
    std::array<HPoint, 4> Ptilde{};   // lift of P[i] onto hemisphere i
    std::array<HPoint, 4> Qtilde{};   // lift of Q[i] onto hemisphere i
    std::array<double, 4> alpha{};    // dihedral angle along wall[i] ^ dome[i]
    std::array<bool, 4> holed{};      // cone edge i escapes the wall strip
    std::array<Plane, 4> wall{};      // vertical plane over segment P[i]P[i+1]
    std::array<Plane, 4> dome{};      // hemisphere center R[i], radius rad[i]
};

TrapezohedronGeometry build_geometry(const BParams& b, double scale = 1.0);

// Measured dihedral angles along every edge class, compared to the expected
// values (alpha_i on the cone edges, pi/2 elsewhere).
struct DihedralReport {
    std::array<double, 4> cone_measured{};
    std::array<double, 4> cone_expected{};
    double max_cone_error = 0.0;   // over edges with alpha bounded away from {0, pi}
    double max_right_error = 0.0;  // over wall-wall, wall-dome, dome-dome edges
    int cone_checked = 0;          // cone edges actually measured
};

DihedralReport check_dihedrals(const TrapezohedronGeometry& g);

// Hyperbolic lengths of the four cone edges Ptilde[i] -- Qtilde[i]; an edge
// collapsing to the boundary is flagged ideal and its length is meaningless.
struct EdgeLengths {
    std::array<double, 4> cone{};
    std::array<bool, 4> ideal{};
};

EdgeLengths edge_lengths(const TrapezohedronGeometry& g);

// Triangulated boundary surface.
struct MeshVertex {
    enum class Kind { Finite, IdealPlanar, IdealInf };
    Kind kind = Kind::Finite;
    double x = 0.0, y = 0.0, h = 0.0;  // IdealPlanar: h == 0; IdealInf: unused

    static MeshVertex finite(double x, double y, double h) { return {Kind::Finite, x, y, h}; }
    static MeshVertex ideal(double x, double y) { return {Kind::IdealPlanar, x, y, 0.0}; }
    static MeshVertex infinity() { return {Kind::IdealInf, 0.0, 0.0, 0.0}; }
};

struct SurfaceMesh {
    std::vector<MeshVertex> vertices;
    std::vector<std::array<int, 3>> triangles;  // outward-oriented
};

// 16 outward-oriented triangles covering the boundary: two per vertical wall
// (diagonal from the infinite vertex) and two per hemisphere face (diagonal
// from the origin vertex).
SurfaceMesh boundary_mesh(const TrapezohedronGeometry& g);

// Combinatorial closedness: after identifying coincident vertices and
// discarding collapsed triangles, every edge must be shared by exactly two
// triangles with opposite orientations.
struct MeshCheck {
    bool closed = false;
    bool oriented = false;
    int effective_vertices = 0;
    int effective_edges = 0;
    int effective_triangles = 0;
    int euler_characteristic = 0;
};

MeshCheck validate_mesh(const SurfaceMesh& mesh, double coincide_tol = 1e-12);

// For each vertex, the smallest index of a vertex coincident with it (within
// coincide_tol); used both by the mesh validator and the volume cone sum to
// ignore collapsed triangles.
std::vector<int> coincident_representatives(const SurfaceMesh& mesh, double coincide_tol = 1e-12);

// Uniform double in [0, 1) from the top 53 bits of the generator, so results
// do not depend on the standard library's distribution internals.
double uniform01(std::mt19937_64& rng);

// Seeded sample anywhere in the parameter domain (t strictly above its
// floor); covers both holed and non-holed shapes.
BParams random_b(std::mt19937_64& rng);

// Seeded sample with no holed edge and every cone angle inside
// (alpha_margin, pi - alpha_margin); rejection loop, throws if the margin
// leaves no room.
BParams random_b_nonholed(std::mt19937_64& rng, double alpha_margin = 0.05);

}  // namespace cw
