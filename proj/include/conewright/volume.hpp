#pragma once

// Signed hyperbolic volumes: single tetrahedra (finite or ideal vertices),
// cone-sum volume of closed oriented triangulated surfaces, the structure
// volume of the trapezohedron family, and a finite-difference check of the
// first-variation (Schlafli) identity.

#include "conewright/polyhedron.hpp"

namespace cw {

struct SignedVolume {
    double value = 0.0;
    double est_error = 0.0;
};

// Signed volume of the hyperbolic tetrahedron on four pairwise distinct
// vertices; the sign is the orientation of the vertex frame.  All-ideal
// tetrahedra are evaluated exactly from the boundary cross-ratio; other
// tetrahedra use a closed form built from the Lobachevsky function.
SignedVolume tetra_volume(const MeshVertex& v0, const MeshVertex& v1,
                          const MeshVertex& v2, const MeshVertex& v3);

// Cone sum over triangles from an apex: the degree-weighted volume enclosed
// by a closed oriented mesh, independent of the apex.  Throws when the mesh
// (after identifying coincident vertices) is not closed.  Triangle
// contributions are evaluated in parallel (capped by CONEWRIGHT_THREADS) and
// combined by a fixed-tree pairwise sum, so the result is reproducible for
// any thread count.
SignedVolume enclosed_volume(const SurfaceMesh& mesh, const HPoint& apex = HPoint{0.0, 0.0, 1.0});

// Volume enclosed by the boundary mesh of the built polyhedron.
SignedVolume structure_volume(const BParams& b);

// Geodesic sphere of the given hyperbolic radius centered at (0, 0, 1),
// triangulated by an icosahedral subdivision (4^refinement triangles per
// base face), outward-oriented.
SurfaceMesh geodesic_sphere_mesh(double radius, int refinement);

// The mesh with every vertex moved by the isometry (ideal vertices stay on
// the boundary sphere); triangle windings are preserved.
SurfaceMesh transformed(const SurfaceMesh& mesh, const Isometry& g);

// The same mesh with every triangle's orientation reversed.
SurfaceMesh orientation_reversed(const SurfaceMesh& mesh);

// Compares the central finite difference of the structure volume along the
// straight-line parameter path from `from` to `to` against the first
// variation -1/2 sum_i len(edge_i) d(alpha_i), at `steps` midpoints.
struct SchlafliResult {
    double max_rel_dev = 0.0;
    double max_abs_dev = 0.0;
    int steps = 0;
};

SchlafliResult schlafli_check(const BParams& from, const BParams& to, int steps);

}  // namespace cw
