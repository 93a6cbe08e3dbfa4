#include <doctest.h>

#include <cmath>
#include <random>

#include "conewright/lobachevsky.hpp"
#include "conewright/volume.hpp"
#include "oracles.hpp"

using namespace cw;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("clover-area function: frozen values and quadrature sweep") {
    // L(pi/4) is half Catalan's constant
    CHECK(lobachevsky(kPi / 4) == doctest::Approx(0.45798279708860950752).epsilon(1e-15));
    CHECK(lobachevsky(kPi / 3) == doctest::Approx(1.014941606409654 / 3.0).epsilon(1e-14));
    // odd and pi-periodic
    CHECK(lobachevsky(-0.7) == doctest::Approx(-lobachevsky(0.7)).epsilon(1e-15));
    CHECK(lobachevsky(0.7 + kPi) == doctest::Approx(lobachevsky(0.7)).epsilon(1e-13));
    CHECK(lobachevsky(0.0) == 0.0);
    CHECK(std::abs(lobachevsky(kPi / 2)) < 1e-15);

    for (double th = 0.1; th < 3.05; th += 0.25)
        CHECK(lobachevsky(th) == doctest::Approx(oracle::lobachevsky_quadrature(th)).epsilon(1e-11));
}

TEST_CASE("frozen structure volumes") {
    CHECK(structure_volume(BParams({1, 1, 1, 1}, 0.0)).value ==
          doctest::Approx(3.6638623767088605).epsilon(1e-10));
    CHECK(structure_volume(BParams({1, 1, 1, 1}, 1.0)).value ==
          doctest::Approx(1.8319311883544336).epsilon(1e-10));
    CHECK(structure_volume(BParams({1, 1, 1, 1}, 2.1)).value ==
          doctest::Approx(0.991925419491).epsilon(1e-9));
    CHECK(structure_volume(BParams({0.5, 2.0, 0.5, 2.0}, 1.4)).value ==
          doctest::Approx(1.461989068087).epsilon(1e-9));
    // volume is scale free: the t = 1 value is four times L(pi/4)
    CHECK(structure_volume(BParams({1, 1, 1, 1}, 1.0)).value ==
          doctest::Approx(4 * lobachevsky(kPi / 4)).epsilon(1e-12));
}

TEST_CASE("structure volume against polar-column quadrature") {
    std::mt19937_64 rng(31);
    int tested = 0;
    while (tested < 8) {
        const BParams b = random_b_nonholed(rng, 0.15);
        if (b.t <= 0.05) continue;
        const TrapezohedronGeometry g = build_geometry(b);
        const double engine = structure_volume(b).value;
        const double slow = oracle::structure_volume_quadrature(g, 1e-10);
        CHECK(engine == doctest::Approx(slow).epsilon(1e-7));
        ++tested;
    }
}

TEST_CASE("tetra volume: orientation antisymmetry and the ideal regular value") {
    const MeshVertex a = MeshVertex::finite(0.1, 0.0, 1.0);
    const MeshVertex b = MeshVertex::finite(1.0, 0.2, 0.8);
    const MeshVertex c = MeshVertex::finite(-0.3, 0.9, 1.4);
    const MeshVertex d = MeshVertex::finite(0.2, 0.4, 2.0);
    const double v = tetra_volume(a, b, c, d).value;
    CHECK(v != 0.0);
    CHECK(tetra_volume(b, a, c, d).value == doctest::Approx(-v).epsilon(1e-12));
    CHECK(tetra_volume(a, c, b, d).value == doctest::Approx(-v).epsilon(1e-12));
    CHECK(tetra_volume(a, b, d, c).value == doctest::Approx(-v).epsilon(1e-12));

    // ideal regular tetrahedron: cross-ratio at the hexagonal point
    const MeshVertex i0 = MeshVertex::ideal(0.0, 0.0);
    const MeshVertex i1 = MeshVertex::ideal(1.0, 0.0);
    const MeshVertex i2 = MeshVertex::ideal(0.5, std::sqrt(3.0) / 2.0);
    const MeshVertex iinf = MeshVertex::infinity();
    CHECK(std::abs(tetra_volume(i0, i1, i2, iinf).value) ==
          doctest::Approx(1.0149416064096535).epsilon(1e-13));

    // degenerate (coplanar vertical) tetra has zero volume
    const MeshVertex e = MeshVertex::finite(0.1, 0.0, 2.0);
    CHECK(std::abs(tetra_volume(a, b, e, MeshVertex::finite(0.55, 0.1, 0.9)).value) < 1e-9);
}

TEST_CASE("cone-sum volume: apex independence and mesh hygiene") {
    const SurfaceMesh mesh = boundary_mesh(build_geometry(BParams({1.2, 0.8, 1.1, 1.0 / 1.056}, 1.3)));
    const double v1 = enclosed_volume(mesh).value;
    const double v2 = enclosed_volume(mesh, HPoint{1.7, -0.4, 0.35}).value;
    CHECK(v1 == doctest::Approx(v2).epsilon(1e-10));
    CHECK(v1 > 0.0);

    SurfaceMesh open = mesh;
    open.triangles.pop_back();
    CHECK_THROWS(enclosed_volume(open));
}

TEST_CASE("geodesic sphere volume approaches the closed form") {
    for (double r : {0.5, 1.0}) {
        const double exact = kPi * (std::sinh(2 * r) - 2 * r);
        const double coarse = std::abs(enclosed_volume(geodesic_sphere_mesh(r, 3)).value - exact);
        const double fine = std::abs(enclosed_volume(geodesic_sphere_mesh(r, 4)).value - exact);
        CHECK(fine < 0.02 * exact);
        CHECK(fine < coarse);  // refinement converges
    }
}

TEST_CASE("isometry invariance and reversal of the cone sum") {
    const SurfaceMesh mesh = boundary_mesh(build_geometry(BParams({1, 1, 1, 1}, 0.7)));
    const double v = enclosed_volume(mesh).value;
    const Isometry g = compose(
        loxodromic_along(Geodesic{BPoint::at({0.2, 0.6}), BPoint::at({-0.9, -0.4})}, 0.6, 1.0),
        rotation_about(Geodesic{BPoint::at({1.0, 0.0}), BPoint::infinity()}, 0.5));
    CHECK(enclosed_volume(transformed(mesh, g)).value == doctest::Approx(v).epsilon(1e-10));
    CHECK(enclosed_volume(orientation_reversed(mesh)).value == doctest::Approx(-v).epsilon(1e-12));
}

TEST_CASE("first-variation identity holds along a short path") {
    const SchlafliResult r = schlafli_check(BParams({1, 1, 1, 1}, 0.8), BParams({1, 1, 1, 1}, 1.2), 100);
    CHECK(r.steps == 100);
    CHECK(r.max_rel_dev < 1e-4);
}

TEST_CASE("volume is monotone decreasing in t for the symmetric family") {
    double prev = structure_volume(BParams({1, 1, 1, 1}, 0.0)).value;
    for (double t : {0.4, 0.9, 1.5, 2.5}) {
        const double v = structure_volume(BParams({1, 1, 1, 1}, t)).value;
        CHECK(v < prev);
        CHECK(v > 0.0);
        prev = v;
    }
}
