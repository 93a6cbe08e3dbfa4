#pragma once

// Upper half-space model of hyperbolic 3-space: boundary points, interior
// points, totally geodesic planes, and orientation-preserving isometries
// represented by unit-determinant 2x2 complex matrices up to sign.

#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

namespace cw {

using complexd = std::complex<double>;

// A point of the sphere at infinity: either a finite complex number or the
// distinguished point at infinity (tagged, never a floating-point Inf).
struct BPoint {
    bool inf = false;
    complexd z{0.0, 0.0};

    static BPoint infinity() { return BPoint{true, {0.0, 0.0}}; }
    static BPoint at(complexd w) { return BPoint{false, w}; }

    friend bool operator==(const BPoint& a, const BPoint& b) {
        if (a.inf || b.inf) return a.inf == b.inf;
        return a.z == b.z;
    }
};

// Exact-when-both-infinite chordal-style gap used for endpoint matching:
// |a-b| for finite pairs, 0 for inf/inf, +infinity for mixed.
double boundary_dist(const BPoint& a, const BPoint& b);

// An interior point (x, y, h) with h > 0.
struct HPoint {
    double x = 0.0, y = 0.0, h = 1.0;
    complexd xy() const { return {x, y}; }
};

// An oriented geodesic, recorded by its two boundary endpoints.
struct Geodesic {
    BPoint p0, p1;
};

// A totally geodesic plane: either a Euclidean hemisphere centered on the
// boundary or a Euclidean vertical half-plane over a boundary line.
struct Plane {
    enum class Kind { Hemisphere, Vertical };
    Kind kind = Kind::Hemisphere;
    // Hemisphere data:
    complexd center{0.0, 0.0};
    double radius = 1.0;
    // Vertical data (direction stored unit-length):
    complexd through{0.0, 0.0};
    complexd direction{1.0, 0.0};

    static Plane hemisphere(complexd center, double radius);
    static Plane vertical(complexd through, complexd direction);
};

// Unit-determinant 2x2 complex matrix, sign-canonicalized so equal group
// elements have equal entries: the first entry of (a, b, c, d) attaining the
// maximum modulus is made to have nonnegative real part (nonnegative
// imaginary part when its real part is negligible).
struct Isometry {
    complexd a{1.0, 0.0}, b{0.0, 0.0}, c{0.0, 0.0}, d{1.0, 0.0};

    Isometry() = default;
    Isometry(complexd a, complexd b, complexd c, complexd d);

    static Isometry identity() { return Isometry(); }
    Isometry inverse() const;
    complexd trace() const { return a + d; }
    void canonicalize();
};

Isometry compose(const Isometry& g, const Isometry& h);

// max-entry distance between g and h as group elements (minimum over the
// sign ambiguity).
double psl_distance(const Isometry& g, const Isometry& h);
bool approx_identity(const Isometry& g, double tol = 1e-9);

struct IsomClass {
    enum class Kind { Identity, Parabolic, Elliptic, Loxodromic };
    Kind kind = Kind::Identity;
    double angle = 0.0;   // elliptic: principal rotation angle in (0, pi]
    double length = 0.0;  // loxodromic: translation length 2 log|mu|
    double twist = 0.0;   // loxodromic: rotation part 2 arg(mu) in (-pi, pi]
};

const char* kind_name(IsomClass::Kind k);

// Conjugacy-type classification by the squared trace, with tolerance tol.
IsomClass classify(const Isometry& g, double tol = 1e-9);

// Moebius action on the boundary sphere.
BPoint apply_boundary(const Isometry& g, const BPoint& p);

// Poincare extension to the interior.
HPoint apply_interior(const Isometry& g, const HPoint& p);

// Hyperbolic distance between interior points.
double distance(const HPoint& p, const HPoint& q);

// Fixed-point geodesic of an elliptic or loxodromic isometry.  Loxodromic:
// endpoints ordered (repelling, attracting).  Elliptic: oriented so the
// rotation angle about p0 -> p1 lies in (0, pi].
Geodesic axis(const Isometry& g);

// Elliptic rotation by theta about the oriented geodesic (right-handed
// looking along p0 -> p1).
Isometry rotation_about(const Geodesic& ax, double theta);

// Loxodromic translation by `length` toward p1 with rotation `twist`.
Isometry loxodromic_along(const Geodesic& ax, double length, double twist);

// Rotation angle in [0, 2 pi) of an isometry that fixes both endpoints of
// ax, measured about the orientation p0 -> p1.  Throws if g moves either
// endpoint by more than tol.
double rotation_angle_about(const Isometry& g, const Geodesic& ax, double tol = 1e-8);

// Interior dihedral angle between two transversally intersecting planes,
// measured inside the wedge containing side_sample.
double dihedral_angle(const Plane& P, const Plane& Q, const HPoint& side_sample);

// The unique orientation-preserving isometry taking src[i] to dst[i].
Isometry isometry_from_boundary_triples(const BPoint src[3], const BPoint dst[3]);

// Whether a boundary point lies on the boundary circle/line of a plane.
bool on_plane_boundary(const Plane& pl, const BPoint& p, double tol = 1e-9);

// Deterministic sample points on a plane's boundary circle/line, indexed by k.
BPoint sample_plane_boundary(const Plane& pl, int k);

// The plane whose boundary circle/line passes through three distinct
// boundary points.
Plane plane_through(const BPoint& p, const BPoint& q, const BPoint& r);

}  // namespace cw
