#include "conewright/hypgeo.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace cw {

namespace {
constexpr double kPi = 3.14159265358979323846;

double wrap_to_half_open_pi(double a) {
    // map to (-pi, pi]
    while (a > kPi) a -= 2 * kPi;
    while (a <= -kPi) a += 2 * kPi;
    return a;
}
}  // namespace

double boundary_dist(const BPoint& a, const BPoint& b) {
    if (a.inf || b.inf) return (a.inf && b.inf) ? 0.0 : std::numeric_limits<double>::infinity();
    return std::abs(a.z - b.z);
}

Plane Plane::hemisphere(complexd c, double r) {
    if (!(r > 0.0)) throw std::invalid_argument("hemisphere radius must be positive");
    Plane p;
    p.kind = Kind::Hemisphere;
    p.center = c;
    p.radius = r;
    return p;
}

Plane Plane::vertical(complexd through, complexd direction) {
    double m = std::abs(direction);
    if (!(m > 0.0)) throw std::invalid_argument("vertical plane needs a nonzero direction");
    Plane p;
    p.kind = Kind::Vertical;
    p.through = through;
    p.direction = direction / m;
    return p;
}

Isometry::Isometry(complexd a_, complexd b_, complexd c_, complexd d_) : a(a_), b(b_), c(c_), d(d_) {
    complexd det = a * d - b * c;
    double m = std::abs(det);
    if (!(m > 0.0)) throw std::invalid_argument("matrix is singular");
    if (std::abs(det - complexd(1.0, 0.0)) > 1e-12) {
        complexd s = std::sqrt(det);
        a /= s; b /= s; c /= s; d /= s;
    }
    canonicalize();
}

void Isometry::canonicalize() {
    const complexd* e[4] = {&a, &b, &c, &d};
    int best = 0;
    double bm = -1.0;
    for (int i = 0; i < 4; ++i) {
        double m = std::abs(*e[i]);
        if (m > bm * (1.0 + 1e-12)) { bm = m; best = i; }
    }
    complexd lead = *e[best];
    bool flip;
    if (std::abs(lead.real()) > 1e-12 * bm) {
        flip = lead.real() < 0.0;
    } else {
        flip = lead.imag() < 0.0;
    }
    if (flip) { a = -a; b = -b; c = -c; d = -d; }
}

Isometry Isometry::inverse() const {
    return Isometry(d, -b, -c, a);
}

Isometry compose(const Isometry& g, const Isometry& h) {
    return Isometry(g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d,
                    g.c * h.a + g.d * h.c, g.c * h.b + g.d * h.d);
}

double psl_distance(const Isometry& g, const Isometry& h) {
    auto entry_gap = [&](double sign) {
        double m = 0.0;
        m = std::max(m, std::abs(g.a - sign * h.a));
        m = std::max(m, std::abs(g.b - sign * h.b));
        m = std::max(m, std::abs(g.c - sign * h.c));
        m = std::max(m, std::abs(g.d - sign * h.d));
        return m;
    };
    return std::min(entry_gap(1.0), entry_gap(-1.0));
}

bool approx_identity(const Isometry& g, double tol) {
    return psl_distance(g, Isometry::identity()) <= tol;
}

const char* kind_name(IsomClass::Kind k) {
    switch (k) {
        case IsomClass::Kind::Identity: return "identity";
        case IsomClass::Kind::Parabolic: return "parabolic";
        case IsomClass::Kind::Elliptic: return "elliptic";
        case IsomClass::Kind::Loxodromic: return "loxodromic";
    }
    return "?";
}

IsomClass classify(const Isometry& g, double tol) {
    IsomClass out;
    complexd tr = g.trace();
    complexd tr2 = tr * tr;
    if (approx_identity(g, tol)) {
        out.kind = IsomClass::Kind::Identity;
        return out;
    }
    if (std::abs(tr2 - complexd(4.0, 0.0)) <= tol) {
        out.kind = IsomClass::Kind::Parabolic;
        return out;
    }
    if (std::abs(tr2.imag()) <= tol && tr2.real() >= -tol && tr2.real() < 4.0) {
        out.kind = IsomClass::Kind::Elliptic;
        // tr^2 = 4 cos^2(theta/2), principal angle in (0, pi]
        double c2 = std::clamp(tr2.real() / 4.0, 0.0, 1.0);
        out.angle = 2.0 * std::acos(std::sqrt(c2));
        return out;
    }
    out.kind = IsomClass::Kind::Loxodromic;
    // eigenvalues mu, 1/mu with |mu| > 1; translation length 2 log|mu|,
    // twist 2 arg(mu) reduced to (-pi, pi]
    complexd disc = std::sqrt(tr2 - complexd(4.0, 0.0));
    complexd mu = (tr + disc) / 2.0;
    if (std::abs(mu) < 1.0) mu = (tr - disc) / 2.0;
    out.length = 2.0 * std::log(std::abs(mu));
    out.twist = wrap_to_half_open_pi(2.0 * std::arg(mu));
    return out;
}

BPoint apply_boundary(const Isometry& g, const BPoint& p) {
    if (p.inf) {
        if (std::abs(g.c) == 0.0) return BPoint::infinity();
        return BPoint::at(g.a / g.c);
    }
    complexd num = g.a * p.z + g.b;
    complexd den = g.c * p.z + g.d;
    double scale = std::abs(g.c) * std::abs(p.z) + std::abs(g.d);
    if (std::abs(den) <= 1e-14 * scale || scale == 0.0) return BPoint::infinity();
    return BPoint::at(num / den);
}

HPoint apply_interior(const Isometry& g, const HPoint& p) {
    // Poincare extension of z -> (az+b)/(cz+d) to the upper half space.
    complexd z = p.xy();
    complexd czd = g.c * z + g.d;
    double h2 = p.h * p.h;
    double D = std::norm(czd) + std::norm(g.c) * h2;
    if (!(D > 0.0)) throw std::invalid_argument("isometry sends interior point to infinity");
    complexd znew = ((g.a * z + g.b) * std::conj(czd) + g.a * std::conj(g.c) * h2) / D;
    HPoint out;
    out.x = znew.real();
    out.y = znew.imag();
    out.h = p.h / D;
    return out;
}

double distance(const HPoint& p, const HPoint& q) {
    double dx = p.x - q.x, dy = p.y - q.y, dh = p.h - q.h;
    double arg = 1.0 + (dx * dx + dy * dy + dh * dh) / (2.0 * p.h * q.h);
    return std::acosh(std::max(arg, 1.0));
}

namespace {
// Moebius derivative modulus at a fixed point (w-coordinate 1/z used at infinity).
complexd derivative_at(const Isometry& g, const BPoint& p) {
    if (p.inf) {
        // in w = 1/z the map is w -> (c + d w)/(a + b w); derivative at 0 is 1/a^2
        return 1.0 / (g.a * g.a);
    }
    complexd den = g.c * p.z + g.d;
    return 1.0 / (den * den);
}
}  // namespace

Geodesic axis(const Isometry& g) {
    IsomClass cls = classify(g);
    if (cls.kind == IsomClass::Kind::Identity || cls.kind == IsomClass::Kind::Parabolic)
        throw std::invalid_argument("axis requires an elliptic or loxodromic isometry");
    BPoint f0, f1;
    if (std::abs(g.c) > 1e-14 * (std::abs(g.a) + std::abs(g.d))) {
        // fixed points solve c z^2 + (d - a) z - b = 0
        complexd A = g.c, B = g.d - g.a, C = -g.b;
        complexd disc = std::sqrt(B * B - 4.0 * A * C);
        // Citardauq for the smaller root to avoid cancellation
        complexd zp = (-B + disc) / (2.0 * A);
        complexd zm = (std::abs(-B + disc) > 1e-300) ? (2.0 * C) / (-B + disc) : (-B - disc) / (2.0 * A);
        f0 = BPoint::at(zp);
        f1 = BPoint::at(zm);
    } else {
        f0 = BPoint::infinity();
        complexd B = g.d - g.a;
        if (std::abs(B) < 1e-14 * (std::abs(g.a) + std::abs(g.d)) && std::abs(g.b) < 1e-14)
            throw std::invalid_argument("axis is indeterminate");
        f1 = BPoint::at(-(-g.b) / B);  // z = b/(d-a)
    }
    Geodesic ax{f0, f1};
    if (cls.kind == IsomClass::Kind::Loxodromic) {
        // attracting endpoint (derivative modulus < 1) goes second
        double m1 = std::abs(derivative_at(g, ax.p1));
        if (m1 > 1.0) std::swap(ax.p0, ax.p1);
        return ax;
    }
    // elliptic: orient so the rotation angle about (p0 -> p1) lies in (0, pi]
    double theta = std::arg(derivative_at(g, ax.p0));
    if (theta < 0) theta += 2 * kPi;
    if (theta > kPi + 1e-15) std::swap(ax.p0, ax.p1);
    return ax;
}

namespace {
// A Moebius map sending (p0, p1) to (0, infinity).
Isometry axis_to_standard(const Geodesic& ax) {
    if (ax.p0.inf) return Isometry(0.0, 1.0, 1.0, -ax.p1.z);
    if (ax.p1.inf) return Isometry(1.0, -ax.p0.z, 0.0, 1.0);
    if (ax.p0.z == ax.p1.z) throw std::invalid_argument("geodesic endpoints coincide");
    return Isometry(1.0, -ax.p0.z, 1.0, -ax.p1.z);
}
}  // namespace

Isometry rotation_about(const Geodesic& ax, double theta) {
    complexd e = std::exp(complexd(0.0, theta / 2.0));
    Isometry k = axis_to_standard(ax);
    return compose(compose(k.inverse(), Isometry(e, 0.0, 0.0, 1.0 / e)), k);
}

Isometry loxodromic_along(const Geodesic& ax, double length, double twist) {
    complexd e = std::exp(complexd(length / 2.0, twist / 2.0));
    Isometry k = axis_to_standard(ax);
    return compose(compose(k.inverse(), Isometry(e, 0.0, 0.0, 1.0 / e)), k);
}

double rotation_angle_about(const Isometry& g, const Geodesic& ax, double tol) {
    BPoint i0 = apply_boundary(g, ax.p0);
    BPoint i1 = apply_boundary(g, ax.p1);
    if (boundary_dist(i0, ax.p0) > tol || boundary_dist(i1, ax.p1) > tol)
        throw std::invalid_argument("isometry does not fix the given geodesic endpoints");
    double theta = std::arg(derivative_at(g, ax.p0));
    if (theta < 0) theta += 2 * kPi;
    if (theta >= 2 * kPi) theta -= 2 * kPi;
    return theta;
}

namespace {
struct EdgeFrame {
    // a point x on the intersection geodesic plus the Euclidean unit normals
    // of the two carrier surfaces at x (hyperbolic angles are Euclidean in
    // this conformal model)
    std::array<double, 3> x;
    std::array<double, 3> n1;
    std::array<double, 3> n2;
};

std::array<double, 3> plane_normal_at(const Plane& pl, const std::array<double, 3>& x) {
    if (pl.kind == Plane::Kind::Hemisphere) {
        std::array<double, 3> n{x[0] - pl.center.real(), x[1] - pl.center.imag(), x[2]};
        double m = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
        return {n[0] / m, n[1] / m, n[2] / m};
    }
    complexd n = pl.direction * complexd(0.0, 1.0);
    return {n.real(), n.imag(), 0.0};
}

// Intersection geodesic sample point of two planes; throws when disjoint/tangent.
std::array<double, 3> intersection_sample(const Plane& P, const Plane& Q) {
    auto top_of_chord = [](complexd e1, complexd e2) -> std::array<double, 3> {
        complexd mid = (e1 + e2) / 2.0;
        double r = std::abs(e2 - e1) / 2.0;
        return {mid.real(), mid.imag(), r};
    };
    if (P.kind == Plane::Kind::Hemisphere && Q.kind == Plane::Kind::Hemisphere) {
        complexd dc = Q.center - P.center;
        double d = std::abs(dc);
        double r1 = P.radius, r2 = Q.radius;
        if (!(d > std::abs(r1 - r2) + 1e-14 && d < r1 + r2 - 1e-14))
            throw std::invalid_argument("planes do not intersect transversally");
        double a = (d * d + r1 * r1 - r2 * r2) / (2.0 * d);
        double h = std::sqrt(std::max(r1 * r1 - a * a, 0.0));
        complexd u = dc / d;
        complexd foot = P.center + a * u;
        complexd perp = u * complexd(0.0, 1.0);
        return top_of_chord(foot + h * perp, foot - h * perp);
    }
    if (P.kind == Plane::Kind::Vertical && Q.kind == Plane::Kind::Vertical) {
        complexd u = P.direction, v = Q.direction;
        double cross = (std::conj(u) * v).imag();  // u x v
        if (std::abs(cross) < 1e-14) throw std::invalid_argument("parallel vertical planes");
        // solve P.through + s u = Q.through + t v
        complexd w = Q.through - P.through;
        double s = (std::conj(w) * v).imag() / cross;  // (w x v) / (u x v)
        complexd z0 = P.through + s * u;
        return {z0.real(), z0.imag(), 1.0};
    }
    const Plane& H = (P.kind == Plane::Kind::Hemisphere) ? P : Q;
    const Plane& V = (P.kind == Plane::Kind::Vertical) ? P : Q;
    complexd rel = H.center - V.through;
    complexd u = V.direction;
    double along = (rel * std::conj(u)).real();
    complexd foot = V.through + along * u;
    double d = std::abs(H.center - foot);
    if (!(d < H.radius - 1e-14)) throw std::invalid_argument("planes do not intersect transversally");
    double h = std::sqrt(H.radius * H.radius - d * d);
    return top_of_chord(foot + h * u, foot - h * u);
}
}  // namespace

namespace {
// Which side of the plane the point is on, with the same sign convention as
// plane_normal_at: positive outside a hemisphere, positive along the fixed
// horizontal normal of a vertical plane.
double plane_signed_side(const Plane& pl, const HPoint& s) {
    if (pl.kind == Plane::Kind::Hemisphere) {
        const double dx = s.x - pl.center.real();
        const double dy = s.y - pl.center.imag();
        return dx * dx + dy * dy + s.h * s.h - pl.radius * pl.radius;
    }
    const complexd n = pl.direction * complexd(0.0, 1.0);
    return n.real() * (s.x - pl.through.real()) + n.imag() * (s.y - pl.through.imag());
}
}  // namespace

double dihedral_angle(const Plane& P, const Plane& Q, const HPoint& s) {
    std::array<double, 3> x = intersection_sample(P, Q);
    std::array<double, 3> n1 = plane_normal_at(P, x);
    std::array<double, 3> n2 = plane_normal_at(Q, x);
    auto dot = [](const std::array<double, 3>& a, const std::array<double, 3>& b) {
        return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
    };
    // orient both normals away from the sample side, then the interior angle
    // of the wedge containing the sample is pi minus the normal angle
    if (plane_signed_side(P, s) > 0) for (auto& v : n1) v = -v;
    if (plane_signed_side(Q, s) > 0) for (auto& v : n2) v = -v;
    double c = std::clamp(dot(n1, n2), -1.0, 1.0);
    return kPi - std::acos(c);
}

namespace {
// Matrix sending (p, q, r) -> (0, 1, infinity); entries need not be unit-det.
void to_zero_one_inf(const BPoint& p, const BPoint& q, const BPoint& r, complexd m[4]) {
    if (p.inf) { m[0] = 0.0; m[1] = q.z - r.z; m[2] = 1.0; m[3] = -r.z; return; }
    if (q.inf) { m[0] = 1.0; m[1] = -p.z; m[2] = 1.0; m[3] = -r.z; return; }
    if (r.inf) { m[0] = 1.0; m[1] = -p.z; m[2] = 0.0; m[3] = q.z - p.z; return; }
    m[0] = q.z - r.z;
    m[1] = -p.z * (q.z - r.z);
    m[2] = q.z - p.z;
    m[3] = -r.z * (q.z - p.z);
}
}  // namespace

Isometry isometry_from_boundary_triples(const BPoint src[3], const BPoint dst[3]) {
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            if (src[i] == src[j] || dst[i] == dst[j])
                throw std::invalid_argument("boundary triple has repeated points");
        }
    complexd A[4], B[4];
    to_zero_one_inf(src[0], src[1], src[2], A);
    to_zero_one_inf(dst[0], dst[1], dst[2], B);
    // g = B^{-1} A (up to scale); adj(B) = [d, -b; -c, a]
    complexd g0 = B[3] * A[0] - B[1] * A[2];
    complexd g1 = B[3] * A[1] - B[1] * A[3];
    complexd g2 = -B[2] * A[0] + B[0] * A[2];
    complexd g3 = -B[2] * A[1] + B[0] * A[3];
    return Isometry(g0, g1, g2, g3);
}

bool on_plane_boundary(const Plane& pl, const BPoint& p, double tol) {
    if (p.inf) return pl.kind == Plane::Kind::Vertical;
    if (pl.kind == Plane::Kind::Hemisphere)
        return std::abs(std::abs(p.z - pl.center) - pl.radius) <= tol * std::max(1.0, pl.radius);
    complexd rel = p.z - pl.through;
    return std::abs((rel * std::conj(pl.direction)).imag()) <= tol * std::max(1.0, std::abs(rel));
}

BPoint sample_plane_boundary(const Plane& pl, int k) {
    if (pl.kind == Plane::Kind::Hemisphere) {
        double t = 0.37 + 0.61 * k;
        return BPoint::at(pl.center + pl.radius * std::exp(complexd(0.0, t)));
    }
    return BPoint::at(pl.through + (1.7 + 0.83 * k) * pl.direction);
}

Plane plane_through(const BPoint& p, const BPoint& q, const BPoint& r) {
    // with an infinite point the carrier is vertical through the two finite ones
    if (p.inf || q.inf || r.inf) {
        if ((p.inf && q.inf) || (p.inf && r.inf) || (q.inf && r.inf))
            throw std::invalid_argument("repeated infinite point");
        complexd u = p.inf ? q.z : p.z;
        complexd v = r.inf ? q.z : r.z;
        return Plane::vertical(u, v - u);
    }
    // circle through three points, or the line when they are collinear
    complexd z1 = p.z, z2 = q.z, z3 = r.z;
    double a11 = 2.0 * (z2.real() - z1.real()), a12 = 2.0 * (z2.imag() - z1.imag());
    double a21 = 2.0 * (z3.real() - z1.real()), a22 = 2.0 * (z3.imag() - z1.imag());
    double b1 = std::norm(z2) - std::norm(z1);
    double b2 = std::norm(z3) - std::norm(z1);
    double det = a11 * a22 - a12 * a21;
    double scale = std::max({std::abs(a11), std::abs(a12), std::abs(a21), std::abs(a22), 1e-300});
    if (std::abs(det) < 1e-12 * scale * scale) {
        complexd dir = z2 - z1;
        if (std::abs(dir) == 0.0) dir = z3 - z1;
        return Plane::vertical(z1, dir);
    }
    complexd c{(b1 * a22 - b2 * a12) / det, (a11 * b2 - a21 * b1) / det};
    return Plane::hemisphere(c, std::abs(z1 - c));
}

}  // namespace cw
