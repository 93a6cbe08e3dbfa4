#include "conewright/volume.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <optional>
#include <thread>
#include <vector>

#include "conewright/lobachevsky.hpp"

namespace cw {

namespace {
constexpr double kPi = 3.14159265358979323846;

struct XYH {
    double x, y, h;
    bool inf;  // the single point at infinity
};

XYH to_xyh(const MeshVertex& v) {
    if (v.kind == MeshVertex::Kind::IdealInf) return {0, 0, 0, true};
    return {v.x, v.y, (v.kind == MeshVertex::Kind::IdealPlanar) ? 0.0 : v.h, false};
}

// Center and radius of the hemisphere through three (possibly boundary)
// points; empty when the carrier is a vertical plane or degenerate.
struct Carrier {
    double cx, cy, r;
};

std::optional<Carrier> carrier(const XYH p[3]) {
    double a11 = 2 * (p[1].x - p[0].x), a12 = 2 * (p[1].y - p[0].y);
    double b1 = (p[1].x * p[1].x + p[1].y * p[1].y + p[1].h * p[1].h) -
                (p[0].x * p[0].x + p[0].y * p[0].y + p[0].h * p[0].h);
    double a21 = 2 * (p[2].x - p[0].x), a22 = 2 * (p[2].y - p[0].y);
    double b2 = (p[2].x * p[2].x + p[2].y * p[2].y + p[2].h * p[2].h) -
                (p[0].x * p[0].x + p[0].y * p[0].y + p[0].h * p[0].h);
    double det = a11 * a22 - a12 * a21;
    double scale = std::max({std::abs(a11), std::abs(a12), std::abs(a21), std::abs(a22), 1e-30});
    if (std::abs(det) < 1e-13 * scale * scale) return std::nullopt;
    double cx = (b1 * a22 - b2 * a12) / det;
    double cy = (a11 * b2 - a21 * b1) / det;
    double r2 = (p[0].x - cx) * (p[0].x - cx) + (p[0].y - cy) * (p[0].y - cy) + p[0].h * p[0].h;
    return Carrier{cx, cy, std::sqrt(r2)};
}

// Antiderivative of the polar column integral over a circular cap.
double G_anti(double psi, double delta) {
    return 0.5 * (-lobachevsky(psi + kPi / 2) + 0.5 * lobachevsky(delta + psi) - 0.5 * lobachevsky(delta - psi));
}

double wrap_pi(double a) {
    while (a > kPi) a -= 2 * kPi;
    while (a <= -kPi) a += 2 * kPi;
    return a;
}

// Signed column volume over the Euclidean triangle (center, u, v), where u, v
// are relative to the hemisphere center and r is its radius.
double fan_term(complexd u, complexd v, double r) {
    complexd w = v - u;
    double lw = std::abs(w);
    if (lw < 1e-15 * std::max({std::abs(u), std::abs(v), 1e-30})) return 0.0;
    double s = -(u.real() * w.real() + u.imag() * w.imag()) / (lw * lw);
    complexd foot = u + s * w;
    double d = std::abs(foot);
    if (d < 1e-14 * r) return 0.0;  // chord through the center: degenerate fan
    double delta = std::acos(std::min(d / r, 1.0));
    double phiL = std::atan2(foot.imag(), foot.real());
    double psi_u = std::clamp(wrap_pi(std::atan2(u.imag(), u.real()) - phiL), -delta, delta);
    double psi_v = std::clamp(wrap_pi(std::atan2(v.imag(), v.real()) - phiL), -delta, delta);
    return G_anti(psi_v, delta) - G_anti(psi_u, delta);
}

// Signed volume of the region between the geodesic triangle ABC and the
// point at infinity; positive when the footprint is counterclockwise.
double cone_from_infinity(const XYH& A, const XYH& B, const XYH& C) {
    if (A.inf || B.inf || C.inf) return 0.0;
    XYH pts[3] = {A, B, C};
    auto car = carrier(pts);
    if (!car) return 0.0;  // vertical or degenerate carrier: zero footprint
    complexd u0(A.x - car->cx, A.y - car->cy);
    complexd u1(B.x - car->cx, B.y - car->cy);
    complexd u2(C.x - car->cx, C.y - car->cy);
    return fan_term(u0, u1, car->r) + fan_term(u1, u2, car->r) + fan_term(u2, u0, car->r);
}

bool is_ideal(const MeshVertex& v) { return v.kind != MeshVertex::Kind::Finite || v.h == 0.0; }

bool coincident(const MeshVertex& a, const MeshVertex& b) {
    bool ai = a.kind == MeshVertex::Kind::IdealInf, bi = b.kind == MeshVertex::Kind::IdealInf;
    if (ai || bi) return ai && bi;
    double ah = (a.kind == MeshVertex::Kind::IdealPlanar) ? 0.0 : a.h;
    double bh = (b.kind == MeshVertex::Kind::IdealPlanar) ? 0.0 : b.h;
    return a.x == b.x && a.y == b.y && ah == bh;
}

// Exact volume of an all-ideal tetrahedron from the boundary cross-ratio,
// signed by the orientation of the vertex order.
double all_ideal_volume(const MeshVertex vs[4]) {
    bool inf[4];
    complexd z[4];
    for (int i = 0; i < 4; ++i) {
        inf[i] = vs[i].kind == MeshVertex::Kind::IdealInf;
        z[i] = complexd(vs[i].x, vs[i].y);
    }
    complexd w;
    if (inf[0]) w = (z[1] - z[3]) / (z[1] - z[2]);
    else if (inf[1]) w = (z[0] - z[2]) / (z[0] - z[3]);
    else if (inf[2]) w = (z[1] - z[3]) / (z[0] - z[3]);
    else if (inf[3]) w = (z[0] - z[2]) / (z[1] - z[2]);
    else {
        complexd den = (z[0] - z[3]) * (z[1] - z[2]);
        if (std::abs(den) == 0.0) return 0.0;
        w = ((z[0] - z[2]) * (z[1] - z[3])) / den;
    }
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) return 0.0;
    if (std::abs(w.imag()) <= 1e-14 * (1.0 + std::abs(w))) return 0.0;  // flat
    complexd ww = (w.imag() > 0) ? w : std::conj(w);
    double a = std::arg(ww);
    double b = std::arg(1.0 / (1.0 - ww));
    double c = kPi - a - b;
    double val = lobachevsky(a) + lobachevsky(b) + lobachevsky(c);
    return (w.imag() > 0) ? -val : val;
}
}  // namespace

SignedVolume tetra_volume(const MeshVertex& v0, const MeshVertex& v1,
                          const MeshVertex& v2, const MeshVertex& v3) {
    const MeshVertex vs[4] = {v0, v1, v2, v3};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (coincident(vs[i], vs[j])) throw std::invalid_argument("tetrahedron has coincident vertices");

    SignedVolume out;
    if (is_ideal(v0) && is_ideal(v1) && is_ideal(v2) && is_ideal(v3)) {
        out.value = all_ideal_volume(vs);
        out.est_error = 1e-14 * (1.0 + std::abs(out.value));
        return out;
    }
    XYH p0 = to_xyh(v0), p1 = to_xyh(v1), p2 = to_xyh(v2), p3 = to_xyh(v3);
    out.value = -(cone_from_infinity(p1, p2, p3) - cone_from_infinity(p0, p2, p3) +
                  cone_from_infinity(p0, p1, p3) - cone_from_infinity(p0, p1, p2));
    out.est_error = 1e-12 * (1.0 + std::abs(out.value));
    return out;
}

namespace {
int thread_cap() {
    unsigned hc = std::thread::hardware_concurrency();
    if (hc == 0) hc = 1;
    if (const char* e = std::getenv("CONEWRIGHT_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(e, &end, 10);
        if (end != e && v >= 1 && v <= 1024) hc = std::min(hc, static_cast<unsigned>(v));
    }
    return static_cast<int>(hc);
}

double tree_sum(const double* a, size_t n) {
    if (n == 0) return 0.0;
    if (n == 1) return a[0];
    size_t half = n / 2;
    return tree_sum(a, half) + tree_sum(a + half, n - half);
}
}  // namespace

SignedVolume enclosed_volume(const SurfaceMesh& mesh, const HPoint& apex) {
    if (!(apex.h > 0.0)) throw std::invalid_argument("apex must be an interior point");
    MeshCheck chk = validate_mesh(mesh);
    if (!chk.closed) throw std::invalid_argument("mesh is not a closed oriented surface");
    std::vector<int> rep = coincident_representatives(mesh, 1e-12);

    const MeshVertex apex_v = MeshVertex::finite(apex.x, apex.y, apex.h);
    const size_t n = mesh.triangles.size();
    std::vector<double> contrib(n, 0.0), errs(n, 0.0);
    auto run = [&](size_t lo, size_t hi) {
        for (size_t k = lo; k < hi; ++k) {
            const auto& t = mesh.triangles[k];
            if (rep[t[0]] == rep[t[1]] || rep[t[1]] == rep[t[2]] || rep[t[0]] == rep[t[2]])
                continue;  // collapsed triangle contributes nothing
            SignedVolume v = tetra_volume(apex_v, mesh.vertices[t[0]], mesh.vertices[t[1]], mesh.vertices[t[2]]);
            contrib[k] = v.value;
            errs[k] = v.est_error;
        }
    };
    int nt = std::min<long long>(thread_cap(), std::max<long long>(1, static_cast<long long>(n) / 256));
    if (nt <= 1) {
        run(0, n);
    } else {
        std::vector<std::thread> pool;
        size_t chunk = (n + nt - 1) / nt;
        for (int i = 0; i < nt; ++i) {
            size_t lo = i * chunk, hi = std::min(n, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(run, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    SignedVolume out;
    out.value = tree_sum(contrib.data(), n);  // fixed-shape reduction: thread-count independent
    double e = 0.0;
    for (double x : errs) e += x;
    out.est_error = e;
    return out;
}

SignedVolume structure_volume(const BParams& b) {
    return enclosed_volume(boundary_mesh(build_geometry(b)), HPoint{0.0, 0.0, 1.0});
}

namespace {
struct V3 {
    double x, y, z;
};
V3 normalized(V3 v, double len) {
    double m = std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z);
    return {v.x * len / m, v.y * len / m, v.z * len / m};
}
}  // namespace

SurfaceMesh geodesic_sphere_mesh(double radius, int refinement) {
    if (!(radius > 0.0)) throw std::invalid_argument("sphere radius must be positive");
    if (refinement < 0 || refinement > 8) throw std::invalid_argument("refinement must be in [0, 8]");
    // hyperbolic radius -> Euclidean radius of the same sphere about the
    // center of the unit-ball model
    const double re = std::tanh(radius / 2.0);

    const double t = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<V3> vs = {
        {-1, t, 0}, {1, t, 0}, {-1, -t, 0}, {1, -t, 0},
        {0, -1, t}, {0, 1, t}, {0, -1, -t}, {0, 1, -t},
        {t, 0, -1}, {t, 0, 1}, {-t, 0, -1}, {-t, 0, 1}};
    for (auto& v : vs) v = normalized(v, re);
    std::vector<std::array<int, 3>> faces = {
        {0, 11, 5}, {0, 5, 1}, {0, 1, 7}, {0, 7, 10}, {0, 10, 11},
        {1, 5, 9}, {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
        {3, 9, 4}, {3, 4, 2}, {3, 2, 6}, {3, 6, 8}, {3, 8, 9},
        {4, 9, 5}, {2, 4, 11}, {6, 2, 10}, {8, 6, 7}, {9, 8, 1}};

    // make the base orientation outward (positive triple product), so the
    // final flip below accounts only for the model map's reversal
    {
        const auto& f = faces[0];
        V3 a = vs[f[0]], b = vs[f[1]], c = vs[f[2]];
        V3 ab{b.x - a.x, b.y - a.y, b.z - a.z}, ac{c.x - a.x, c.y - a.y, c.z - a.z};
        V3 n{ab.y * ac.z - ab.z * ac.y, ab.z * ac.x - ab.x * ac.z, ab.x * ac.y - ab.y * ac.x};
        double dot = n.x * (a.x + b.x + c.x) + n.y * (a.y + b.y + c.y) + n.z * (a.z + b.z + c.z);
        if (dot < 0)
            for (auto& fc : faces) std::swap(fc[1], fc[2]);
    }

    std::map<std::pair<int, int>, int> midpoint;
    auto mid = [&](int i, int j) {
        auto key = std::minmax(i, j);
        auto it = midpoint.find(key);
        if (it != midpoint.end()) return it->second;
        V3 m{vs[i].x + vs[j].x, vs[i].y + vs[j].y, vs[i].z + vs[j].z};
        vs.push_back(normalized(m, re));
        int idx = static_cast<int>(vs.size()) - 1;
        midpoint.emplace(key, idx);
        return idx;
    };
    for (int level = 0; level < refinement; ++level) {
        std::vector<std::array<int, 3>> next;
        next.reserve(faces.size() * 4);
        for (const auto& f : faces) {
            int a = mid(f[0], f[1]), b = mid(f[1], f[2]), c = mid(f[2], f[0]);
            next.push_back({f[0], a, c});
            next.push_back({f[1], b, a});
            next.push_back({f[2], c, b});
            next.push_back({a, b, c});
        }
        faces.swap(next);
        midpoint.clear();
    }

    // ball model -> upper half space, an inversion centered at the south
    // pole: orientation-reversing, hence the winding flip afterwards
    SurfaceMesh mesh;
    mesh.vertices.reserve(vs.size());
    for (const auto& v : vs) {
        double D = v.x * v.x + v.y * v.y + (v.z + 1.0) * (v.z + 1.0);
        mesh.vertices.push_back(MeshVertex::finite(2.0 * v.x / D, 2.0 * v.y / D, 2.0 * (v.z + 1.0) / D - 1.0));
    }
    mesh.triangles.reserve(faces.size());
    for (const auto& f : faces) mesh.triangles.push_back({f[0], f[2], f[1]});
    return mesh;
}

SurfaceMesh transformed(const SurfaceMesh& mesh, const Isometry& g) {
    SurfaceMesh out;
    out.triangles = mesh.triangles;
    out.vertices.reserve(mesh.vertices.size());
    for (const auto& v : mesh.vertices) {
        if (v.kind == MeshVertex::Kind::Finite) {
            HPoint p = apply_interior(g, HPoint{v.x, v.y, v.h});
            out.vertices.push_back(MeshVertex::finite(p.x, p.y, p.h));
        } else {
            BPoint p = (v.kind == MeshVertex::Kind::IdealInf) ? BPoint::infinity() : BPoint::at({v.x, v.y});
            BPoint q = apply_boundary(g, p);
            out.vertices.push_back(q.inf ? MeshVertex::infinity() : MeshVertex::ideal(q.z.real(), q.z.imag()));
        }
    }
    return out;
}

SurfaceMesh orientation_reversed(const SurfaceMesh& mesh) {
    SurfaceMesh out;
    out.vertices = mesh.vertices;
    out.triangles.reserve(mesh.triangles.size());
    for (const auto& t : mesh.triangles) out.triangles.push_back({t[0], t[2], t[1]});
    return out;
}

SchlafliResult schlafli_check(const BParams& from, const BParams& to, int steps) {
    if (steps < 1) throw std::invalid_argument("steps must be positive");
    auto at = [&](double s) {
        std::array<double, 4> q{};
        for (int i = 0; i < 4; ++i) q[i] = from.q[i] + s * (to.q[i] - from.q[i]);
        return BParams(q, from.t + s * (to.t - from.t));
    };
    const double ds = 1.0 / steps;
    std::vector<double> V(steps + 1);
    std::vector<std::array<double, 4>> A(steps + 1);
    for (int k = 0; k <= steps; ++k) {
        BParams b = at(k * ds);
        V[k] = structure_volume(b).value;
        A[k] = angles_from_b(b).alpha;
    }
    SchlafliResult res;
    res.steps = steps;
    for (int k = 0; k < steps; ++k) {
        BParams bm = at((k + 0.5) * ds);
        EdgeLengths el = edge_lengths(build_geometry(bm));
        for (bool ideal : el.ideal)
            if (ideal) throw std::invalid_argument("path leaves the finite-edge domain");
        double dV = (V[k + 1] - V[k]) / ds;
        double first_variation = 0.0;
        for (int i = 0; i < 4; ++i)
            first_variation += -0.5 * el.cone[i] * (A[k + 1][i] - A[k][i]) / ds;
        double dev = std::abs(dV - first_variation);
        res.max_abs_dev = std::max(res.max_abs_dev, dev);
        double denom = std::max(std::abs(dV), std::abs(first_variation));
        if (dev > 0.0 && denom > 0.0)
            res.max_rel_dev = std::max(res.max_rel_dev, dev / denom);
    }
    return res;
}

}  // namespace cw
