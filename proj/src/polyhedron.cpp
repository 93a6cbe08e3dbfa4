#include "conewright/polyhedron.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace cw {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double BParams::t_min(const std::array<double, 4>& q) {
    double m = 0.0;
    for (double qi : q) m = std::max(m, 0.5 * (qi - 1.0 / qi));
    return m;
}

BParams::BParams(const std::array<double, 4>& q_, double t_) : q(q_), t(t_) {
    for (double qi : q) {
        if (!(qi > 0.0) || !std::isfinite(qi)) throw std::invalid_argument("side ratios must be positive finite");
    }
    if (!std::isfinite(t) || t < -1e-12) throw std::invalid_argument("height parameter must be nonnegative");
    if (t < 0.0) t = 0.0;
    // renormalize the product to one via the geometric mean
    double gm = std::pow(q[0] * q[1] * q[2] * q[3], 0.25);
    for (double& qi : q) qi /= gm;
    double tm = t_min(q);
    if (t < tm - 1e-9 * (1.0 + tm))
        throw std::invalid_argument("height parameter below the admissible minimum for these side ratios");
    if (t < tm) t = tm;
}

AngleParams angles_from_b(const BParams& b) {
    AngleParams a;
    double den = std::sqrt(1.0 + b.t * b.t);
    for (int i = 0; i < 4; ++i) {
        double c = (b.q[i] - b.t) / den;
        a.alpha[i] = std::acos(std::clamp(c, -1.0, 1.0));
    }
    return a;
}

BParams b_from_angles(const AngleParams& a) {
    std::array<double, 4> c{};
    bool all_zero_angles = true;
    for (int i = 0; i < 4; ++i) {
        if (!(a.alpha[i] >= 0.0) || !(a.alpha[i] < kPi))
            throw std::invalid_argument("angles must lie in [0, pi)");
        c[i] = std::cos(a.alpha[i]);
        if (a.alpha[i] != 0.0) all_zero_angles = false;
    }
    if (all_zero_angles) return BParams({1.0, 1.0, 1.0, 1.0}, 0.0);

    auto q_of = [&](double t) {
        std::array<double, 4> q{};
        double s = std::sqrt(1.0 + t * t);
        for (int i = 0; i < 4; ++i) q[i] = c[i] * s + t;
        return q;
    };
    auto log_prod = [&](double t) {
        double acc = 0.0;
        for (double qi : q_of(t)) {
            if (!(qi > 0.0)) return -std::numeric_limits<double>::infinity();
            acc += std::log(qi);
        }
        return acc;
    };

    // every q_i(t) is positive for t above this bound, and t -> log prod q(t)
    // is strictly increasing from -inf to +inf on that ray
    double t_low = 0.0;
    for (int i = 0; i < 4; ++i)
        if (c[i] < 0.0) t_low = std::max(t_low, -c[i] / std::sqrt(1.0 - c[i] * c[i]));

    double lo = t_low, hi = std::max(2.0 * t_low, t_low + 1.0);
    int guard = 0;
    while (log_prod(hi) < 0.0) {
        lo = hi;
        hi = 2.0 * hi + 1.0;
        if (++guard > 200) throw std::runtime_error("angle inversion failed to bracket");
    }
    // f(lo) <= 0 (by construction or as the -inf end), f(hi) > 0
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        if (log_prod(mid) < 0.0) lo = mid; else hi = mid;
    }
    double t = 0.5 * (lo + hi);
    return BParams(q_of(t), t);
}

TrapezohedronGeometry build_geometry(const BParams& b, double scale) {
    if (!(scale > 0.0)) throw std::invalid_argument("scale must be positive");
    TrapezohedronGeometry g;
    g.b = b;
    g.scale = scale;
    const auto& q = b.q;
    const double t = b.t;

    g.p[0] = scale;
    for (int i = 1; i < 4; ++i) g.p[i] = g.p[i - 1] * q[i - 1];

    g.P = {complexd(g.p[0], g.p[1]), complexd(-g.p[2], g.p[1]),
           complexd(-g.p[2], -g.p[3]), complexd(g.p[0], -g.p[3])};
    g.R = {complexd(g.p[0], t * g.p[0]), complexd(-t * g.p[1], g.p[1]),
           complexd(-g.p[2], -t * g.p[2]), complexd(t * g.p[3], -g.p[3])};
    for (int i = 0; i < 4; ++i) g.rad[i] = std::abs(g.R[i]);

    for (int i = 0; i < 4; ++i) {
        int j = (i + 1) % 4;
        complexd d = g.R[i] - g.R[j];
        complexd n(-d.imag(), d.real());
        double nn = std::norm(n);
        if (!(nn > 0.0)) throw std::runtime_error("coincident hemisphere centers");
        double ndotr = n.real() * g.R[i].real() + n.imag() * g.R[i].imag();
        g.S[i] = (2.0 * ndotr / nn) * n;
        if (std::abs(g.S[i]) < 1e-14 * scale) throw std::runtime_error("degenerate circle intersection");
    }

    for (int i = 0; i < 4; ++i) {
        int j = (i + 1) % 4;
        complexd u = g.S[i];
        complexd Pa = g.P[i];
        complexd dP = g.P[j] - g.P[i];
        // solve s*u = Pa + w*dP
        double det = u.real() * (-dP.imag()) - (-dP.real()) * u.imag();
        if (std::abs(det) < 1e-14 * std::abs(u) * std::abs(dP))
            throw std::runtime_error("cone-edge foot is indeterminate");
        double s = (Pa.real() * (-dP.imag()) - (-dP.real()) * Pa.imag()) / det;
        g.Q[i] = s * u;
    }

    auto lift = [&](complexd z, int i) {
        double h2 = g.rad[i] * g.rad[i] - std::norm(z - g.R[i]);
        HPoint out;
        out.x = z.real();
        out.y = z.imag();
        out.h = std::sqrt(std::max(h2, 0.0));
        return out;
    };
    for (int i = 0; i < 4; ++i) {
        g.Ptilde[i] = lift(g.P[i], i);
        g.Qtilde[i] = lift(g.Q[i], i);
    }

    double den = std::sqrt(1.0 + t * t);
    for (int i = 0; i < 4; ++i) {
        g.alpha[i] = std::acos(std::clamp((q[i] - t) / den, -1.0, 1.0));
        int j = (i + 1) % 4;
        g.holed[i] = (1.0 - q[i] * q[j]) * t >= q[i] + q[j];
        g.wall[i] = Plane::vertical(g.P[i], g.P[j] - g.P[i]);
        g.dome[i] = Plane::hemisphere(g.R[i], g.rad[i]);
    }
    return g;
}

DihedralReport check_dihedrals(const TrapezohedronGeometry& g) {
    DihedralReport rep;
    rep.cone_expected = g.alpha;
    HPoint inside{0.0, 0.0, g.scale};  // interior of every face's half-space
    for (int i = 0; i < 4; ++i) {
        int j = (i + 1) % 4;
        int k = (i + 3) % 4;
        // cone edge: wall[i] ^ dome[i], expected alpha[i]; skip near-tangent pairs
        if (g.alpha[i] > 1e-6 && g.alpha[i] < kPi - 1e-6) {
            double m = dihedral_angle(g.wall[i], g.dome[i], inside);
            rep.cone_measured[i] = m;
            rep.max_cone_error = std::max(rep.max_cone_error, std::abs(m - g.alpha[i]));
            ++rep.cone_checked;
        } else {
            rep.cone_measured[i] = std::numeric_limits<double>::quiet_NaN();
        }
        // right-angled edge classes
        double a1 = dihedral_angle(g.wall[k], g.wall[i], inside);   // vertical edge at P[i]
        double a2 = dihedral_angle(g.wall[i], g.dome[j], inside);   // slant edge
        double a3 = dihedral_angle(g.dome[i], g.dome[j], inside);   // bottom edge
        for (double a : {a1, a2, a3})
            rep.max_right_error = std::max(rep.max_right_error, std::abs(a - kPi / 2.0));
    }
    return rep;
}

EdgeLengths edge_lengths(const TrapezohedronGeometry& g) {
    EdgeLengths el;
    for (int i = 0; i < 4; ++i) {
        double hmin = std::min(g.Ptilde[i].h, g.Qtilde[i].h);
        if (hmin < 1e-10 * g.rad[i]) {
            el.ideal[i] = true;
            el.cone[i] = std::numeric_limits<double>::infinity();
        } else {
            el.ideal[i] = false;
            el.cone[i] = distance(g.Ptilde[i], g.Qtilde[i]);
        }
    }
    return el;
}

namespace {
MeshVertex lifted_vertex(const HPoint& p, double ideal_below) {
    if (p.h < ideal_below) return MeshVertex::ideal(p.x, p.y);
    return MeshVertex::finite(p.x, p.y, p.h);
}
}  // namespace

SurfaceMesh boundary_mesh(const TrapezohedronGeometry& g) {
    SurfaceMesh m;
    m.vertices.reserve(10);
    m.vertices.push_back(MeshVertex::infinity());   // 0
    m.vertices.push_back(MeshVertex::ideal(0, 0));  // 1: origin corner
    int Pt[4], Qt[4];
    for (int i = 0; i < 4; ++i) {
        double ideal_below = 1e-10 * g.rad[i];  // tangency degeneration threshold
        Pt[i] = static_cast<int>(m.vertices.size());
        m.vertices.push_back(lifted_vertex(g.Ptilde[i], ideal_below));
        Qt[i] = static_cast<int>(m.vertices.size());
        m.vertices.push_back(lifted_vertex(g.Qtilde[i], ideal_below));
    }
    for (int i = 0; i < 4; ++i) {
        int j = (i + 1) % 4;
        // wall quad (inf, Pt_i, Qt_i, Pt_j), diagonal from inf
        m.triangles.push_back({0, Pt[i], Qt[i]});
        m.triangles.push_back({0, Qt[i], Pt[j]});
        // hemisphere quad (O, Qt_j, Pt_j, Qt_i), diagonal from O
        m.triangles.push_back({1, Qt[j], Pt[j]});
        m.triangles.push_back({1, Pt[j], Qt[i]});
    }
    return m;
}

std::vector<int> coincident_representatives(const SurfaceMesh& mesh, double coincide_tol) {
    const int n = static_cast<int>(mesh.vertices.size());
    std::vector<int> rep(n);
    for (int i = 0; i < n; ++i) rep[i] = i;
    auto find = [&](int i) {
        while (rep[i] != i) { rep[i] = rep[rep[i]]; i = rep[i]; }
        return i;
    };
    auto unite = [&](int i, int j) {
        i = find(i); j = find(j);
        if (i == j) return;
        if (i < j) rep[j] = i; else rep[i] = j;
    };
    // bucket by quantized position so large meshes stay near-linear
    double cell = std::max(coincide_tol, 1e-300);
    std::map<std::array<long long, 3>, std::vector<int>> grid;
    int first_inf = -1;
    for (int i = 0; i < n; ++i) {
        const MeshVertex& v = mesh.vertices[i];
        if (v.kind == MeshVertex::Kind::IdealInf) {
            if (first_inf < 0) first_inf = i; else unite(first_inf, i);
            continue;
        }
        std::array<long long, 3> key{static_cast<long long>(std::floor(v.x / cell)),
                                     static_cast<long long>(std::floor(v.y / cell)),
                                     static_cast<long long>(std::floor(v.h / cell))};
        for (long long dx = -1; dx <= 1; ++dx)
            for (long long dy = -1; dy <= 1; ++dy)
                for (long long dh = -1; dh <= 1; ++dh) {
                    auto it = grid.find({key[0] + dx, key[1] + dy, key[2] + dh});
                    if (it == grid.end()) continue;
                    for (int j : it->second) {
                        const MeshVertex& w = mesh.vertices[j];
                        double ddx = v.x - w.x, ddy = v.y - w.y, ddh = v.h - w.h;
                        if (std::sqrt(ddx * ddx + ddy * ddy + ddh * ddh) <= coincide_tol) unite(i, j);
                    }
                }
        grid[key].push_back(i);
    }
    for (int i = 0; i < n; ++i) rep[i] = find(i);
    return rep;
}

MeshCheck validate_mesh(const SurfaceMesh& mesh, double coincide_tol) {
    const int n = static_cast<int>(mesh.vertices.size());
    std::vector<int> rep = coincident_representatives(mesh, coincide_tol);

    MeshCheck out;
    std::map<std::pair<int, int>, int> directed;
    int tri_count = 0;
    std::vector<bool> used(n, false);
    for (const auto& t : mesh.triangles) {
        int a = rep[t[0]], b = rep[t[1]], c = rep[t[2]];
        if (a == b || b == c || a == c) continue;  // collapsed triangle
        ++tri_count;
        used[a] = used[b] = used[c] = true;
        directed[{a, b}] += 1;
        directed[{b, c}] += 1;
        directed[{c, a}] += 1;
    }
    out.effective_triangles = tri_count;
    for (int i = 0; i < n; ++i)
        if (used[i]) ++out.effective_vertices;

    bool closed = true, oriented = true;
    int edge_count = 0;
    for (const auto& [e, cnt] : directed) {
        if (cnt != 1) oriented = false;  // repeated directed edge
        if (e.first < e.second) {
            ++edge_count;
            auto it = directed.find({e.second, e.first});
            int back = (it == directed.end()) ? 0 : it->second;
            if (cnt + back != 2 || cnt != 1 || back != 1) closed = false;
        } else if (directed.find({e.second, e.first}) == directed.end()) {
            ++edge_count;  // only the reversed-order copy exists
            closed = false;
        }
    }
    out.effective_edges = edge_count;
    out.closed = closed && oriented && tri_count > 0;
    out.oriented = oriented;
    out.euler_characteristic = out.effective_vertices - out.effective_edges + out.effective_triangles;
    return out;
}

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

BParams random_b(std::mt19937_64& rng) {
    std::array<double, 4> q{};
    for (double& v : q) v = std::exp(1.8 * (uniform01(rng) - 0.5));
    double mean = std::pow(q[0] * q[1] * q[2] * q[3], 0.25);
    for (double& v : q) v /= mean;
    const double floor_t = BParams::t_min(q);
    const double t = floor_t + (0.01 + 3.0 * uniform01(rng)) * (1.0 + floor_t);
    return BParams(q, t);
}

BParams random_b_nonholed(std::mt19937_64& rng, double alpha_margin) {
    if (!(alpha_margin >= 0) || alpha_margin >= 1.5)
        throw std::invalid_argument("angle margin out of range");
    const double cmax = std::cos(alpha_margin);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        const BParams b = random_b(rng);
        bool ok = true;
        for (int i = 0; i < 4 && ok; ++i) {
            const int j = (i + 1) % 4;
            if ((1.0 - b.q[i] * b.q[j]) * b.t >= b.q[i] + b.q[j]) ok = false;  // holed
            const double c = (b.q[i] - b.t) / std::sqrt(1.0 + b.t * b.t);
            if (std::abs(c) > cmax) ok = false;  // angle too close to 0 or pi
        }
        if (ok) return b;
    }
    throw std::runtime_error("could not sample a non-holed shape with the requested angle margin");
}

}  // namespace cw
