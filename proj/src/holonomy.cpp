#include "conewright/holonomy.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace cw {

namespace {

const GaussInt kOne{1, 0};
const GaussInt kZero{0, 0};

void require_unit_det(const ExactMatrix& m) {
    if (!(m.det() == kOne)) throw std::invalid_argument("exact matrix determinant must be one");
}

using Gf2Matrix = std::vector<std::vector<uint8_t>>;

// Solve m x = s over GF(2).  Returns false when inconsistent; otherwise
// writes one solution (free variables zero).
bool gf2_solve(Gf2Matrix m, std::vector<uint8_t> s, std::vector<uint8_t>& x) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int row = rank; row < rows; ++row) {
            if (m[row][col]) {
                pivot = row;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        std::swap(s[rank], s[pivot]);
        for (int row = 0; row < rows; ++row) {
            if (row != rank && m[row][col]) {
                for (int j = col; j < cols; ++j) m[row][j] ^= m[rank][j];
                s[row] ^= s[rank];
            }
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (int row = rank; row < rows; ++row) {
        if (s[row]) return false;
    }
    x.assign(cols, 0);
    for (int i = 0; i < rank; ++i) x[pivot_col[i]] = s[i];
    return true;
}

ExactMatrix exact_power(const ExactMatrix& m, int e) {
    ExactMatrix base = e >= 0 ? m : m.inverse();
    int k = std::abs(e);
    ExactMatrix acc{kOne, kZero, kZero, kOne};
    for (int i = 0; i < k; ++i) acc = acc * base;
    return acc;
}

ExactMatrix evaluate_exact(const Presentation::Word& word,
                           const std::map<std::string, ExactMatrix>& images) {
    ExactMatrix acc{kOne, kZero, kZero, kOne};
    for (const auto& [gen, exp] : word) {
        auto it = images.find(gen);
        if (it == images.end()) throw std::invalid_argument("unknown generator: " + gen);
        acc = acc * exact_power(it->second, exp);
    }
    return acc;
}

Isometry float_power(const Isometry& m, int e) {
    Isometry base = e >= 0 ? m : m.inverse();
    int k = std::abs(e);
    Isometry acc = Isometry::identity();
    for (int i = 0; i < k; ++i) acc = compose(acc, base);
    return acc;
}

Isometry evaluate_float(const Presentation::Word& word, const std::map<std::string, Isometry>& images) {
    Isometry acc = Isometry::identity();
    for (const auto& [gen, exp] : word) {
        auto it = images.find(gen);
        if (it == images.end()) throw std::invalid_argument("unknown generator: " + gen);
        acc = compose(acc, float_power(it->second, exp));
    }
    return acc;
}

// Raw unit-determinant 2x2 products.  Isometry composition renormalizes the
// matrix sign, which is exactly the information a relator's lift sign lives
// in, so the sign computation multiplies plain matrices instead.
struct RawMatrix {
    complexd a, b, c, d;
};

RawMatrix raw_mul(const RawMatrix& x, const RawMatrix& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

RawMatrix raw_power(const RawMatrix& m, int e) {
    // adjugate inverts a unit-determinant matrix without touching its sign
    const RawMatrix base = e >= 0 ? m : RawMatrix{m.d, -m.b, -m.c, m.a};
    RawMatrix acc{1.0, 0.0, 0.0, 1.0};
    for (int i = std::abs(e); i > 0; --i) acc = raw_mul(acc, base);
    return acc;
}

RawMatrix evaluate_float_raw(const Presentation::Word& word,
                             const std::map<std::string, Isometry>& images) {
    RawMatrix acc{1.0, 0.0, 0.0, 1.0};
    for (const auto& [gen, exp] : word) {
        auto it = images.find(gen);
        if (it == images.end()) throw std::invalid_argument("unknown generator: " + gen);
        acc = raw_mul(acc, raw_power({it->second.a, it->second.b, it->second.c, it->second.d}, exp));
    }
    return acc;
}

// Entrywise max distance of a 2x2 matrix from +-identity, reported per sign.
void distances_to_signed_identity(const RawMatrix& g, double& to_plus, double& to_minus) {
    auto entry_dist = [](complexd u, complexd v) { return std::abs(u - v); };
    const double off = std::max(entry_dist(g.b, {0, 0}), entry_dist(g.c, {0, 0}));
    to_plus = std::max({entry_dist(g.a, {1, 0}), entry_dist(g.d, {1, 0}), off});
    to_minus = std::max({entry_dist(g.a, {-1, 0}), entry_dist(g.d, {-1, 0}), off});
}

// Fixed boundary point of a parabolic element.
BPoint parabolic_fixed_point(const Isometry& g) {
    const double scale = std::abs(g.a) + std::abs(g.d);
    if (std::abs(g.c) <= 1e-12 * scale) return BPoint::infinity();
    return BPoint::at((g.a - g.d) / (2.0 * g.c));
}

bool commute_within(const Isometry& g, const Isometry& h, double tol) {
    return psl_distance(compose(g, h), compose(h, g)) <= tol;
}

}  // namespace

ExactMatrix ExactMatrix::inverse() const {
    require_unit_det(*this);
    return {d, -b, -c, a};
}

ExactMatrix operator*(const ExactMatrix& m, const ExactMatrix& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
            m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

bool operator==(const ExactMatrix& m, const ExactMatrix& n) {
    return m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d;
}

bool ExactMatrix::is_one() const {
    return a == kOne && d == kOne && b == kZero && c == kZero;
}

bool ExactMatrix::is_minus_one() const {
    return a == -kOne && d == -kOne && b == kZero && c == kZero;
}

Isometry ExactMatrix::to_isometry() const {
    require_unit_det(*this);
    return Isometry(complexd(static_cast<double>(a.re), static_cast<double>(a.im)),
                    complexd(static_cast<double>(b.re), static_cast<double>(b.im)),
                    complexd(static_cast<double>(c.re), static_cast<double>(c.im)),
                    complexd(static_cast<double>(d.re), static_cast<double>(d.im)));
}

std::vector<bool> verify_presentation(const Presentation& p, const RepAssignment& r, double tol) {
    std::vector<bool> ok;
    ok.reserve(p.relators.size());
    if (r.exact) {
        for (const auto& [gen, m] : r.exact_images) {
            (void)gen;
            require_unit_det(m);
        }
        for (const auto& rel : p.relators) {
            const ExactMatrix w = evaluate_exact(rel, r.exact_images);
            ok.push_back(w.is_one() || w.is_minus_one());
        }
    } else {
        for (const auto& rel : p.relators) {
            const Isometry w = evaluate_float(rel, r.images);
            ok.push_back(psl_distance(w, Isometry::identity()) <= tol);
        }
    }
    return ok;
}

LiftResult lift_obstruction(const Presentation& p, const RepAssignment& r) {
    LiftResult out;
    const int ng = static_cast<int>(p.generators.size());
    const int nr = static_cast<int>(p.relators.size());
    std::map<std::string, int> gen_index;
    for (int i = 0; i < ng; ++i) gen_index[p.generators[i]] = i;

    out.parity.assign(nr, std::vector<uint8_t>(ng, 0));
    out.signs.assign(nr, 0);
    for (int k = 0; k < nr; ++k) {
        for (const auto& [gen, exp] : p.relators[k]) {
            auto it = gen_index.find(gen);
            if (it == gen_index.end()) throw std::invalid_argument("unknown generator: " + gen);
            out.parity[k][it->second] ^= static_cast<uint8_t>(((exp % 2) + 2) % 2);
        }
        if (r.exact) {
            const ExactMatrix w = evaluate_exact(p.relators[k], r.exact_images);
            if (w.is_one())
                out.signs[k] = 0;
            else if (w.is_minus_one())
                out.signs[k] = 1;
            else
                throw std::invalid_argument("relator does not evaluate to plus or minus the identity");
        } else {
            const RawMatrix w = evaluate_float_raw(p.relators[k], r.images);
            double to_plus = 0, to_minus = 0;
            distances_to_signed_identity(w, to_plus, to_minus);
            if (std::min(to_plus, to_minus) > 1e-10)
                throw std::invalid_argument("relator does not evaluate to plus or minus the identity");
            out.signs[k] = to_minus < to_plus ? 1 : 0;
        }
    }

    // Flipping the sign of generator i flips every relator whose exponent
    // sum on i is odd, so the solvability of parity * flips = signs does not
    // depend on which matrix lift of each image was given.
    std::vector<uint8_t> x;
    if (gf2_solve(out.parity, out.signs, x)) {
        out.liftable = true;
        out.flips = std::move(x);
        out.note = "sign flips found";
    } else {
        out.liftable = false;
        out.flips.assign(ng, 0);
        out.note = "sign system is inconsistent";
    }
    return out;
}

ConeVerdict cone_conditions(const Isometry& mu, const Isometry& lambda, double tol) {
    ConeVerdict v;
    const IsomClass cmu = classify(mu);
    const IsomClass clam = classify(lambda);

    if (cmu.kind == IsomClass::Kind::Parabolic && clam.kind == IsomClass::Kind::Parabolic) {
        if (!commute_within(mu, lambda, tol)) {
            v.kind = ConeVerdict::Kind::Fails;
            v.reason = "non-commuting";
            return v;
        }
        const BPoint p = parabolic_fixed_point(mu);
        Isometry k = Isometry::identity();
        if (!p.inf) k = Isometry(complexd(0), complexd(1), complexd(1), -p.z);
        const Isometry mu2 = compose(compose(k, mu), k.inverse());
        const Isometry la2 = compose(compose(k, lambda), k.inverse());
        const double scale_mu = std::abs(mu2.a) + std::abs(mu2.d);
        const double scale_la = std::abs(la2.a) + std::abs(la2.d);
        if (std::abs(mu2.c) > tol * scale_mu || std::abs(la2.c) > tol * scale_la) {
            v.kind = ConeVerdict::Kind::Fails;
            v.reason = "skew axes";
            return v;
        }
        const complexd tau_mu = mu2.b / mu2.d;
        const complexd tau_la = la2.b / la2.d;
        const double cross = std::abs((std::conj(tau_mu) * tau_la).imag());
        if (cross > tol * std::abs(tau_mu) * std::abs(tau_la)) {
            v.kind = ConeVerdict::Kind::ParabolicRankTwo;
            return v;
        }
        v.kind = ConeVerdict::Kind::Fails;
        v.reason = "rank one";
        return v;
    }

    if (clam.kind != IsomClass::Kind::Loxodromic) {
        v.kind = ConeVerdict::Kind::Fails;
        v.reason = "trace of lambda in [-2,2]";
        return v;
    }
    if (cmu.kind == IsomClass::Kind::Parabolic || cmu.kind == IsomClass::Kind::Loxodromic) {
        v.kind = ConeVerdict::Kind::Fails;
        v.reason = "mu not elliptic or identity";
        return v;
    }

    if (cmu.kind == IsomClass::Kind::Identity) {
        v.kind = ConeVerdict::Kind::ConePair;
        v.angle = 0.0;
        v.length = clam.length;
        v.twist = clam.twist;
        return v;
    }

    // mu elliptic: its rotation axis must be lambda's axis.
    const Geodesic axl = axis(lambda);
    const Geodesic axm = axis(mu);
    auto close = [&](const BPoint& s, const BPoint& t) {
        if (s.inf || t.inf) return s.inf && t.inf;
        return std::abs(s.z - t.z) <= tol * (1.0 + std::max(std::abs(s.z), std::abs(t.z)));
    };
    const bool straight = close(axm.p0, axl.p0) && close(axm.p1, axl.p1);
    const bool crossed = close(axm.p0, axl.p1) && close(axm.p1, axl.p0);
    if (!straight && !crossed) {
        v.kind = ConeVerdict::Kind::Fails;
        v.reason = "skew axes";
        return v;
    }
    if (!commute_within(mu, lambda, tol)) {
        v.kind = ConeVerdict::Kind::Fails;
        v.reason = "non-commuting";
        return v;
    }

    v.kind = ConeVerdict::Kind::ConePair;
    v.angle = rotation_angle_about(mu, axl, tol);
    v.length = clam.length;
    v.twist = clam.twist;
    return v;
}

std::array<double, 4> prop_angle_witness(const std::array<double, 4>& theta, const std::array<int, 4>& k) {
    constexpr double kTwoPi = 6.283185307179586476925286766559;
    std::array<double, 4> out{};
    for (int i = 0; i < 4; ++i) {
        out[i] = theta[i] + 2.0 * kTwoPi * k[i];
        if (!(out[i] > 0.0)) throw std::invalid_argument("shifted cone angle must stay positive");
    }
    return out;
}

}  // namespace cw
