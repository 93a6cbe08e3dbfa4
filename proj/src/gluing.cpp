#include "conewright/gluing.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace cw {

namespace {

constexpr double kIdentityTol = 1e-9;
constexpr double kAngleTol = 1e-8;
constexpr double kEndpointTol = 1e-8;
constexpr double kPlaneTol = 1e-8;
constexpr double kPi = 3.14159265358979323846264338328;

bool boundary_close(const BPoint& s, const BPoint& t, double tol) {
    if (s.inf || t.inf) return s.inf && t.inf;
    return std::abs(s.z - t.z) <= tol * (1.0 + std::max(std::abs(s.z), std::abs(t.z)));
}

int named_index(const std::string& symbol, char prefix) {
    if (symbol.size() == 2 && symbol[0] == prefix && symbol[1] >= '1' && symbol[1] <= '4')
        return symbol[1] - '1';
    return -1;
}

const GluingSpec::Pairing& find_pairing(const GluingSpec& spec, const std::string& id) {
    for (const auto& p : spec.pairings) {
        if (p.id == id) return p;
    }
    throw std::invalid_argument("unknown pairing: " + id);
}

std::array<BPoint, 3> face_anchors(const GluingSpec& spec, const TrapezohedronGeometry& g, int copy,
                                   const std::string& face) {
    if (copy < 0 || copy >= spec.copies) throw std::invalid_argument("copy index out of range");
    auto it = spec.faces.find(face);
    if (it == spec.faces.end()) throw std::invalid_argument("unknown face: " + face);
    const bool mirror = spec.mirrored.at(copy);
    return {resolve_anchor(g, it->second[0], mirror), resolve_anchor(g, it->second[1], mirror),
            resolve_anchor(g, it->second[2], mirror)};
}

}  // namespace

BPoint resolve_anchor(const TrapezohedronGeometry& g, const std::string& symbol, bool mirrored) {
    BPoint p;
    if (symbol == "inf") {
        p = BPoint::infinity();
    } else if (symbol == "O") {
        p = BPoint::at(complexd(0.0, 0.0));
    } else if (int i = named_index(symbol, 'P'); i >= 0) {
        p = BPoint::at(g.P[i]);
    } else if (int i = named_index(symbol, 'S'); i >= 0) {
        p = BPoint::at(g.S[i]);
    } else {
        const auto comma = symbol.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("unknown anchor symbol: " + symbol);
        size_t used_re = 0, used_im = 0;
        double re = 0, im = 0;
        try {
            re = std::stod(symbol.substr(0, comma), &used_re);
            im = std::stod(symbol.substr(comma + 1), &used_im);
        } catch (const std::exception&) {
            throw std::invalid_argument("unknown anchor symbol: " + symbol);
        }
        if (used_re != comma || used_im != symbol.size() - comma - 1)
            throw std::invalid_argument("unknown anchor symbol: " + symbol);
        p = BPoint::at(complexd(re, im));
    }
    if (mirrored && !p.inf) p.z = std::conj(p.z);
    return p;
}

Isometry pairing_isometry(const GluingSpec& spec, const TrapezohedronGeometry& g,
                          const std::string& pairing_id) {
    const auto& pr = find_pairing(spec, pairing_id);
    const std::array<BPoint, 3> src = face_anchors(spec, g, pr.src_copy, pr.src_face);
    const std::array<BPoint, 3> dst = face_anchors(spec, g, pr.dst_copy, pr.dst_face);
    const Isometry iso = isometry_from_boundary_triples(src.data(), dst.data());

    // The three anchors determine both carrier planes; confirm the map sends
    // further points of the source carrier onto the target carrier.
    const Plane src_plane = plane_through(src[0], src[1], src[2]);
    const Plane dst_plane = plane_through(dst[0], dst[1], dst[2]);
    for (int k = 0; k < 3; ++k) {
        const BPoint sample = sample_plane_boundary(src_plane, k);
        const BPoint image = apply_boundary(iso, sample);
        if (!on_plane_boundary(dst_plane, image, kPlaneTol))
            throw std::runtime_error("pairing " + pairing_id +
                                     " does not carry its source plane onto its target plane");
    }
    return iso;
}

Geodesic edge_geodesic(const TrapezohedronGeometry& g, const std::string& edge_type, int index) {
    if (index < 1 || index > 4) throw std::invalid_argument("edge index out of range");
    const int i = index - 1;
    const int j = (i + 1) % 4;
    if (edge_type == "vertical") return Geodesic{BPoint::at(g.P[i]), BPoint::infinity()};
    if (edge_type == "bottom") return Geodesic{BPoint::at(complexd(0.0, 0.0)), BPoint::at(g.S[i])};
    if (edge_type == "cone") {
        const complexd u = (g.P[j] - g.P[i]) / std::abs(g.P[j] - g.P[i]);
        const complexd rel = g.R[i] - g.P[i];
        const double along = (std::conj(u) * rel).real();
        const complexd foot = g.P[i] + along * u;
        const double h2 = g.rad[i] * g.rad[i] - std::norm(g.R[i] - foot);
        if (h2 <= 0.0) throw std::runtime_error("cone edge is degenerate at this parameter");
        const double h = std::sqrt(h2);
        return Geodesic{BPoint::at(foot - h * u), BPoint::at(foot + h * u)};
    }
    if (edge_type == "slant") {
        const complexd u = (g.P[j] - g.P[i]) / std::abs(g.P[j] - g.P[i]);
        return Geodesic{BPoint::at(g.R[j] - g.rad[j] * u), BPoint::at(g.R[j] + g.rad[j] * u)};
    }
    throw std::invalid_argument("unknown edge type: " + edge_type);
}

Isometry holonomy_word(const GluingSpec& spec, const TrapezohedronGeometry& g,
                       const std::vector<GluingStep>& word) {
    Isometry acc = Isometry::identity();
    for (const auto& step : word) {
        if (step.dir != 1 && step.dir != -1) throw std::invalid_argument("step direction must be +-1");
        const Isometry iso = pairing_isometry(spec, g, step.pairing);
        acc = compose(acc, step.dir == 1 ? iso.inverse() : iso);
    }
    return acc;
}

EdgeReport edge_cycle_composite(const GluingSpec& spec, const TrapezohedronGeometry& g,
                                const std::string& edge_id) {
    const GluingSpec::EdgeCycle* cycle = nullptr;
    for (const auto& c : spec.edge_cycles) {
        if (c.id == edge_id) {
            cycle = &c;
            break;
        }
    }
    if (!cycle) throw std::invalid_argument("unknown edge cycle: " + edge_id);

    EdgeReport rep;
    rep.edge_id = cycle->id;
    rep.identity_target = cycle->identity_target;
    rep.composite = holonomy_word(spec, g, cycle->steps);
    rep.cls = classify(rep.composite);

    const Geodesic edge = edge_geodesic(g, cycle->edge_type, cycle->index);
    const BPoint im0 = apply_boundary(rep.composite, edge.p0);
    const BPoint im1 = apply_boundary(rep.composite, edge.p1);
    rep.endpoints_fixed =
        boundary_close(im0, edge.p0, kEndpointTol) && boundary_close(im1, edge.p1, kEndpointTol);

    if (cycle->identity_target) {
        rep.target_angle = 0.0;
        rep.deviation = psl_distance(rep.composite, Isometry::identity());
        rep.pass = rep.deviation <= kIdentityTol;
    } else {
        const double full = 2.0 * g.alpha[cycle->index - 1];
        rep.target_angle = std::min(full, 2.0 * kPi - full);
        rep.deviation = std::abs(rep.cls.angle - rep.target_angle);
        rep.pass = rep.cls.kind == IsomClass::Kind::Elliptic && rep.deviation <= kAngleTol &&
                   rep.endpoints_fixed;
    }
    return rep;
}

std::vector<EdgeReport> check_all_edges(const GluingSpec& spec, const TrapezohedronGeometry& g) {
    std::vector<EdgeReport> out;
    out.reserve(spec.edge_cycles.size());
    for (const auto& c : spec.edge_cycles) out.push_back(edge_cycle_composite(spec, g, c.id));
    return out;
}

GluingSpec wedge_spec(int k, double theta) {
    if (k < 1) throw std::invalid_argument("wedge count must be positive");
    if (!(theta > 0.0) || !(theta < 2.0 * kPi))
        throw std::invalid_argument("wedge angle must lie in (0, 2 pi)");
    GluingSpec s;
    s.copies = k;
    s.mirrored.assign(k, false);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g,%.17g", std::cos(theta), std::sin(theta));
    s.faces["A"] = {"0,0", "inf", "1,0"};
    s.faces["B"] = {"0,0", "inf", std::string(buf)};
    for (int j = 0; j < k; ++j) {
        GluingSpec::Pairing p;
        p.id = "W" + std::to_string(j);
        p.src_copy = j;
        p.src_face = "B";
        p.dst_copy = (j + 1) % k;
        p.dst_face = "A";
        s.pairings.push_back(std::move(p));
    }
    return s;
}

namespace {

GluingStep parse_step(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("step must be [pairing, dir]");
    GluingStep s;
    s.pairing = j.at(0).get<std::string>();
    s.dir = j.at(1).get<int>();
    if (s.dir != 1 && s.dir != -1) throw std::invalid_argument("step direction must be +-1");
    return s;
}

std::vector<GluingStep> parse_steps(const nlohmann::json& j) {
    std::vector<GluingStep> out;
    for (const auto& e : j) out.push_back(parse_step(e));
    return out;
}

}  // namespace

GluingSpec parse_gluing_spec(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("gluing data is not valid JSON: ") + e.what());
    }
    try {
        if (!j.contains("schema") || j.at("schema").get<std::string>() != "gluing/1")
            throw std::invalid_argument("expected schema gluing/1");
        GluingSpec s;
        s.copies = j.at("copies").get<int>();
        if (s.copies < 1) throw std::invalid_argument("copies must be positive");
        for (const auto& b : j.at("mirrored")) s.mirrored.push_back(b.get<bool>());
        if (static_cast<int>(s.mirrored.size()) != s.copies)
            throw std::invalid_argument("mirrored list must have one entry per copy");
        for (const auto& [face, anchors] : j.at("faces").items()) {
            if (!anchors.is_array() || anchors.size() != 3)
                throw std::invalid_argument("each face needs exactly three anchors");
            s.faces[face] = {anchors.at(0).get<std::string>(), anchors.at(1).get<std::string>(),
                             anchors.at(2).get<std::string>()};
        }
        for (const auto& p : j.at("pairings")) {
            GluingSpec::Pairing pr;
            pr.id = p.at("id").get<std::string>();
            pr.src_copy = p.at("src").at(0).get<int>();
            pr.src_face = p.at("src").at(1).get<std::string>();
            pr.dst_copy = p.at("dst").at(0).get<int>();
            pr.dst_face = p.at("dst").at(1).get<std::string>();
            if (pr.src_copy < 0 || pr.src_copy >= s.copies || pr.dst_copy < 0 || pr.dst_copy >= s.copies)
                throw std::invalid_argument("pairing copy index out of range");
            if (!s.faces.count(pr.src_face) || !s.faces.count(pr.dst_face))
                throw std::invalid_argument("pairing references an unknown face");
            s.pairings.push_back(std::move(pr));
        }
        if (j.contains("edge_cycles")) {
            for (const auto& c : j.at("edge_cycles")) {
                GluingSpec::EdgeCycle ec;
                ec.id = c.at("id").get<std::string>();
                ec.edge_type = c.at("edge").at(0).get<std::string>();
                ec.index = c.at("edge").at(1).get<int>();
                const std::string target = c.at("target").get<std::string>();
                if (target == "identity")
                    ec.identity_target = true;
                else if (target == "cone")
                    ec.identity_target = false;
                else
                    throw std::invalid_argument("edge target must be identity or cone");
                ec.steps = parse_steps(c.at("steps"));
                s.edge_cycles.push_back(std::move(ec));
            }
        }
        auto parse_words = [&](const char* key, std::vector<GluingSpec::Word>& out) {
            if (!j.contains(key)) return;
            for (const auto& w : j.at(key)) {
                GluingSpec::Word word;
                word.id = w.at("id").get<std::string>();
                word.locus = w.at("locus").get<int>();
                word.steps = parse_steps(w.at("steps"));
                out.push_back(std::move(word));
            }
        };
        parse_words("meridians", s.meridians);
        parse_words("longitudes", s.longitudes);
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed gluing data: ") + e.what());
    }
}

namespace detail {
extern const char* const kWeave4Json;
}

const GluingSpec& builtin_weave4() {
    static const GluingSpec spec = parse_gluing_spec(detail::kWeave4Json);
    return spec;
}

}  // namespace cw
