#include "conewright/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace cw {

namespace {

ojson xy(const complexd& z) { return ojson::array({z.real(), z.imag()}); }

ojson xyh(const HPoint& p) { return ojson::array({p.x, p.y, p.h}); }

template <typename T, size_t N>
ojson arr(const std::array<T, N>& a) {
    ojson out = ojson::array();
    for (const auto& v : a) out.push_back(v);
    return out;
}

template <size_t N>
ojson arr(const std::array<complexd, N>& a) {
    ojson out = ojson::array();
    for (const auto& v : a) out.push_back(xy(v));
    return out;
}

template <size_t N>
ojson arr(const std::array<HPoint, N>& a) {
    ojson out = ojson::array();
    for (const auto& v : a) out.push_back(xyh(v));
    return out;
}

void check_schema(const nlohmann::json& j, const char* expected) {
    if (j.contains("schema")) {
        const std::string s = j.at("schema").get<std::string>();
        if (s != expected)
            throw std::invalid_argument(std::string("expected schema ") + expected + ", got " + s);
    }
}

std::array<double, 4> four_doubles(const nlohmann::json& j, const char* what) {
    if (!j.is_array() || j.size() != 4)
        throw std::invalid_argument(std::string(what) + " must be an array of four numbers");
    std::array<double, 4> out{};
    for (int i = 0; i < 4; ++i) out[i] = j.at(i).get<double>();
    return out;
}

long long exact_entry(const nlohmann::json& j) {
    const double v = j.get<double>();
    const double r = std::nearbyint(v);
    if (v != r || std::abs(v) > 9e15)
        throw std::invalid_argument("exact matrices require integer entries");
    return static_cast<long long>(r);
}

}  // namespace

ojson to_json(const BParams& b) {
    ojson j;
    j["q"] = arr(b.q);
    j["t"] = b.t;
    return j;
}

ojson to_json(const AngleParams& a) {
    ojson j;
    j["alpha"] = arr(a.alpha);
    return j;
}

ojson to_json(const TrapezohedronGeometry& g) {
    ojson j;
    j["schema"] = "geometry/1";
    j["b"] = to_json(g.b);
    j["scale"] = g.scale;
    j["p"] = arr(g.p);
    j["P"] = arr(g.P);
    j["R"] = arr(g.R);
    j["rad"] = arr(g.rad);
    j["S"] = arr(g.S);
    j["Q"] = arr(g.Q);
    j["Ptilde"] = arr(g.Ptilde);
    j["Qtilde"] = arr(g.Qtilde);
    j["alpha"] = arr(g.alpha);
    ojson holed = ojson::array();
    for (bool h : g.holed) holed.push_back(h);
    j["holed"] = holed;
    return j;
}

ojson to_json(const DihedralReport& r) {
    ojson j;
    j["cone_measured"] = arr(r.cone_measured);
    j["cone_expected"] = arr(r.cone_expected);
    j["max_cone_error"] = r.max_cone_error;
    j["max_right_error"] = r.max_right_error;
    j["cone_checked"] = r.cone_checked;
    return j;
}

ojson to_json(const SignedVolume& v) {
    ojson j;
    j["value"] = v.value;
    j["est_error"] = v.est_error;
    return j;
}

ojson to_json(const SchlafliResult& r) {
    ojson j;
    j["max_rel_dev"] = r.max_rel_dev;
    j["max_abs_dev"] = r.max_abs_dev;
    j["steps"] = r.steps;
    return j;
}

ojson to_json(const Isometry& g) {
    return ojson::array({g.a.real(), g.a.imag(), g.b.real(), g.b.imag(), g.c.real(), g.c.imag(),
                         g.d.real(), g.d.imag()});
}

ojson to_json(const IsomClass& c) {
    ojson j;
    j["kind"] = kind_name(c.kind);
    j["angle"] = c.angle;
    j["length"] = c.length;
    j["twist"] = c.twist;
    return j;
}

ojson to_json(const EdgeReport& r) {
    ojson j;
    j["edge"] = r.edge_id;
    j["pass"] = r.pass;
    j["identity_target"] = r.identity_target;
    j["target_angle"] = r.target_angle;
    j["deviation"] = r.deviation;
    j["endpoints_fixed"] = r.endpoints_fixed;
    j["class"] = to_json(r.cls);
    j["composite"] = to_json(r.composite);
    return j;
}

ojson to_json(const FramingVector& v) {
    ojson j;
    j["x"] = v.x;
    ojson y = ojson::array();
    for (uint8_t b : v.y) y.push_back(static_cast<int>(b));
    j["y"] = y;
    ojson z = ojson::array();
    for (uint8_t b : v.z) z.push_back(static_cast<int>(b));
    j["z"] = z;
    return j;
}

ojson to_json(const FramingGroup& g) {
    ojson j;
    j["infinite"] = g.infinite;
    j["index"] = g.index;
    j["free_rank"] = g.free_rank;
    j["torsion2"] = g.torsion2;
    ojson gens = ojson::array();
    for (const auto& v : g.generators) gens.push_back(to_json(v));
    j["generators"] = gens;
    return j;
}

ojson to_json(const HandleData& h) {
    ojson j;
    j["schema"] = "handles/1";
    j["n"] = h.n;
    j["m"] = h.m;
    j["r"] = h.r;
    j["a"] = h.a;
    ojson c = ojson::array();
    for (const auto& row : h.c) {
        ojson jr = ojson::array();
        for (uint8_t b : row) jr.push_back(static_cast<int>(b));
        c.push_back(jr);
    }
    j["c"] = c;
    return j;
}

ojson to_json(const LiftResult& r) {
    ojson j;
    j["liftable"] = r.liftable;
    ojson flips = ojson::array();
    for (uint8_t b : r.flips) flips.push_back(static_cast<int>(b));
    j["flips"] = flips;
    ojson signs = ojson::array();
    for (uint8_t b : r.signs) signs.push_back(static_cast<int>(b));
    j["signs"] = signs;
    ojson parity = ojson::array();
    for (const auto& row : r.parity) {
        ojson jr = ojson::array();
        for (uint8_t b : row) jr.push_back(static_cast<int>(b));
        parity.push_back(jr);
    }
    j["parity"] = parity;
    j["note"] = r.note;
    return j;
}

ojson to_json(const ConeVerdict& v) {
    ojson j;
    switch (v.kind) {
        case ConeVerdict::Kind::ConePair: j["kind"] = "cone-pair"; break;
        case ConeVerdict::Kind::ParabolicRankTwo: j["kind"] = "parabolic-rank-two"; break;
        case ConeVerdict::Kind::Fails: j["kind"] = "fails"; break;
    }
    j["angle"] = v.angle;
    j["length"] = v.length;
    j["twist"] = v.twist;
    j["reason"] = v.reason;
    return j;
}

BParams bparams_from_json(const nlohmann::json& j) {
    check_schema(j, "bparams/1");
    if (!j.contains("q") || !j.contains("t"))
        throw std::invalid_argument("shape parameters need \"q\" (four ratios) and \"t\"");
    return BParams(four_doubles(j.at("q"), "q"), j.at("t").get<double>());
}

AngleParams angleparams_from_json(const nlohmann::json& j) {
    check_schema(j, "angles/1");
    if (!j.contains("alpha")) throw std::invalid_argument("angle parameters need \"alpha\"");
    AngleParams a;
    a.alpha = four_doubles(j.at("alpha"), "alpha");
    return a;
}

HandleData handles_from_json(const nlohmann::json& j) {
    check_schema(j, "handles/1");
    HandleData h;
    h.n = j.at("n").get<int>();
    h.m = j.at("m").get<int>();
    h.r = j.at("r").get<int>();
    for (const auto& row : j.at("a")) h.a.push_back(row.get<std::vector<long long>>());
    for (const auto& row : j.at("c")) {
        std::vector<uint8_t> bits;
        for (const auto& e : row) {
            const int v = e.get<int>();
            if (v != 0 && v != 1) throw std::invalid_argument("handle coefficients must be bits");
            bits.push_back(static_cast<uint8_t>(v));
        }
        h.c.push_back(std::move(bits));
    }
    h.validate();
    return h;
}

RepInput rep_from_json(const nlohmann::json& j) {
    check_schema(j, "rep/1");
    RepInput in;
    for (const auto& g : j.at("generators")) in.pres.generators.push_back(g.get<std::string>());
    if (j.contains("relators")) {
        for (const auto& rel : j.at("relators")) {
            Presentation::Word w;
            for (const auto& letter : rel) {
                if (!letter.is_array() || letter.size() != 2)
                    throw std::invalid_argument("relator letters must be [generator, exponent]");
                const int e = letter.at(1).get<int>();
                if (e == 0) throw std::invalid_argument("relator exponents must be nonzero");
                w.emplace_back(letter.at(0).get<std::string>(), e);
            }
            in.pres.relators.push_back(std::move(w));
        }
    }
    for (const auto& rel : in.pres.relators)
        for (const auto& [gen, exp] : rel)
            if (std::find(in.pres.generators.begin(), in.pres.generators.end(), gen) ==
                in.pres.generators.end())
                throw std::invalid_argument("relator uses unknown generator " + gen);
    in.rep.exact = j.value("exact", false);
    const auto& images = j.at("images");
    for (const auto& gen : in.pres.generators) {
        if (!images.contains(gen))
            throw std::invalid_argument("missing image for generator " + gen);
        const auto& m = images.at(gen);
        if (!m.is_array() || m.size() != 8)
            throw std::invalid_argument("each image must be eight reals [are, aim, ..., dre, dim]");
        if (in.rep.exact) {
            ExactMatrix em;
            em.a = {exact_entry(m.at(0)), exact_entry(m.at(1))};
            em.b = {exact_entry(m.at(2)), exact_entry(m.at(3))};
            em.c = {exact_entry(m.at(4)), exact_entry(m.at(5))};
            em.d = {exact_entry(m.at(6)), exact_entry(m.at(7))};
            if (!(em.det() == GaussInt{1, 0}))
                throw std::invalid_argument("exact matrix determinant must be one");
            in.rep.exact_images[gen] = em;
            in.rep.images[gen] = em.to_isometry();
        } else {
            in.rep.images[gen] =
                Isometry(complexd(m.at(0).get<double>(), m.at(1).get<double>()),
                         complexd(m.at(2).get<double>(), m.at(3).get<double>()),
                         complexd(m.at(4).get<double>(), m.at(5).get<double>()),
                         complexd(m.at(6).get<double>(), m.at(7).get<double>()));
        }
    }
    in.mu = j.value("mu", "");
    in.lambda = j.value("lambda", "");
    return in;
}

PathInput path_from_json(const nlohmann::json& j) {
    check_schema(j, "path/1");
    PathInput p;
    p.from = bparams_from_json(j.at("from"));
    p.to = bparams_from_json(j.at("to"));
    p.steps = j.value("steps", 1000);
    return p;
}

std::string read_text_file_or_stdin(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot read file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace cw
