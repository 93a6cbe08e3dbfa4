#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "conewright/acceptance.hpp"
#include "conewright/json_io.hpp"
#include "conewright/mesh_io.hpp"

namespace {

using cw::ojson;

// --format text: one "path = value" line per leaf, scalars arrays inline.
void print_text(const ojson& j, const std::string& prefix) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items())
            print_text(value, prefix.empty() ? key : prefix + "." + key);
        return;
    }
    if (j.is_array()) {
        bool flat = true;
        for (const auto& e : j)
            if (e.is_structured()) flat = false;
        if (!flat) {
            int i = 0;
            for (const auto& e : j) print_text(e, prefix + "[" + std::to_string(i++) + "]");
            return;
        }
    }
    std::cout << prefix << " = " << j.dump() << "\n";
}

void emit(const ojson& j, const std::string& format) {
    if (format == "text")
        print_text(j, "");
    else
        std::cout << j.dump(2) << "\n";
}

nlohmann::json parse_input(const std::string& path) {
    try {
        return nlohmann::json::parse(cw::read_text_file_or_stdin(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("input is not valid JSON: ") + e.what());
    }
}

std::vector<double> parse_csv(const std::string& text, size_t count, const char* what) {
    std::vector<double> vals;
    size_t pos = 0;
    while (pos <= text.size()) {
        const size_t comma = text.find(',', pos);
        const std::string piece = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                              : comma - pos);
        size_t used = 0;
        double v = 0;
        try {
            v = std::stod(piece, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string(what) + ": not a number: " + piece);
        }
        if (used != piece.size())
            throw std::invalid_argument(std::string(what) + ": not a number: " + piece);
        vals.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (vals.size() != count)
        throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(count) +
                                    " comma-separated numbers");
    return vals;
}

// shape parameters from --b "q1,q2,q3,q4,t" when given, else from JSON input
cw::BParams shape_input(const std::string& b_csv, const std::string& json_path) {
    if (!b_csv.empty()) {
        const std::vector<double> v = parse_csv(b_csv, 5, "--b");
        return cw::BParams({v[0], v[1], v[2], v[3]}, v[4]);
    }
    return cw::bparams_from_json(parse_input(json_path));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hyperbolic polyhedra, their volumes, face gluings, and holonomy checks"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json";
    double tol = -1.0;  // negative: use each command's own default
    std::uint64_t seed = 0;
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--tol", tol, "override the command's pass tolerance");
    app.add_option("--seed", seed, "seed for randomized sampling");

    std::string in_build = "-", in_angles = "-", in_invert = "-", in_volume = "", in_schlafli = "-";
    std::string in_glue = "-", in_framing = "-", in_lift = "-", in_cone = "-", in_export = "-";
    std::string b_csv, alpha_csv;
    constexpr const char* kBHelp = "shape parameters as q1,q2,q3,q4,t (instead of JSON input)";

    auto* cmd_build = app.add_subcommand("build", "construct the polyhedron for shape parameters");
    cmd_build->add_option("input", in_build, "JSON file with q and t, or - for stdin");
    cmd_build->add_option("--b", b_csv, kBHelp);

    auto* cmd_angles = app.add_subcommand("angles", "cone angles and hole flags for shape parameters");
    cmd_angles->add_option("input", in_angles, "JSON file with q and t, or - for stdin");
    cmd_angles->add_option("--b", b_csv, kBHelp);

    auto* cmd_invert = app.add_subcommand("invert", "shape parameters realizing given cone angles");
    cmd_invert->add_option("input", in_invert, "JSON file with alpha, or - for stdin");
    cmd_invert->add_option("--alpha", alpha_csv, "cone angles as a1,a2,a3,a4 (instead of JSON input)");

    auto* cmd_volume = app.add_subcommand("volume", "hyperbolic volume of a shape, mesh, or sphere");
    std::string volume_mesh;
    double sphere_radius = 0.0;
    int refine = 3;
    cmd_volume->add_option("input", in_volume, "JSON file with q and t, or - for stdin");
    cmd_volume->add_option("--b", b_csv, kBHelp);
    cmd_volume->add_option("--mesh", volume_mesh, "OBJ file to measure instead");
    cmd_volume->add_option("--sphere", sphere_radius, "measure a geodesic sphere of this radius");
    cmd_volume->add_option("--refine", refine, "sphere subdivision level")->check(CLI::Range(0, 8));

    auto* cmd_schlafli = app.add_subcommand("schlafli",
                                            "compare volume derivative with edge lengths along a path");
    int schlafli_steps = 0;
    cmd_schlafli->add_option("input", in_schlafli, "JSON path file (from, to, steps), or - for stdin");
    cmd_schlafli->add_option("--path", in_schlafli, "JSON path file (same as the positional input)");
    cmd_schlafli->add_option("--steps", schlafli_steps, "override the step count");

    auto* cmd_glue = app.add_subcommand("glue-check", "verify all edge cycles of a face gluing");
    std::string glue_spec_path;
    int glue_samples = 0;
    cmd_glue->add_option("input", in_glue, "JSON file with q and t, or - for stdin");
    cmd_glue->add_option("--b", b_csv, kBHelp);
    cmd_glue->add_option("--spec", glue_spec_path, "gluing description (default: built-in weave4)");
    cmd_glue->add_option("--samples", glue_samples, "additionally check this many random shapes")
        ->check(CLI::Range(0, 100000));

    auto* cmd_framing = app.add_subcommand("framing", "group of unobstructed framing corrections");
    cmd_framing->add_option("input", in_framing, "JSON handle data, or - for stdin");

    auto* cmd_lift = app.add_subcommand("lift-check",
                                        "verify relators and decide sign lifts of a representation");
    cmd_lift->add_option("input", in_lift, "JSON representation, or - for stdin");

    auto* cmd_cone = app.add_subcommand("cone-check", "classify a peripheral pair (mu, lambda)");
    cmd_cone->add_option("input", in_cone, "JSON representation naming mu and lambda, or - for stdin");

    auto* cmd_export = app.add_subcommand("mesh-export", "write the boundary surface as OBJ + sidecar");
    std::string out_path = "mesh.obj";
    double clip_height = 10.0;
    cmd_export->add_option("input", in_export, "JSON file with q and t, or - for stdin");
    cmd_export->add_option("--b", b_csv, kBHelp);
    cmd_export->add_option("--out", out_path, "output OBJ path");
    cmd_export->add_option("--clip-height", clip_height, "display height for ideal vertices")
        ->check(CLI::PositiveNumber);

    auto* cmd_accept = app.add_subcommand("acceptance", "run the numbered release criteria");
    int only = 0;
    std::string suite = "all";
    cmd_accept->add_option("--only", only, "run a single criterion")->check(CLI::Range(1, 10));
    cmd_accept->add_option("--suite", suite, "which criteria to run: all, or a number 1-10")
        ->check(CLI::IsMember({"all", "1", "2", "3", "4", "5", "6", "7", "8", "9", "10"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*cmd_build) {
            const cw::BParams b = shape_input(b_csv, in_build);
            emit(cw::to_json(cw::build_geometry(b)), format);
            return 0;
        }
        if (*cmd_angles) {
            const cw::BParams b = shape_input(b_csv, in_angles);
            const cw::TrapezohedronGeometry g = cw::build_geometry(b);
            ojson out;
            out["schema"] = "angles/1";
            out.update(cw::to_json(cw::angles_from_b(b)));
            ojson holed = ojson::array();
            for (bool h : g.holed) holed.push_back(h);
            out["holed"] = holed;
            emit(out, format);
            return 0;
        }
        if (*cmd_invert) {
            cw::AngleParams a;
            if (!alpha_csv.empty()) {
                const std::vector<double> v = parse_csv(alpha_csv, 4, "--alpha");
                a.alpha = {v[0], v[1], v[2], v[3]};
            } else {
                a = cw::angleparams_from_json(parse_input(in_invert));
            }
            ojson out;
            out["schema"] = "bparams/1";
            out.update(cw::to_json(cw::b_from_angles(a)));
            emit(out, format);
            return 0;
        }
        if (*cmd_volume) {
            ojson out;
            out["schema"] = "volume/1";
            cw::SignedVolume v;
            if (!volume_mesh.empty() && sphere_radius > 0)
                throw std::invalid_argument("choose either --mesh or --sphere, not both");
            if (!volume_mesh.empty()) {
                out["source"] = "mesh";
                out["mesh"] = volume_mesh;
                v = cw::enclosed_volume(cw::read_obj(volume_mesh));
            } else if (sphere_radius > 0) {
                out["source"] = "sphere";
                out["radius"] = sphere_radius;
                out["refine"] = refine;
                v = cw::enclosed_volume(cw::geodesic_sphere_mesh(sphere_radius, refine));
            } else {
                if (in_volume.empty()) in_volume = "-";
                const cw::BParams b = shape_input(b_csv, in_volume);
                out["source"] = "shape";
                out["b"] = cw::to_json(b);
                v = cw::structure_volume(b);
            }
            out.update(cw::to_json(v));
            emit(out, format);
            return 0;
        }
        if (*cmd_schlafli) {
            cw::PathInput p = cw::path_from_json(parse_input(in_schlafli));
            if (schlafli_steps > 0) p.steps = schlafli_steps;
            const double pass_tol = tol > 0 ? tol : 1e-4;
            const cw::SchlafliResult r = cw::schlafli_check(p.from, p.to, p.steps);
            ojson out;
            out["schema"] = "schlafli/1";
            out.update(cw::to_json(r));
            out["tol"] = pass_tol;
            const bool pass = r.max_rel_dev <= pass_tol;
            out["pass"] = pass;
            emit(out, format);
            return pass ? 0 : 1;
        }
        if (*cmd_glue) {
            const cw::GluingSpec spec = glue_spec_path.empty()
                                            ? cw::builtin_weave4()
                                            : cw::parse_gluing_spec(cw::read_text_file_or_stdin(glue_spec_path));
            const cw::BParams b = shape_input(b_csv, in_glue);
            const cw::TrapezohedronGeometry g = cw::build_geometry(b);
            ojson out;
            out["schema"] = "glue/1";
            out["spec"] = glue_spec_path.empty() ? "weave4 (built-in)" : glue_spec_path;
            out["b"] = cw::to_json(b);
            bool all_pass = true;
            ojson edges = ojson::array();
            for (const auto& rep : cw::check_all_edges(spec, g)) {
                all_pass = all_pass && rep.pass;
                edges.push_back(cw::to_json(rep));
            }
            out["edges"] = edges;
            if (glue_samples > 0) {
                out["samples"] = glue_samples;
                out["seed"] = seed;
                std::mt19937_64 rng(seed);
                ojson sampled = ojson::array();
                for (int s = 0; s < glue_samples; ++s) {
                    const cw::BParams bs = cw::random_b_nonholed(rng, 0.05);
                    const cw::TrapezohedronGeometry gs = cw::build_geometry(bs);
                    bool sample_pass = true;
                    std::string worst_edge;
                    double worst_dev = -1.0;
                    for (const auto& rep : cw::check_all_edges(spec, gs)) {
                        sample_pass = sample_pass && rep.pass;
                        if (rep.deviation > worst_dev) {
                            worst_dev = rep.deviation;
                            worst_edge = rep.edge_id;
                        }
                    }
                    all_pass = all_pass && sample_pass;
                    ojson row;
                    row["b"] = cw::to_json(bs);
                    row["pass"] = sample_pass;
                    row["worst_edge"] = worst_edge;
                    row["worst_deviation"] = worst_dev;
                    sampled.push_back(row);
                }
                out["sampled"] = sampled;
            }
            out["all_pass"] = all_pass;
            emit(out, format);
            return all_pass ? 0 : 1;
        }
        if (*cmd_framing) {
            const cw::HandleData h = cw::handles_from_json(parse_input(in_framing));
            const cw::FramingGroup g = cw::framing_group(h);
            ojson out;
            out["schema"] = "framing/1";
            out["handles"] = cw::to_json(h);
            out["group"] = cw::to_json(g);
            emit(out, format);
            return 0;
        }
        if (*cmd_lift) {
            const cw::RepInput in = cw::rep_from_json(parse_input(in_lift));
            const double verify_tol = tol > 0 ? tol : 1e-10;
            const std::vector<bool> verified = cw::verify_presentation(in.pres, in.rep, verify_tol);
            bool all_verified = true;
            for (bool v : verified) all_verified = all_verified && v;
            const cw::LiftResult lift = cw::lift_obstruction(in.pres, in.rep);
            ojson out;
            out["schema"] = "lift/1";
            out["verified"] = verified;
            out["all_verified"] = all_verified;
            out["lift"] = cw::to_json(lift);
            emit(out, format);
            return (all_verified && lift.liftable) ? 0 : 1;
        }
        if (*cmd_cone) {
            const cw::RepInput in = cw::rep_from_json(parse_input(in_cone));
            if (in.mu.empty() || in.lambda.empty())
                throw std::invalid_argument("cone-check input must name \"mu\" and \"lambda\"");
            if (!in.rep.images.count(in.mu) || !in.rep.images.count(in.lambda))
                throw std::invalid_argument("mu and lambda must be among the generators");
            const double pair_tol = tol > 0 ? tol : 1e-8;
            const cw::ConeVerdict v =
                cw::cone_conditions(in.rep.images.at(in.mu), in.rep.images.at(in.lambda), pair_tol);
            ojson out;
            out["schema"] = "cone/1";
            out["verdict"] = cw::to_json(v);
            emit(out, format);
            return v.kind != cw::ConeVerdict::Kind::Fails ? 0 : 1;
        }
        if (*cmd_export) {
            const cw::BParams b = shape_input(b_csv, in_export);
            const cw::SurfaceMesh mesh = cw::boundary_mesh(cw::build_geometry(b));
            ojson extra;
            extra["source"] = "trapezohedron";
            extra["b"] = cw::to_json(b);
            const cw::MeshExportInfo info = cw::write_obj(mesh, out_path, clip_height, extra);
            ojson out;
            out["schema"] = "mesh-export/1";
            out["obj"] = info.obj_path;
            out["sidecar"] = info.sidecar_path;
            out["vertices"] = info.vertices;
            out["triangles"] = info.triangles;
            emit(out, format);
            return 0;
        }
        if (*cmd_accept) {
            int which = only;
            if (which == 0 && suite != "all") which = std::stoi(suite);
            return cw::run_acceptance(which) == 0 ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
