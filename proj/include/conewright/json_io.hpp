#pragma once

// JSON serialization for the CLI: stable key order (insertion-ordered
// objects) plus shortest-round-trip number formatting makes repeated runs
// byte-identical.  Parsers throw std::invalid_argument on malformed input.

#include <json.hpp>

#include <map>
#include <string>

#include "conewright/framing.hpp"
#include "conewright/gluing.hpp"
#include "conewright/holonomy.hpp"
#include "conewright/polyhedron.hpp"
#include "conewright/volume.hpp"

namespace cw {

using ojson = nlohmann::ordered_json;

ojson to_json(const BParams& b);
ojson to_json(const AngleParams& a);
ojson to_json(const TrapezohedronGeometry& g);  // schema geometry/1
ojson to_json(const DihedralReport& r);
ojson to_json(const SignedVolume& v);
ojson to_json(const SchlafliResult& r);
ojson to_json(const Isometry& g);  // [are, aim, bre, bim, cre, cim, dre, dim]
ojson to_json(const IsomClass& c);
ojson to_json(const EdgeReport& r);
ojson to_json(const FramingVector& v);
ojson to_json(const FramingGroup& g);
ojson to_json(const HandleData& h);
ojson to_json(const LiftResult& r);
ojson to_json(const ConeVerdict& v);

// Accepts {"q": [q1..q4], "t": t}; optional "schema": "bparams/1".
BParams bparams_from_json(const nlohmann::json& j);
// Accepts {"alpha": [a1..a4]}; optional "schema": "angles/1".
AngleParams angleparams_from_json(const nlohmann::json& j);
// schema handles/1: {"n", "m", "r", "a": r x n ints, "c": r x m bits}.
HandleData handles_from_json(const nlohmann::json& j);

// schema rep/1: generators, relators as [[gen, exp], ...] words, images as
// 8-real matrices (row major, interleaved re/im); "exact": true switches to
// integer matrices evaluated exactly.  Optional "mu"/"lambda" name the
// peripheral pair for cone checks.
struct RepInput {
    Presentation pres;
    RepAssignment rep;
    std::string mu;
    std::string lambda;
};
RepInput rep_from_json(const nlohmann::json& j);

// schema path/1: {"from": bparams, "to": bparams, "steps": n}.
struct PathInput {
    BParams from;
    BParams to;
    int steps = 1000;
};
PathInput path_from_json(const nlohmann::json& j);

std::string read_text_file_or_stdin(const std::string& path);  // "-" reads stdin

}  // namespace cw
