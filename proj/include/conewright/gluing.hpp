#pragma once

// Face-pairing and edge-cycle verification: given several copies of the
// built polyhedron (possibly mirrored) and a combinatorial pairing of their
// faces, realize each pairing as an isometry from anchor boundary triples,
// compose pairings around edge classes, and classify the results against
// their targets (rotation by twice the cone-edge angle, or the identity at
// right-angled edges).

#include <map>
#include <string>
#include <vector>

#include "conewright/polyhedron.hpp"

namespace cw {

// One crossing of a face pairing: dir = +1 travels from the pairing's source
// face into its destination copy, dir = -1 the other way.
struct GluingStep {
    std::string pairing;
    int dir = 1;
};

// Combinatorial gluing data with symbolic anchors, loaded from JSON
// ("schema": "gluing/1") or built in code.
struct GluingSpec {
    int copies = 0;
    std::vector<bool> mirrored;  // per copy: whether it is the reflected version

    // face id -> three anchor symbols ("inf", "O", "P1".."P4", "S1".."S4")
    std::map<std::string, std::array<std::string, 3>> faces;

    struct Pairing {
        std::string id;
        int src_copy = 0;
        std::string src_face;
        int dst_copy = 0;
        std::string dst_face;
    };
    std::vector<Pairing> pairings;

    struct EdgeCycle {
        std::string id;
        std::string edge_type;  // "cone" | "vertical" | "slant" | "bottom"
        int index = 1;          // 1-based locus/side index
        std::vector<GluingStep> steps;
        bool identity_target = true;  // false: elliptic target 2*alpha
    };
    std::vector<EdgeCycle> edge_cycles;

    struct Word {
        std::string id;
        int locus = 1;
        std::vector<GluingStep> steps;
    };
    std::vector<Word> meridians;
    std::vector<Word> longitudes;
};

// The shipped four-copy gluing (two plain and two mirrored copies woven
// around the cone edges), embedded at build time; identical to
// data/weave4.json.
const GluingSpec& builtin_weave4();

GluingSpec parse_gluing_spec(const std::string& json_text);

// Anchor symbol -> boundary point in the given copy (mirrored copies see the
// complex-conjugated plane).  Besides the named trapezohedron anchors, a
// symbol may be a literal "re,im" pair, which ignores the geometry argument;
// this is how non-trapezohedral gluings (such as wedges) carry anchors.
BPoint resolve_anchor(const TrapezohedronGeometry& g, const std::string& symbol, bool mirrored);

// k copies of the dihedral-angle-theta wedge between two vertical planes
// through the origin, glued side to side around the common vertical axis.
// The word of all pairings in order has composite rotation by k*theta.
GluingSpec wedge_spec(int k, double theta);

// Geometric realization of one pairing: the isometry taking the source
// face's anchors to the destination face's anchors, verified to carry the
// source carrier plane onto the destination carrier plane.
Isometry pairing_isometry(const GluingSpec& spec, const TrapezohedronGeometry& g, const std::string& pairing_id);

// Boundary endpoints of an edge class in the base (unmirrored) geometry.
Geodesic edge_geodesic(const TrapezohedronGeometry& g, const std::string& edge_type, int index);

struct EdgeReport {
    std::string edge_id;
    Isometry composite;
    IsomClass cls;
    bool identity_target = true;
    double target_angle = 0.0;  // folded principal target for elliptic edges
    bool endpoints_fixed = false;
    double deviation = 0.0;  // PSL distance to +-1, or principal-angle error
    bool pass = false;
};

// Ordered product of pairing isometries around one edge cycle, classified
// and compared against the target.
EdgeReport edge_cycle_composite(const GluingSpec& spec, const TrapezohedronGeometry& g, const std::string& edge_id);

std::vector<EdgeReport> check_all_edges(const GluingSpec& spec, const TrapezohedronGeometry& g);

// Ordered product over an arbitrary word of pairing steps.
Isometry holonomy_word(const GluingSpec& spec, const TrapezohedronGeometry& g,
                       const std::vector<GluingStep>& word);

}  // namespace cw
