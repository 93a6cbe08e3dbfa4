#pragma once

// Group presentations, their matrix representations, and the two questions
// asked of them here: does an assignment of matrices satisfy the relators up
// to sign, and can signs be flipped generator-by-generator so every relator
// evaluates to +1 exactly (a lift from the projective group to the matrix
// group)?  Also: decide when a commuting pair (mu, lambda) is a cone pair
// (elliptic or trivial mu about the axis of a loxodromic lambda) or a
// rank-two parabolic pair, the local models at a cone locus and at a cusp.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "conewright/hypgeo.hpp"

namespace cw {

struct Presentation {
    std::vector<std::string> generators;
    // A relator is a word: ordered (generator, nonzero exponent) pairs.
    using Word = std::vector<std::pair<std::string, int>>;
    std::vector<Word> relators;
};

// Exact Gaussian-integer 2x2 matrix with determinant one.  Used for
// integer-entry representations where relator evaluation must be exact; no
// sign canonicalization is ever applied to these.
struct GaussInt {
    long long re = 0;
    long long im = 0;

    friend GaussInt operator+(GaussInt p, GaussInt q) { return {p.re + q.re, p.im + q.im}; }
    friend GaussInt operator-(GaussInt p, GaussInt q) { return {p.re - q.re, p.im - q.im}; }
    friend GaussInt operator*(GaussInt p, GaussInt q) {
        return {p.re * q.re - p.im * q.im, p.re * q.im + p.im * q.re};
    }
    friend GaussInt operator-(GaussInt p) { return {-p.re, -p.im}; }
    friend bool operator==(GaussInt p, GaussInt q) { return p.re == q.re && p.im == q.im; }
};

struct ExactMatrix {
    GaussInt a, b, c, d;

    GaussInt det() const { return a * d - b * c; }
    ExactMatrix inverse() const;  // requires det == 1
    friend ExactMatrix operator*(const ExactMatrix& m, const ExactMatrix& n);
    friend bool operator==(const ExactMatrix& m, const ExactMatrix& n);
    bool is_one() const;
    bool is_minus_one() const;
    Isometry to_isometry() const;
};

// Images of the generators.  When `exact` is set every generator has an
// entry in exact_images and all evaluation is integer arithmetic.
struct RepAssignment {
    std::map<std::string, Isometry> images;
    std::map<std::string, ExactMatrix> exact_images;
    bool exact = false;
};

// Per relator: does the evaluated word land on +-identity (exactly in the
// integer path, within tol in the floating path)?
std::vector<bool> verify_presentation(const Presentation& p, const RepAssignment& r, double tol = 1e-10);

struct LiftResult {
    bool liftable = false;
    // Per generator (presentation order): flip this generator's sign.  Valid
    // when liftable.
    std::vector<uint8_t> flips;
    // Per relator: 1 when the word evaluates to minus the identity.
    std::vector<uint8_t> signs;
    // Per relator x generator: exponent sum mod 2.
    std::vector<std::vector<uint8_t>> parity;
    std::string note;
};

// Decide whether generator signs can be chosen making every relator evaluate
// to plus the identity.  The answer never depends on which matrix lift of
// each image was supplied.
LiftResult lift_obstruction(const Presentation& p, const RepAssignment& r);

struct ConeVerdict {
    enum class Kind { ConePair, ParabolicRankTwo, Fails };
    Kind kind = Kind::Fails;
    double angle = 0.0;   // ConePair: rotation of mu about lambda's axis, [0, 2 pi)
    double length = 0.0;  // ConePair: translation length of lambda
    double twist = 0.0;   // ConePair: rotation part of lambda, (-pi, pi]
    std::string reason;   // Fails: why
};

// Classify a commuting peripheral pair.
ConeVerdict cone_conditions(const Isometry& mu, const Isometry& lambda, double tol = 1e-8);

// Shift each cone angle by a full even multiple of 2 pi: theta_i + 4 pi k_i.
// Every entry of the result must stay positive, else throws.  The doubled
// twist vector (2 k_1, ..., 2 k_4, 0, ...) has even coordinates, hence zero
// obstruction against any handle data.
std::array<double, 4> prop_angle_witness(const std::array<double, 4>& theta, const std::array<int, 4>& k);

}  // namespace cw
