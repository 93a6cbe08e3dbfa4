#pragma once

// Framing corrections over a handle structure: integer twist vector x (one
// entry per locus), a mod-2 class y on the loci (defined up to a global
// flip), and a mod-2 class z on the extra handles.  A correction is
// unobstructed when every handle relation has even total contribution.  The
// group of unobstructed corrections is computed with explicit generators,
// its index in the full correction lattice, and its invariant factors.

#include <cstdint>
#include <string>
#include <vector>

namespace cw {

struct HandleData {
    int n = 0;  // loci
    int m = 0;  // extra handles
    int r = 0;  // relations
    std::vector<std::vector<long long>> a;  // r x n integer coefficients on x
    std::vector<std::vector<uint8_t>> c;    // r x m mod-2 coefficients on z

    void validate() const;  // throws std::invalid_argument on shape mismatch
};

struct FramingVector {
    std::vector<long long> x;  // n integers
    std::vector<uint8_t> y;    // n bits; the pair (y, y + 1...1) is one class
    std::vector<uint8_t> z;    // m bits
};

// Put y in the canonical coset representative: first y bit zero (global flip
// if needed).  Vectors with no loci are returned unchanged.
FramingVector canonical(FramingVector v);

// Per relation k: a_k . x + c_k . z mod 2.  y never enters.
std::vector<uint8_t> obstruction(const HandleData& h, const FramingVector& v);

bool unobstructed(const HandleData& h, const FramingVector& v);

struct FramingGroup {
    std::vector<FramingVector> generators;
    bool infinite = false;          // true as soon as a locus exists
    long long index = 1;            // index in the full correction lattice
    int free_rank = 0;              // invariant factor Z^free_rank
    int torsion2 = 0;               // invariant factor (Z/2)^torsion2
};

// Generators: doubled unit twists 2 e_i; mod-2 kernel basis of the combined
// relation matrix lifted to {0,1} twists; and the independent y flips.
FramingGroup framing_group(const HandleData& h);

// Add one trivial handle: one new z slot and one new relation using only it.
// The unobstructed group keeps its invariant factors; its index in the (now
// larger) correction lattice doubles.
HandleData stabilize(const HandleData& h);

}  // namespace cw
