#pragma once

// Release gate: ten numbered end-to-end checks with pinned tolerances and
// frozen seeds.  Each prints one line "[PASS] criterion k: ..." or
// "[FAIL] criterion k: ..." on stdout.

#include <string>

namespace cw {

struct CriterionResult {
    int id = 0;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

CriterionResult run_criterion(int id);  // 1..10; throws on unknown id

// Runs every criterion (or a single one when only != 0) and prints one line
// each; returns the number of failures.
int run_acceptance(int only = 0);

}  // namespace cw
