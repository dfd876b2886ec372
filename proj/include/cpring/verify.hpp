#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cpring {

// Self-verification: each check certifies one published observable or one
// internal consistency contract, prints one line, and never throws on a
// numeric mismatch (it fails instead). Checks whose tolerance reflects our
// own numerics mark scalable_tol and participate in --tol-scale; checks
// whose tolerance encodes the printed precision of a published number keep
// it fixed.
struct VerifyOptions {
    double tol_scale = 1.0;        // multiplies scalable tolerances (0.1 = 10x tighter)
    std::string corrupt_check;     // test hook: perturb this check's measurement
    std::string golden_dir;        // directory with reference CSV curves; empty = compiled-in default
    bool quadrature_checks = true; // the slow radial-pattern certifications
};

struct CheckResult {
    std::string id;       // stable identifier, e.g. "C1"
    std::string name;
    bool pass = false;
    bool scalable_tol = true;
    std::string detail;   // measured / expected / tolerance summary
    double elapsed_s = 0.0;
};

std::vector<CheckResult> run_verification(const VerifyOptions& opts = {});

// Prints "[PASS] id name: detail" lines plus a summary; returns true when
// everything passed.
bool print_verification(std::ostream& os, const std::vector<CheckResult>& results);

}  // namespace cpring
