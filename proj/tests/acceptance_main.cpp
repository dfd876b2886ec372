// Acceptance gate: runs every self-verification check and prints one
// pass/fail line per check. Exit status 0 only when all pass.

#include <cstring>
#include <iostream>
#include <string>

#include "cpring/verify.hpp"

int main(int argc, char** argv) {
    cpring::VerifyOptions opts;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--skip-quadrature") {
            opts.quadrature_checks = false;
        } else if (arg == "--tol-scale" && i + 1 < argc) {
            opts.tol_scale = std::stod(argv[++i]);
        } else if (arg == "--golden-dir" && i + 1 < argc) {
            opts.golden_dir = argv[++i];
        } else {
            std::cerr << "usage: acceptance [--skip-quadrature] [--tol-scale S]"
                         " [--golden-dir DIR]\n";
            return 2;
        }
    }

    const auto results = cpring::run_verification(opts);
    const bool ok = cpring::print_verification(std::cout, results);
    return ok ? 0 : 1;
}
