#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cpring {

class NonConvergenceError : public std::runtime_error {
public:
    explicit NonConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// Sign-change brackets of f on [lo, hi] sampled with the given step. A grid
// point landing exactly on a zero is returned as a degenerate bracket.
std::vector<std::pair<double, double>> scan_brackets(const std::function<double(double)>& f,
                                                     double lo, double hi, double step);

// Bisection on a sign-changing bracket, refined to |hi-lo| <= x_tol.
// Requires f(a) and f(b) of opposite sign (zero endpoints accepted).
double bisect(const std::function<double(double)>& f, double a, double b,
              double x_tol = 1e-12, int max_iter = 200);

// Golden-section maximum of a unimodal f on [a, b] to x_tol.
struct MaxResult {
    double x;
    double value;
};
MaxResult golden_section_max(const std::function<double(double)>& f, double a, double b,
                             double x_tol = 1e-10);

}  // namespace cpring
