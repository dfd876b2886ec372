#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace cpring {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
};

// Thrown when refinement hits its depth/size limit before reaching tolerance.
// Carries the partial result so callers can decide whether it is usable.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, QuadratureResult partial)
        : std::runtime_error(what), partial_(partial) {}
    const QuadratureResult& partial() const { return partial_; }

private:
    QuadratureResult partial_;
};

// Globally adaptive Gauss-Kronrod 7-15 on [lo, hi]; hi may be +infinity, in
// which case the tail is folded onto [0, 1) through x = lo + t/(1-t). Always
// splits the worst panel next; the order depends only on the inputs. Accepts
// when the summed panel error satisfies err <= max(abs_tol, rel_tol * |value|)
// or when that error has reached the rounding floor of the panel estimates,
// so a tolerance below rounding yields the best achievable result rather than
// an exception. error_estimate is an honest bound either way.
QuadratureResult adaptive_quad(const std::function<double(double)>& f,
                               double lo, double hi,
                               double rel_tol = 1e-9, double abs_tol = 1e-12,
                               int max_depth = 48);

// Full-period trapezoid rule on [0, 2pi) with point doubling, spectrally
// convergent for smooth periodic integrands. Converged when two consecutive
// doublings agree within tolerance.
QuadratureResult periodic_trapezoid(const std::function<double(double)>& f,
                                    double rel_tol = 1e-9, double abs_tol = 1e-12,
                                    int max_points = 1 << 16);

}  // namespace cpring
