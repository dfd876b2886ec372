#include "cpring/root_finding.hpp"

#include <cmath>

namespace cpring {

std::vector<std::pair<double, double>> scan_brackets(const std::function<double(double)>& f,
                                                     double lo, double hi, double step) {
    if (!(step > 0.0) || !(lo < hi))
        throw std::invalid_argument("scan_brackets: requires lo < hi and step > 0");
    std::vector<std::pair<double, double>> brackets;
    double x_prev = lo;
    double f_prev = f(lo);
    const long n = std::lround(std::ceil((hi - lo) / step));
    for (long i = 1; i <= n; ++i) {
        const double x = (i == n) ? hi : lo + step * static_cast<double>(i);
        const double fx = f(x);
        if (f_prev == 0.0)
            brackets.emplace_back(x_prev, x_prev);
        else if (std::signbit(f_prev) != std::signbit(fx) || fx == 0.0)
            brackets.emplace_back(x_prev, x);
        x_prev = x;
        f_prev = fx;
    }
    return brackets;
}

double bisect(const std::function<double(double)>& f, double a, double b, double x_tol,
              int max_iter) {
    if (a == b) return a;
    if (a > b) std::swap(a, b);
    double fa = f(a);
    double fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (std::signbit(fa) == std::signbit(fb))
        throw NonConvergenceError("bisect: endpoints do not bracket a sign change");
    for (int i = 0; i < max_iter; ++i) {
        const double mid = 0.5 * (a + b);
        if (b - a <= x_tol || mid == a || mid == b) return mid;
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if (std::signbit(fm) == std::signbit(fa)) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    throw NonConvergenceError("bisect: iteration limit before x_tol");
}

MaxResult golden_section_max(const std::function<double(double)>& f, double a, double b,
                             double x_tol) {
    if (a > b) std::swap(a, b);
    constexpr double kInvPhi = 0.6180339887498948482;  // (sqrt(5)-1)/2
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    while (b - a > x_tol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kInvPhi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kInvPhi * (b - a);
            f1 = f(x1);
        }
    }
    const double xm = 0.5 * (a + b);
    return {xm, f(xm)};
}

}  // namespace cpring
