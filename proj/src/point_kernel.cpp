#include "cpring/point_kernel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "cpring/quadrature.hpp"

namespace cpring {

namespace {
constexpr double kPi = 3.141592653589793238462643383279;
// 1/(32 pi^2): azimuthal integration of this kernel over a unit ring of
// axial polarizability lands exactly on the ring closed form.
const double kPrefactor = 1.0 / (32.0 * kPi * kPi);
}  // namespace

GreenScalars green_dyadic_scalars(double x) {
    return {1.0 + x + x * x, 3.0 + 3.0 * x + x * x};
}

RetardationCoefficients retardation_integrals_exact() {
    return {13.0 / 4.0, 7.0, 63.0 / 4.0, 0.0};
}

RetardationCoefficients retardation_integrals(double rel_tol) {
    const double inf = std::numeric_limits<double>::infinity();
    auto weight = [](double x) { return std::exp(-2.0 * x); };
    auto uu = [&](double x) {
        const auto [u, v] = green_dyadic_scalars(x);
        (void)v;
        return weight(x) * u * u;
    };
    auto uv = [&](double x) {
        const auto [u, v] = green_dyadic_scalars(x);
        return weight(x) * u * v;
    };
    auto vv = [&](double x) {
        const auto [u, v] = green_dyadic_scalars(x);
        (void)u;
        return weight(x) * v * v;
    };
    const QuadratureResult r_uu = adaptive_quad(uu, 0.0, inf, rel_tol, 1e-15);
    const QuadratureResult r_uv = adaptive_quad(uv, 0.0, inf, rel_tol, 1e-15);
    const QuadratureResult r_vv = adaptive_quad(vv, 0.0, inf, rel_tol, 1e-15);
    const double err = std::max({r_uu.error_estimate, r_uv.error_estimate,
                                 r_vv.error_estimate});
    return {r_uu.value, r_uv.value, r_vv.value, err};
}

double cp_point_bracket(const PolarizabilityTensor& a1, const PolarizabilityTensor& a2,
                        const Vec3& n) {
    const double tr12 = product_trace(a1, a2);
    const double cross = pair_quad_form(a1, a2, n);
    const double qq = a1.quad_form(n) * a2.quad_form(n);
    return 13.0 * tr12 - 28.0 * cross + 63.0 * qq;
}

double cp_point_kernel(const PolarizabilityTensor& a1, const PolarizabilityTensor& a2,
                       const Vec3& r_vec) {
    const double r = r_vec.norm();
    if (r == 0.0) throw std::domain_error("cp_point_kernel: zero separation");
    const Vec3 n{r_vec.x / r, r_vec.y / r, r_vec.z / r};
    const double r2 = r * r;
    const double r7 = r2 * r2 * r2 * r;
    return -kPrefactor * cp_point_bracket(a1, a2, n) / r7;
}

double cp_point_kernel_zeta(const PolarizabilityTensor& a1, const PolarizabilityTensor& a2,
                            const Vec3& r_vec, double rel_tol) {
    const double r = r_vec.norm();
    if (r == 0.0) throw std::domain_error("cp_point_kernel_zeta: zero separation");
    const Vec3 n{r_vec.x / r, r_vec.y / r, r_vec.z / r};

    const double tr12 = product_trace(a1, a2);
    const double cross = pair_quad_form(a1, a2, n);
    const double qq = a1.quad_form(n) * a2.quad_form(n);

    // Trace of the twice-scattered dyadic at imaginary frequency zeta = x/r:
    // u^2 tr(a1 a2) - u v n.(a1 a2 + a2 a1).n + v^2 (n.a1.n)(n.a2.n),
    // damped by exp(-2x). Frequency measure d(zeta)/(2 pi) and one factor
    // 1/(4 pi r^3) per dyadic, integrated over both frequency signs.
    auto integrand = [&](double x) {
        const auto [u, v] = green_dyadic_scalars(x);
        return std::exp(-2.0 * x) * (u * u * tr12 - u * v * cross + v * v * qq);
    };
    const double inf = std::numeric_limits<double>::infinity();
    const QuadratureResult q = adaptive_quad(integrand, 0.0, inf, rel_tol, 1e-16);

    const double r2 = r * r;
    const double r7 = r2 * r2 * r2 * r;
    return -q.value / (32.0 * kPi * kPi * kPi * r7);
}

}  // namespace cpring
