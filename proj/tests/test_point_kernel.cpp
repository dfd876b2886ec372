#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "cpring/geometry.hpp"
#include "cpring/point_kernel.hpp"

using namespace cpring;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kKernelNorm = 32.0 * kPi * kPi;

PolarizabilityTensor random_psd(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double m[3][3];
    for (auto& row : m)
        for (double& x : row) x = u(rng);
    double s[3][3]{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) s[i][j] += m[k][i] * m[k][j];
    return {s[0][0], s[1][1], s[2][2], s[0][1], s[0][2], s[1][2]};
}

Vec3 random_direction(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (;;) {
        const Vec3 v{u(rng), u(rng), u(rng)};
        if (v.norm() >= 0.1) return v.normalized();
    }
}

}  // namespace

TEST_CASE("dyadic scalar prefactors") {
    CHECK(green_dyadic_scalars(0.0).u == 1.0);
    CHECK(green_dyadic_scalars(0.0).v == 3.0);
    // u = 1 + x + x^2, v = 3 + 3x + x^2 at x = 2.
    CHECK(green_dyadic_scalars(2.0).u == 7.0);
    CHECK(green_dyadic_scalars(2.0).v == 13.0);
}

TEST_CASE("retardation integrals against the term-by-term sums") {
    // With int_0^inf e^{-2x} x^n dx = n!/2^{n+1}:
    //   u^2 = 1+2x+3x^2+2x^3+x^4      -> 1/2 + 1/2 + 3/4 + 3/4 + 3/4  = 13/4
    //   u v = 3+6x+7x^2+4x^3+x^4      -> 3/2 + 3/2 + 7/4 + 3/2 + 3/4  = 7
    //   v^2 = 9+18x+15x^2+6x^3+x^4    -> 9/2 + 9/2 + 15/4 + 9/4 + 3/4 = 63/4
    const auto exact = retardation_integrals_exact();
    CHECK(exact.i_uu == 3.25);
    CHECK(exact.i_uv == 7.0);
    CHECK(exact.i_vv == 15.75);
    CHECK(exact.error_estimate == 0.0);

    const auto num = retardation_integrals(1e-13);
    CHECK(num.i_uu == doctest::Approx(3.25).epsilon(1e-12));
    CHECK(num.i_uv == doctest::Approx(7.0).epsilon(1e-12));
    CHECK(num.i_vv == doctest::Approx(15.75).epsilon(1e-12));
    CHECK(num.error_estimate < 1e-10);
}

TEST_CASE("angular bracket at hand-solvable orientations") {
    const auto id = PolarizabilityTensor::identity();
    const auto axial = PolarizabilityTensor::uniaxial({0.0, 0.0, 1.0});
    const Vec3 z{0.0, 0.0, 1.0};
    const Vec3 x{1.0, 0.0, 0.0};

    // Isotropic pair: 13*3 - 28*2 + 63 = 46 for every direction.
    CHECK(cp_point_bracket(id, id, z) == 46.0);
    std::mt19937 rng(3u);
    CHECK(cp_point_bracket(id, id, random_direction(rng)) ==
          doctest::Approx(46.0).epsilon(1e-15));

    // Both axes along the separation: 13 - 28*2 + 63 = 20.
    CHECK(cp_point_bracket(axial, axial, z) == doctest::Approx(20.0).epsilon(1e-15));
    // Both axes perpendicular to the separation: only the trace term, 13.
    CHECK(cp_point_bracket(axial, axial, x) == doctest::Approx(13.0).epsilon(1e-15));
    // Both axes at 45 degrees: 13 - 28 + 63/4.
    const auto tilted = PolarizabilityTensor::uniaxial({1.0, 0.0, 1.0});
    CHECK(cp_point_bracket(tilted, tilted, z) == doctest::Approx(0.75).epsilon(1e-14));
}

TEST_CASE("kernel values at the bracket checkpoints") {
    const auto id = PolarizabilityTensor::identity();
    const auto axial = PolarizabilityTensor::uniaxial({0.0, 0.0, 1.0});

    CHECK(cp_point_kernel(id, id, {0.0, 0.0, 1.0}) ==
          doctest::Approx(-46.0 / kKernelNorm).epsilon(1e-14));
    CHECK(cp_point_kernel(axial, axial, {0.0, 0.0, 1.0}) ==
          doctest::Approx(-20.0 / kKernelNorm).epsilon(1e-14));
    CHECK(cp_point_kernel(axial, axial, {1.0, 0.0, 0.0}) ==
          doctest::Approx(-13.0 / kKernelNorm).epsilon(1e-14));

    CHECK_THROWS_AS(cp_point_kernel(id, id, {0.0, 0.0, 0.0}), std::domain_error);
}

TEST_CASE("kernel invariances over random inputs") {
    std::mt19937 rng(20260822u);
    std::uniform_real_distribution<double> ur(0.7, 2.0);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a1 = random_psd(rng);
        const auto a2 = random_psd(rng);
        const Vec3 r_vec = random_direction(rng) * ur(rng);
        const double e = cp_point_kernel(a1, a2, r_vec);

        // Exchange of the two particles.
        CHECK(cp_point_kernel(a2, a1, r_vec) == doctest::Approx(e).epsilon(1e-13));
        // Parity of the separation.
        CHECK(cp_point_kernel(a1, a2, -r_vec) == doctest::Approx(e).epsilon(1e-13));
        // r^{-7} scaling.
        const double s = 1.7;
        CHECK(cp_point_kernel(a1, a2, r_vec * s) * std::pow(s, 7) ==
              doctest::Approx(e).epsilon(1e-12));
        // Bilinearity in the first tensor.
        const auto b1 = random_psd(rng);
        const double mixed = cp_point_kernel(a1 + b1 * 0.6, a2, r_vec);
        const double parts = e + 0.6 * cp_point_kernel(b1, a2, r_vec);
        CHECK(mixed == doctest::Approx(parts).epsilon(1e-12));
    }
}

TEST_CASE("frequency-quadrature route differs by a fixed constant") {
    std::mt19937 rng(777u);
    std::uniform_real_distribution<double> ur(0.7, 2.0);
    std::vector<double> ratios;
    for (int trial = 0; trial < 20; ++trial) {
        const auto a1 = random_psd(rng);
        const auto a2 = random_psd(rng);
        const Vec3 r_vec = random_direction(rng) * ur(rng);
        const double closed = cp_point_kernel(a1, a2, r_vec);
        if (std::abs(closed) < 1e-12) continue;
        ratios.push_back(cp_point_kernel_zeta(a1, a2, r_vec, 1e-12) / closed);
    }
    REQUIRE(ratios.size() >= 15);
    for (const double r : ratios)
        CHECK(r == doctest::Approx(ratios.front()).epsilon(1e-8));
    // The bookkeeping constant between the two normalizations is 1/(4 pi).
    MESSAGE("measured route ratio = ", ratios.front());
    CHECK(ratios.front() == doctest::Approx(1.0 / (4.0 * kPi)).epsilon(1e-8));
}
