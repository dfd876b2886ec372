#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "cpring/geometry.hpp"

using namespace cpring;

namespace {

// Dense 3x3 mirror of the packed symmetric storage, used to cross-check the
// tensor algebra against plain matrix arithmetic.
struct Dense {
    double m[3][3];
};

Dense to_dense(const PolarizabilityTensor& t) {
    return {{{t.xx, t.xy, t.xz}, {t.xy, t.yy, t.yz}, {t.xz, t.yz, t.zz}}};
}

Dense matmul(const Dense& a, const Dense& b) {
    Dense r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) r.m[i][j] += a.m[i][k] * b.m[k][j];
    return r;
}

double quad(const Dense& a, const Vec3& n) {
    const double v[3] = {n.x, n.y, n.z};
    double s = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s += v[i] * a.m[i][j] * v[j];
    return s;
}

PolarizabilityTensor random_psd(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double m[3][3];
    for (auto& row : m)
        for (double& x : row) x = u(rng);
    // M^T M is symmetric positive semi-definite for any M.
    double s[3][3]{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) s[i][j] += m[k][i] * m[k][j];
    return {s[0][0], s[1][1], s[2][2], s[0][1], s[0][2], s[1][2]};
}

}  // namespace

TEST_CASE("Vec3 arithmetic and norms") {
    const Vec3 a{1.0, 2.0, -2.0};
    const Vec3 b{-3.0, 0.5, 4.0};
    CHECK(a.dot(b) == doctest::Approx(-3.0 + 1.0 - 8.0));
    CHECK(a.norm() == doctest::Approx(3.0));
    const Vec3 s = a + b * 2.0;
    CHECK(s.x == doctest::Approx(-5.0));
    CHECK(s.y == doctest::Approx(3.0));
    CHECK(s.z == doctest::Approx(6.0));
    CHECK((a - a).norm() == 0.0);
    CHECK((-a).x == -1.0);
    CHECK(a.normalized().norm() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("orientation vector lies in the x-z plane with unit length") {
    for (double theta : {0.0, 0.3, 1.0, 1.5707963267948966, 2.5}) {
        const Vec3 e = orientation_vector(theta);
        CHECK(e.y == 0.0);
        CHECK(e.norm() == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(e.z == doctest::Approx(std::cos(theta)));
        CHECK(e.x == doctest::Approx(std::sin(theta)));
    }
}

TEST_CASE("identity and uniaxial constructors") {
    const auto id = PolarizabilityTensor::identity();
    CHECK(id.trace() == 3.0);
    CHECK(id.quad_form({0.0, 0.0, 1.0}) == 1.0);
    CHECK(id.is_positive_semidefinite());

    const auto az = PolarizabilityTensor::uniaxial({0.0, 0.0, 1.0});
    CHECK(az.zz == 1.0);
    CHECK(az.xx == 0.0);
    CHECK(az.trace() == doctest::Approx(1.0));
    CHECK(az.is_positive_semidefinite());

    // Non-unit axis is normalized; alpha scales the whole tensor.
    const auto t = PolarizabilityTensor::uniaxial({0.0, 0.0, 5.0}, 2.0);
    CHECK(t.zz == doctest::Approx(2.0));
    CHECK(t.trace() == doctest::Approx(2.0));

    const auto tilted = PolarizabilityTensor::uniaxial({1.0, 0.0, 1.0});
    CHECK(tilted.xx == doctest::Approx(0.5));
    CHECK(tilted.xz == doctest::Approx(0.5));
    CHECK(tilted.quad_form({1.0, 0.0, 0.0}) == doctest::Approx(0.5));
}

TEST_CASE("tensor contractions agree with dense matrix arithmetic") {
    std::mt19937 rng(91u);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 25; ++trial) {
        const auto a = random_psd(rng);
        const auto b = random_psd(rng);
        const Vec3 n = Vec3{u(rng), u(rng), u(rng) + 1.5}.normalized();

        const Dense da = to_dense(a);
        const Dense db = to_dense(b);
        const Dense ab = matmul(da, db);
        const Dense ba = matmul(db, da);

        const double tr = ab.m[0][0] + ab.m[1][1] + ab.m[2][2];
        CHECK(product_trace(a, b) == doctest::Approx(tr).epsilon(1e-13));

        Dense sum{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) sum.m[i][j] = ab.m[i][j] + ba.m[i][j];
        CHECK(pair_quad_form(a, b, n) == doctest::Approx(quad(sum, n)).epsilon(1e-13));

        CHECK(a.quad_form(n) == doctest::Approx(quad(da, n)).epsilon(1e-13));
        const Vec3 av = a.apply(n);
        CHECK(av.x == doctest::Approx(da.m[0][0] * n.x + da.m[0][1] * n.y + da.m[0][2] * n.z));
    }
}

TEST_CASE("tensor sums and scaling stay componentwise") {
    const PolarizabilityTensor a{1.0, 2.0, 3.0, 0.1, 0.2, 0.3};
    const PolarizabilityTensor b{0.5, 0.5, 0.5, 0.0, 0.0, 0.0};
    const auto s = a + b * 2.0;
    CHECK(s.xx == 2.0);
    CHECK(s.yy == 3.0);
    CHECK(s.xy == 0.1);
    const auto t = 3.0 * b;
    CHECK(t.zz == 1.5);
}

TEST_CASE("positive semi-definiteness check flags indefinite tensors") {
    PolarizabilityTensor::set_psd_warnings(false);
    // Diagonal with one negative eigenvalue.
    const PolarizabilityTensor neg{1.0, -0.5, 1.0, 0.0, 0.0, 0.0};
    CHECK_FALSE(neg.is_positive_semidefinite());
    // Rank-one projector is PSD despite zero eigenvalues.
    CHECK(PolarizabilityTensor::uniaxial({1.0, 1.0, 0.0}).is_positive_semidefinite());
    // Off-diagonal dominance breaks PSD: eigenvalues 1 +/- 2.
    const PolarizabilityTensor offd{1.0, 1.0, 1.0, 2.0, 0.0, 0.0};
    CHECK_FALSE(offd.is_positive_semidefinite());
    PolarizabilityTensor::set_psd_warnings(true);
}
