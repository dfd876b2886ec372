#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "cpring/body_quadrature.hpp"
#include "cpring/closed_forms.hpp"

using namespace cpring;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kHalfPi = 1.57079632679489661923;
const double kInf = std::numeric_limits<double>::infinity();

bool close(double a, double b, double rel, double abs_floor = 1e-9) {
    return std::abs(a - b) <= std::max(rel * std::abs(b), abs_floor);
}

// Ring with polarizability along the local azimuth: the separation vector is
// orthogonal to the body axis everywhere, so only the trace term of the
// bracket survives and the azimuthal integral is elementary:
//   E_phi(h, theta) = -26 sin^2 theta / (1 + h^2)^{7/2}.
double ring_azimuthal_closed(double h, double theta) {
    const double s2 = std::sin(theta) * std::sin(theta);
    return -26.0 * s2 / std::pow(1.0 + h * h, 3.5);
}

// Radial pattern, worked out from the bracket with int cos^2 = pi and
// int (h cos(theta) - sin(theta) cos(phi))^2 = 2 pi h^2 cos^2 + pi sin^2:
//   E_rho(h, theta) = -2 [ 13 s^2 - 56 s^2/w^2 + (126 h^2 c^2 + 63 s^2)/w^4 ] / w^7,
// with w^2 = 1 + h^2, s = sin theta, c = cos theta.
double ring_radial_closed(double h, double theta) {
    const double w2 = 1.0 + h * h;
    const double s2 = std::sin(theta) * std::sin(theta);
    const double c2 = std::cos(theta) * std::cos(theta);
    const double bracket = 13.0 * s2 - 56.0 * s2 / w2 + (126.0 * h * h * c2 + 63.0 * s2) / (w2 * w2);
    return -2.0 * bracket / std::pow(w2, 3.5);
}

}  // namespace

TEST_CASE("pattern tensors point along the body directions") {
    const auto ax = pattern_tensor(Polarization::Axial, 1.234);
    CHECK(ax.zz == 1.0);
    CHECK(ax.xx == 0.0);

    const auto rad0 = pattern_tensor(Polarization::Radial, 0.0);
    CHECK(rad0.xx == doctest::Approx(1.0));
    CHECK(rad0.yy == doctest::Approx(0.0));
    const auto rad90 = pattern_tensor(Polarization::Radial, kHalfPi);
    CHECK(rad90.yy == doctest::Approx(1.0));

    const auto az0 = pattern_tensor(Polarization::Azimuthal, 0.0);
    CHECK(az0.yy == doctest::Approx(1.0));
    CHECK(az0.xx == 0.0);

    // Radial and azimuthal directions stay orthogonal at every azimuth.
    for (double phi : {0.3, 1.1, 2.9, 4.4}) {
        const auto r = pattern_tensor(Polarization::Radial, phi);
        const auto a = pattern_tensor(Polarization::Azimuthal, phi);
        CHECK(std::abs(product_trace(r, a)) <= 1e-15);
    }

    CHECK(pattern_tensor(Polarization::Isotropic, 2.0).trace() == 3.0);
    CHECK_THROWS_AS(pattern_tensor(Polarization::Tensor, 0.0), std::invalid_argument);
    const auto ct = PolarizabilityTensor::uniaxial({0.0, 0.0, 1.0});
    CHECK(pattern_tensor(Polarization::Tensor, 0.0, &ct).zz == 1.0);
}

TEST_CASE("axial ring quadrature reproduces the closed form on a grid") {
    int honest = 0, total = 0;
    for (int i = 0; i < 8; ++i) {
        const double h = -2.0 + 4.5 * i / 7.0;
        for (double theta : {0.0, 0.3, 0.25 * kPi, kHalfPi}) {
            const double closed = ring_energy({h, theta});
            const auto q = ring_energy_quadrature({h, theta}, Polarization::Axial, 1e-10, 1e-13);
            CHECK(close(q.value, closed, 1e-8, 1e-9));
            ++total;
            if (std::abs(q.value - closed) <= std::max(q.error_estimate, 1e-14)) ++honest;
        }
    }
    // The reported error estimate should bound the true error essentially
    // always on these smooth integrands.
    CHECK(honest >= total - 1);
}

TEST_CASE("axial annulus quadrature reproduces the closed form") {
    for (double b : {1.2, 1.6505, 2.0, 5.0}) {
        for (double h : {0.0, 0.7, 1.5, 3.0}) {
            for (double theta : {0.0, 0.8, kHalfPi}) {
                const double closed = annulus_energy({h, theta}, b);
                const auto q =
                    annulus_energy_quadrature({h, theta}, b, Polarization::Axial, 1e-9, 1e-12);
                CHECK(close(q.value, closed, 1e-7, 1e-8));
            }
        }
    }

    const auto plate_q =
        annulus_energy_quadrature({0.5, 0.4}, kInf, Polarization::Axial, 1e-9, 1e-12);
    CHECK(close(plate_q.value, plate_energy({0.5, 0.4}), 1e-7, 1e-8));

    const auto zero_width = annulus_energy_quadrature({1.0, 0.0}, 1.0, Polarization::Axial);
    CHECK(zero_width.value == 0.0);
    CHECK_THROWS_AS(annulus_energy_quadrature({1.0, 0.0}, 0.9, Polarization::Axial),
                    std::domain_error);
}

TEST_CASE("azimuthal ring energies match the elementary integral") {
    CHECK(close(ring_energy_quadrature({0.0, kHalfPi}, Polarization::Azimuthal).value, -26.0,
                1e-8));
    for (double h : {0.0, 0.6, 1.0, 2.2}) {
        for (double theta : {0.0, 0.5, 1.0, kHalfPi}) {
            const auto q = ring_energy_quadrature({h, theta}, Polarization::Azimuthal, 1e-10);
            CHECK(close(q.value, ring_azimuthal_closed(h, theta), 1e-8, 1e-10));
        }
    }
}

TEST_CASE("radial ring energies match the worked-out integral") {
    // Spot values: 0 at (0, 0), -40 at (0, 90 deg), -63/2^{7/2} at (1, 0).
    CHECK(std::abs(ring_energy_quadrature({0.0, 0.0}, Polarization::Radial).value) < 1e-9);
    CHECK(close(ring_energy_quadrature({0.0, kHalfPi}, Polarization::Radial).value, -40.0, 1e-8));
    CHECK(close(ring_energy_quadrature({1.0, 0.0}, Polarization::Radial).value,
                -63.0 / std::pow(2.0, 3.5), 1e-8));

    for (double h : {0.2, 0.36, 1.0, 2.0, 3.4453}) {
        for (double theta : {0.0, 0.7, kHalfPi}) {
            const auto q = ring_energy_quadrature({h, theta}, Polarization::Radial, 1e-10);
            CHECK(close(q.value, ring_radial_closed(h, theta), 1e-8, 1e-10));
        }
    }
}

TEST_CASE("pattern energies satisfy the completeness sum rule") {
    // rho rho^T + phi phi^T + z z^T is the identity at every azimuth, so the
    // three uniaxial patterns must sum to the isotropic one.
    for (double h : {0.0, 0.8, 2.0}) {
        for (double theta : {0.0, 0.5, 1.2}) {
            const AtomConfiguration cfg{h, theta};
            const double sum = ring_energy_quadrature(cfg, Polarization::Radial, 1e-10).value +
                               ring_energy_quadrature(cfg, Polarization::Azimuthal, 1e-10).value +
                               ring_energy_quadrature(cfg, Polarization::Axial, 1e-10).value;
            const double iso = ring_energy_quadrature(cfg, Polarization::Isotropic, 1e-10).value;
            CHECK(close(sum, iso, 1e-8, 1e-8));
        }
    }
    // At the plane center with parallel axis the three parts are 0, 0, -52.
    CHECK(close(ring_energy_quadrature({0.0, 0.0}, Polarization::Isotropic).value, -52.0, 1e-8));
}

TEST_CASE("constant-tensor pattern generalizes the fixed patterns") {
    const auto axial_tensor = PolarizabilityTensor::uniaxial({0.0, 0.0, 1.0});
    const auto id = PolarizabilityTensor::identity();
    const auto atom = PolarizabilityTensor::uniaxial({std::sin(0.6), 0.0, std::cos(0.6)});

    const auto via_pattern = ring_energy_quadrature(atom, 1.2, Polarization::Axial);
    const auto via_tensor =
        ring_energy_quadrature(atom, 1.2, Polarization::Tensor, &axial_tensor);
    CHECK(via_tensor.value == doctest::Approx(via_pattern.value).epsilon(1e-12));

    const auto iso_pattern = ring_energy_quadrature(atom, 1.2, Polarization::Isotropic);
    const auto iso_tensor = ring_energy_quadrature(atom, 1.2, Polarization::Tensor, &id);
    CHECK(iso_tensor.value == doctest::Approx(iso_pattern.value).epsilon(1e-12));
}

TEST_CASE("quadrature decomposition reconstructs unseen tilts") {
    const BodyGeometry geom{BodyKind::Ring, 1.0, Polarization::Radial};
    for (double h : {0.5, 1.3}) {
        const auto d = decompose_quadrature(geom, h, 1e-10);
        for (double theta : {0.3, 1.1}) {
            const double direct = ring_energy_quadrature({h, theta}, Polarization::Radial, 1e-10).value;
            const double rebuilt =
                d.decomposition.e_iso + d.decomposition.e_aniso * std::cos(2.0 * theta);
            CHECK(close(rebuilt, direct, 1e-7, 1e-9));
        }
    }
}

TEST_CASE("radial anisotropy changes sign at the predicted heights") {
    // From the worked-out integral, e_aniso = (13 y^2 - 156 y + 20)/w^{11}
    // with y = h^2: zeros at y = (156 -+ 16 sqrt(91))/26.
    const double y1 = (156.0 - 16.0 * std::sqrt(91.0)) / 26.0;
    const double y2 = (156.0 + 16.0 * std::sqrt(91.0)) / 26.0;
    const double h1 = std::sqrt(y1);
    const double h2 = std::sqrt(y2);
    CHECK(h1 == doctest::Approx(0.3600068).epsilon(1e-6));
    CHECK(h2 == doctest::Approx(3.4453440).epsilon(1e-6));

    const BodyGeometry geom{BodyKind::Ring, 1.0, Polarization::Radial};
    auto aniso = [&](double h) {
        return decompose_quadrature(geom, h, 1e-9).decomposition.e_aniso;
    };
    // The quadratic is +20 at h = 0 and negative between its roots.
    CHECK(aniso(h1 - 0.05) > 0.0);
    CHECK(aniso(0.5 * (h1 + h2)) < 0.0);
    CHECK(aniso(h2 + 0.05) > 0.0);
    // Within a step of each zero the sign flip happens where predicted.
    CHECK(aniso(h1 - 1e-3) * aniso(h1 + 1e-3) < 0.0);
    CHECK(aniso(h2 - 1e-2) * aniso(h2 + 1e-2) < 0.0);
}
