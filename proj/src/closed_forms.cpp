#include "cpring/closed_forms.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "cpring/batch.hpp"

namespace cpring {

namespace {

// Point evaluations go straight to the scalar reference lane; dispatch is
// for grids.
double one(void (*fn)(const double*, std::size_t, double, double*), double h, double c2) {
    double out;
    fn(&h, 1, c2, &out);
    return out;
}

void require_annulus_radius(double b_hat) {
    if (std::isnan(b_hat) || b_hat < 1.0)
        throw std::domain_error("annulus: outer radius must satisfy b_hat >= 1");
}

}  // namespace

double ring_energy(const AtomConfiguration& cfg) {
    return one(batch::scalar_lane::ring_energy, cfg.h_hat, std::cos(2.0 * cfg.theta));
}

double ring_force(const AtomConfiguration& cfg) {
    return one(batch::scalar_lane::ring_force, cfg.h_hat, std::cos(2.0 * cfg.theta));
}

double annulus_energy(const AtomConfiguration& cfg, double b_hat) {
    require_annulus_radius(b_hat);
    double out;
    const double c2 = std::cos(2.0 * cfg.theta);
    batch::scalar_lane::annulus_energy(&cfg.h_hat, 1, b_hat, c2, &out);
    return out;
}

double annulus_force(const AtomConfiguration& cfg, double b_hat) {
    require_annulus_radius(b_hat);
    double out;
    const double c2 = std::cos(2.0 * cfg.theta);
    batch::scalar_lane::annulus_force(&cfg.h_hat, 1, b_hat, c2, &out);
    return out;
}

double plate_energy(const AtomConfiguration& cfg) {
    return one(batch::scalar_lane::plate_energy, cfg.h_hat, std::cos(2.0 * cfg.theta));
}

double plate_force(const AtomConfiguration& cfg) {
    return one(batch::scalar_lane::plate_force, cfg.h_hat, std::cos(2.0 * cfg.theta));
}

EnergyDecomposition decompose(const BodyGeometry& geom, double h_hat) {
    if (geom.pol != Polarization::Axial)
        throw std::invalid_argument(
            "decompose: only the axial pattern has a closed form; use"
            " decompose_quadrature (body_quadrature.hpp) for radial, azimuthal"
            " or tensor patterns");
    double iso, aniso;
    switch (geom.kind) {
        case BodyKind::Ring:
            batch::scalar_lane::ring_iso_aniso(&h_hat, 1, &iso, &aniso);
            break;
        case BodyKind::Annulus:
            require_annulus_radius(geom.b_hat);
            batch::scalar_lane::annulus_iso_aniso(&h_hat, 1, geom.b_hat, &iso, &aniso);
            break;
        case BodyKind::Plate:
            batch::scalar_lane::plate_iso_aniso(&h_hat, 1, &iso, &aniso);
            break;
        default:
            throw std::logic_error("decompose: unknown body");
    }
    return {iso, aniso};
}

std::string energy_scale_expression(BodyKind kind) {
    switch (kind) {
        case BodyKind::Ring:
            return "hbar*c*alpha1*sigma_z/(64*pi*a^6)";
        case BodyKind::Annulus:
        case BodyKind::Plate:
            return "hbar*c*alpha1*lambda_z/(64*pi*a^5)";
    }
    throw std::logic_error("energy_scale_expression: unknown body");
}

}  // namespace cpring
