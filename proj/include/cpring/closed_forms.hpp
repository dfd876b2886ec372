#pragma once

#include <optional>
#include <string>

namespace cpring {

// Reduced coordinates throughout: heights and radii in units of the inner
// (ring) radius a. Energies are reduced; the physical scale for each body is
// the symbolic expression returned by energy_scale_expression().
//   ring:            hbar c alpha1 sigma_z / (64 pi a^6)
//   annulus, plate:  hbar c alpha1 lambda_z / (64 pi a^5)

struct AtomConfiguration {
    double h_hat = 0.0;  // axial height / a; any finite value
    double theta = 0.0;  // tilt from the symmetry axis, radians; energies are pi-periodic
};

enum class BodyKind { Ring, Annulus, Plate };

enum class Polarization { Axial, Radial, Azimuthal, Isotropic, Tensor };

struct EnergyDecomposition {
    double e_iso;
    double e_aniso;  // energy(theta) = e_iso + e_aniso * cos(2 theta)
};

struct BodyGeometry {
    BodyKind kind = BodyKind::Ring;
    double b_hat = 1.0;  // outer/inner radius; annulus only, must be >= 1
    Polarization pol = Polarization::Axial;
};

// --- axially polarized closed forms ---

// Ring: E = -[(26 + 3h^2 + 40h^4) + (26 - 123h^2 + 40h^4) cos 2theta] / (1+h^2)^(11/2)
double ring_energy(const AtomConfiguration& cfg);

// F = -dE/dh; positive at h > 0 means repulsion (directed away from the plane).
double ring_force(const AtomConfiguration& cfg);

// Annulus with outer radius b_hat >= 1 (b_hat may be +infinity = plate):
//   E = (1/5) [G(b_hat) - G(1)],
//   G(rho) = [(26 rho^4 + 17 h^2 rho^2 + 26 h^4)
//             + (26 rho^4 - 73 h^2 rho^2 + 6 h^4) cos 2theta] / (rho^2 + h^2)^(9/2).
// Throws std::domain_error for b_hat < 1.
double annulus_energy(const AtomConfiguration& cfg, double b_hat);
double annulus_force(const AtomConfiguration& cfg, double b_hat);

// Plate limit (b_hat -> infinity): E = -(1/5) G(1).
double plate_energy(const AtomConfiguration& cfg);
double plate_force(const AtomConfiguration& cfg);

// Orientation decomposition E(theta) = e_iso + e_aniso cos 2theta of the
// axial closed forms. Only the axial pattern has a closed form; radial or
// azimuthal patterns throw std::invalid_argument directing the caller to the
// quadrature route (body_quadrature.hpp).
EnergyDecomposition decompose(const BodyGeometry& geom, double h_hat);

// Symbolic physical scale multiplying the reduced energies.
std::string energy_scale_expression(BodyKind kind);

}  // namespace cpring
