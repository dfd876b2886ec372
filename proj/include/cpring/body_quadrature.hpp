#pragma once

#include "cpring/closed_forms.hpp"
#include "cpring/geometry.hpp"
#include "cpring/quadrature.hpp"

namespace cpring {

// Numeric route to the body energies: the point kernel integrated over the
// source distribution. Entirely independent of the closed forms (no shared
// bracket constants), which is what makes it usable as an oracle against
// them, and it covers the polarization patterns that have no closed form
// (radial, azimuthal, arbitrary constant tensor).
//
// Same reduced units as closed_forms.hpp; the inner radius is 1.

// Body polarizability direction at azimuth phi for a pattern. For
// Polarization::Tensor the constant tensor is supplied by the caller.
PolarizabilityTensor pattern_tensor(Polarization pol, double phi,
                                    const PolarizabilityTensor* constant_tensor = nullptr);

// Ring of unit radius, atom tensor a1 at height h_hat.
QuadratureResult ring_energy_quadrature(const PolarizabilityTensor& a1, double h_hat,
                                        Polarization pol,
                                        const PolarizabilityTensor* constant_tensor = nullptr,
                                        double rel_tol = 1e-9, double abs_tol = 1e-12);

// Convenience: atom axis from the configuration tilt.
QuadratureResult ring_energy_quadrature(const AtomConfiguration& cfg, Polarization pol,
                                        double rel_tol = 1e-9, double abs_tol = 1e-12);

// Annulus 1 <= rho <= b_hat (b_hat may be +infinity = plate). The radial
// integral is adaptive; the azimuthal factor reuses the ring path per radius.
// Throws std::domain_error for b_hat < 1.
QuadratureResult annulus_energy_quadrature(const PolarizabilityTensor& a1, double h_hat,
                                           double b_hat, Polarization pol,
                                           const PolarizabilityTensor* constant_tensor = nullptr,
                                           double rel_tol = 1e-9, double abs_tol = 1e-12);

QuadratureResult annulus_energy_quadrature(const AtomConfiguration& cfg, double b_hat,
                                           Polarization pol,
                                           double rel_tol = 1e-9, double abs_tol = 1e-12);

// Orientation decomposition through two tilt evaluations (theta = 0, pi/2);
// valid for every pattern because the tilt enters only through cos 2theta.
struct QuadratureDecomposition {
    EnergyDecomposition decomposition;
    double error_estimate;
    long evaluations;
};
QuadratureDecomposition decompose_quadrature(const BodyGeometry& geom, double h_hat,
                                             double rel_tol = 1e-9, double abs_tol = 1e-12);

}  // namespace cpring
