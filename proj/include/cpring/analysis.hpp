#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cpring/closed_forms.hpp"

namespace cpring {

// Row-level / report-level annotations. The enumeration is part of the
// output contract (see README): values are emitted verbatim in CSV "flags"
// columns and JSON "flags" arrays.
enum class Flag {
    PaperTextConflict,  // published running-text number disagrees with the governing equations
    Ref20Deviation,     // radial-pattern height disagrees with its published value beyond 0.01a
};
std::string flag_name(Flag f);

// Heights where the energy is orientation independent (e_aniso = 0).
// h2 is absent when the second zero does not exist in the searched range
// (radial plate pattern).
struct TorsionFreeSet {
    double h1;
    std::optional<double> h2;
};

// Axial closed-form roots.
TorsionFreeSet ring_torsion_free();                  // quartic 40h^4 - 123h^2 + 26
TorsionFreeSet plate_torsion_free();                 // quartic  6h^4 -  73h^2 + 26
// Root-find on the annulus anisotropy for finite b_hat >= 1; both heights
// move monotonically between the ring and plate limits.
TorsionFreeSet annulus_torsion_free(double b_hat);

// Quadrature route for patterns without closed forms. Scans h in
// (0, scan_max] and refines each sign change by bisection on the
// orientation difference E(theta=0) - E(theta=pi/2).
TorsionFreeSet torsion_free_quadrature(const BodyGeometry& geom, double scan_max = 50.0,
                                       double scan_step = 0.05, double rel_tol = 1e-9);

// Height interval with outward force on the tilted atom (ring body, axial
// polarization), at positive heights. lo == 0 marks a window anchored at
// the plane through the center.
struct RepulsionWindow {
    double lo;
    double hi;
};

struct RepulsionReport {
    std::vector<RepulsionWindow> windows;  // ordered by lo
    std::vector<Flag> flags;
};

// Algebraic window boundaries from the force quartic
//   280(1+c) y^2 - (133 + 1267 c) y + (280 + 532 c) = 0,   y = h^2, c = cos 2theta,
// handling the degenerate c = -1 (linear) case, cross-validated internally
// by a sign scan of ring_force at step 1e-3. The intermediate window at
// theta = 0 carries Flag::PaperTextConflict (the published running text
// quotes a different range than the equations produce).
RepulsionReport repulsion_windows(double theta);

struct CriticalAngles {
    double lo_deg;            // onset of the center-anchored window
    double hi_deg;            // mirror bound: 180 - lo
    double intermediate_deg;  // largest tilt with a detached window
};
CriticalAngles critical_angles();

// Smallest outer radius at which the detached (intermediate) repulsion
// window of the annulus collapses, for |theta| < intermediate critical
// angle. Golden-section maximum of the annulus force over heights inside a
// bisection on b_hat in (1, 3), to b_tol.
double critical_outer_radius(double theta, double b_tol = 1e-6);

// Orientation energy difference dE(h) = E(h, theta=0) - E(h, theta=pi/2)
// over a height grid. Axial patterns use the closed forms; other patterns
// go through the quadrature route.
struct DeltaEPoint {
    double h_hat;
    double delta_e;
};
std::vector<DeltaEPoint> delta_E_sweep(const BodyGeometry& geom,
                                       const std::vector<double>& h_grid,
                                       double rel_tol = 1e-9);

// Four-stroke quasi-static cycle between the plane center and the lower
// torsion-free height: A = (0, 0), B = (0, 90 deg), C = (h1, 90 deg),
// D = (h1, 0). Work legs are energy differences; the net must vanish.
struct CycleReport {
    double e_a, e_b, e_c, e_d;
    double w_ab, w_bc, w_cd, w_da;
    double net;
};
CycleReport machine_cycle();

}  // namespace cpring
