#pragma once

#include "cpring/geometry.hpp"

namespace cpring {

// Scalar prefactors of the imaginary-frequency vacuum Green dyadic,
//   G(x) ~ -u(x) 1 + v(x) rr/r^2  with  u = 1 + x + x^2,  v = 3 + 3x + x^2.
struct GreenScalars {
    double u;
    double v;
};
GreenScalars green_dyadic_scalars(double x);

// Frequency integrals of the dyadic scalar products against exp(-2x):
//   I_uu = 13/4,  I_uv = 7,  I_vv = 63/4.
// evaluate() computes them by adaptive quadrature and reports the achieved
// error estimate; exact() returns the closed-form rationals.
struct RetardationCoefficients {
    double i_uu;
    double i_uv;
    double i_vv;
    double error_estimate;  // max over the three integrals
};
RetardationCoefficients retardation_integrals(double rel_tol = 1e-12);
RetardationCoefficients retardation_integrals_exact();

// Angular bracket of the retarded point-point interaction:
//   13 tr(a1 a2) - 28 n.(a1 a2 + a2 a1).n + 63 (n.a1.n)(n.a2.n).
// Isotropic unit tensors give exactly 46.
double cp_point_bracket(const PolarizabilityTensor& a1, const PolarizabilityTensor& a2,
                        const Vec3& n);

// Retarded point-point interaction energy (hbar = c = 1):
//   E = -bracket / (32 pi^2 r^7).
// The normalization is pinned so that integrating this kernel over a ring of
// axial polarizability reproduces the ring closed form exactly.
// Throws std::domain_error on zero separation.
double cp_point_kernel(const PolarizabilityTensor& a1, const PolarizabilityTensor& a2,
                       const Vec3& r_vec);

// Same observable evaluated the long way: numeric quadrature over imaginary
// frequency of the dyadic contraction, with the literal 1/2pi frequency
// measure. Differs from cp_point_kernel by a fixed overall constant (the
// normalization bookkeeping of the two conventions); tests assert that the
// ratio is input-independent and record its measured value.
double cp_point_kernel_zeta(const PolarizabilityTensor& a1, const PolarizabilityTensor& a2,
                            const Vec3& r_vec, double rel_tol = 1e-10);

}  // namespace cpring
