#include <cmath>
#include <cstddef>

#include "cpring/batch.hpp"

// Reference lane. The AVX2 lane mirrors this operation order exactly
// (add/mul/div/sqrt are all correctly rounded, so identical order means
// identical bits); any change here must be applied to both.

namespace cpring::batch::scalar_lane {

void ring_energy(const double* h, std::size_t n, double cos2t, double* out) {
    for (std::size_t i = 0; i < n; ++i) {
        const double h2 = h[i] * h[i];
        const double w = 1.0 + h2;
        const double p = 26.0 + h2 * (3.0 + 40.0 * h2);
        const double q = 26.0 + h2 * (-123.0 + 40.0 * h2);
        const double w2 = w * w;
        const double w4 = w2 * w2;
        const double den = (w4 * w) * std::sqrt(w);
        out[i] = -((p + q * cos2t) / den);
    }
}

void ring_force(const double* h, std::size_t n, double cos2t, double* out) {
    for (std::size_t i = 0; i < n; ++i) {
        const double h2 = h[i] * h[i];
        const double w = 1.0 + h2;
        const double b0 = -280.0 + h2 * (133.0 - 280.0 * h2);
        const double b1 = -532.0 + h2 * (1267.0 - 280.0 * h2);
        const double w2 = w * w;
        const double w4 = w2 * w2;
        const double den = (w4 * w2) * std::sqrt(w);
        out[i] = h[i] * (b0 + b1 * cos2t) / den;
    }
}

void ring_iso_aniso(const double* h, std::size_t n, double* iso, double* aniso) {
    for (std::size_t i = 0; i < n; ++i) {
        const double h2 = h[i] * h[i];
        const double w = 1.0 + h2;
        const double p = 26.0 + h2 * (3.0 + 40.0 * h2);
        const double q = 26.0 + h2 * (-123.0 + 40.0 * h2);
        const double w2 = w * w;
        const double w4 = w2 * w2;
        const double den = (w4 * w) * std::sqrt(w);
        iso[i] = -(p / den);
        aniso[i] = -(q / den);
    }
}

// Shared radial profile for the annulus family:
//   G(rho) = (gi + ga c2) / (rho^2 + h^2)^(9/2)
//   dG/dh  = h (di + da c2) / (rho^2 + h^2)^(11/2)
// with gi/ga/di/da the quartic coefficients below. The annulus energy is
// (1/5)[G(b) - G(1)], the force -(h/5)[dG(b) - dG(1)] with the h factored out.

namespace {

inline void g_parts(double r2, double h2, double h4, double& gi, double& ga,
                    double& den) {
    const double r4 = r2 * r2;
    gi = 26.0 * r4 + 17.0 * r2 * h2 + 26.0 * h4;
    ga = 26.0 * r4 - 73.0 * r2 * h2 + 6.0 * h4;
    const double u = r2 + h2;
    const double u2 = u * u;
    const double u4 = u2 * u2;
    den = u4 * std::sqrt(u);
}

inline void dg_parts(double r2, double h2, double h4, double& di, double& da,
                     double& den) {
    const double r4 = r2 * r2;
    di = -(200.0 * r4 + 15.0 * r2 * h2 + 130.0 * h4);
    da = -380.0 * r4 + 535.0 * r2 * h2 - 30.0 * h4;
    const double u = r2 + h2;
    const double u2 = u * u;
    const double u4 = u2 * u2;
    den = (u4 * u) * std::sqrt(u);
}

}  // namespace

void annulus_energy(const double* h, std::size_t n, double b, double cos2t, double* out) {
    const double b2 = b * b;
    const bool finite = std::isfinite(b);
    for (std::size_t i = 0; i < n; ++i) {
        const double h2 = h[i] * h[i];
        const double h4 = h2 * h2;
        double gi1, ga1, den1;
        g_parts(1.0, h2, h4, gi1, ga1, den1);
        double gb = 0.0;
        if (finite) {
            double gib, gab, denb;
            g_parts(b2, h2, h4, gib, gab, denb);
            gb = (gib + gab * cos2t) / denb;
        }
        out[i] = 0.2 * (gb - (gi1 + ga1 * cos2t) / den1);
    }
}

void annulus_force(const double* h, std::size_t n, double b, double cos2t, double* out) {
    const double b2 = b * b;
    const bool finite = std::isfinite(b);
    for (std::size_t i = 0; i < n; ++i) {
        const double h2 = h[i] * h[i];
        const double h4 = h2 * h2;
        double di1, da1, den1;
        dg_parts(1.0, h2, h4, di1, da1, den1);
        double db = 0.0;
        if (finite) {
            double dib, dab, denb;
            dg_parts(b2, h2, h4, dib, dab, denb);
            db = (dib + dab * cos2t) / denb;
        }
        out[i] = -(h[i] * 0.2) * (db - (di1 + da1 * cos2t) / den1);
    }
}

void annulus_iso_aniso(const double* h, std::size_t n, double b, double* iso, double* aniso) {
    const double b2 = b * b;
    const bool finite = std::isfinite(b);
    for (std::size_t i = 0; i < n; ++i) {
        const double h2 = h[i] * h[i];
        const double h4 = h2 * h2;
        double gi1, ga1, den1;
        g_parts(1.0, h2, h4, gi1, ga1, den1);
        double gib = 0.0, gab = 0.0, denb = 1.0;
        if (finite) g_parts(b2, h2, h4, gib, gab, denb);
        iso[i] = 0.2 * (gib / denb - gi1 / den1);
        aniso[i] = 0.2 * (gab / denb - ga1 / den1);
    }
}

void plate_energy(const double* h, std::size_t n, double cos2t, double* out) {
    for (std::size_t i = 0; i < n; ++i) {
        const double h2 = h[i] * h[i];
        const double h4 = h2 * h2;
        double gi1, ga1, den1;
        g_parts(1.0, h2, h4, gi1, ga1, den1);
        out[i] = -0.2 * ((gi1 + ga1 * cos2t) / den1);
    }
}

void plate_force(const double* h, std::size_t n, double cos2t, double* out) {
    for (std::size_t i = 0; i < n; ++i) {
        const double h2 = h[i] * h[i];
        const double h4 = h2 * h2;
        double di1, da1, den1;
        dg_parts(1.0, h2, h4, di1, da1, den1);
        out[i] = (h[i] * 0.2) * ((di1 + da1 * cos2t) / den1);
    }
}

void plate_iso_aniso(const double* h, std::size_t n, double* iso, double* aniso) {
    for (std::size_t i = 0; i < n; ++i) {
        const double h2 = h[i] * h[i];
        const double h4 = h2 * h2;
        double gi1, ga1, den1;
        g_parts(1.0, h2, h4, gi1, ga1, den1);
        iso[i] = -0.2 * (gi1 / den1);
        aniso[i] = -0.2 * (ga1 / den1);
    }
}

}  // namespace cpring::batch::scalar_lane
