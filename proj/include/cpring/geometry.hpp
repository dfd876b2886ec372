#pragma once

#include <array>
#include <cmath>

namespace cpring {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    constexpr Vec3() = default;
    constexpr Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    constexpr double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm() const { return std::sqrt(dot(*this)); }
    constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vec3 operator-() const { return {-x, -y, -z}; }
    constexpr Vec3 operator*(double s) const { return {s * x, s * y, s * z}; }

    Vec3 normalized() const;
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

// Atom orientation axis for tilt theta (radians) measured from the symmetry
// axis z, tilted within the x-z plane: (sin theta, 0, cos theta).
Vec3 orientation_vector(double theta);

// Symmetric rank-2 polarizability. Stored as the six independent components;
// all energies are bilinear in these, so no normalization is imposed here.
// Physical tensors are positive semi-definite; construction from raw
// components checks that and warns (never throws), since test oracles
// legitimately evaluate the kernel on indefinite symmetric matrices.
class PolarizabilityTensor {
public:
    double xx = 0.0, yy = 0.0, zz = 0.0;
    double xy = 0.0, xz = 0.0, yz = 0.0;

    PolarizabilityTensor() = default;
    PolarizabilityTensor(double xx_, double yy_, double zz_,
                         double xy_, double xz_, double yz_);

    static PolarizabilityTensor identity();
    // alpha * (axis outer axis); axis is normalized defensively.
    static PolarizabilityTensor uniaxial(const Vec3& axis, double alpha = 1.0);

    double trace() const { return xx + yy + zz; }
    Vec3 apply(const Vec3& v) const;         // A v
    double quad_form(const Vec3& n) const;   // n . A . n

    bool is_positive_semidefinite(double tol = 1e-12) const;

    PolarizabilityTensor operator+(const PolarizabilityTensor& o) const;
    PolarizabilityTensor operator*(double s) const;

    // Global switch for the PSD construction warning (stderr). Tests that
    // exercise indefinite tensors silence it.
    static void set_psd_warnings(bool enabled);

private:
    static bool psd_warnings_;
};

inline PolarizabilityTensor operator*(double s, const PolarizabilityTensor& a) { return a * s; }

// tr(A B) for symmetric A, B.
double product_trace(const PolarizabilityTensor& a, const PolarizabilityTensor& b);

// n . (A B + B A) . n for symmetric A, B.
double pair_quad_form(const PolarizabilityTensor& a, const PolarizabilityTensor& b,
                      const Vec3& n);

}  // namespace cpring
