#include "cpring/geometry.hpp"

#include <iostream>
#include <stdexcept>

namespace cpring {

Vec3 Vec3::normalized() const {
    const double n = norm();
    if (n == 0.0) throw std::domain_error("Vec3::normalized: zero vector");
    return {x / n, y / n, z / n};
}

Vec3 orientation_vector(double theta) {
    return {std::sin(theta), 0.0, std::cos(theta)};
}

bool PolarizabilityTensor::psd_warnings_ = true;

void PolarizabilityTensor::set_psd_warnings(bool enabled) { psd_warnings_ = enabled; }

PolarizabilityTensor::PolarizabilityTensor(double xx_, double yy_, double zz_,
                                           double xy_, double xz_, double yz_)
    : xx(xx_), yy(yy_), zz(zz_), xy(xy_), xz(xz_), yz(yz_) {
    if (psd_warnings_ && !is_positive_semidefinite()) {
        std::cerr << "cpring: warning: polarizability tensor is not positive"
                     " semi-definite; energies remain well defined but the"
                     " tensor is unphysical\n";
    }
}

PolarizabilityTensor PolarizabilityTensor::identity() {
    PolarizabilityTensor t;
    t.xx = t.yy = t.zz = 1.0;
    return t;
}

PolarizabilityTensor PolarizabilityTensor::uniaxial(const Vec3& axis, double alpha) {
    const Vec3 e = axis.normalized();
    PolarizabilityTensor t;
    t.xx = alpha * e.x * e.x;
    t.yy = alpha * e.y * e.y;
    t.zz = alpha * e.z * e.z;
    t.xy = alpha * e.x * e.y;
    t.xz = alpha * e.x * e.z;
    t.yz = alpha * e.y * e.z;
    return t;
}

Vec3 PolarizabilityTensor::apply(const Vec3& v) const {
    return {xx * v.x + xy * v.y + xz * v.z,
            xy * v.x + yy * v.y + yz * v.z,
            xz * v.x + yz * v.y + zz * v.z};
}

double PolarizabilityTensor::quad_form(const Vec3& n) const { return n.dot(apply(n)); }

bool PolarizabilityTensor::is_positive_semidefinite(double tol) const {
    // All principal minors nonnegative (Sylvester for PSD, symmetric 3x3).
    if (xx < -tol || yy < -tol || zz < -tol) return false;
    const double m_xy = xx * yy - xy * xy;
    const double m_xz = xx * zz - xz * xz;
    const double m_yz = yy * zz - yz * yz;
    if (m_xy < -tol || m_xz < -tol || m_yz < -tol) return false;
    const double det = xx * (yy * zz - yz * yz) - xy * (xy * zz - yz * xz) +
                       xz * (xy * yz - yy * xz);
    return det >= -tol;
}

PolarizabilityTensor PolarizabilityTensor::operator+(const PolarizabilityTensor& o) const {
    PolarizabilityTensor t;
    t.xx = xx + o.xx;
    t.yy = yy + o.yy;
    t.zz = zz + o.zz;
    t.xy = xy + o.xy;
    t.xz = xz + o.xz;
    t.yz = yz + o.yz;
    return t;
}

PolarizabilityTensor PolarizabilityTensor::operator*(double s) const {
    PolarizabilityTensor t;
    t.xx = s * xx;
    t.yy = s * yy;
    t.zz = s * zz;
    t.xy = s * xy;
    t.xz = s * xz;
    t.yz = s * yz;
    return t;
}

double product_trace(const PolarizabilityTensor& a, const PolarizabilityTensor& b) {
    return a.xx * b.xx + a.yy * b.yy + a.zz * b.zz +
           2.0 * (a.xy * b.xy + a.xz * b.xz + a.yz * b.yz);
}

double pair_quad_form(const PolarizabilityTensor& a, const PolarizabilityTensor& b,
                      const Vec3& n) {
    // n.(AB + BA).n = 2 (A n).(B n) for symmetric A, B.
    return 2.0 * a.apply(n).dot(b.apply(n));
}

}  // namespace cpring
