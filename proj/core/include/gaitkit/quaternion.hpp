#pragma once

#include <array>
#include <cmath>

#include "gaitkit/errors.hpp"

namespace gait {

using Vec3 = std::array<double, 3>;

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline Vec3 operator*(double s, const Vec3& v) { return {s * v[0], s * v[1], s * v[2]}; }
inline double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

/// Unit quaternion, Hamilton convention, scalar first (w,x,y,z).
/// Used throughout as the sensor->global rotation: v_global = q * v_sensor * conj(q).
struct Quaternion {
    double w = 1.0, x = 0.0, y = 0.0, z = 0.0;

    static Quaternion identity() { return {}; }

    /// Rotation of `angle_rad` about unit axis.
    static Quaternion from_axis_angle(const Vec3& axis, double angle_rad) {
        double h = 0.5 * angle_rad;
        double s = std::sin(h);
        return {std::cos(h), s * axis[0], s * axis[1], s * axis[2]};
    }

    Quaternion conjugate() const { return {w, -x, -y, -z}; }

    double norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }

    Quaternion normalized() const {
        double n = norm();
        if (n <= 0.0) return identity();
        return {w / n, x / n, y / n, z / n};
    }
};

/// Hamilton product a (x) b.
inline Quaternion multiply(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

inline Quaternion operator*(const Quaternion& a, const Quaternion& b) { return multiply(a, b); }

/// q (x) (0,v) (x) conj(q). Requires |q| = 1 within 1e-6.
inline Vec3 rotate(const Quaternion& q, const Vec3& v) {
    if (std::abs(q.norm() - 1.0) > 1e-6)
        throw NonUnitQuaternion("rotate: quaternion norm deviates from 1 beyond 1e-6");
    Quaternion p{0.0, v[0], v[1], v[2]};
    Quaternion r = multiply(multiply(q, p), q.conjugate());
    return {r.x, r.y, r.z};
}

/// Rotation matrix of q, row-major. rotate(q, v) == R * v.
inline std::array<double, 9> rotation_matrix(const Quaternion& q) {
    double w = q.w, x = q.x, y = q.y, z = q.z;
    return {1 - 2 * (y * y + z * z), 2 * (x * y - w * z),     2 * (x * z + w * y),
            2 * (x * y + w * z),     1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
            2 * (x * z - w * y),     2 * (y * z + w * x),     1 - 2 * (x * x + y * y)};
}

}  // namespace gait
