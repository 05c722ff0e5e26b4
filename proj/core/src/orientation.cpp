#include "gaitkit/orientation.hpp"

#include <cmath>

namespace gait {

namespace {

// Gradient of the gravity objective f(q) = R(q)^T ez - a_hat for the
// sensor->global convention.
void accel_gradient(const Quaternion& q, const Vec3& a_hat, double grad[4]) {
    const double w = q.w, x = q.x, y = q.y, z = q.z;
    const double f1 = 2.0 * (x * z - w * y) - a_hat[0];
    const double f2 = 2.0 * (w * x + y * z) - a_hat[1];
    const double f3 = 1.0 - 2.0 * (x * x + y * y) - a_hat[2];
    grad[0] = -2.0 * y * f1 + 2.0 * x * f2;
    grad[1] = 2.0 * z * f1 + 2.0 * w * f2 - 4.0 * x * f3;
    grad[2] = -2.0 * w * f1 + 2.0 * z * f2 - 4.0 * y * f3;
    grad[3] = 2.0 * x * f1 + 2.0 * y * f2;
}

// Magnetometer objective against the horizontal-plus-vertical reference field
// (bx, 0, bz) derived from the current estimate, standard in the 9-axis variant.
void mag_gradient(const Quaternion& q, const Vec3& m_hat, double grad[4]) {
    const double w = q.w, x = q.x, y = q.y, z = q.z;
    // measured field in the global frame
    Vec3 h = rotate(q, m_hat);
    double bx = std::sqrt(h[0] * h[0] + h[1] * h[1]);
    double bz = h[2];
    // f = R(q)^T (bx,0,bz) - m_hat
    const double f1 = bx * (1.0 - 2.0 * (y * y + z * z)) + bz * (2.0 * (x * z - w * y)) - m_hat[0];
    const double f2 = bx * (2.0 * (x * y - w * z)) + bz * (2.0 * (w * x + y * z)) - m_hat[1];
    const double f3 = bx * (2.0 * (x * z + w * y)) + bz * (1.0 - 2.0 * (x * x + y * y)) - m_hat[2];
    grad[0] += (-2.0 * bz * y) * f1 + (-2.0 * bx * z + 2.0 * bz * x) * f2 + (2.0 * bx * y) * f3;
    grad[1] += (2.0 * bz * z) * f1 + (2.0 * bx * y + 2.0 * bz * w) * f2 +
               (2.0 * bx * z - 4.0 * bz * x) * f3;
    grad[2] += (-4.0 * bx * y - 2.0 * bz * w) * f1 + (2.0 * bx * x + 2.0 * bz * z) * f2 +
               (2.0 * bx * w - 4.0 * bz * y) * f3;
    grad[3] += (-4.0 * bx * z + 2.0 * bz * x) * f1 + (-2.0 * bx * w + 2.0 * bz * y) * f2 +
               (2.0 * bx * x) * f3;
}

}  // namespace

void OrientationTracker::update(const Vec3& gyro_rad, const Vec3& accel, double dt) {
    update(gyro_rad, accel, Vec3{0, 0, 0}, dt);
}

void OrientationTracker::update(const Vec3& gyro_rad, const Vec3& accel, const Vec3& mag,
                                double dt) {
    // gyro propagation: q_dot = 0.5 q (x) (0, omega_sensor)
    Quaternion omega{0.0, gyro_rad[0], gyro_rad[1], gyro_rad[2]};
    Quaternion qdot = multiply(q_, omega);
    qdot.w *= 0.5;
    qdot.x *= 0.5;
    qdot.y *= 0.5;
    qdot.z *= 0.5;

    double na = norm(accel);
    if (na > 1e-12) {
        Vec3 a_hat = (1.0 / na) * accel;
        double grad[4] = {0, 0, 0, 0};
        accel_gradient(q_, a_hat, grad);
        double nm = norm(mag);
        if (params_.use_mag && nm > 1e-12) {
            Vec3 m_hat = (1.0 / nm) * mag;
            mag_gradient(q_, m_hat, grad);
        }
        double gn = std::sqrt(grad[0] * grad[0] + grad[1] * grad[1] + grad[2] * grad[2] +
                              grad[3] * grad[3]);
        if (gn > 1e-12) {
            qdot.w -= params_.gain * grad[0] / gn;
            qdot.x -= params_.gain * grad[1] / gn;
            qdot.y -= params_.gain * grad[2] / gn;
            qdot.z -= params_.gain * grad[3] / gn;
        }
    }

    q_.w += qdot.w * dt;
    q_.x += qdot.x * dt;
    q_.y += qdot.y * dt;
    q_.z += qdot.z * dt;
    q_ = q_.normalized();
}

Vec3 to_global_accel(const Quaternion& q, const Vec3& accel_sensor, double gravity) {
    Vec3 g = rotate(q, accel_sensor);  // throws NonUnitQuaternion when |q| is off
    g[2] -= gravity;
    return g;
}

Quaternion attitude_from_accel(const Vec3& accel_mean) {
    double n = norm(accel_mean);
    if (n <= 1e-12) return Quaternion::identity();
    Vec3 a = (1.0 / n) * accel_mean;
    // shortest arc taking a (gravity reaction in sensor frame) onto global +z
    Vec3 ez{0.0, 0.0, 1.0};
    double c = dot(a, ez);
    if (c < -1.0 + 1e-12) return {0.0, 1.0, 0.0, 0.0};  // upside down: 180 deg about x
    Vec3 axis{a[1] * ez[2] - a[2] * ez[1], a[2] * ez[0] - a[0] * ez[2],
              a[0] * ez[1] - a[1] * ez[0]};
    Quaternion q{1.0 + c, axis[0], axis[1], axis[2]};
    return q.normalized();
}

}  // namespace gait
