#pragma once

#include "gaitkit/quaternion.hpp"
#include "gaitkit/types.hpp"

namespace gait {

/// Gradient-descent orientation filter (Madgwick-style), 6-axis by default.
/// Tracks the sensor->global quaternion; gyro propagates, the normalized
/// accelerometer direction (and optionally the magnetometer) pulls the
/// estimate back toward the measured field directions.
class OrientationTracker {
public:
    struct Params {
        double gain = 0.1;        // gradient step weight (rad/s toward the field solution)
        bool use_mag = false;     // 9-axis fusion when true
        double gravity = kGravity;
    };

    explicit OrientationTracker(const Quaternion& initial = Quaternion::identity(),
                                Params params = {})
        : q_(initial.normalized()), params_(params) {}

    /// One fusion step. gyro_rad in rad/s, accel in m/s^2, dt in seconds.
    /// Zero-norm accel falls back to gyro-only propagation.
    void update(const Vec3& gyro_rad, const Vec3& accel, double dt);
    void update(const Vec3& gyro_rad, const Vec3& accel, const Vec3& mag, double dt);

    const Quaternion& orientation() const { return q_; }
    void reset(const Quaternion& q) { q_ = q.normalized(); }

private:
    Quaternion q_;
    Params params_;
};

/// Rotate a sensor-frame acceleration into the global frame and remove gravity:
/// q (x) a (x) q* - (0, 0, g).  Throws NonUnitQuaternion beyond 1e-6 norm error.
Vec3 to_global_accel(const Quaternion& q, const Vec3& accel_sensor, double gravity = kGravity);

/// Roll/pitch attitude from a static accelerometer reading (yaw-free):
/// the shortest-arc rotation taking the measured gravity reaction onto +z.
Quaternion attitude_from_accel(const Vec3& accel_mean);

}  // namespace gait
