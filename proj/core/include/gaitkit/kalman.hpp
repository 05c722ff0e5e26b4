#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "gaitkit/types.hpp"

namespace gait {

/// Noise/config parameters of the indirect joint-angle filter.
/// Defaults are tuned so a 0.5 deg/s gyro bias over 60 s is rejected with margin.
struct KfParams {
    double q_angle = 1e-4;   // process noise of the angle error, deg^2 per step
    double q_bias = 1e-6;    // process noise of the bias, (deg/s)^2 per step
    double r_meas = 0.5;     // accel-angle measurement variance, deg^2
    double p0_angle = 1.0;   // initial angle-error variance
    double p0_bias = 0.1;    // initial bias variance
};

/// Error-state Kalman filter for one segment's sagittal angle.
///
/// State x = [theta_err, beta]: the error of the bias-compensated gyro
/// integration and the gyro bias (deg, deg/s). F = [[1, Ts], [0, 1]],
/// H = [1, 0]. Each step the estimated angle error is subtracted from the
/// integrated angle and the bias estimate is removed from the rate before
/// the next integration step; the angle-error component is then reset.
class JointAngleKf {
public:
    JointAngleKf(double sample_rate_hz, KfParams params = {});

    /// Initialize the integrator (typically at the first accel angle).
    void reset(double theta0_deg);

    /// One step: integrate rate_deg_s (bias-compensated), fuse theta_a_deg.
    /// Returns the corrected angle (deg).
    double step(double rate_deg_s, double theta_a_deg);

    double angle() const { return theta_; }
    double bias() const { return x_[1]; }
    /// Covariance, row-major [P00, P01, P10, P11].
    std::array<double, 4> covariance() const { return {P_[0], P_[1], P_[2], P_[3]}; }
    double sample_period() const { return ts_; }

private:
    double ts_;
    KfParams p_;
    double theta_ = 0.0;            // bias-compensated integrated angle
    std::array<double, 2> x_{0, 0};  // [theta_err (reset each step), beta]
    std::array<double, 4> P_;        // row-major 2x2
};

/// Batch form used by the joint pipeline: fuse an integrated gyro angle series
/// with an accelerometer angle series. theta_g holds the *uncorrected*
/// integration of the raw rate; rates are recovered from its differences.
/// Output series: corrected angle; `bias_trace` (optional) receives beta per sample.
TimeSeries kf_joint_angle(const TimeSeries& theta_g, const TimeSeries& theta_a,
                          KfParams params = {}, std::vector<double>* bias_trace = nullptr);

}  // namespace gait
