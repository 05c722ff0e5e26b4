#pragma once

#include <array>
#include <map>
#include <vector>

#include "gaitkit/calibration.hpp"
#include "gaitkit/kalman.hpp"
#include "gaitkit/orientation.hpp"
#include "gaitkit/types.hpp"

namespace gait {

struct PipelineParams {
    KfParams kf;
    OrientationTracker::Params orientation;
    double gravity = kGravity;
};

/// Gyro-integrated and accelerometer-derived sagittal angle pair of one segment.
struct SegmentAngles {
    TimeSeries theta_g;  // integrated sagittal rate, deg
    TimeSeries theta_a;  // inclination from filtered accel, deg
};

struct JointAngleSeries {
    JointId joint;
    TimeSeries angle;  // deg, 0 at calibration posture
};

/// Sagittal inclination atan2(anterior, vertical) in degrees, unwrapped.
/// Input: low-pass filtered sensor-frame accel (anterior = x, vertical = z).
TimeSeries accel_inclination(const std::vector<Vec3>& accel_filtered, double sample_rate,
                             const std::string& label = "theta_a");

/// Unwrap a degree series so consecutive samples never jump more than 180.
void unwrap_degrees(std::vector<double>& deg);

/// theta_g / theta_a extraction for one sensor stream. The sagittal rate is the
/// gyro component about the right-pointing mediolateral axis (-y), matching
/// d(theta_a)/dt for planar motion.
SegmentAngles segment_angles(const std::vector<ImuSample>& stream, double sample_rate);

/// Drift-corrected sagittal angle of one segment (KF fusion of the pair).
TimeSeries corrected_segment_angle(const SegmentAngles& s, const KfParams& kf,
                                   std::vector<double>* bias_trace = nullptr);

/// All six joint angles of a calibrated trial: per joint, corrected proximal
/// minus corrected distal segment angle, offset so the calibration window
/// averages zero.
std::array<JointAngleSeries, kNumJoints> joint_angles(const TrialRecording& trial,
                                                      const CalibrationOffsets& offsets,
                                                      const PipelineParams& params = {});

/// Everything the feature stage consumes: 21 gravity-free global acceleration
/// series (7 sensors x 3 axes, low-pass filtered) and 6 joint angle series,
/// cut to the walking segment (calibration window excluded).
struct TrialSignals {
    // indexed [placement][axis], axis 0..2 = global x,y,z
    std::array<std::array<TimeSeries, 3>, kNumPlacements> accel_global;
    std::array<JointAngleSeries, kNumJoints> joints;
    double sample_rate = 100.0;
};

TrialSignals derive_signals(const TrialRecording& trial, const CalibrationOffsets& offsets,
                            const PipelineParams& params = {});

/// Per-joint debug trace for plotting: t, theta_g, theta_a, corrected, beta.
struct JointDebugTrace {
    JointId joint;
    std::vector<double> t, theta_g, theta_a, theta_corrected, beta;
};

std::array<JointDebugTrace, kNumJoints> joint_debug_traces(const TrialRecording& trial,
                                                           const CalibrationOffsets& offsets,
                                                           const PipelineParams& params = {});

}  // namespace gait
