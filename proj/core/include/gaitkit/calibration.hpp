#pragma once

#include <array>

#include "gaitkit/quaternion.hpp"
#include "gaitkit/types.hpp"

namespace gait {

/// Standing-phase reference: per-sensor attitude and per-joint zero offset.
struct CalibrationOffsets {
    std::array<Quaternion, kNumPlacements> reference;  // sensor->global at standing
    std::array<double, kNumJoints> joint_offset_deg{};

    const Quaternion& reference_for(SensorPlacement p) const {
        return reference[static_cast<std::size_t>(p)];
    }
    double offset_for(JointId j) const { return joint_offset_deg[static_cast<std::size_t>(j)]; }
};

/// Derive offsets from the trial's declared standing window so that joint
/// angles over that window average to zero.
///
/// Preconditions: the window spans at least `min_window_s` seconds and the
/// gyro magnitude stays below `max_gyro_deg_s` throughout (else NotStationary).
CalibrationOffsets calibrate(const TrialRecording& trial, double max_gyro_deg_s = 5.0,
                             double min_window_s = 1.0);

}  // namespace gait
