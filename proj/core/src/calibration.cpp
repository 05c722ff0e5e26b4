#include "gaitkit/calibration.hpp"

#include <cmath>

#include "gaitkit/errors.hpp"
#include "gaitkit/orientation.hpp"

namespace gait {

CalibrationOffsets calibrate(const TrialRecording& trial, double max_gyro_deg_s,
                             double min_window_s) {
    validate(trial);
    const auto& w = trial.calibration_window;
    if (static_cast<double>(w.size()) / trial.sample_rate < min_window_s)
        throw NotStationary("calibration window shorter than " + std::to_string(min_window_s) +
                            " s");

    CalibrationOffsets out;
    std::array<double, kNumPlacements> incline{};
    for (auto p : all_placements()) {
        const auto& samples = trial.stream(p);
        Vec3 accel_sum{0, 0, 0};
        for (std::size_t i = w.begin; i < w.end; ++i) {
            const auto& s = samples[i];
            double gmag = norm(s.gyro);
            if (gmag >= max_gyro_deg_s)
                throw NotStationary("movement during standing phase on " + to_string(p) +
                                    " at sample " + std::to_string(i) + " (" +
                                    std::to_string(gmag) + " deg/s)");
            accel_sum = accel_sum + s.accel;
        }
        Vec3 mean = (1.0 / static_cast<double>(w.size())) * accel_sum;
        out.reference[static_cast<std::size_t>(p)] = attitude_from_accel(mean);
        incline[static_cast<std::size_t>(p)] =
            std::atan2(mean[0], mean[2]) * 180.0 / M_PI;  // anterior over vertical
    }
    for (auto j : all_joints()) {
        auto [prox, dist] = joint_segments(j);
        out.joint_offset_deg[static_cast<std::size_t>(j)] =
            incline[static_cast<std::size_t>(prox)] - incline[static_cast<std::size_t>(dist)];
    }
    return out;
}

}  // namespace gait
