#include "gaitkit/types.hpp"

#include <cmath>

#include "gaitkit/errors.hpp"

namespace gait {

const std::array<SensorPlacement, kNumPlacements>& all_placements() {
    static const std::array<SensorPlacement, kNumPlacements> a = {
        SensorPlacement::LeftFoot,  SensorPlacement::RightFoot, SensorPlacement::LeftShank,
        SensorPlacement::RightShank, SensorPlacement::LeftThigh, SensorPlacement::RightThigh,
        SensorPlacement::Pelvis};
    return a;
}

const std::array<JointId, kNumJoints>& all_joints() {
    static const std::array<JointId, kNumJoints> a = {JointId::LeftHip,  JointId::RightHip,
                                                      JointId::LeftKnee, JointId::RightKnee,
                                                      JointId::LeftAnkle, JointId::RightAnkle};
    return a;
}

std::string to_string(SensorPlacement p) {
    switch (p) {
        case SensorPlacement::LeftFoot: return "LeftFoot";
        case SensorPlacement::RightFoot: return "RightFoot";
        case SensorPlacement::LeftShank: return "LeftShank";
        case SensorPlacement::RightShank: return "RightShank";
        case SensorPlacement::LeftThigh: return "LeftThigh";
        case SensorPlacement::RightThigh: return "RightThigh";
        case SensorPlacement::Pelvis: return "Pelvis";
    }
    return "?";
}

std::string to_string(JointId j) {
    switch (j) {
        case JointId::LeftHip: return "LeftHip";
        case JointId::RightHip: return "RightHip";
        case JointId::LeftKnee: return "LeftKnee";
        case JointId::RightKnee: return "RightKnee";
        case JointId::LeftAnkle: return "LeftAnkle";
        case JointId::RightAnkle: return "RightAnkle";
    }
    return "?";
}

std::optional<SensorPlacement> placement_from_string(const std::string& s) {
    for (auto p : all_placements())
        if (to_string(p) == s) return p;
    return std::nullopt;
}

std::optional<JointId> joint_from_string(const std::string& s) {
    for (auto j : all_joints())
        if (to_string(j) == s) return j;
    return std::nullopt;
}

std::pair<SensorPlacement, SensorPlacement> joint_segments(JointId j) {
    switch (j) {
        case JointId::LeftHip: return {SensorPlacement::Pelvis, SensorPlacement::LeftThigh};
        case JointId::RightHip: return {SensorPlacement::Pelvis, SensorPlacement::RightThigh};
        case JointId::LeftKnee: return {SensorPlacement::LeftThigh, SensorPlacement::LeftShank};
        case JointId::RightKnee: return {SensorPlacement::RightThigh, SensorPlacement::RightShank};
        case JointId::LeftAnkle: return {SensorPlacement::LeftShank, SensorPlacement::LeftFoot};
        case JointId::RightAnkle: return {SensorPlacement::RightShank, SensorPlacement::RightFoot};
    }
    return {SensorPlacement::Pelvis, SensorPlacement::Pelvis};
}

std::string to_string(Group g) { return g == Group::Patient ? "patient" : "control"; }

std::string to_string(Gender g) {
    switch (g) {
        case Gender::Female: return "female";
        case Gender::Male: return "male";
        case Gender::Other: return "other";
    }
    return "?";
}

std::optional<Group> group_from_string(const std::string& s) {
    if (s == "patient") return Group::Patient;
    if (s == "control") return Group::Control;
    return std::nullopt;
}

std::optional<Gender> gender_from_string(const std::string& s) {
    if (s == "female") return Gender::Female;
    if (s == "male") return Gender::Male;
    if (s == "other") return Gender::Other;
    return std::nullopt;
}

namespace {

// Calibrated full-scale ranges from the acquisition hardware, with a little
// headroom for noise on top of the nominal limits.
constexpr double kAccelMax = 8.0 * 9.81 * 1.05;
constexpr double kGyroMax = 500.0 * 1.05;  // deg/s
constexpr double kMagMax = 1.3 * 1.05;     // gauss

void check_range(const Vec3& v, double lim, const char* what, SensorPlacement p, std::size_t i) {
    for (double c : v) {
        if (!std::isfinite(c) || std::abs(c) > lim)
            throw ParseError("sample " + std::to_string(i) + " of " + to_string(p) + ": " + what +
                             " component out of range");
    }
}

}  // namespace

void validate(const TrialRecording& trial) {
    if (trial.sample_rate <= 0.0) throw SchemaError("sample_rate must be positive");
    std::size_t n = trial.streams[0].size();
    for (auto p : all_placements()) {
        const auto& s = trial.stream(p);
        if (s.empty()) throw SchemaError("missing stream for placement " + to_string(p));
        if (s.size() != n)
            throw SyncError("stream length mismatch: " + to_string(p) + " has " +
                            std::to_string(s.size()) + ", expected " + std::to_string(n));
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i > 0 && !(s[i].t > s[i - 1].t))
                throw SyncError("non-monotonic timestamps in " + to_string(p) + " at sample " +
                                std::to_string(i));
            check_range(s[i].accel, kAccelMax, "accel", p, i);
            check_range(s[i].gyro, kGyroMax, "gyro", p, i);
            check_range(s[i].mag, kMagMax, "mag", p, i);
        }
    }
    // pairwise start-time offset under one sample period
    double period = 1.0 / trial.sample_rate;
    double t0 = trial.streams[0][0].t;
    for (auto p : all_placements()) {
        if (std::abs(trial.stream(p)[0].t - t0) >= period)
            throw SyncError("start-time offset of " + to_string(p) + " exceeds one sample period");
    }
    const auto& cw = trial.calibration_window;
    if (cw.begin >= cw.end || cw.end > n)
        throw SchemaError("calibration window empty or out of bounds");
}

}  // namespace gait
