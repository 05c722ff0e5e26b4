#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gaitkit/quaternion.hpp"

namespace gait {

constexpr double kGravity = 9.81;  // m/s^2, configurable in pipeline params

/// Body positions of the 7 IMUs.
enum class SensorPlacement { LeftFoot, RightFoot, LeftShank, RightShank, LeftThigh, RightThigh, Pelvis };
constexpr std::size_t kNumPlacements = 7;

/// The 6 sagittal-plane joints.
enum class JointId { LeftHip, RightHip, LeftKnee, RightKnee, LeftAnkle, RightAnkle };
constexpr std::size_t kNumJoints = 6;

const std::array<SensorPlacement, kNumPlacements>& all_placements();
const std::array<JointId, kNumJoints>& all_joints();

std::string to_string(SensorPlacement p);
std::string to_string(JointId j);
std::optional<SensorPlacement> placement_from_string(const std::string& s);
std::optional<JointId> joint_from_string(const std::string& s);

/// (proximal, distal) segment pair defining a joint angle.
std::pair<SensorPlacement, SensorPlacement> joint_segments(JointId j);

/// One 9-axis sample. Units as acquired: accel m/s^2, gyro deg/s, mag gauss,
/// all in the canonical sensor frame (x anterior, y left, z up at neutral
/// mounting). Axis remapping happens at ingestion.
struct ImuSample {
    double t = 0.0;  // seconds
    Vec3 accel{0, 0, 0};
    Vec3 gyro{0, 0, 0};
    Vec3 mag{0, 0, 0};
};

enum class Group { Patient, Control };
enum class Gender { Female, Male, Other };

std::string to_string(Group g);
std::string to_string(Gender g);
std::optional<Group> group_from_string(const std::string& s);
std::optional<Gender> gender_from_string(const std::string& s);

struct SubjectMeta {
    std::string id;
    Group group = Group::Control;
    double age = 0.0;        // years
    double weight_kg = 0.0;
    Gender gender = Gender::Other;
    std::optional<int> days_post_op;  // present iff group == Patient

    bool operator==(const SubjectMeta&) const = default;
};

/// Half-open sample index range [begin, end).
struct IndexRange {
    std::size_t begin = 0;
    std::size_t end = 0;
    std::size_t size() const { return end - begin; }
    bool operator==(const IndexRange&) const = default;
};

/// Synchronized 7-stream recording of one walking trial.
/// Streams are index-aligned on a common sample grid after ingestion.
struct TrialRecording {
    SubjectMeta subject;
    std::array<std::vector<ImuSample>, kNumPlacements> streams;
    double sample_rate = 100.0;          // Hz
    IndexRange calibration_window;       // quiet standing, precedes walking

    std::vector<ImuSample>& stream(SensorPlacement p) { return streams[static_cast<std::size_t>(p)]; }
    const std::vector<ImuSample>& stream(SensorPlacement p) const {
        return streams[static_cast<std::size_t>(p)];
    }
    std::size_t sample_count() const { return streams[0].size(); }

    bool operator==(const TrialRecording&) const = default;
};

inline bool operator==(const ImuSample& a, const ImuSample& b) {
    return a.t == b.t && a.accel == b.accel && a.gyro == b.gyro && a.mag == b.mag;
}

/// Throws SchemaError / SyncError / ParseError when a core invariant is violated:
/// missing placement, unequal stream lengths, non-monotonic timestamps,
/// out-of-range values, empty or misplaced calibration window.
void validate(const TrialRecording& trial);

struct TimeSeries {
    std::vector<double> values;
    double sample_rate = 100.0;
    std::string label;

    std::size_t size() const { return values.size(); }
};

}  // namespace gait
