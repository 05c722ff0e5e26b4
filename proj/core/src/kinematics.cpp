#include "gaitkit/kinematics.hpp"

#include <cmath>

#include "gaitkit/butterworth.hpp"
#include "gaitkit/errors.hpp"

namespace gait {

namespace {
constexpr double kDegPerRad = 180.0 / M_PI;
}

void unwrap_degrees(std::vector<double>& deg) {
    for (std::size_t i = 1; i < deg.size(); ++i) {
        double d = deg[i] - deg[i - 1];
        while (d > 180.0) {
            deg[i] -= 360.0;
            d = deg[i] - deg[i - 1];
        }
        while (d < -180.0) {
            deg[i] += 360.0;
            d = deg[i] - deg[i - 1];
        }
    }
}

TimeSeries accel_inclination(const std::vector<Vec3>& accel_filtered, double sample_rate,
                             const std::string& label) {
    TimeSeries out;
    out.sample_rate = sample_rate;
    out.label = label;
    out.values.reserve(accel_filtered.size());
    for (const auto& a : accel_filtered) out.values.push_back(std::atan2(a[0], a[2]) * kDegPerRad);
    unwrap_degrees(out.values);
    return out;
}

SegmentAngles segment_angles(const std::vector<ImuSample>& stream, double sample_rate) {
    if (stream.empty()) throw EmptySignal("segment_angles: empty stream");
    const std::size_t n = stream.size();
    const double ts = 1.0 / sample_rate;

    // low-pass the sensor-frame accel before the inclination atan2
    std::array<TimeSeries, 3> acc;
    for (int ax = 0; ax < 3; ++ax) {
        acc[ax].sample_rate = sample_rate;
        acc[ax].values.resize(n);
        for (std::size_t i = 0; i < n; ++i) acc[ax].values[i] = stream[i].accel[ax];
        acc[ax] = lowpass7hz(acc[ax]);
    }
    std::vector<Vec3> acc_f(n);
    for (std::size_t i = 0; i < n; ++i)
        acc_f[i] = {acc[0].values[i], acc[1].values[i], acc[2].values[i]};

    SegmentAngles out;
    out.theta_a = accel_inclination(acc_f, sample_rate);

    // sagittal rate about the right-pointing mediolateral axis = -gyro_y
    out.theta_g.sample_rate = sample_rate;
    out.theta_g.label = "theta_g";
    out.theta_g.values.resize(n);
    double acc_angle = out.theta_a.values.empty() ? 0.0 : out.theta_a.values[0];
    out.theta_g.values[0] = acc_angle;
    for (std::size_t i = 1; i < n; ++i) {
        acc_angle += -stream[i].gyro[1] * ts;
        out.theta_g.values[i] = acc_angle;
    }
    return out;
}

TimeSeries corrected_segment_angle(const SegmentAngles& s, const KfParams& kf,
                                   std::vector<double>* bias_trace) {
    return kf_joint_angle(s.theta_g, s.theta_a, kf, bias_trace);
}

namespace {

struct SegmentOutputs {
    std::array<TimeSeries, kNumPlacements> corrected;
    std::array<SegmentAngles, kNumPlacements> raw;
    std::array<std::vector<double>, kNumPlacements> bias;
};

SegmentOutputs run_segments(const TrialRecording& trial, const PipelineParams& params) {
    SegmentOutputs out;
    for (auto p : all_placements()) {
        auto idx = static_cast<std::size_t>(p);
        out.raw[idx] = segment_angles(trial.stream(p), trial.sample_rate);
        out.corrected[idx] = corrected_segment_angle(out.raw[idx], params.kf, &out.bias[idx]);
    }
    return out;
}

std::array<JointAngleSeries, kNumJoints> joints_from_segments(
    const SegmentOutputs& seg, const TrialRecording& trial, const CalibrationOffsets& offsets) {
    std::array<JointAngleSeries, kNumJoints> joints;
    for (auto j : all_joints()) {
        auto [prox, dist] = joint_segments(j);
        const auto& a = seg.corrected[static_cast<std::size_t>(prox)];
        const auto& b = seg.corrected[static_cast<std::size_t>(dist)];
        JointAngleSeries js;
        js.joint = j;
        js.angle.sample_rate = trial.sample_rate;
        js.angle.label = to_string(j);
        js.angle.values.resize(a.size());
        double off = offsets.offset_for(j);
        for (std::size_t i = 0; i < a.size(); ++i)
            js.angle.values[i] = a.values[i] - b.values[i] - off;
        joints[static_cast<std::size_t>(j)] = std::move(js);
    }
    return joints;
}

}  // namespace

std::array<JointAngleSeries, kNumJoints> joint_angles(const TrialRecording& trial,
                                                      const CalibrationOffsets& offsets,
                                                      const PipelineParams& params) {
    auto seg = run_segments(trial, params);
    return joints_from_segments(seg, trial, offsets);
}

TrialSignals derive_signals(const TrialRecording& trial, const CalibrationOffsets& offsets,
                            const PipelineParams& params) {
    const std::size_t n = trial.sample_count();
    const std::size_t walk_begin = trial.calibration_window.end;
    if (walk_begin >= n) throw SchemaError("derive_signals: no samples after calibration window");
    const double ts = 1.0 / trial.sample_rate;
    constexpr double kRadPerDeg = M_PI / 180.0;

    TrialSignals out;
    out.sample_rate = trial.sample_rate;

    for (auto p : all_placements()) {
        auto idx = static_cast<std::size_t>(p);
        const auto& stream = trial.stream(p);
        OrientationTracker tracker(offsets.reference_for(p), params.orientation);
        std::array<TimeSeries, 3> glob;
        for (int ax = 0; ax < 3; ++ax) {
            glob[ax].sample_rate = trial.sample_rate;
            glob[ax].label = to_string(p) + "_" + std::string(1, static_cast<char>('x' + ax));
            glob[ax].values.resize(n);
        }
        for (std::size_t i = 0; i < n; ++i) {
            Vec3 gyro_rad = kRadPerDeg * stream[i].gyro;
            tracker.update(gyro_rad, stream[i].accel, stream[i].mag, ts);
            Vec3 g = to_global_accel(tracker.orientation(), stream[i].accel, params.gravity);
            for (int ax = 0; ax < 3; ++ax) glob[ax].values[i] = g[ax];
        }
        for (int ax = 0; ax < 3; ++ax) {
            auto filtered = lowpass7hz(glob[ax]);
            // keep the walking segment only
            filtered.values.erase(filtered.values.begin(),
                                  filtered.values.begin() + static_cast<std::ptrdiff_t>(walk_begin));
            out.accel_global[idx][ax] = std::move(filtered);
        }
    }

    auto joints = joint_angles(trial, offsets, params);
    for (auto& js : joints) {
        js.angle.values.erase(js.angle.values.begin(),
                              js.angle.values.begin() + static_cast<std::ptrdiff_t>(walk_begin));
    }
    out.joints = std::move(joints);
    return out;
}

std::array<JointDebugTrace, kNumJoints> joint_debug_traces(const TrialRecording& trial,
                                                           const CalibrationOffsets& offsets,
                                                           const PipelineParams& params) {
    auto seg = run_segments(trial, params);
    auto joints = joints_from_segments(seg, trial, offsets);

    std::array<JointDebugTrace, kNumJoints> out;
    const auto& t_ref = trial.streams[0];
    for (auto j : all_joints()) {
        auto ji = static_cast<std::size_t>(j);
        auto [prox, dist] = joint_segments(j);
        auto pi = static_cast<std::size_t>(prox);
        auto di = static_cast<std::size_t>(dist);
        JointDebugTrace tr;
        tr.joint = j;
        const std::size_t n = joints[ji].angle.size();
        tr.t.resize(n);
        tr.theta_g.resize(n);
        tr.theta_a.resize(n);
        tr.theta_corrected = joints[ji].angle.values;
        tr.beta.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            tr.t[i] = t_ref[i].t;
            tr.theta_g[i] = seg.raw[pi].theta_g.values[i] - seg.raw[di].theta_g.values[i];
            tr.theta_a[i] = seg.raw[pi].theta_a.values[i] - seg.raw[di].theta_a.values[i];
            tr.beta[i] = seg.bias[pi][i] - seg.bias[di][i];
        }
        out[ji] = std::move(tr);
    }
    return out;
}

}  // namespace gait
