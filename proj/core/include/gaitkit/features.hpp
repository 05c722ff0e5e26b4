#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gaitkit/kinematics.hpp"
#include "gaitkit/types.hpp"

namespace gait {

/// One of the 27 per-trial signals: 7 sensors x 3 global accel axes + 6 joints.
struct SignalId {
    enum class Kind { Accel, Joint } kind = Kind::Accel;
    SensorPlacement placement = SensorPlacement::Pelvis;
    int axis = 0;  // 0..2 -> x,y,z (accel only)
    JointId joint = JointId::LeftHip;

    std::string name() const;
    bool operator==(const SignalId&) const = default;
};

constexpr std::size_t kNumSignals = kNumPlacements * 3 + kNumJoints;  // 27

/// Canonical signal order: placements x (x,y,z), then joints.
const std::array<SignalId, kNumSignals>& all_signals();
std::size_t signal_index(const SignalId& s);
std::optional<SignalId> signal_from_name(const std::string& name);

enum class FeatureId { MI, PAF, StepPeriod, StridePeriod, Regularity, APC, SE, SMNR, WE };
constexpr std::size_t kNumFeatures = 9;
constexpr std::size_t kNumFeatureColumns = kNumSignals * kNumFeatures;  // 243

const std::array<FeatureId, kNumFeatures>& all_features();
std::string to_string(FeatureId f);
std::optional<FeatureId> feature_from_string(const std::string& s);

/// Stable CSV column name "{placement}_{axis}_{feature}" or "{joint}_{feature}".
std::string feature_column_name(const SignalId& s, FeatureId f);
const std::vector<std::string>& all_feature_column_names();

// ---- the nine extractors ------------------------------------------------

/// Root mean square of the signal.
double movement_intensity(const TimeSeries& x);

/// Third standardized moment (skewness) of the sample distribution.
double paf(const TimeSeries& x);

/// Detected gait periodicities from the normalized unbiased autocorrelation.
/// Peaks count as dominant when they reach max(0.2, 0.4 * strongest peak in
/// [0.3 s, 2.0 s]). Step = first dominant peak in [0.3 s, 1.0 s]; stride =
/// next dominant peak after it inside [0.6 s, 2.0 s] (or the first one there
/// when no step peak exists).
struct GaitPeriods {
    std::optional<double> step_s;
    std::optional<double> stride_s;
    std::optional<double> regularity;  // autocorrelation at the stride lag, clamped to [0,1]
};
GaitPeriods detect_periods(const TimeSeries& x);

double step_period(const TimeSeries& x);    // seconds; NoPeriodicity when undetected
double stride_period(const TimeSeries& x);  // seconds
double regularity(const TimeSeries& x);     // [0,1]

/// Band power in [0.5, 5] Hz of the Parseval-consistent periodogram.
double apc(const TimeSeries& x);

/// Normalized Shannon entropy of the mean-removed periodogram, in [0,1].
double spectral_entropy(const TimeSeries& x);

/// 10 log10 of (stride fundamental + first 4 harmonics, +-1 bin each) over the
/// remaining [0.5, 5] Hz power.
double smnr(const TimeSeries& x);

/// Shannon entropy (nats) of the relative per-band mean energies of a 5-level
/// db4 decomposition (5 detail bands + approximation).
double wavelet_energy(const TimeSeries& x);

// ---- per-trial extraction ------------------------------------------------

struct FeatureVector {
    std::array<double, kNumFeatureColumns> values{};
    // provenance
    std::string subject_id;
    Group group = Group::Control;
    std::optional<int> days_post_op;

    double at(const SignalId& s, FeatureId f) const {
        return values[signal_index(s) * kNumFeatures + static_cast<std::size_t>(f)];
    }
};

/// A feature that could not be computed (NoPeriodicity etc.) with its location.
struct ExtractionIssue {
    SignalId signal;
    FeatureId feature;
    std::string reason;
};

struct ExtractionResult {
    std::optional<FeatureVector> vector;  // present iff all 243 entries finite
    std::vector<ExtractionIssue> issues;
    bool ok() const { return vector.has_value(); }
};

const TimeSeries& signal_series(const TrialSignals& signals, const SignalId& id);

/// Compute all 243 features. A trial with any failed entry yields no vector,
/// only the issue list (cohorts reject such trials with a diagnostic).
ExtractionResult extract_features(const TrialSignals& signals, const SubjectMeta& subject);

// ---- windowed mode --------------------------------------------------------

struct WindowFeatures {
    std::size_t window_index = 0;
    std::size_t start_sample = 0;
    std::array<std::optional<double>, kNumFeatures> values;
};

/// Features of sliding windows [k*hop, k*hop + window). Entries that fail in a
/// window (e.g. undetectable periodicity) are left empty rather than failing
/// the whole sequence.
std::vector<WindowFeatures> windowed_features(const TimeSeries& x, std::size_t window,
                                              std::size_t hop);

}  // namespace gait
