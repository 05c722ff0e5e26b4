#pragma once

#include <string>
#include <vector>

#include "gaitkit/types.hpp"

namespace gait {

/// Which raw sensor axes point anterior / vertical for one placement,
/// written as "+x", "-y", ... Ingestion remaps every sample into the
/// canonical frame (x anterior, y left, z up).
struct AxisConvention {
    std::string anterior = "+x";
    std::string vertical = "+z";
    bool operator==(const AxisConvention&) const = default;
};

struct Mounting {
    std::array<AxisConvention, kNumPlacements> axes{};
    bool is_identity() const;
};

/// Sidecar metadata: subject fields plus acquisition parameters.
struct TrialSidecar {
    SubjectMeta subject;
    double sample_rate_hz = 100.0;
    double calibration_start_s = 0.0;
    double calibration_end_s = 0.0;
    Mounting mounting;  // optional in the file; identity by default
};

/// Data CSV schema: header `t,placement,ax,ay,az,gx,gy,gz,mx,my,mz`,
/// t in seconds, accel m/s^2, gyro deg/s, mag gauss.
TrialRecording load_trial(const std::string& csv_path, const TrialSidecar& sidecar);
TrialRecording load_trial(const std::string& csv_path, const std::string& sidecar_path);

void save_trial(const TrialRecording& trial, const std::string& csv_path,
                const std::string& sidecar_path);

TrialSidecar load_sidecar(const std::string& path);
std::string sidecar_to_json(const TrialSidecar& s);

enum class Split { Train, Test };
std::string to_string(Split s);

struct ManifestEntry {
    std::string trial_path;    // relative to the manifest's directory
    std::string sidecar_path;
    Split split = Split::Train;
};

/// JSON array of {trial, sidecar, split}.
struct CohortManifest {
    std::vector<ManifestEntry> entries;
    std::string base_dir;  // resolved against entry paths

    std::string resolve(const std::string& rel) const;
};

CohortManifest load_manifest(const std::string& path);
void save_manifest(const CohortManifest& manifest, const std::string& path);

/// Enforces unique subjects with >= 1 trial each; returns subject ids in
/// order of first appearance. Requires the sidecars to be readable.
std::vector<std::string> validate_manifest(const CohortManifest& manifest);

}  // namespace gait
