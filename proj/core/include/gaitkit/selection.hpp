#pragma once

#include <string>
#include <vector>

#include "gaitkit/feature_matrix.hpp"

namespace gait {

/// Per-feature group statistics. Group 1 = Control (normal gait),
/// group 2 = Patient, so positive SNR means "higher in controls".
struct FeatureStats {
    double mu1 = 0, mu2 = 0;        // group means
    double sigma1 = 0, sigma2 = 0;  // group standard deviations (sample, n-1)
    double p_value = 1.0;
    double snr = 0.0;               // (mu1 - mu2) / (sigma1 + sigma2), signed
};

/// Two-sided Welch two-sample t-test p-value.
/// A paired mode (equal-length, same-subject samples) is available for
/// longitudinal comparisons.
double t_test(const std::vector<double>& group1, const std::vector<double>& group2,
              bool paired = false);

/// Signed signal-to-noise ratio (mu1 - mu2) / (sigma1 + sigma2).
double snr(const FeatureStats& stats);

struct SelectedFeature {
    std::string name;  // stable column name
    FeatureStats stats;
};

struct SelectionResult {
    double alpha = 0.05;
    std::size_t k = 26;
    std::vector<SelectedFeature> features;  // sorted by |snr| descending

    std::vector<std::string> feature_names() const;
};

/// Keep features with p < alpha, rank by |snr| descending (stable name order
/// on ties), truncate to k. The matrix is expected to hold one row per
/// subject (aggregate trials first).
SelectionResult select_features(const FeatureMatrix& subjects, double alpha = 0.05,
                                std::size_t k = 26);

std::string selection_to_json(const SelectionResult& sel);
SelectionResult selection_from_json(const std::string& json_text);
void save_selection(const SelectionResult& sel, const std::string& path);
SelectionResult load_selection(const std::string& path);

}  // namespace gait
