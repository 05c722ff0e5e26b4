#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "gaitkit/classify.hpp"
#include "gaitkit/selection.hpp"

namespace gait {

enum class GradingScheme { SNR, LDA, PCA };
std::string to_string(GradingScheme s);

/// Weighted-sum grade G = sum_i F_i W_i over standardized selected features.
/// W is unit-norm and oriented so that the control training mean grade exceeds
/// the patient training mean grade (higher = healthier). Band boundaries come
/// from the control training subjects.
struct GradingModel {
    GradingScheme scheme = GradingScheme::SNR;
    std::vector<std::string> feature_names;
    Standardizer standardizer;
    Eigen::VectorXd weights;
    double g_max = 0.0, g_min = 0.0, g_avg = 0.0;
};

GradingModel build_grading(const SelectionResult& selection, const FeatureMatrix& train,
                           GradingScheme scheme, const LdaOptions& lda_opts = {});

/// Inner product of the standardized row with the weights.
double grade(const GradingModel& model, const Eigen::VectorXd& x);

enum class GradeBand { BelowBand, WithinControlBand, AboveBand };
std::string to_string(GradeBand b);
GradeBand classify_by_grade(const GradingModel& model, double g);

/// Element-wise contributions F_i W_i; sums to grade(x).
Eigen::VectorXd per_feature_profile(const GradingModel& model, const Eigen::VectorXd& x);

struct GradeSeries {
    std::string subject_id;
    std::vector<std::pair<int, double>> points;  // (days_post_op, G), days strictly increasing
};

/// Pearson correlation between days and grades. Throws InsufficientData
/// below 3 points and ZeroVariance for a flat series.
double grade_time_correlation(const GradeSeries& series);

/// Spearman rank correlation (average ranks on ties), reported alongside.
double grade_time_correlation_spearman(const GradeSeries& series);

}  // namespace gait
