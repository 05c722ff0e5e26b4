#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "gaitkit/feature_matrix.hpp"

namespace gait {

/// z-score parameters learned from training data, applied everywhere else.
struct Standardizer {
    Eigen::VectorXd mean;
    Eigen::VectorXd stddev;  // zero-variance columns get stddev 1

    Eigen::VectorXd apply(const Eigen::VectorXd& x) const;
    Eigen::MatrixXd apply(const Eigen::MatrixXd& rows) const;
};

Standardizer fit_standardizer(const Eigen::MatrixXd& rows);

enum class ClassifierKind { LDA, PCA, NB };
std::string to_string(ClassifierKind k);

struct ClassifierModel {
    ClassifierKind kind = ClassifierKind::LDA;
    std::vector<std::string> feature_names;
    Standardizer standardizer;

    // LDA: unit-norm Fisher direction, patient side positive
    Eigen::VectorXd lda_w;
    double lda_threshold = 0.0;

    // PCA: axes (columns, eigenvalue-descending), projected class centroids
    Eigen::MatrixXd pca_axes;
    Eigen::VectorXd pca_centroid_patient;
    Eigen::VectorXd pca_centroid_control;

    // NB: per-class per-feature gaussians + log priors
    Eigen::VectorXd nb_mean_patient, nb_var_patient;
    Eigen::VectorXd nb_mean_control, nb_var_control;
    double nb_log_prior_patient = 0.0, nb_log_prior_control = 0.0;
};

struct LdaOptions {
    double ridge_scale = 1e-6;  // lambda = ridge_scale * trace(Sw) / d
};

struct PcaOptions {
    int components = 0;             // 0 -> pick smallest m retaining variance_target
    double variance_target = 0.95;
};

ClassifierModel train_lda(const FeatureMatrix& train, const LdaOptions& opts = {});
ClassifierModel train_pca(const FeatureMatrix& train, const PcaOptions& opts = {});
ClassifierModel train_nb(const FeatureMatrix& train);

/// Deterministic label; ties go to Patient. `x` is a raw (unstandardized) row.
Group classify(const ClassifierModel& model, const Eigen::VectorXd& x);

struct EvalReport {
    std::size_t tp = 0, fp = 0, tn = 0, fn = 0;  // Patient = positive
    double accuracy() const;
    double sensitivity() const;
    double specificity() const;
};

EvalReport evaluate(const ClassifierModel& model, const FeatureMatrix& test);

/// Versioned JSON persistence. Loading a different version is an error.
constexpr int kModelFormatVersion = 1;
std::string model_to_json(const ClassifierModel& m);
ClassifierModel model_from_json(const std::string& json_text);
void save_model(const ClassifierModel& m, const std::string& path);
ClassifierModel load_model(const std::string& path);

/// Eigen-decomposition with pinned ordering: eigenvalues descending, each
/// vector's largest-magnitude component positive.
void sorted_eigen_symmetric(const Eigen::MatrixXd& sym, Eigen::VectorXd& eigenvalues,
                            Eigen::MatrixXd& eigenvectors);

}  // namespace gait
