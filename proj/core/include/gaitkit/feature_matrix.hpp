#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "gaitkit/features.hpp"

namespace gait {

/// Rows of feature values with labels and provenance. Column names follow the
/// stable 243-name ordering for full extractions, or a selected subset.
struct FeatureMatrix {
    Eigen::MatrixXd values;                       // rows x columns
    std::vector<std::string> column_names;
    std::vector<std::string> subject_ids;         // one per row
    std::vector<Group> labels;                    // one per row
    std::vector<std::optional<int>> days_post_op; // one per row

    std::size_t rows() const { return static_cast<std::size_t>(values.rows()); }
    std::size_t cols() const { return static_cast<std::size_t>(values.cols()); }

    /// Rows for one group, in order.
    std::vector<std::size_t> rows_of(Group g) const;

    /// Average all trials of each subject into one row (order of first appearance).
    FeatureMatrix aggregate_by_subject() const;

    /// Column subset by name; throws SchemaError when a name is missing.
    FeatureMatrix select_columns(const std::vector<std::string>& names) const;
};

FeatureMatrix matrix_from_vectors(const std::vector<FeatureVector>& rows);

/// CSV: subject_id,group,days_post_op,<243 feature columns>.
void save_feature_csv(const FeatureMatrix& m, const std::string& path);
FeatureMatrix load_feature_csv(const std::string& path);

}  // namespace gait
