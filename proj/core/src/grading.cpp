#include "gaitkit/grading.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "gaitkit/errors.hpp"

namespace gait {

std::string to_string(GradingScheme s) {
    switch (s) {
        case GradingScheme::SNR: return "snr";
        case GradingScheme::LDA: return "lda";
        case GradingScheme::PCA: return "pca";
    }
    return "?";
}

std::string to_string(GradeBand b) {
    switch (b) {
        case GradeBand::BelowBand: return "below";
        case GradeBand::WithinControlBand: return "within";
        case GradeBand::AboveBand: return "above";
    }
    return "?";
}

GradingModel build_grading(const SelectionResult& selection, const FeatureMatrix& train,
                           GradingScheme scheme, const LdaOptions& lda_opts) {
    FeatureMatrix sub = train.select_columns(selection.feature_names());

    GradingModel m;
    m.scheme = scheme;
    m.feature_names = sub.column_names;
    m.standardizer = fit_standardizer(sub.values);

    switch (scheme) {
        case GradingScheme::SNR: {
            Eigen::VectorXd w(static_cast<Eigen::Index>(selection.features.size()));
            for (std::size_t i = 0; i < selection.features.size(); ++i)
                w(static_cast<Eigen::Index>(i)) = selection.features[i].stats.snr;
            m.weights = w;
            break;
        }
        case GradingScheme::LDA: {
            auto lda = train_lda(sub, lda_opts);
            m.weights = lda.lda_w;
            break;
        }
        case GradingScheme::PCA: {
            PcaOptions opts;
            opts.components = 1;  // Eq.-(4) weighting takes the dominant axis
            auto pca = train_pca(sub, opts);
            m.weights = pca.pca_axes.col(0);
            break;
        }
    }
    double n = m.weights.norm();
    if (!(n > 0.0)) throw DegenerateData("build_grading: zero weight vector");
    m.weights /= n;

    // orient: control training mean grade above patient training mean grade
    Eigen::MatrixXd z = m.standardizer.apply(sub.values);
    Eigen::VectorXd grades = z * m.weights;
    double mean_c = 0.0, mean_p = 0.0;
    std::size_t nc = 0, np = 0;
    for (std::size_t i = 0; i < sub.rows(); ++i) {
        if (sub.labels[i] == Group::Control) {
            mean_c += grades(static_cast<Eigen::Index>(i));
            ++nc;
        } else {
            mean_p += grades(static_cast<Eigen::Index>(i));
            ++np;
        }
    }
    if (nc == 0 || np == 0) throw DegenerateData("build_grading: need both groups for orientation");
    if (mean_c / static_cast<double>(nc) < mean_p / static_cast<double>(np)) {
        m.weights = -m.weights;
        grades = -grades;
    }

    // control-band boundaries from the control training subjects
    double gmin = std::numeric_limits<double>::infinity();
    double gmax = -std::numeric_limits<double>::infinity();
    double gsum = 0.0;
    for (std::size_t i = 0; i < sub.rows(); ++i) {
        if (sub.labels[i] != Group::Control) continue;
        double g = grades(static_cast<Eigen::Index>(i));
        gmin = std::min(gmin, g);
        gmax = std::max(gmax, g);
        gsum += g;
    }
    m.g_min = gmin;
    m.g_max = gmax;
    m.g_avg = gsum / static_cast<double>(nc);
    return m;
}

double grade(const GradingModel& model, const Eigen::VectorXd& x) {
    if (x.size() != model.weights.size())
        throw DimensionMismatch("grade: feature dimension mismatch");
    return model.standardizer.apply(x).dot(model.weights);
}

GradeBand classify_by_grade(const GradingModel& model, double g) {
    if (g < model.g_min) return GradeBand::BelowBand;
    if (g > model.g_max) return GradeBand::AboveBand;
    return GradeBand::WithinControlBand;
}

Eigen::VectorXd per_feature_profile(const GradingModel& model, const Eigen::VectorXd& x) {
    if (x.size() != model.weights.size())
        throw DimensionMismatch("per_feature_profile: feature dimension mismatch");
    return model.standardizer.apply(x).cwiseProduct(model.weights);
}

namespace {

double pearson(const std::vector<double>& a, const std::vector<double>& b) {
    const double n = static_cast<double>(a.size());
    double ma = std::accumulate(a.begin(), a.end(), 0.0) / n;
    double mb = std::accumulate(b.begin(), b.end(), 0.0) / n;
    double sab = 0.0, saa = 0.0, sbb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double da = a[i] - ma, db = b[i] - mb;
        sab += da * db;
        saa += da * da;
        sbb += db * db;
    }
    if (saa <= 0.0 || sbb <= 0.0) throw ZeroVariance("correlation: constant series");
    return sab / std::sqrt(saa * sbb);
}

std::vector<double> ranks(const std::vector<double>& v) {
    std::vector<std::size_t> order(v.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return v[i] < v[j]; });
    std::vector<double> r(v.size());
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) ++j;
        double avg = 0.5 * static_cast<double>(i + j) + 1.0;  // average rank, 1-based
        for (std::size_t k = i; k <= j; ++k) r[order[k]] = avg;
        i = j + 1;
    }
    return r;
}

void check_series(const GradeSeries& s) {
    if (s.points.size() < 3) throw InsufficientData("grade_time_correlation: need >= 3 points");
    for (std::size_t i = 1; i < s.points.size(); ++i)
        if (s.points[i].first <= s.points[i - 1].first)
            throw SchemaError("grade series days must be strictly increasing");
}

}  // namespace

double grade_time_correlation(const GradeSeries& series) {
    check_series(series);
    std::vector<double> days, grades;
    for (const auto& [d, g] : series.points) {
        days.push_back(static_cast<double>(d));
        grades.push_back(g);
    }
    return pearson(days, grades);
}

double grade_time_correlation_spearman(const GradeSeries& series) {
    check_series(series);
    std::vector<double> days, grades;
    for (const auto& [d, g] : series.points) {
        days.push_back(static_cast<double>(d));
        grades.push_back(g);
    }
    return pearson(ranks(days), ranks(grades));
}

}  // namespace gait
