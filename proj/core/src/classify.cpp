#include "gaitkit/classify.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

#include "gaitkit/errors.hpp"
#include "gaitkit/textio.hpp"

namespace gait {

Eigen::VectorXd Standardizer::apply(const Eigen::VectorXd& x) const {
    if (x.size() != mean.size()) throw DimensionMismatch("standardizer: wrong feature count");
    return (x - mean).cwiseQuotient(stddev);
}

Eigen::MatrixXd Standardizer::apply(const Eigen::MatrixXd& rows) const {
    if (rows.cols() != mean.size()) throw DimensionMismatch("standardizer: wrong feature count");
    return (rows.rowwise() - mean.transpose()).array().rowwise() /
           stddev.transpose().array();
}

Standardizer fit_standardizer(const Eigen::MatrixXd& rows) {
    Standardizer s;
    s.mean = rows.colwise().mean();
    Eigen::MatrixXd centered = rows.rowwise() - s.mean.transpose();
    s.stddev.resize(rows.cols());
    double denom = rows.rows() > 1 ? static_cast<double>(rows.rows() - 1) : 1.0;
    for (Eigen::Index c = 0; c < rows.cols(); ++c) {
        double v = centered.col(c).squaredNorm() / denom;
        s.stddev(c) = v > 0.0 ? std::sqrt(v) : 1.0;
    }
    return s;
}

std::string to_string(ClassifierKind k) {
    switch (k) {
        case ClassifierKind::LDA: return "lda";
        case ClassifierKind::PCA: return "pca";
        case ClassifierKind::NB: return "nb";
    }
    return "?";
}

void sorted_eigen_symmetric(const Eigen::MatrixXd& sym, Eigen::VectorXd& eigenvalues,
                            Eigen::MatrixXd& eigenvectors) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
    if (solver.info() != Eigen::Success)
        throw DegenerateData("eigendecomposition failed to converge");
    Eigen::VectorXd ev = solver.eigenvalues();
    Eigen::MatrixXd vec = solver.eigenvectors();
    const Eigen::Index n = ev.size();
    eigenvalues.resize(n);
    eigenvectors.resize(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        Eigen::Index src = n - 1 - i;  // ascending -> descending
        Eigen::VectorXd v = vec.col(src);
        Eigen::Index imax = 0;
        v.cwiseAbs().maxCoeff(&imax);
        if (v(imax) < 0.0) v = -v;
        eigenvalues(i) = ev(src);
        eigenvectors.col(i) = v;
    }
}

namespace {

struct SplitRows {
    Eigen::MatrixXd patients, controls;
};

SplitRows split_standardized(const FeatureMatrix& train, const Standardizer& std_) {
    auto pick = [&](Group g) {
        auto idx = train.rows_of(g);
        Eigen::MatrixXd rows(static_cast<Eigen::Index>(idx.size()), train.values.cols());
        for (std::size_t i = 0; i < idx.size(); ++i)
            rows.row(static_cast<Eigen::Index>(i)) =
                train.values.row(static_cast<Eigen::Index>(idx[i]));
        return std_.apply(rows);
    };
    return {pick(Group::Patient), pick(Group::Control)};
}

void require_both_classes(const FeatureMatrix& train) {
    if (train.rows_of(Group::Patient).empty() || train.rows_of(Group::Control).empty())
        throw DegenerateData("training set must contain both classes");
    if (train.rows() < 2) throw DegenerateData("training set too small");
}

}  // namespace

ClassifierModel train_lda(const FeatureMatrix& train, const LdaOptions& opts) {
    require_both_classes(train);
    ClassifierModel m;
    m.kind = ClassifierKind::LDA;
    m.feature_names = train.column_names;
    m.standardizer = fit_standardizer(train.values);
    auto [zp, zc] = split_standardized(train, m.standardizer);

    const Eigen::Index d = train.values.cols();
    Eigen::VectorXd mu_p = zp.colwise().mean();
    Eigen::VectorXd mu_c = zc.colwise().mean();

    Eigen::MatrixXd sw = Eigen::MatrixXd::Zero(d, d);
    Eigen::MatrixXd cp = zp.rowwise() - mu_p.transpose();
    Eigen::MatrixXd cc = zc.rowwise() - mu_c.transpose();
    sw += cp.transpose() * cp;
    sw += cc.transpose() * cc;

    double lambda = opts.ridge_scale * sw.trace() / static_cast<double>(d);
    if (!(lambda > 0.0)) lambda = opts.ridge_scale;  // all-zero scatter
    sw += lambda * Eigen::MatrixXd::Identity(d, d);

    Eigen::LDLT<Eigen::MatrixXd> ldlt(sw);
    if (ldlt.info() != Eigen::Success)
        throw SingularScatter("LDA: within-class scatter not factorizable after regularization");
    Eigen::VectorXd w = ldlt.solve(mu_p - mu_c);
    double n = w.norm();
    if (!(n > 0.0)) throw SingularScatter("LDA: degenerate discriminant direction");
    w /= n;  // unit-norm convention, patient side positive by construction
    m.lda_w = w;
    m.lda_threshold = w.dot(0.5 * (mu_p + mu_c));
    return m;
}

ClassifierModel train_pca(const FeatureMatrix& train, const PcaOptions& opts) {
    require_both_classes(train);
    ClassifierModel m;
    m.kind = ClassifierKind::PCA;
    m.feature_names = train.column_names;
    m.standardizer = fit_standardizer(train.values);
    Eigen::MatrixXd z = m.standardizer.apply(train.values);

    Eigen::MatrixXd centered = z.rowwise() - z.colwise().mean();
    Eigen::MatrixXd cov =
        centered.transpose() * centered / static_cast<double>(std::max<Eigen::Index>(1, z.rows() - 1));

    Eigen::VectorXd evals;
    Eigen::MatrixXd evecs;
    sorted_eigen_symmetric(cov, evals, evecs);

    double total = evals.cwiseMax(0.0).sum();
    if (!(total > 0.0)) throw DegenerateData("PCA: zero total variance");

    Eigen::Index mdim;
    if (opts.components > 0) {
        mdim = std::min<Eigen::Index>(opts.components, evals.size());
    } else {
        double cum = 0.0;
        mdim = evals.size();
        for (Eigen::Index i = 0; i < evals.size(); ++i) {
            cum += std::max(0.0, evals(i));
            if (cum / total >= opts.variance_target) {
                mdim = i + 1;
                break;
            }
        }
    }
    m.pca_axes = evecs.leftCols(mdim);

    auto [zp, zc] = split_standardized(train, m.standardizer);
    m.pca_centroid_patient = (zp * m.pca_axes).colwise().mean();
    m.pca_centroid_control = (zc * m.pca_axes).colwise().mean();
    return m;
}

ClassifierModel train_nb(const FeatureMatrix& train) {
    require_both_classes(train);
    ClassifierModel m;
    m.kind = ClassifierKind::NB;
    m.feature_names = train.column_names;
    m.standardizer = fit_standardizer(train.values);
    auto [zp, zc] = split_standardized(train, m.standardizer);

    auto moments = [](const Eigen::MatrixXd& rows, Eigen::VectorXd& mean, Eigen::VectorXd& var) {
        mean = rows.colwise().mean();
        Eigen::MatrixXd c = rows.rowwise() - mean.transpose();
        double denom = rows.rows() > 1 ? static_cast<double>(rows.rows() - 1) : 1.0;
        var = c.array().square().colwise().sum().transpose() / denom;
    };
    moments(zp, m.nb_mean_patient, m.nb_var_patient);
    moments(zc, m.nb_mean_control, m.nb_var_control);

    // variance floor: 1e-9 of the pooled column variance, with an absolute floor
    Eigen::MatrixXd z = m.standardizer.apply(train.values);
    Eigen::MatrixXd c = z.rowwise() - z.colwise().mean();
    double denom = z.rows() > 1 ? static_cast<double>(z.rows() - 1) : 1.0;
    Eigen::VectorXd pooled = c.array().square().colwise().sum().transpose() / denom;
    for (Eigen::Index i = 0; i < pooled.size(); ++i) {
        double floor = std::max(1e-9 * pooled(i), 1e-12);
        m.nb_var_patient(i) = std::max(m.nb_var_patient(i), floor);
        m.nb_var_control(i) = std::max(m.nb_var_control(i), floor);
    }

    double np = static_cast<double>(zp.rows());
    double nc = static_cast<double>(zc.rows());
    m.nb_log_prior_patient = std::log(np / (np + nc));
    m.nb_log_prior_control = std::log(nc / (np + nc));
    return m;
}

namespace {

double nb_log_likelihood(const Eigen::VectorXd& z, const Eigen::VectorXd& mean,
                         const Eigen::VectorXd& var, double log_prior) {
    double ll = log_prior;
    for (Eigen::Index i = 0; i < z.size(); ++i) {
        double d = z(i) - mean(i);
        ll += -0.5 * (std::log(2.0 * M_PI * var(i)) + d * d / var(i));
    }
    return ll;
}

}  // namespace

Group classify(const ClassifierModel& model, const Eigen::VectorXd& x) {
    if (x.size() != model.standardizer.mean.size())
        throw DimensionMismatch("classify: feature dimension mismatch");
    Eigen::VectorXd z = model.standardizer.apply(x);
    switch (model.kind) {
        case ClassifierKind::LDA:
            return model.lda_w.dot(z) - model.lda_threshold >= 0.0 ? Group::Patient
                                                                   : Group::Control;
        case ClassifierKind::PCA: {
            Eigen::VectorXd proj = model.pca_axes.transpose() * z;
            double dp = (proj - model.pca_centroid_patient).norm();
            double dc = (proj - model.pca_centroid_control).norm();
            return dp <= dc ? Group::Patient : Group::Control;
        }
        case ClassifierKind::NB: {
            double lp = nb_log_likelihood(z, model.nb_mean_patient, model.nb_var_patient,
                                          model.nb_log_prior_patient);
            double lc = nb_log_likelihood(z, model.nb_mean_control, model.nb_var_control,
                                          model.nb_log_prior_control);
            return lp >= lc ? Group::Patient : Group::Control;
        }
    }
    throw UsageError("unknown classifier kind");
}

double EvalReport::accuracy() const {
    std::size_t n = tp + fp + tn + fn;
    return n ? static_cast<double>(tp + tn) / static_cast<double>(n) : 0.0;
}
double EvalReport::sensitivity() const {
    std::size_t n = tp + fn;
    return n ? static_cast<double>(tp) / static_cast<double>(n) : 0.0;
}
double EvalReport::specificity() const {
    std::size_t n = tn + fp;
    return n ? static_cast<double>(tn) / static_cast<double>(n) : 0.0;
}

EvalReport evaluate(const ClassifierModel& model, const FeatureMatrix& test) {
    if (test.rows() == 0) throw EmptyTestSet("evaluate: empty test set");
    EvalReport r;
    for (std::size_t i = 0; i < test.rows(); ++i) {
        Group pred = classify(model, test.values.row(static_cast<Eigen::Index>(i)).transpose());
        Group truth = test.labels[i];
        if (truth == Group::Patient)
            pred == Group::Patient ? ++r.tp : ++r.fn;
        else
            pred == Group::Control ? ++r.tn : ++r.fp;
    }
    return r;
}

// ---- persistence ------------------------------------------------------------

namespace {

nlohmann::ordered_json vec_json(const Eigen::VectorXd& v) {
    auto a = nlohmann::ordered_json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
    return a;
}

Eigen::VectorXd vec_from(const nlohmann::json& a) {
    Eigen::VectorXd v(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) v(static_cast<Eigen::Index>(i)) = a[i].get<double>();
    return v;
}

nlohmann::ordered_json mat_json(const Eigen::MatrixXd& m) {
    auto a = nlohmann::ordered_json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) a.push_back(vec_json(m.row(r).transpose()));
    return a;
}

Eigen::MatrixXd mat_from(const nlohmann::json& a) {
    if (a.empty()) return {};
    Eigen::MatrixXd m(a.size(), a[0].size());
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t c = 0; c < a[r].size(); ++c)
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = a[r][c].get<double>();
    return m;
}

}  // namespace

std::string model_to_json(const ClassifierModel& m) {
    nlohmann::ordered_json j;
    j["version"] = kModelFormatVersion;
    j["kind"] = to_string(m.kind);
    j["features"] = m.feature_names;
    j["standardization"] = {{"mean", vec_json(m.standardizer.mean)},
                            {"std", vec_json(m.standardizer.stddev)}};
    nlohmann::ordered_json p;
    switch (m.kind) {
        case ClassifierKind::LDA:
            p["w"] = vec_json(m.lda_w);
            p["threshold"] = m.lda_threshold;
            break;
        case ClassifierKind::PCA:
            p["axes"] = mat_json(m.pca_axes);
            p["centroid_patient"] = vec_json(m.pca_centroid_patient);
            p["centroid_control"] = vec_json(m.pca_centroid_control);
            break;
        case ClassifierKind::NB:
            p["mean_patient"] = vec_json(m.nb_mean_patient);
            p["var_patient"] = vec_json(m.nb_var_patient);
            p["mean_control"] = vec_json(m.nb_mean_control);
            p["var_control"] = vec_json(m.nb_var_control);
            p["log_prior_patient"] = m.nb_log_prior_patient;
            p["log_prior_control"] = m.nb_log_prior_control;
            break;
    }
    j["params"] = std::move(p);
    return j.dump(2) + "\n";
}

ClassifierModel model_from_json(const std::string& json_text) {
    auto j = nlohmann::json::parse(json_text);
    int version = j.at("version").get<int>();
    if (version != kModelFormatVersion)
        throw SchemaError("model version " + std::to_string(version) + " unsupported (expected " +
                          std::to_string(kModelFormatVersion) + ")");
    ClassifierModel m;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "lda")
        m.kind = ClassifierKind::LDA;
    else if (kind == "pca")
        m.kind = ClassifierKind::PCA;
    else if (kind == "nb")
        m.kind = ClassifierKind::NB;
    else
        throw SchemaError("unknown model kind: " + kind);
    m.feature_names = j.at("features").get<std::vector<std::string>>();
    m.standardizer.mean = vec_from(j.at("standardization").at("mean"));
    m.standardizer.stddev = vec_from(j.at("standardization").at("std"));
    const auto& p = j.at("params");
    switch (m.kind) {
        case ClassifierKind::LDA:
            m.lda_w = vec_from(p.at("w"));
            m.lda_threshold = p.at("threshold").get<double>();
            break;
        case ClassifierKind::PCA:
            m.pca_axes = mat_from(p.at("axes"));
            m.pca_centroid_patient = vec_from(p.at("centroid_patient"));
            m.pca_centroid_control = vec_from(p.at("centroid_control"));
            break;
        case ClassifierKind::NB:
            m.nb_mean_patient = vec_from(p.at("mean_patient"));
            m.nb_var_patient = vec_from(p.at("var_patient"));
            m.nb_mean_control = vec_from(p.at("mean_control"));
            m.nb_var_control = vec_from(p.at("var_control"));
            m.nb_log_prior_patient = p.at("log_prior_patient").get<double>();
            m.nb_log_prior_control = p.at("log_prior_control").get<double>();
            break;
    }
    return m;
}

void save_model(const ClassifierModel& m, const std::string& path) {
    write_file_atomic(path, model_to_json(m));
}

ClassifierModel load_model(const std::string& path) {
    try {
        return model_from_json(read_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

}  // namespace gait
