#include "gaitkit/selection.hpp"

#include <algorithm>
#include <boost/math/distributions/students_t.hpp>
#include <cmath>

#include <nlohmann/json.hpp>

#include "gaitkit/errors.hpp"
#include "gaitkit/textio.hpp"

namespace gait {

namespace {

struct MeanVar {
    double mean = 0, var = 0;  // sample variance, n-1
    std::size_t n = 0;
};

MeanVar mean_var(const std::vector<double>& v) {
    MeanVar mv;
    mv.n = v.size();
    if (mv.n == 0) return mv;
    for (double x : v) mv.mean += x;
    mv.mean /= static_cast<double>(mv.n);
    if (mv.n >= 2) {
        for (double x : v) mv.var += (x - mv.mean) * (x - mv.mean);
        mv.var /= static_cast<double>(mv.n - 1);
    }
    return mv;
}

double two_sided_p(double t, double dof) {
    boost::math::students_t dist(dof);
    double tail = boost::math::cdf(boost::math::complement(dist, std::abs(t)));
    return std::min(1.0, 2.0 * tail);
}

}  // namespace

double t_test(const std::vector<double>& group1, const std::vector<double>& group2, bool paired) {
    if (paired) {
        if (group1.size() != group2.size())
            throw DegenerateGroups("paired t-test: groups must have equal size");
        if (group1.size() < 2) throw DegenerateGroups("paired t-test: need >= 2 pairs");
        std::vector<double> diff(group1.size());
        for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = group1[i] - group2[i];
        auto d = mean_var(diff);
        if (d.var <= 0.0) {
            if (d.mean == 0.0) return 1.0;
            throw DegenerateGroups("paired t-test: zero variance of differences");
        }
        double t = d.mean / std::sqrt(d.var / static_cast<double>(d.n));
        return two_sided_p(t, static_cast<double>(d.n - 1));
    }

    if (group1.size() < 2 || group2.size() < 2)
        throw DegenerateGroups("t-test: each group needs >= 2 samples");
    auto a = mean_var(group1);
    auto b = mean_var(group2);
    double se2 = a.var / static_cast<double>(a.n) + b.var / static_cast<double>(b.n);
    if (se2 <= 0.0) {
        if (a.mean == b.mean) return 1.0;
        throw DegenerateGroups("t-test: zero pooled variance with unequal means");
    }
    double t = (a.mean - b.mean) / std::sqrt(se2);
    // Welch-Satterthwaite degrees of freedom
    double na = static_cast<double>(a.n), nb = static_cast<double>(b.n);
    double dof = se2 * se2 /
                 (a.var * a.var / (na * na * (na - 1.0)) + b.var * b.var / (nb * nb * (nb - 1.0)));
    return two_sided_p(t, dof);
}

double snr(const FeatureStats& stats) {
    double spread = stats.sigma1 + stats.sigma2;
    if (spread <= 0.0) throw ZeroSpread("snr: sigma1 + sigma2 must be positive");
    return (stats.mu1 - stats.mu2) / spread;
}

std::vector<std::string> SelectionResult::feature_names() const {
    std::vector<std::string> out;
    out.reserve(features.size());
    for (const auto& f : features) out.push_back(f.name);
    return out;
}

SelectionResult select_features(const FeatureMatrix& subjects, double alpha, std::size_t k) {
    auto controls = subjects.rows_of(Group::Control);
    auto patients = subjects.rows_of(Group::Patient);
    if (controls.size() < 2 || patients.size() < 2)
        throw DegenerateGroups("select_features: need >= 2 subjects per group");

    SelectionResult result;
    result.alpha = alpha;
    result.k = k;

    std::vector<SelectedFeature> survivors;
    for (std::size_t c = 0; c < subjects.cols(); ++c) {
        std::vector<double> g1, g2;
        g1.reserve(controls.size());
        g2.reserve(patients.size());
        for (auto r : controls)
            g1.push_back(subjects.values(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)));
        for (auto r : patients)
            g2.push_back(subjects.values(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)));

        FeatureStats st;
        auto a = mean_var(g1);
        auto b = mean_var(g2);
        st.mu1 = a.mean;
        st.mu2 = b.mean;
        st.sigma1 = std::sqrt(a.var);
        st.sigma2 = std::sqrt(b.var);
        try {
            st.p_value = t_test(g1, g2);
        } catch (const DegenerateGroups&) {
            continue;  // constant feature in both groups carries no information
        }
        if (st.sigma1 + st.sigma2 <= 0.0) continue;
        st.snr = snr(st);
        if (st.p_value < alpha) survivors.push_back({subjects.column_names[c], st});
    }
    if (survivors.empty())
        throw NoSignificantFeatures("select_features: no feature passed p < alpha");

    std::stable_sort(survivors.begin(), survivors.end(), [](const auto& x, const auto& y) {
        double ax = std::abs(x.stats.snr), ay = std::abs(y.stats.snr);
        if (ax != ay) return ax > ay;
        return x.name < y.name;  // deterministic tie-break
    });
    if (survivors.size() > k) survivors.resize(k);
    result.features = std::move(survivors);
    return result;
}

std::string selection_to_json(const SelectionResult& sel) {
    nlohmann::ordered_json j;
    j["alpha"] = sel.alpha;
    j["k"] = sel.k;
    j["features"] = nlohmann::ordered_json::array();
    for (const auto& f : sel.features) {
        // split "signal_feature" on the last underscore
        auto pos = f.name.rfind('_');
        nlohmann::ordered_json e;
        e["signal"] = f.name.substr(0, pos);
        e["feature"] = f.name.substr(pos + 1);
        e["mu1"] = f.stats.mu1;
        e["mu2"] = f.stats.mu2;
        e["sigma1"] = f.stats.sigma1;
        e["sigma2"] = f.stats.sigma2;
        e["p"] = f.stats.p_value;
        e["snr"] = f.stats.snr;
        j["features"].push_back(std::move(e));
    }
    return j.dump(2) + "\n";
}

SelectionResult selection_from_json(const std::string& json_text) {
    auto j = nlohmann::json::parse(json_text);
    SelectionResult sel;
    sel.alpha = j.at("alpha").get<double>();
    sel.k = j.at("k").get<std::size_t>();
    for (const auto& e : j.at("features")) {
        SelectedFeature f;
        f.name = e.at("signal").get<std::string>() + "_" + e.at("feature").get<std::string>();
        f.stats.mu1 = e.at("mu1").get<double>();
        f.stats.mu2 = e.at("mu2").get<double>();
        f.stats.sigma1 = e.at("sigma1").get<double>();
        f.stats.sigma2 = e.at("sigma2").get<double>();
        f.stats.p_value = e.at("p").get<double>();
        f.stats.snr = e.at("snr").get<double>();
        sel.features.push_back(std::move(f));
    }
    return sel;
}

void save_selection(const SelectionResult& sel, const std::string& path) {
    write_file_atomic(path, selection_to_json(sel));
}

SelectionResult load_selection(const std::string& path) {
    try {
        return selection_from_json(read_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

}  // namespace gait
