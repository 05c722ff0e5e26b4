#include "gaitkit/feature_matrix.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "gaitkit/errors.hpp"
#include "gaitkit/textio.hpp"

namespace gait {

std::vector<std::size_t> FeatureMatrix::rows_of(Group g) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == g) out.push_back(i);
    return out;
}

FeatureMatrix FeatureMatrix::aggregate_by_subject() const {
    std::vector<std::string> order;
    std::map<std::string, std::vector<std::size_t>> by_subject;
    for (std::size_t i = 0; i < rows(); ++i) {
        auto [it, inserted] = by_subject.try_emplace(subject_ids[i]);
        if (inserted) order.push_back(subject_ids[i]);
        it->second.push_back(i);
    }

    FeatureMatrix out;
    out.column_names = column_names;
    out.values.resize(static_cast<Eigen::Index>(order.size()), values.cols());
    for (std::size_t r = 0; r < order.size(); ++r) {
        const auto& idx = by_subject[order[r]];
        Eigen::RowVectorXd mean = Eigen::RowVectorXd::Zero(values.cols());
        for (auto i : idx) mean += values.row(static_cast<Eigen::Index>(i));
        mean /= static_cast<double>(idx.size());
        out.values.row(static_cast<Eigen::Index>(r)) = mean;
        out.subject_ids.push_back(order[r]);
        out.labels.push_back(labels[idx.front()]);
        out.days_post_op.push_back(days_post_op[idx.front()]);
    }
    return out;
}

FeatureMatrix FeatureMatrix::select_columns(const std::vector<std::string>& names) const {
    FeatureMatrix out;
    out.column_names = names;
    out.subject_ids = subject_ids;
    out.labels = labels;
    out.days_post_op = days_post_op;
    out.values.resize(values.rows(), static_cast<Eigen::Index>(names.size()));
    for (std::size_t c = 0; c < names.size(); ++c) {
        auto it = std::find(column_names.begin(), column_names.end(), names[c]);
        if (it == column_names.end())
            throw SchemaError("feature column not present: " + names[c]);
        auto src = static_cast<Eigen::Index>(it - column_names.begin());
        out.values.col(static_cast<Eigen::Index>(c)) = values.col(src);
    }
    return out;
}

FeatureMatrix matrix_from_vectors(const std::vector<FeatureVector>& rows) {
    FeatureMatrix m;
    m.column_names = all_feature_column_names();
    m.values.resize(static_cast<Eigen::Index>(rows.size()),
                    static_cast<Eigen::Index>(kNumFeatureColumns));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < kNumFeatureColumns; ++c)
            m.values(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                rows[r].values[c];
        m.subject_ids.push_back(rows[r].subject_id);
        m.labels.push_back(rows[r].group);
        m.days_post_op.push_back(rows[r].days_post_op);
    }
    return m;
}

void save_feature_csv(const FeatureMatrix& m, const std::string& path) {
    std::ostringstream out;
    out << "subject_id,group,days_post_op";
    for (const auto& n : m.column_names) out << ',' << n;
    out << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out << m.subject_ids[r] << ',' << to_string(m.labels[r]) << ',';
        if (m.days_post_op[r]) out << *m.days_post_op[r];
        for (std::size_t c = 0; c < m.cols(); ++c)
            out << ',' << format_double(m.values(static_cast<Eigen::Index>(r),
                                                 static_cast<Eigen::Index>(c)));
        out << '\n';
    }
    write_file_atomic(path, out.str());
}

FeatureMatrix load_feature_csv(const std::string& path) {
    auto text = read_file(path);
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw ParseError(path + ": empty feature CSV");
    auto header = split(line, ',');
    if (header.size() < 4 || header[0] != "subject_id" || header[1] != "group" ||
        header[2] != "days_post_op")
        throw SchemaError(path + ": unexpected feature CSV header");

    FeatureMatrix m;
    for (std::size_t c = 3; c < header.size(); ++c) m.column_names.emplace_back(header[c]);

    std::vector<std::vector<double>> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        auto tok = split(line, ',');
        if (tok.size() != header.size())
            throw ParseError(path + ":" + std::to_string(line_no) + ": wrong column count");
        m.subject_ids.emplace_back(tok[0]);
        auto g = group_from_string(std::string(tok[1]));
        if (!g) throw ParseError(path + ":" + std::to_string(line_no) + ": bad group");
        m.labels.push_back(*g);
        if (tok[2].empty())
            m.days_post_op.push_back(std::nullopt);
        else {
            auto d = parse_int(tok[2]);
            if (!d) throw ParseError(path + ":" + std::to_string(line_no) + ": bad days_post_op");
            m.days_post_op.push_back(static_cast<int>(*d));
        }
        std::vector<double> row;
        row.reserve(header.size() - 3);
        for (std::size_t c = 3; c < tok.size(); ++c) {
            auto v = parse_double(tok[c]);
            if (!v) throw ParseError(path + ":" + std::to_string(line_no) + ": bad number");
            row.push_back(*v);
        }
        rows.push_back(std::move(row));
    }
    m.values.resize(static_cast<Eigen::Index>(rows.size()),
                    static_cast<Eigen::Index>(m.column_names.size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            m.values(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
    return m;
}

}  // namespace gait
