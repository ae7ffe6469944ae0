#include "seasoncast/preprocess.hpp"

#include "seasoncast/errors.hpp"
#include "seasoncast/util.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace seasoncast {

using nlohmann::json;

namespace {

std::vector<std::string> default_names(std::size_t k, const std::vector<std::string>& given) {
    if (!given.empty()) return given;
    std::vector<std::string> names(k);
    for (std::size_t i = 0; i < k; ++i) names[i] = "f" + std::to_string(i);
    return names;
}

} // namespace

ZScaler fit_zscore(const Matrix& features, const std::vector<std::string>& feature_names) {
    if (features.rows < 2) throw Empty("fit_zscore: need at least 2 samples");
    const int n = features.rows, k = features.cols;
    ZScaler s;
    s.feature_names = default_names(static_cast<std::size_t>(k), feature_names);
    s.means.resize(k);
    s.stds.resize(k);
    for (int c = 0; c < k; ++c) {
        double sum = 0.0;
        for (int r = 0; r < n; ++r) sum += features.at(r, c);
        const double mean = sum / n;
        double ss = 0.0;
        for (int r = 0; r < n; ++r) {
            const double d = features.at(r, c) - mean;
            ss += d * d;
        }
        const double sigma = std::sqrt(ss / n);
        if (sigma == 0.0) {
            throw ZeroVariance("feature '" + s.feature_names[static_cast<std::size_t>(c)] +
                               "' is constant");
        }
        s.means[c] = mean;
        s.stds[c] = sigma;
    }
    return s;
}

Matrix apply_zscore(const ZScaler& scaler, const Matrix& features) {
    if (static_cast<std::size_t>(features.cols) != scaler.feature_count()) {
        throw DimensionMismatch("apply_zscore: " + std::to_string(features.cols) + " columns vs scaler " +
                                std::to_string(scaler.feature_count()));
    }
    Matrix out(features.rows, features.cols);
    for (int r = 0; r < features.rows; ++r) {
        for (int c = 0; c < features.cols; ++c) {
            out.at(r, c) = (features.at(r, c) - scaler.means[c]) / scaler.stds[c];
        }
    }
    return out;
}

Matrix invert_zscore(const ZScaler& scaler, const Matrix& normalized) {
    if (static_cast<std::size_t>(normalized.cols) != scaler.feature_count()) {
        throw DimensionMismatch("invert_zscore: column count mismatch");
    }
    Matrix out(normalized.rows, normalized.cols);
    for (int r = 0; r < normalized.rows; ++r) {
        for (int c = 0; c < normalized.cols; ++c) {
            out.at(r, c) = normalized.at(r, c) * scaler.stds[c] + scaler.means[c];
        }
    }
    return out;
}

std::string ZScaler::to_json_string() const {
    json doc;
    doc["means"] = means;
    doc["stds"] = stds;
    doc["feature_names"] = feature_names;
    return doc.dump(2) + "\n";
}

ZScaler ZScaler::from_json_string(const std::string& text) {
    try {
        const json doc = json::parse(text);
        ZScaler s;
        s.means = doc.at("means").get<std::vector<double>>();
        s.stds = doc.at("stds").get<std::vector<double>>();
        s.feature_names = doc.at("feature_names").get<std::vector<std::string>>();
        if (s.means.size() != s.stds.size() || s.means.size() != s.feature_names.size()) {
            throw DataError("scaler arrays disagree in length");
        }
        return s;
    } catch (const json::exception& e) {
        throw DataError(std::string("scaler json: ") + e.what());
    }
}

CorrelationMatrix correlation_matrix(const Matrix& features,
                                     const std::vector<std::string>& feature_names) {
    if (features.rows < 2) throw Empty("correlation_matrix: need at least 2 samples");
    const int n = features.rows, k = features.cols;

    std::vector<double> means(k), norms(k);
    Matrix centered(n, k);
    for (int c = 0; c < k; ++c) {
        double sum = 0.0;
        for (int r = 0; r < n; ++r) sum += features.at(r, c);
        means[c] = sum / n;
        double ss = 0.0;
        for (int r = 0; r < n; ++r) {
            const double d = features.at(r, c) - means[c];
            centered.at(r, c) = d;
            ss += d * d;
        }
        norms[c] = std::sqrt(ss);
    }

    CorrelationMatrix out;
    out.feature_names = default_names(static_cast<std::size_t>(k), feature_names);
    out.r = Matrix(k, k);
    for (int i = 0; i < k; ++i) {
        if (norms[i] == 0.0) {
            throw ZeroVariance("feature '" + out.feature_names[static_cast<std::size_t>(i)] +
                               "' is constant");
        }
    }
    for (int i = 0; i < k; ++i) {
        out.r.at(i, i) = 1.0;
        for (int j = i + 1; j < k; ++j) {
            double dot = 0.0;
            for (int r = 0; r < n; ++r) dot += centered.at(r, i) * centered.at(r, j);
            double rij = dot / (norms[i] * norms[j]);
            rij = std::clamp(rij, -1.0, 1.0);
            out.r.at(i, j) = rij;
            out.r.at(j, i) = rij;
        }
    }
    return out;
}

std::string CorrelationMatrix::to_csv() const {
    std::ostringstream ss;
    ss << "feature";
    for (const auto& name : feature_names) ss << ',' << name;
    ss << '\n';
    for (std::size_t i = 0; i < feature_names.size(); ++i) {
        ss << feature_names[i];
        for (std::size_t j = 0; j < feature_names.size(); ++j) ss << ',' << fmt_double(at(i, j));
        ss << '\n';
    }
    return ss.str();
}

std::vector<std::string> prune_by_correlation(const CorrelationMatrix& corr, double threshold,
                                              const std::vector<std::string>& protected_features) {
    if (!(threshold > 0.0 && threshold <= 1.0)) {
        throw ConfigError("pruning threshold must be in (0, 1]");
    }
    const std::size_t k = corr.feature_names.size();
    const std::set<std::string> prot(protected_features.begin(), protected_features.end());
    std::vector<bool> dropped(k, false);
    for (std::size_t i = 0; i < k; ++i) {
        if (dropped[i]) continue;
        for (std::size_t j = i + 1; j < k; ++j) {
            if (dropped[j] || prot.count(corr.feature_names[j]) > 0) continue;
            if (std::abs(corr.at(i, j)) >= threshold) dropped[j] = true;
        }
    }
    std::vector<std::string> retained;
    for (std::size_t i = 0; i < k; ++i) {
        if (!dropped[i]) retained.push_back(corr.feature_names[i]);
    }
    return retained;
}

} // namespace seasoncast
