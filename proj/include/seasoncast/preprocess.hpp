#pragma once

#include "seasoncast/tensor.hpp"

#include <string>
#include <vector>

namespace seasoncast {

/// Per-feature standardization to zero mean and unit standard deviation
/// (population definition, 1/N). Fit on training data only and reused
/// verbatim on validation/test.
struct ZScaler {
    std::vector<double> means;
    std::vector<double> stds;
    std::vector<std::string> feature_names;

    std::size_t feature_count() const { return means.size(); }

    std::string to_json_string() const;
    static ZScaler from_json_string(const std::string& text);
};

/// Fits means and population stds columnwise. Throws ZeroVariance naming the
/// first constant feature; the caller must drop it or abort.
ZScaler fit_zscore(const Matrix& features, const std::vector<std::string>& feature_names = {});

/// (x - mean) / std per column. Throws DimensionMismatch.
Matrix apply_zscore(const ZScaler& scaler, const Matrix& features);

/// z * std + mean per column. Throws DimensionMismatch.
Matrix invert_zscore(const ZScaler& scaler, const Matrix& normalized);

/// Symmetric Pearson correlation matrix; diagonal exactly 1, entries clamped
/// to [-1, 1].
struct CorrelationMatrix {
    std::vector<std::string> feature_names;
    Matrix r; // feature_count x feature_count

    double at(std::size_t i, std::size_t j) const {
        return r.at(static_cast<int>(i), static_cast<int>(j));
    }
    std::string to_csv() const;
};

/// Pearson product-moment coefficients over columns. Requires >= 2 samples;
/// throws ZeroVariance on a constant column.
CorrelationMatrix correlation_matrix(const Matrix& features,
                                     const std::vector<std::string>& feature_names = {});

/// Greedy redundancy pruning in declared feature order: for each surviving
/// feature, drop every later feature correlated with it at |r| >= threshold,
/// except protected ones. Returns the retained names in declared order.
std::vector<std::string> prune_by_correlation(const CorrelationMatrix& corr, double threshold,
                                              const std::vector<std::string>& protected_features);

} // namespace seasoncast
