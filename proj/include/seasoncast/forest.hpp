#pragma once

#include "seasoncast/regressor.hpp"
#include "seasoncast/tree.hpp"

#include <cstdint>
#include <optional>

namespace seasoncast {

/// Random Forest controls. Defaults follow the reference configuration:
/// 1000 trees, unlimited depth, bootstrap resampling, and a per-split
/// random feature subset of ceil(k/3) (the standard regression choice).
struct ForestParams {
    int n_trees = 1000;
    std::optional<int> max_depth; // empty = unlimited
    int min_child_weight = 1;
    double gamma = 0.0;
    bool bootstrap = true;
    int features_per_split = -1; // -1 = ceil(k/3), 0 = all features
};

/// Bagged ensemble of regression trees; the prediction is the arithmetic
/// mean of member predictions, summed in tree-index order.
class ForestModel final : public Regressor {
public:
    std::string kind() const override { return "rf"; }
    int feature_count() const override { return feature_count_; }
    std::vector<double> predict(const Matrix& x, Exec exec = Exec::parallel) const override;

    const std::vector<RegressionTree>& trees() const { return trees_; }
    const ForestParams& params() const { return params_; }
    std::uint64_t seed() const { return seed_; }

    nlohmann::json to_json() const override;
    static std::unique_ptr<ForestModel> from_json(const nlohmann::json& doc);

    friend ForestModel fit_forest(const Matrix& x, const std::vector<double>& y,
                                  const ForestParams& params, std::uint64_t seed, Exec exec);

private:
    std::vector<RegressionTree> trees_;
    ForestParams params_;
    std::uint64_t seed_ = 0;
    int feature_count_ = 0;
};

/// Fits each tree on a bootstrap sample of size N (with replacement) using a
/// per-tree generator derived from (seed, tree index), so the parallel path
/// is bitwise identical to the serial one. Throws EmptyData.
ForestModel fit_forest(const Matrix& x, const std::vector<double>& y, const ForestParams& params,
                       std::uint64_t seed, Exec exec = Exec::parallel);

} // namespace seasoncast
