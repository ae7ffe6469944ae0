#pragma once

#include "seasoncast/regressor.hpp"
#include "seasoncast/tree.hpp"

#include <cstdint>

namespace seasoncast {

/// Gradient-boosting controls. Defaults follow the reference configuration:
/// eta 0.1, depth 6, min_child_weight 1, subsample 0.8, colsample 0.8,
/// gamma 0. Rounds default to 500 with early stopping (patience 50) when an
/// evaluation set is supplied.
struct BoostedParams {
    double eta = 0.1;
    int max_depth = 6;
    int min_child_weight = 1;
    double subsample = 0.8;
    double colsample_bytree = 0.8;
    double gamma = 0.0;
    int rounds = 500;
    int patience = 50; // early-stopping patience on eval MSE; <= 0 disables
};

/// Squared-error gradient boosting: round m fits a depth-limited tree to the
/// residuals y - prediction_{m-1} on a row subsample with a per-tree column
/// subsample, then adds eta times its output.
class BoostedModel final : public Regressor {
public:
    std::string kind() const override { return "gbt"; }
    int feature_count() const override { return feature_count_; }
    std::vector<double> predict(const Matrix& x, Exec exec = Exec::parallel) const override;

    double base_score() const { return base_score_; }
    const std::vector<RegressionTree>& trees() const { return trees_; }
    const BoostedParams& params() const { return params_; }
    int best_round() const { return best_round_; }

    nlohmann::json to_json() const override;
    static std::unique_ptr<BoostedModel> from_json(const nlohmann::json& doc);

    friend BoostedModel fit_boosted(const Matrix& x, const std::vector<double>& y,
                                    const BoostedParams& params, std::uint64_t seed,
                                    const Matrix* eval_x, const std::vector<double>* eval_y);

private:
    double base_score_ = 0.0;
    std::vector<RegressionTree> trees_;
    BoostedParams params_;
    std::uint64_t seed_ = 0;
    int feature_count_ = 0;
    int best_round_ = 0;
};

/// Trains for params.rounds rounds; when (eval_x, eval_y) are given, stops
/// after params.patience rounds without eval-MSE improvement and keeps the
/// best prefix of trees. Deterministic given seed. Throws EmptyData.
BoostedModel fit_boosted(const Matrix& x, const std::vector<double>& y, const BoostedParams& params,
                         std::uint64_t seed, const Matrix* eval_x = nullptr,
                         const std::vector<double>* eval_y = nullptr);

} // namespace seasoncast
