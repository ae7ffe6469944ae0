#include "seasoncast/boosted.hpp"

#include "seasoncast/errors.hpp"
#include "seasoncast/rng.hpp"

#include <cmath>
#include <limits>

namespace seasoncast {

BoostedModel fit_boosted(const Matrix& x, const std::vector<double>& y, const BoostedParams& params,
                         std::uint64_t seed, const Matrix* eval_x, const std::vector<double>* eval_y) {
    if (x.rows == 0 || y.empty()) throw EmptyData("fit_boosted: empty data");
    if (params.rounds < 1) throw EmptyData("fit_boosted: rounds must be >= 1");
    const std::size_t n = y.size();
    const std::size_t k = static_cast<std::size_t>(x.cols);

    BoostedModel model;
    model.params_ = params;
    model.seed_ = seed;
    model.feature_count_ = x.cols;

    double base = 0.0;
    for (const double t : y) base += t;
    base /= static_cast<double>(n);
    model.base_score_ = base;

    std::vector<double> prediction(n, base);
    std::vector<double> residual(n);
    std::vector<double> eval_pred;
    if (eval_x != nullptr && eval_y != nullptr) eval_pred.assign(eval_y->size(), base);

    TreeParams tree_params;
    tree_params.max_depth = params.max_depth;
    tree_params.min_child_weight = params.min_child_weight;
    tree_params.gamma = params.gamma;

    const std::size_t n_sub = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::floor(params.subsample * static_cast<double>(n))));
    const std::size_t k_sub = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::ceil(params.colsample_bytree * static_cast<double>(k))));

    double best_eval = std::numeric_limits<double>::infinity();
    int since_best = 0;
    model.best_round_ = 0;

    for (int round = 0; round < params.rounds; ++round) {
        Rng rng(mix_seed(seed, static_cast<std::uint64_t>(round)));
        for (std::size_t i = 0; i < n; ++i) residual[i] = y[i] - prediction[i];

        std::vector<std::size_t> rows;
        if (n_sub < n) {
            rows = rng.sample_without_replacement(n, n_sub);
        } else {
            rows.resize(n);
            for (std::size_t i = 0; i < n; ++i) rows[i] = i;
        }
        std::vector<std::size_t> cols;
        const std::vector<std::size_t>* cols_ptr = nullptr;
        if (k_sub < k) {
            cols = rng.sample_without_replacement(k, k_sub);
            cols_ptr = &cols;
        }

        RegressionTree tree = fit_tree(x, residual, tree_params, rng, &rows, cols_ptr);

        for (std::size_t i = 0; i < n; ++i) {
            prediction[i] += params.eta * tree.predict_row(x.row(static_cast<int>(i)));
        }
        if (!eval_pred.empty()) {
            double sse = 0.0;
            for (std::size_t i = 0; i < eval_pred.size(); ++i) {
                eval_pred[i] += params.eta * tree.predict_row(eval_x->row(static_cast<int>(i)));
                const double d = (*eval_y)[i] - eval_pred[i];
                sse += d * d;
            }
            const double eval_mse = sse / static_cast<double>(eval_pred.size());
            model.trees_.push_back(std::move(tree));
            if (eval_mse < best_eval) {
                best_eval = eval_mse;
                model.best_round_ = round + 1;
                since_best = 0;
            } else if (params.patience > 0 && ++since_best >= params.patience) {
                break;
            }
        } else {
            model.trees_.push_back(std::move(tree));
            model.best_round_ = round + 1;
        }
    }

    // Keep only the prefix that scored best on the evaluation set.
    if (!eval_pred.empty() && model.best_round_ < static_cast<int>(model.trees_.size())) {
        model.trees_.resize(static_cast<std::size_t>(model.best_round_));
    }
    return model;
}

std::vector<double> BoostedModel::predict(const Matrix& x, Exec exec) const {
    if (x.cols != feature_count_) {
        throw DimensionMismatch("gbt predict: " + std::to_string(x.cols) + " features, trained with " +
                                std::to_string(feature_count_));
    }
    std::vector<double> out(x.rows, 0.0);
    const int n = x.rows;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(max_threads()) if (exec == Exec::parallel)
#endif
    for (int r = 0; r < n; ++r) {
        double sum = 0.0;
        for (const auto& tree : trees_) sum += tree.predict_row(x.row(r));
        out[r] = base_score_ + params_.eta * sum;
    }
    (void)exec;
    return out;
}

nlohmann::json BoostedModel::to_json() const {
    nlohmann::json doc;
    doc["kind"] = kind();
    doc["seed"] = seed_;
    doc["feature_count"] = feature_count_;
    doc["base_score"] = base_score_;
    doc["eta"] = params_.eta;
    doc["max_depth"] = params_.max_depth;
    doc["min_child_weight"] = params_.min_child_weight;
    doc["subsample"] = params_.subsample;
    doc["colsample_bytree"] = params_.colsample_bytree;
    doc["gamma"] = params_.gamma;
    doc["rounds"] = params_.rounds;
    doc["patience"] = params_.patience;
    doc["best_round"] = best_round_;
    doc["trees"] = nlohmann::json::array();
    for (const auto& tree : trees_) doc["trees"].push_back(tree.to_json());
    return doc;
}

std::unique_ptr<BoostedModel> BoostedModel::from_json(const nlohmann::json& doc) {
    auto model = std::make_unique<BoostedModel>();
    model->seed_ = doc.at("seed").get<std::uint64_t>();
    model->feature_count_ = doc.at("feature_count").get<int>();
    model->base_score_ = doc.at("base_score").get<double>();
    model->params_.eta = doc.at("eta").get<double>();
    model->params_.max_depth = doc.at("max_depth").get<int>();
    model->params_.min_child_weight = doc.at("min_child_weight").get<int>();
    model->params_.subsample = doc.at("subsample").get<double>();
    model->params_.colsample_bytree = doc.at("colsample_bytree").get<double>();
    model->params_.gamma = doc.at("gamma").get<double>();
    model->params_.rounds = doc.at("rounds").get<int>();
    model->params_.patience = doc.at("patience").get<int>();
    model->best_round_ = doc.at("best_round").get<int>();
    for (const auto& t : doc.at("trees")) model->trees_.push_back(RegressionTree::from_json(t));
    return model;
}

} // namespace seasoncast
