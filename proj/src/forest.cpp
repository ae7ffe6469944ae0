#include "seasoncast/forest.hpp"

#include "seasoncast/errors.hpp"

#include <cmath>

namespace seasoncast {

ForestModel fit_forest(const Matrix& x, const std::vector<double>& y, const ForestParams& params,
                       std::uint64_t seed, Exec exec) {
    if (x.rows == 0 || y.empty()) throw EmptyData("fit_forest: empty data");
    if (params.n_trees < 1) throw EmptyData("fit_forest: n_trees must be >= 1");

    ForestModel model;
    model.params_ = params;
    model.seed_ = seed;
    model.feature_count_ = x.cols;
    model.trees_.resize(params.n_trees);

    TreeParams tree_params;
    tree_params.max_depth = params.max_depth;
    tree_params.min_child_weight = params.min_child_weight;
    tree_params.gamma = params.gamma;
    tree_params.features_per_split =
        params.features_per_split < 0
            ? static_cast<int>(std::ceil(static_cast<double>(x.cols) / 3.0))
            : params.features_per_split;

    const std::size_t n = y.size();
    const int n_trees = params.n_trees;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(max_threads()) if (exec == Exec::parallel)
#endif
    for (int t = 0; t < n_trees; ++t) {
        Rng rng(mix_seed(seed, static_cast<std::uint64_t>(t)));
        std::vector<std::size_t> rows;
        if (params.bootstrap) {
            rows.resize(n);
            for (std::size_t i = 0; i < n; ++i) rows[i] = static_cast<std::size_t>(rng.uniform_int(n));
        } else {
            rows.resize(n);
            for (std::size_t i = 0; i < n; ++i) rows[i] = i;
        }
        model.trees_[t] = fit_tree(x, y, tree_params, rng, &rows, nullptr);
    }
    (void)exec;
    return model;
}

std::vector<double> ForestModel::predict(const Matrix& x, Exec exec) const {
    if (x.cols != feature_count_) {
        throw DimensionMismatch("rf predict: " + std::to_string(x.cols) + " features, trained with " +
                                std::to_string(feature_count_));
    }
    std::vector<double> out(x.rows, 0.0);
    const int n = x.rows;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(max_threads()) if (exec == Exec::parallel)
#endif
    for (int r = 0; r < n; ++r) {
        // Mean over member predictions, accumulated in tree-index order.
        double sum = 0.0;
        for (const auto& tree : trees_) sum += tree.predict_row(x.row(r));
        out[r] = sum / static_cast<double>(trees_.size());
    }
    (void)exec;
    return out;
}

nlohmann::json ForestModel::to_json() const {
    nlohmann::json doc;
    doc["kind"] = kind();
    doc["seed"] = seed_;
    doc["feature_count"] = feature_count_;
    doc["n_trees"] = params_.n_trees;
    if (params_.max_depth.has_value()) {
        doc["max_depth"] = *params_.max_depth;
    } else {
        doc["max_depth"] = nullptr;
    }
    doc["min_child_weight"] = params_.min_child_weight;
    doc["gamma"] = params_.gamma;
    doc["bootstrap"] = params_.bootstrap;
    doc["features_per_split"] = params_.features_per_split;
    doc["trees"] = nlohmann::json::array();
    for (const auto& tree : trees_) doc["trees"].push_back(tree.to_json());
    return doc;
}

std::unique_ptr<ForestModel> ForestModel::from_json(const nlohmann::json& doc) {
    auto model = std::make_unique<ForestModel>();
    model->seed_ = doc.at("seed").get<std::uint64_t>();
    model->feature_count_ = doc.at("feature_count").get<int>();
    model->params_.n_trees = doc.at("n_trees").get<int>();
    if (!doc.at("max_depth").is_null()) model->params_.max_depth = doc.at("max_depth").get<int>();
    model->params_.min_child_weight = doc.at("min_child_weight").get<int>();
    model->params_.gamma = doc.at("gamma").get<double>();
    model->params_.bootstrap = doc.at("bootstrap").get<bool>();
    model->params_.features_per_split = doc.at("features_per_split").get<int>();
    for (const auto& t : doc.at("trees")) model->trees_.push_back(RegressionTree::from_json(t));
    if (model->trees_.empty()) throw DataError("rf json: no trees");
    return model;
}

} // namespace seasoncast
