#pragma once

#include "seasoncast/rng.hpp"
#include "seasoncast/tensor.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace seasoncast {

/// Controls for a single CART regression tree fit.
struct TreeParams {
    std::optional<int> max_depth;  // empty = unlimited
    int min_child_weight = 1;      // minimum samples per child
    double gamma = 0.0;            // minimum split gain (strict)
    int features_per_split = 0;    // 0 = all features; otherwise random subset size
};

/// Binary regression tree. Internal nodes route on feature/threshold with
/// `x <= threshold` going left; leaves store the mean target of their
/// training partition.
class RegressionTree {
public:
    struct Node {
        int feature = -1; // -1 marks a leaf
        double threshold = 0.0;
        int left = -1;
        int right = -1;
        double value = 0.0;
    };

    double predict_row(const double* row) const;
    std::vector<double> predict(const Matrix& x) const;

    const std::vector<Node>& nodes() const { return nodes_; }
    int depth() const;

    nlohmann::json to_json() const;
    static RegressionTree from_json(const nlohmann::json& doc);

    friend RegressionTree fit_tree(const Matrix& x, const std::vector<double>& y,
                                   const TreeParams& params, Rng& rng,
                                   const std::vector<std::size_t>* rows,
                                   const std::vector<std::size_t>* cols);

private:
    std::vector<Node> nodes_;
};

/// Greedy best-split fit by squared-error reduction over midpoint threshold
/// candidates. A split is accepted only when its gain strictly exceeds gamma
/// and both children hold at least min_child_weight samples; ties break
/// toward the lowest feature index, then the lowest threshold.
///
/// `rows` / `cols` optionally restrict the fit to a sample/feature subset
/// (bagging and column subsampling hooks); null means all. Throws EmptyData.
RegressionTree fit_tree(const Matrix& x, const std::vector<double>& y, const TreeParams& params,
                        Rng& rng, const std::vector<std::size_t>* rows = nullptr,
                        const std::vector<std::size_t>* cols = nullptr);

/// Convenience overload with a fresh generator (deterministic given seed).
RegressionTree fit_tree(const Matrix& x, const std::vector<double>& y, const TreeParams& params,
                        std::uint64_t seed = 0);

} // namespace seasoncast
