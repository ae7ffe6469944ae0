#include "seasoncast/tree.hpp"

#include "seasoncast/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace seasoncast {

namespace {

struct SplitChoice {
    bool found = false;
    int feature = -1;
    double threshold = 0.0;
    double gain = 0.0;
};

// Best split over the candidate features by squared-error reduction.
// Candidates are scanned in ascending (feature, threshold) order and only a
// strictly larger gain replaces the incumbent, so ties resolve to the lowest
// feature index, then the lowest threshold.
SplitChoice best_split(const Matrix& x, const std::vector<double>& y,
                       const std::vector<std::size_t>& rows, const std::vector<int>& features,
                       double gamma, int min_child_weight) {
    const std::size_t n = rows.size();
    SplitChoice best;

    double mean = 0.0;
    for (const std::size_t r : rows) mean += y[r];
    mean /= static_cast<double>(n);

    std::vector<std::pair<double, double>> order(n); // (feature value, centered y)
    for (const int f : features) {
        for (std::size_t i = 0; i < n; ++i) {
            order[i] = {x.at(static_cast<int>(rows[i]), f), y[rows[i]] - mean};
        }
        std::sort(order.begin(), order.end());

        double total_sum = 0.0, total_sq = 0.0;
        for (const auto& [v, yc] : order) {
            (void)v;
            total_sum += yc;
            total_sq += yc * yc;
        }
        const double parent_sse = total_sq - total_sum * total_sum / static_cast<double>(n);

        double left_sum = 0.0, left_sq = 0.0;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            left_sum += order[i].second;
            left_sq += order[i].second * order[i].second;
            const double v = order[i].first;
            const double v_next = order[i + 1].first;
            if (v == v_next) continue;
            const double threshold = v + (v_next - v) / 2.0;
            if (!(v < threshold && threshold < v_next)) continue; // adjacent doubles

            const auto n_left = static_cast<double>(i + 1);
            const auto n_right = static_cast<double>(n - i - 1);
            if (n_left < min_child_weight || n_right < min_child_weight) continue;

            const double right_sum = total_sum - left_sum;
            const double right_sq = total_sq - left_sq;
            const double sse_left = left_sq - left_sum * left_sum / n_left;
            const double sse_right = right_sq - right_sum * right_sum / n_right;
            const double gain = parent_sse - sse_left - sse_right;
            if (gain > gamma && gain > best.gain) {
                best = {true, f, threshold, gain};
            }
        }
    }
    return best;
}

} // namespace

RegressionTree fit_tree(const Matrix& x, const std::vector<double>& y, const TreeParams& params,
                        Rng& rng, const std::vector<std::size_t>* rows,
                        const std::vector<std::size_t>* cols) {
    if (x.rows == 0 || y.empty()) throw EmptyData("fit_tree: empty data");
    if (static_cast<std::size_t>(x.rows) != y.size()) {
        throw LengthMismatch("fit_tree: sample count mismatch");
    }

    std::vector<std::size_t> all_rows;
    if (rows == nullptr) {
        all_rows.resize(y.size());
        for (std::size_t i = 0; i < y.size(); ++i) all_rows[i] = i;
        rows = &all_rows;
    }
    if (rows->empty()) throw EmptyData("fit_tree: empty row subset");

    std::vector<int> base_features;
    if (cols != nullptr) {
        for (const std::size_t c : *cols) base_features.push_back(static_cast<int>(c));
    } else {
        for (int c = 0; c < x.cols; ++c) base_features.push_back(c);
    }

    RegressionTree tree;

    // Recursive split; returns the node index.
    auto build = [&](auto&& self, const std::vector<std::size_t>& node_rows, int depth) -> int {
        double mean = 0.0, lo = node_rows.empty() ? 0.0 : y[node_rows[0]], hi = lo;
        for (const std::size_t r : node_rows) {
            mean += y[r];
            lo = std::min(lo, y[r]);
            hi = std::max(hi, y[r]);
        }
        mean /= static_cast<double>(node_rows.size());

        const int idx = static_cast<int>(tree.nodes_.size());
        tree.nodes_.push_back({-1, 0.0, -1, -1, mean});

        const bool depth_capped = params.max_depth.has_value() && depth >= *params.max_depth;
        if (depth_capped || lo == hi ||
            node_rows.size() < 2 * static_cast<std::size_t>(params.min_child_weight)) {
            return idx;
        }

        std::vector<int> features = base_features;
        if (params.features_per_split > 0 &&
            params.features_per_split < static_cast<int>(base_features.size())) {
            const auto pick = rng.sample_without_replacement(
                base_features.size(), static_cast<std::size_t>(params.features_per_split));
            features.clear();
            for (const std::size_t p : pick) features.push_back(base_features[p]);
        }

        const SplitChoice split =
            best_split(x, y, node_rows, features, params.gamma, params.min_child_weight);
        if (!split.found) return idx;

        std::vector<std::size_t> left_rows, right_rows;
        for (const std::size_t r : node_rows) {
            if (x.at(static_cast<int>(r), split.feature) <= split.threshold) {
                left_rows.push_back(r);
            } else {
                right_rows.push_back(r);
            }
        }

        tree.nodes_[idx].feature = split.feature;
        tree.nodes_[idx].threshold = split.threshold;
        tree.nodes_[idx].left = self(self, left_rows, depth + 1);
        tree.nodes_[idx].right = self(self, right_rows, depth + 1);
        return idx;
    };
    build(build, *rows, 0);
    return tree;
}

RegressionTree fit_tree(const Matrix& x, const std::vector<double>& y, const TreeParams& params,
                        std::uint64_t seed) {
    Rng rng(seed);
    return fit_tree(x, y, params, rng, nullptr, nullptr);
}

double RegressionTree::predict_row(const double* row) const {
    int idx = 0;
    while (nodes_[idx].feature >= 0) {
        idx = row[nodes_[idx].feature] <= nodes_[idx].threshold ? nodes_[idx].left : nodes_[idx].right;
    }
    return nodes_[idx].value;
}

std::vector<double> RegressionTree::predict(const Matrix& x) const {
    std::vector<double> out(x.rows);
    for (int r = 0; r < x.rows; ++r) out[r] = predict_row(x.row(r));
    return out;
}

int RegressionTree::depth() const {
    // Iterative depth over the explicit child links.
    int max_depth = 0;
    std::vector<std::pair<int, int>> stack{{0, 0}};
    while (!stack.empty()) {
        const auto [idx, d] = stack.back();
        stack.pop_back();
        max_depth = std::max(max_depth, d);
        if (nodes_[idx].feature >= 0) {
            stack.push_back({nodes_[idx].left, d + 1});
            stack.push_back({nodes_[idx].right, d + 1});
        }
    }
    return max_depth;
}

nlohmann::json RegressionTree::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& n : nodes_) {
        arr.push_back({{"f", n.feature}, {"t", n.threshold}, {"l", n.left}, {"r", n.right}, {"v", n.value}});
    }
    return arr;
}

RegressionTree RegressionTree::from_json(const nlohmann::json& doc) {
    RegressionTree tree;
    for (const auto& n : doc) {
        tree.nodes_.push_back({n.at("f").get<int>(), n.at("t").get<double>(), n.at("l").get<int>(),
                               n.at("r").get<int>(), n.at("v").get<double>()});
    }
    if (tree.nodes_.empty()) throw DataError("tree json: no nodes");
    return tree;
}

} // namespace seasoncast
