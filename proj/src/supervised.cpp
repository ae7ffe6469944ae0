#include "seasoncast/supervised.hpp"

#include "seasoncast/rng.hpp"

#include <cmath>

namespace seasoncast {

SupervisedSet subset(const SupervisedSet& set, const std::vector<std::size_t>& indices) {
    SupervisedSet out;
    out.feature_names = set.feature_names;
    out.features = Matrix(static_cast<int>(indices.size()), set.features.cols);
    out.targets.reserve(indices.size());
    out.keys.reserve(indices.size());
    for (std::size_t r = 0; r < indices.size(); ++r) {
        const std::size_t src = indices[r];
        for (int c = 0; c < set.features.cols; ++c) {
            out.features.at(static_cast<int>(r), c) = set.features.at(static_cast<int>(src), c);
        }
        out.targets.push_back(set.targets[src]);
        out.keys.push_back(set.keys[src]);
    }
    return out;
}

std::pair<SupervisedSet, SupervisedSet> assemble_supervised(const GridSeries& series,
                                                            Season target_season,
                                                            const std::vector<std::string>& retained_vars,
                                                            int test_year) {
    std::vector<std::size_t> var_idx;
    var_idx.reserve(retained_vars.size());
    for (const auto& name : retained_vars) var_idx.push_back(series.variable_index(name));
    const std::size_t precip = series.precipitation_index();

    std::vector<std::string> names;
    for (const auto& name : retained_vars) {
        names.push_back(name + "_t0");
        names.push_back(name + "_t1");
        names.push_back(name + "_t2");
    }
    names.push_back("lat");
    names.push_back("lon");
    const std::size_t k = names.size(); // 3 * vars + 2

    const auto& spec = series.spec();
    const std::size_t n_points = spec.point_count();

    // Candidate target years: every year the time axis touches, plus one
    // (a DJF target can be labeled one year past the last December).
    const int first_year = series.time_axis().front().year;
    const int last_year = series.time_axis().back().year + 1;

    SupervisedSet train_val, test;
    train_val.feature_names = names;
    test.feature_names = names;
    std::vector<double> train_rows, test_rows;

    for (int year = first_year; year <= last_year; ++year) {
        if (year > test_year) continue; // later years are never used
        const auto pred_months = predictor_months_of(target_season, year);
        const auto tgt_months = season_months_of_year(target_season, year);
        std::array<std::size_t, 3> pt{}, tt{};
        bool complete = true;
        for (int i = 0; i < 3 && complete; ++i) {
            pt[i] = series.time_index(pred_months[i]);
            tt[i] = series.time_index(tgt_months[i]);
            complete = pt[i] != GridSeries::npos && tt[i] != GridSeries::npos;
        }
        if (!complete) continue;

        const bool is_test = year == test_year;
        auto& rows = is_test ? test_rows : train_rows;
        auto& set = is_test ? test : train_val;
        for (std::size_t i = 0; i < spec.lat_count(); ++i) {
            for (std::size_t j = 0; j < spec.lon_count(); ++j) {
                for (const std::size_t v : var_idx) {
                    rows.push_back(series.value(v, pt[0], i, j));
                    rows.push_back(series.value(v, pt[1], i, j));
                    rows.push_back(series.value(v, pt[2], i, j));
                }
                rows.push_back(spec.lat_values[i]);
                rows.push_back(spec.lon_values[j]);
                const double target = (series.value(precip, tt[0], i, j) +
                                       series.value(precip, tt[1], i, j) +
                                       series.value(precip, tt[2], i, j)) /
                                      3.0;
                set.targets.push_back(target);
                set.keys.push_back({i * spec.lon_count() + j, target_season, year});
            }
        }
    }
    (void)n_points;

    if (test.targets.empty()) {
        throw InsufficientHistory("no (predictor, target) pair for " +
                                  std::string(season_label(target_season)) + " of " +
                                  std::to_string(test_year));
    }
    if (train_val.targets.empty()) {
        throw InsufficientHistory("no training pairs before test year " + std::to_string(test_year));
    }
    train_val.features = Matrix(static_cast<int>(train_val.targets.size()), static_cast<int>(k),
                                std::move(train_rows));
    test.features = Matrix(static_cast<int>(test.targets.size()), static_cast<int>(k),
                           std::move(test_rows));
    return {std::move(train_val), std::move(test)};
}

std::pair<SupervisedSet, SupervisedSet> holdout_split(const SupervisedSet& set, double train_fraction,
                                                      std::uint64_t seed) {
    if (set.sample_count() == 0) throw EmptySet("holdout_split: empty set");
    if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
        throw BadFraction("train fraction must be in (0, 1)");
    }
    const std::size_t n = set.sample_count();
    const std::size_t n_train =
        static_cast<std::size_t>(std::floor(train_fraction * static_cast<double>(n)));

    Rng rng(seed);
    std::vector<std::size_t> order = rng.permutation(n);
    const std::vector<std::size_t> train_idx(order.begin(), order.begin() + n_train);
    const std::vector<std::size_t> val_idx(order.begin() + n_train, order.end());
    return {subset(set, train_idx), subset(set, val_idx)};
}

} // namespace seasoncast
