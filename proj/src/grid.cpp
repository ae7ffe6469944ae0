#include "seasoncast/grid.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

namespace seasoncast {

std::string YearMonth::str() const {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d", year, month);
    return buf;
}

YearMonth parse_year_month(const std::string& s) {
    int y = 0, m = 0;
    char extra = 0;
    if (std::sscanf(s.c_str(), "%d-%d%c", &y, &m, &extra) != 2 || m < 1 || m > 12) {
        throw DataError("bad year-month '" + s + "' (want YYYY-MM)");
    }
    return {y, m};
}

Season season_of(int month) {
    switch (month) {
        case 12:
        case 1:
        case 2:
            return Season::DJF;
        case 3:
        case 4:
        case 5:
            return Season::MAM;
        case 6:
        case 7:
        case 8:
            return Season::JJA;
        case 9:
        case 10:
        case 11:
            return Season::SON;
        default:
            throw OutOfRangeMonth("month " + std::to_string(month) + " outside 1..12");
    }
}

std::array<int, 3> season_months(Season s) {
    switch (s) {
        case Season::DJF:
            return {12, 1, 2};
        case Season::MAM:
            return {3, 4, 5};
        case Season::JJA:
            return {6, 7, 8};
        case Season::SON:
            return {9, 10, 11};
    }
    throw Error("unreachable season");
}

const char* season_label(Season s) {
    switch (s) {
        case Season::DJF:
            return "DJF";
        case Season::MAM:
            return "MAM";
        case Season::JJA:
            return "JJA";
        case Season::SON:
            return "SON";
    }
    return "?";
}

Season parse_season(const std::string& label) {
    for (Season s : kAllSeasons) {
        if (label == season_label(s)) return s;
    }
    throw ConfigError("unknown season '" + label + "' (want DJF|MAM|JJA|SON)");
}

Season preceding_season(Season s) {
    switch (s) {
        case Season::DJF:
            return Season::SON;
        case Season::MAM:
            return Season::DJF;
        case Season::JJA:
            return Season::MAM;
        case Season::SON:
            return Season::JJA;
    }
    throw Error("unreachable season");
}

std::array<YearMonth, 3> season_months_of_year(Season s, int year) {
    // December belongs to the following year's DJF label.
    const auto months = season_months(s);
    std::array<YearMonth, 3> out;
    for (int i = 0; i < 3; ++i) {
        const int m = months[i];
        out[i] = {s == Season::DJF && m == 12 ? year - 1 : year, m};
    }
    return out;
}

std::array<YearMonth, 3> predictor_months_of(Season s, int year) {
    const Season prev = preceding_season(s);
    // SON of year Y-1 precedes DJF of year Y; every other pair shares the
    // label year of its target (DJF(Y) itself reaches back into December Y-1).
    const int prev_year = (s == Season::DJF) ? year - 1 : year;
    return season_months_of_year(prev, prev_year);
}

void GridSpec::validate() const {
    if (lat_values.empty() || lon_values.empty()) {
        throw ShapeMismatch("grid axes must be non-empty");
    }
    auto strictly_monotonic = [](const std::vector<double>& v) {
        bool inc = true, dec = true;
        for (std::size_t i = 1; i < v.size(); ++i) {
            inc = inc && v[i] > v[i - 1];
            dec = dec && v[i] < v[i - 1];
        }
        return inc || dec;
    };
    if (!strictly_monotonic(lat_values)) throw ShapeMismatch("lat values not strictly monotonic");
    if (!strictly_monotonic(lon_values)) throw ShapeMismatch("lon values not strictly monotonic");
}

const char* source_label(VariableSource s) {
    switch (s) {
        case VariableSource::observation:
            return "observation";
        case VariableSource::reanalysis:
            return "reanalysis";
        case VariableSource::external_forecast:
            return "external-forecast";
    }
    return "?";
}

VariableSource parse_source(const std::string& label) {
    if (label == "observation") return VariableSource::observation;
    if (label == "reanalysis") return VariableSource::reanalysis;
    if (label == "external-forecast") return VariableSource::external_forecast;
    throw DataError("unknown variable source '" + label + "'");
}

GridSeries::GridSeries(GridSpec spec, std::vector<YearMonth> time_axis,
                       std::vector<ClimateVariable> variables, std::vector<std::vector<double>> data)
    : spec_(std::move(spec)),
      time_axis_(std::move(time_axis)),
      variables_(std::move(variables)),
      data_(std::move(data)) {
    spec_.validate();
    if (time_axis_.empty()) throw ShapeMismatch("empty time axis");
    for (std::size_t i = 1; i < time_axis_.size(); ++i) {
        if (time_axis_[i] != time_axis_[i - 1].next()) {
            throw NonMonotonicTime("time axis gap or disorder at " + time_axis_[i].str() +
                                   " (after " + time_axis_[i - 1].str() + ")");
        }
    }
    if (variables_.empty()) throw EmptyVariableList("series declares no variables");
    if (data_.size() != variables_.size()) {
        throw ShapeMismatch("variable count " + std::to_string(variables_.size()) +
                            " != data array count " + std::to_string(data_.size()));
    }
    std::set<std::string> names;
    for (const auto& var : variables_) {
        if (!names.insert(var.name).second) throw DuplicateVariable("duplicate variable '" + var.name + "'");
    }
    const std::size_t expected = month_count() * spec_.point_count();
    for (std::size_t v = 0; v < data_.size(); ++v) {
        if (data_[v].size() != expected) {
            throw ShapeMismatch("variable '" + variables_[v].name + "' has " +
                                std::to_string(data_[v].size()) + " cells, expected " +
                                std::to_string(expected));
        }
    }
    const auto precip = std::find_if(variables_.begin(), variables_.end(),
                                     [](const ClimateVariable& v) { return v.units == kPrecipUnits; });
    if (precip == variables_.end()) {
        throw MissingPrecipitation("series has no precipitation variable (units mm/day)");
    }
    precip_index_ = static_cast<std::size_t>(precip - variables_.begin());
}

std::size_t GridSeries::variable_index(const std::string& name) const {
    for (std::size_t i = 0; i < variables_.size(); ++i) {
        if (variables_[i].name == name) return i;
    }
    throw UnknownVariable("variable '" + name + "' not in series");
}

bool GridSeries::has_variable(const std::string& name) const {
    return std::any_of(variables_.begin(), variables_.end(),
                       [&](const ClimateVariable& v) { return v.name == name; });
}

std::size_t GridSeries::time_index(YearMonth ym) const {
    if (time_axis_.empty() || ym < time_axis_.front() || ym > time_axis_.back()) return npos;
    const std::size_t offset = static_cast<std::size_t>((ym.year - time_axis_.front().year) * 12 +
                                                        (ym.month - time_axis_.front().month));
    return offset < time_axis_.size() ? offset : npos;
}

std::vector<double> seasonal_mean_grid(const GridSeries& series, std::size_t var, Season s, int year) {
    const auto months = season_months_of_year(s, year);
    std::array<std::size_t, 3> ts{};
    for (int i = 0; i < 3; ++i) {
        ts[i] = series.time_index(months[i]);
        if (ts[i] == GridSeries::npos) {
            throw InsufficientHistory("month " + months[i].str() + " not in series");
        }
    }
    const auto& spec = series.spec();
    std::vector<double> out(spec.point_count());
    for (std::size_t i = 0; i < spec.lat_count(); ++i) {
        for (std::size_t j = 0; j < spec.lon_count(); ++j) {
            const double sum = series.value(var, ts[0], i, j) + series.value(var, ts[1], i, j) +
                               series.value(var, ts[2], i, j);
            out[i * spec.lon_count() + j] = sum / 3.0;
        }
    }
    return out;
}

} // namespace seasoncast
