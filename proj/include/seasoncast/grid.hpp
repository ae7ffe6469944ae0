#pragma once

#include "seasoncast/errors.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace seasoncast {

/// Calendar month on a monthly time axis.
struct YearMonth {
    int year = 0;
    int month = 1; // 1..12

    YearMonth next() const { return month == 12 ? YearMonth{year + 1, 1} : YearMonth{year, month + 1}; }
    bool operator==(const YearMonth&) const = default;
    auto operator<=>(const YearMonth&) const = default;
    std::string str() const; // "YYYY-MM"
};

/// Parses "YYYY-MM". Throws DataError on malformed input.
YearMonth parse_year_month(const std::string& s);

/// Meteorological seasons. Months: DJF = {12,1,2}, MAM = {3,4,5},
/// JJA = {6,7,8}, SON = {9,10,11}.
enum class Season {
    DJF,
    MAM,
    JJA,
    SON,
};

constexpr std::array<Season, 4> kAllSeasons = {Season::DJF, Season::MAM, Season::JJA, Season::SON};

/// Season containing the given month. Throws OutOfRangeMonth outside 1..12.
Season season_of(int month);

/// The three month numbers of a season, in calendar order within the season
/// (DJF yields {12, 1, 2}).
std::array<int, 3> season_months(Season s);

const char* season_label(Season s);
Season parse_season(const std::string& label); // throws ConfigError

/// Season immediately preceding `s` in the annual cycle.
Season preceding_season(Season s);

/// Concrete months of season `s` labeled with year `y`. A DJF target labeled
/// year Y spans December of Y-1 plus January/February of Y.
std::array<YearMonth, 3> season_months_of_year(Season s, int year);

/// Concrete months of the predictor season for a target (s, year): the season
/// immediately preceding it. DJF of year Y is predicted from SON of Y-1.
std::array<YearMonth, 3> predictor_months_of(Season s, int year);

/// Regular latitude/longitude lattice.
struct GridSpec {
    std::vector<double> lat_values; // degrees north, strictly monotonic
    std::vector<double> lon_values; // degrees east, strictly monotonic
    double resolution_deg = 0.0;    // informational

    std::size_t lat_count() const { return lat_values.size(); }
    std::size_t lon_count() const { return lon_values.size(); }
    std::size_t point_count() const { return lat_values.size() * lon_values.size(); }

    bool operator==(const GridSpec& o) const {
        return lat_values == o.lat_values && lon_values == o.lon_values;
    }

    /// Throws ShapeMismatch unless both axes are non-empty and strictly monotonic.
    void validate() const;
};

enum class VariableSource {
    observation,
    reanalysis,
    external_forecast,
};

const char* source_label(VariableSource s);
VariableSource parse_source(const std::string& label); // throws DataError

struct ClimateVariable {
    std::string name;
    std::string units;
    VariableSource source = VariableSource::reanalysis;
};

/// Units string the precipitation variable must carry.
inline constexpr const char* kPrecipUnits = "mm/day";

/// Gridded monthly multi-variable series. Immutable after construction;
/// safe to share across threads read-only.
class GridSeries {
public:
    /// `data[v]` is time-major then lat then lon, one value per cell.
    /// Validates all type invariants; throws on violation.
    GridSeries(GridSpec spec, std::vector<YearMonth> time_axis, std::vector<ClimateVariable> variables,
               std::vector<std::vector<double>> data);

    const GridSpec& spec() const { return spec_; }
    const std::vector<YearMonth>& time_axis() const { return time_axis_; }
    const std::vector<ClimateVariable>& variables() const { return variables_; }

    std::size_t variable_count() const { return variables_.size(); }
    std::size_t month_count() const { return time_axis_.size(); }

    /// Index of a variable by name; throws UnknownVariable.
    std::size_t variable_index(const std::string& name) const;
    bool has_variable(const std::string& name) const;

    /// First variable carrying mm/day units (guaranteed to exist).
    std::size_t precipitation_index() const { return precip_index_; }

    /// Index of a calendar month on the axis, or npos when absent.
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t time_index(YearMonth ym) const;

    double value(std::size_t var, std::size_t t, std::size_t lat, std::size_t lon) const {
        return data_[var][(t * spec_.lat_count() + lat) * spec_.lon_count() + lon];
    }
    const std::vector<double>& raw(std::size_t var) const { return data_[var]; }

private:
    GridSpec spec_;
    std::vector<YearMonth> time_axis_;
    std::vector<ClimateVariable> variables_;
    std::vector<std::vector<double>> data_;
    std::size_t precip_index_ = 0;
};

/// Per-cell mean of the three monthly values of `var` over season (s, year),
/// lat-major. Throws InsufficientHistory when any month is missing.
std::vector<double> seasonal_mean_grid(const GridSeries& series, std::size_t var, Season s, int year);

} // namespace seasoncast
