#include "seasoncast/synth.hpp"

#include "seasoncast/rng.hpp"

#include <cmath>
#include <numbers>

namespace seasoncast {

std::string units_for(const std::string& name) {
    if (name == "prgpcp") return "mm/day";
    if (name == "press") return "mb";
    if (name == "temps" || name == "temp850") return "°C";
    if (name == "umid850") return "grams/kg";
    if (name == "v850" || name == "u500" || name == "u850") return "m/s";
    return "a.u.";
}

VariableSource source_for(const std::string& name) {
    return name == "prgpcp" ? VariableSource::observation : VariableSource::reanalysis;
}

std::vector<std::string> default_variable_names() {
    return {"prgpcp", "press", "temps", "temp850", "umid850", "v850", "u500", "u850"};
}

std::vector<double> uniform_axis(double first, double step, std::size_t count) {
    std::vector<double> v(count);
    for (std::size_t i = 0; i < count; ++i) v[i] = first + step * static_cast<double>(i);
    return v;
}

GridSeries synth_series(std::uint64_t seed, const GridSpec& spec, int years,
                        const std::vector<std::string>& variable_names, YearMonth start) {
    if (variable_names.empty()) throw EmptyVariableList("synth_series: no variables requested");
    if (years < 1) throw DataError("synth_series: years must be >= 1");
    spec.validate();

    const std::size_t n_months = static_cast<std::size_t>(years) * 12;
    std::vector<YearMonth> axis;
    axis.reserve(n_months);
    YearMonth ym = start;
    for (std::size_t t = 0; t < n_months; ++t, ym = ym.next()) axis.push_back(ym);

    const std::size_t nlat = spec.lat_count();
    const std::size_t nlon = spec.lon_count();
    const double lat_span = std::max(1e-9, std::abs(spec.lat_values.back() - spec.lat_values.front()));
    const double lon_span = std::max(1e-9, std::abs(spec.lon_values.back() - spec.lon_values.front()));

    std::vector<ClimateVariable> vars;
    std::vector<std::vector<double>> data;
    for (std::size_t v = 0; v < variable_names.size(); ++v) {
        const std::string& name = variable_names[v];
        vars.push_back({name, units_for(name), source_for(name)});

        Rng rng(mix_seed(seed, v));
        const double phase = 2.0 * std::numbers::pi * static_cast<double>(v) /
                             static_cast<double>(variable_names.size());
        const double offset = 5.0 + static_cast<double>(v);
        const double amplitude = 2.0 + static_cast<double>(v % 3);
        const double grad_lat = 1.5 + 0.25 * static_cast<double>(v);
        const double grad_lon = 0.75 - 0.1 * static_cast<double>(v % 4);
        const bool is_precip = units_for(name) == kPrecipUnits;

        std::vector<double> block;
        block.reserve(n_months * spec.point_count());
        for (std::size_t t = 0; t < n_months; ++t) {
            const double season_angle =
                2.0 * std::numbers::pi * static_cast<double>(t % 12) / 12.0 + phase;
            const double seasonal = amplitude * std::sin(season_angle);
            for (std::size_t i = 0; i < nlat; ++i) {
                const double flat = std::abs(spec.lat_values[i] - spec.lat_values.front()) / lat_span;
                for (std::size_t j = 0; j < nlon; ++j) {
                    const double flon = std::abs(spec.lon_values[j] - spec.lon_values.front()) / lon_span;
                    double value = offset + seasonal + grad_lat * flat + grad_lon * flon +
                                   rng.normal(0.0, 0.5);
                    if (is_precip && value < 0.0) value = 0.0;
                    block.push_back(value);
                }
            }
        }
        data.push_back(std::move(block));
    }
    return GridSeries(spec, std::move(axis), std::move(vars), std::move(data));
}

} // namespace seasoncast
