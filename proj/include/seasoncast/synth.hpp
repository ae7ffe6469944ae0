#pragma once

#include "seasoncast/grid.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace seasoncast {

/// Units for a known variable name (the standard catalog: prgpcp in mm/day,
/// temps/temp850 in °C, press in mb, umid850 in grams/kg, winds in m/s).
/// Unknown names get "a.u.".
std::string units_for(const std::string& variable_name);

/// Default source for a known variable name: prgpcp is an observation,
/// everything else reanalysis.
VariableSource source_for(const std::string& variable_name);

/// The eight-variable catalog used by the synthetic generator's CLI default.
std::vector<std::string> default_variable_names();

/// Deterministic synthetic monthly series: each variable is an annual
/// sinusoid (phase shifts by variable) plus a linear spatial gradient plus
/// seeded Gaussian noise; precipitation is clamped at >= 0. Identical seeds
/// yield bitwise-identical series.
///
/// The variable list must include a precipitation name (one mapping to
/// mm/day units, e.g. "prgpcp"). Throws EmptyVariableList when empty.
GridSeries synth_series(std::uint64_t seed, const GridSpec& spec, int years,
                        const std::vector<std::string>& variable_names,
                        YearMonth start = {1980, 1});

/// Uniform grid helper: `count` values from `first` spaced by `step`.
std::vector<double> uniform_axis(double first, double step, std::size_t count);

} // namespace seasoncast
