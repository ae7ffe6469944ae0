#pragma once

#include "seasoncast/grid.hpp"

#include <string>

namespace seasoncast {

/// Loads a gridded series from a manifest file.
///
/// The manifest is UTF-8 JSON:
///   {"grid": {"lats": [...], "lons": [...]},
///    "variables": [{"name": ..., "units": ..., "source": ..., "file": ...}],
///    "time": {"start": "YYYY-MM", "months": N}}
///
/// Each variable file is CSV with header `time,lat,lon,value`, rows in
/// (time-major, lat, lon) order. Relative file paths resolve against the
/// manifest's directory. Values are parsed bit-faithfully to their textual
/// representation.
GridSeries load_manifest(const std::string& path);

/// Writes `series` as a manifest plus one CSV per variable under `dir`
/// (created if needed). Returns the manifest path. Values are serialized
/// as shortest round-trip decimals, so load(write(s)) == s bitwise.
std::string write_manifest(const GridSeries& series, const std::string& dir,
                           const std::string& manifest_name = "manifest.json");

} // namespace seasoncast
