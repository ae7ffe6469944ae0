#include "seasoncast/manifest.hpp"

#include "seasoncast/util.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace seasoncast {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

double parse_double_exact(const std::string& s, const std::string& where) {
    double v = 0.0;
    const char* begin = s.data();
    const char* end = begin + s.size();
    const auto res = std::from_chars(begin, end, v);
    if (res.ec != std::errc() || res.ptr != end) {
        throw DataError("bad number '" + s + "' in " + where);
    }
    return v;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) out.push_back(field);
    return out;
}

// One variable's CSV: validates row order against the declared grid and
// declared time axis, returns the dense value block.
std::vector<double> load_variable_csv(const std::string& path, const GridSpec& spec,
                                      const std::vector<YearMonth>& time_axis,
                                      const std::string& var_name) {
    std::ifstream in(path);
    if (!in) throw MissingFile("variable '" + var_name + "': cannot open '" + path + "'");

    std::string line;
    if (!std::getline(in, line)) throw ShapeMismatch("variable '" + var_name + "': empty file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "time,lat,lon,value") {
        throw DataError("variable '" + var_name + "': bad header '" + line + "'");
    }

    const std::size_t expected = time_axis.size() * spec.point_count();
    std::vector<double> values;
    values.reserve(expected);

    std::size_t row = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (row >= expected) {
            throw ShapeMismatch("variable '" + var_name + "': more rows than declared grid ("
                                + std::to_string(expected) + ")");
        }
        const auto fields = split_csv_line(line);
        if (fields.size() != 4) {
            throw DataError("variable '" + var_name + "': row " + std::to_string(row + 1) +
                            " has " + std::to_string(fields.size()) + " fields");
        }
        const std::size_t t = row / spec.point_count();
        const std::size_t cell = row % spec.point_count();
        const std::size_t lat_i = cell / spec.lon_count();
        const std::size_t lon_i = cell % spec.lon_count();

        const YearMonth ym = parse_year_month(fields[0]);
        if (ym != time_axis[t]) {
            throw NonMonotonicTime("variable '" + var_name + "': row " + std::to_string(row + 1) +
                                   " has time " + ym.str() + ", expected " + time_axis[t].str());
        }
        const double lat = parse_double_exact(fields[1], "lat column");
        const double lon = parse_double_exact(fields[2], "lon column");
        if (lat != spec.lat_values[lat_i] || lon != spec.lon_values[lon_i]) {
            throw ShapeMismatch("variable '" + var_name + "': row " + std::to_string(row + 1) +
                                " out of (time, lat, lon) order");
        }
        values.push_back(parse_double_exact(fields[3], "value column"));
        ++row;
    }
    if (row != expected) {
        throw ShapeMismatch("variable '" + var_name + "': " + std::to_string(row) +
                            " rows, declared grid needs " + std::to_string(expected));
    }
    return values;
}

} // namespace

GridSeries load_manifest(const std::string& path) {
    json doc;
    try {
        doc = json::parse(read_text_file(path));
    } catch (const json::exception& e) {
        throw DataError("manifest '" + path + "': " + e.what());
    }

    try {
        GridSpec spec;
        spec.lat_values = doc.at("grid").at("lats").get<std::vector<double>>();
        spec.lon_values = doc.at("grid").at("lons").get<std::vector<double>>();
        if (doc.at("grid").contains("resolution_deg")) {
            spec.resolution_deg = doc.at("grid").at("resolution_deg").get<double>();
        } else if (spec.lat_values.size() > 1) {
            spec.resolution_deg = std::abs(spec.lat_values[1] - spec.lat_values[0]);
        }
        spec.validate();

        const YearMonth start = parse_year_month(doc.at("time").at("start").get<std::string>());
        const auto n_months = doc.at("time").at("months").get<std::size_t>();
        if (n_months == 0) throw ShapeMismatch("manifest declares zero months");
        std::vector<YearMonth> axis;
        axis.reserve(n_months);
        YearMonth ym = start;
        for (std::size_t i = 0; i < n_months; ++i, ym = ym.next()) axis.push_back(ym);

        const fs::path base = fs::path(path).parent_path();
        std::vector<ClimateVariable> vars;
        std::vector<std::vector<double>> data;
        for (const auto& v : doc.at("variables")) {
            ClimateVariable var;
            var.name = v.at("name").get<std::string>();
            var.units = v.at("units").get<std::string>();
            var.source = parse_source(v.at("source").get<std::string>());
            fs::path file = v.at("file").get<std::string>();
            if (file.is_relative()) file = base / file;
            data.push_back(load_variable_csv(file.string(), spec, axis, var.name));
            vars.push_back(std::move(var));
        }
        return GridSeries(std::move(spec), std::move(axis), std::move(vars), std::move(data));
    } catch (const json::exception& e) {
        throw DataError("manifest '" + path + "': " + e.what());
    }
}

std::string write_manifest(const GridSeries& series, const std::string& dir,
                           const std::string& manifest_name) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IOError("cannot create directory '" + dir + "': " + ec.message());

    const auto& spec = series.spec();
    json doc;
    doc["grid"]["lats"] = spec.lat_values;
    doc["grid"]["lons"] = spec.lon_values;
    doc["grid"]["resolution_deg"] = spec.resolution_deg;
    doc["time"]["start"] = series.time_axis().front().str();
    doc["time"]["months"] = series.month_count();
    doc["variables"] = json::array();

    for (std::size_t v = 0; v < series.variable_count(); ++v) {
        const auto& var = series.variables()[v];
        const std::string file_name = var.name + ".csv";

        std::ostringstream csv;
        csv << "time,lat,lon,value\n";
        for (std::size_t t = 0; t < series.month_count(); ++t) {
            const std::string tstr = series.time_axis()[t].str();
            for (std::size_t i = 0; i < spec.lat_count(); ++i) {
                for (std::size_t j = 0; j < spec.lon_count(); ++j) {
                    csv << tstr << ',' << fmt_double(spec.lat_values[i]) << ','
                        << fmt_double(spec.lon_values[j]) << ','
                        << fmt_double(series.value(v, t, i, j)) << '\n';
                }
            }
        }
        write_text_file((fs::path(dir) / file_name).string(), csv.str());

        doc["variables"].push_back({{"name", var.name},
                                    {"units", var.units},
                                    {"source", source_label(var.source)},
                                    {"file", file_name}});
    }

    const std::string manifest_path = (fs::path(dir) / manifest_name).string();
    write_text_file(manifest_path, doc.dump(2) + "\n");
    return manifest_path;
}

} // namespace seasoncast
