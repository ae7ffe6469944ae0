#include "seasoncast/util.hpp"

#include "seasoncast/errors.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace seasoncast {

std::string fmt_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string fmt_optional(const std::optional<double>& v) {
    return v.has_value() ? fmt_double(*v) : "x";
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MissingFile("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IOError("cannot write '" + path + "'");
    out << content;
    if (!out) throw IOError("write failed for '" + path + "'");
}

} // namespace seasoncast
