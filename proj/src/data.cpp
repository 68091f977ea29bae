#include "shiha/data.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace shiha::data {

namespace {

// Values embedded verbatim; downstream reproduction depends on
// bit-faithful inputs, so never recompute or round these.
const Dataset kBuiltins[] = {
    {"failure_times",
     {14.712, 32.644, 61.979, 65.521, 105.50, 114.60, 120.40, 138.50,
      8.610, 11.741, 54.535, 55.047, 58.928, 63.391, 105.18, 113.02,
      2.998, 5.016, 15.628, 23.040, 27.851, 37.843, 38.050, 48.226},
     "failure times of eight components at each of three test temperatures "
     "(100, 120, 140)"},
    {"vinyl_chloride",
     {5.1, 1.2, 1.3, 0.6, 0.5, 2.4, 0.5, 1.1, 8, 0.8, 0.4, 0.6, 0.9, 0.4,
      2, 0.5, 5.3, 3.2, 2.7, 2.9, 2.5, 2.3, 1, 0.2, 0.1, 0.1, 1.8, 0.9,
      2, 4, 6.8, 1.2, 0.4, 0.2},
     "vinyl chloride concentrations (mg/L) from clean upgradient "
     "groundwater monitoring wells"},
    {"karachi_precipitation",
     {117.6, 157.7, 148.6, 11.4, 5.6, 63.6, 62.4, 11.8, 6.5, 54.9, 39.9,
      16.8, 30.2, 38.4, 76.9, 73.4, 85, 256.3, 24.9, 148.6, 160.5, 131.3,
      77, 155.2, 217.2, 105.5, 166.8, 157.9, 73.6, 291.4, 210.3, 315.7,
      107.7, 33.3, 302.6, 159.1, 78.7, 33.2, 52.2, 92.7, 150.4, 43.7,
      68.3, 20.8, 179.4, 245.7, 19.5, 30, 270.4, 160, 96.3, 185.7, 429.3,
      184.9, 262.5, 80.6, 138.2, 28, 39.3},
     "annual maximum precipitation (mm) recorded at Karachi, Pakistan, "
     "1950-2009"},
    {"electronic_components",
     {1.4, 5.1, 6.3, 10.8, 12.1, 18.5, 19.7, 22.2, 23, 30.6, 37.3, 46.3,
      53.9, 59.8, 66.2},
     "failure times (minutes) of 15 electronic components in an "
     "accelerated life test"},
};

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    bool quoted = false;
    for (char c : line) {
        if (c == '"') {
            quoted = !quoted;
        } else if (c == ',' && !quoted) {
            cells.push_back(cell);
            cell.clear();
        } else if (c != '\r') {
            cell += c;
        }
    }
    cells.push_back(cell);
    for (auto& s : cells) {
        const auto a = s.find_first_not_of(" \t");
        const auto b = s.find_last_not_of(" \t");
        s = (a == std::string::npos) ? "" : s.substr(a, b - a + 1);
    }
    return cells;
}

bool parse_number(const std::string& s, double& out) {
    if (s.empty()) return false;
    errno = 0;
    char* end = nullptr;
    out = std::strtod(s.c_str(), &end);
    return errno == 0 && end == s.c_str() + s.size();
}

std::string file_stem(const std::string& path) {
    auto slash = path.find_last_of("/\\");
    std::string base = (slash == std::string::npos) ? path : path.substr(slash + 1);
    auto dot = base.find_last_of('.');
    return (dot == std::string::npos || dot == 0) ? base : base.substr(0, dot);
}

} // namespace

Dataset builtin_dataset(const std::string& name) {
    for (const auto& d : kBuiltins)
        if (d.name == name) return d;
    throw std::invalid_argument("builtin_dataset: unknown name '" + name + "'");
}

std::vector<std::string> builtin_names() {
    std::vector<std::string> out;
    for (const auto& d : kBuiltins) out.push_back(d.name);
    return out;
}

Dataset load_csv(const std::string& path, const std::string& column) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_csv: cannot open '" + path + "'");

    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos)
            lines.push_back(line);
    if (lines.empty()) throw std::runtime_error("load_csv: '" + path + "' is empty");

    std::vector<std::string> first = split_csv_line(lines.front());
    double probe;
    const bool has_header = !parse_number(first.front(), probe);

    std::size_t col = 0;
    if (!column.empty()) {
        if (has_header) {
            bool found = false;
            for (std::size_t j = 0; j < first.size(); ++j)
                if (first[j] == column) {
                    col = j;
                    found = true;
                    break;
                }
            if (!found) {
                if (!parse_number(column, probe) || probe != std::floor(probe))
                    throw std::invalid_argument("load_csv: column '" + column + "' not found");
                col = static_cast<std::size_t>(probe);
            }
        } else {
            if (!parse_number(column, probe) || probe != std::floor(probe))
                throw std::runtime_error(
                    "load_csv: headerless file, column must be a numeric index");
            col = static_cast<std::size_t>(probe);
        }
    }

    Dataset out{file_stem(path), {}, "loaded from " + path};
    for (std::size_t r = has_header ? 1 : 0; r < lines.size(); ++r) {
        std::vector<std::string> cells = split_csv_line(lines[r]);
        if (col >= cells.size())
            throw std::runtime_error("load_csv: row " + std::to_string(r + 1) +
                                     " has no column " + std::to_string(col));
        double v;
        if (!parse_number(cells[col], v))
            throw std::runtime_error("load_csv: row " + std::to_string(r + 1) +
                                     ": non-numeric value '" + cells[col] + "'");
        if (!(v > 0.0))
            throw std::runtime_error("load_csv: row " + std::to_string(r + 1) +
                                     ": value must be positive, got " + cells[col]);
        out.values.push_back(v);
    }
    if (out.values.empty())
        throw std::runtime_error("load_csv: no data rows in '" + path + "'");
    return out;
}

} // namespace shiha::data
