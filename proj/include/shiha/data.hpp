#pragma once
#include <string>
#include <vector>

namespace shiha::data {

struct Dataset {
    std::string name;
    std::vector<double> values;
    std::string source;
};

// Embedded benchmark datasets:
//   failure_times          (n=24)  component failure times at three test temperatures
//   vinyl_chloride         (n=34)  vinyl chloride concentrations from clean
//                                  upgradient groundwater monitoring wells (mg/L)
//   karachi_precipitation  (n=59)  annual maximum precipitation at Karachi, 1950-2009 (mm)
//   electronic_components  (n=15)  failure times of electronic components in an
//                                  accelerated life test
Dataset builtin_dataset(const std::string& name);
std::vector<std::string> builtin_names();

// Single-column (or named-column) CSV reader; '.' decimal separator, an
// optional header row is auto-detected from a non-numeric first cell.
Dataset load_csv(const std::string& path, const std::string& column = "");

} // namespace shiha::data
